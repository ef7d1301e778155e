#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/errors.hpp"
#include "superlie/grading.hpp"
#include "superlie/rational.hpp"
#include "superlie/sparse.hpp"

namespace superlie {

using BracketTable = std::map<std::pair<int, int>, SparseVec>;

// Finite-dimensional Lie superalgebra over the rationals, given by a
// homogeneous basis and sparse structure constants. Basis convention: the
// first even_dim() vectors are even, the rest odd. Brackets are stored only
// for i <= j; the graded sign rule produces the others. Values are immutable
// after construction and every operation below is a pure function.
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;

  LieSuperalgebra(long long even_dim, long long odd_dim, BracketTable table = {},
                  std::string name = {}, std::vector<std::string> labels = {})
      : even_dim_(even_dim), odd_dim_(odd_dim), name_(std::move(name)), labels_(std::move(labels)) {
    if (even_dim_ < 0 || odd_dim_ < 0) throw InputError("negative dimension");
    const long long d = dim();
    if (!labels_.empty() && static_cast<long long>(labels_.size()) != d)
      throw InputError("label count does not match dimension");
    for (auto& [ij, vec] : table) {
      auto [i, j] = ij;
      if (i < 0 || j < 0 || i >= d || j >= d)
        throw InputError("bracket index out of range: (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      if (i > j) throw InputError("brackets must be stored with i <= j");
      for (const auto& [k, c] : vec.terms()) {
        (void)c;
        if (k < 0 || k >= d)
          throw InputError("bracket coefficient index out of range: " + std::to_string(k));
      }
      if (!vec.zero()) table_.emplace(ij, std::move(vec));
    }
    build_rows();
  }

  // The adjacency cache points into table_, so copies and moves rebuild it.
  LieSuperalgebra(const LieSuperalgebra& o)
      : even_dim_(o.even_dim_),
        odd_dim_(o.odd_dim_),
        table_(o.table_),
        name_(o.name_),
        labels_(o.labels_) {
    build_rows();
  }
  LieSuperalgebra(LieSuperalgebra&& o) noexcept
      : even_dim_(o.even_dim_),
        odd_dim_(o.odd_dim_),
        table_(std::move(o.table_)),
        name_(std::move(o.name_)),
        labels_(std::move(o.labels_)) {
    build_rows();
    o.table_.clear();
    o.build_rows();
  }
  LieSuperalgebra& operator=(const LieSuperalgebra& o) {
    if (this != &o) {
      even_dim_ = o.even_dim_;
      odd_dim_ = o.odd_dim_;
      table_ = o.table_;
      name_ = o.name_;
      labels_ = o.labels_;
      build_rows();
    }
    return *this;
  }
  LieSuperalgebra& operator=(LieSuperalgebra&& o) noexcept {
    if (this != &o) {
      even_dim_ = o.even_dim_;
      odd_dim_ = o.odd_dim_;
      table_ = std::move(o.table_);
      name_ = std::move(o.name_);
      labels_ = std::move(o.labels_);
      build_rows();
      o.table_.clear();
      o.build_rows();
    }
    return *this;
  }
  ~LieSuperalgebra() = default;

  long long dim() const { return even_dim_ + odd_dim_; }
  SuperDim sdim() const { return {even_dim_, odd_dim_}; }
  long long even_dim() const { return even_dim_; }

  Parity parity(long long i) const { return i < even_dim_ ? Parity::even : Parity::odd; }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(long long i) const {
    if (!labels_.empty()) return labels_[static_cast<std::size_t>(i)];
    return "e" + std::to_string(i);
  }

  const BracketTable& entries() const { return table_; }

  // [e_i, e_j] for any index order, with the graded sign applied.
  SparseVec bracket_basis(long long i, long long j) const {
    check_index(i);
    check_index(j);
    if (i <= j) {
      auto it = table_.find({static_cast<int>(i), static_cast<int>(j)});
      return it == table_.end() ? SparseVec() : it->second;
    }
    auto it = table_.find({static_cast<int>(j), static_cast<int>(i)});
    if (it == table_.end()) return SparseVec();
    SparseVec v = it->second;
    v.scale(Rational(-koszul_sign(parity(i), parity(j))));
    return v;
  }

  // Bilinear extension to arbitrary coordinate vectors.
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const {
    for (const auto& [k, c] : u.terms()) {
      (void)c;
      check_index(k);
    }
    for (const auto& [k, c] : v.terms()) {
      (void)c;
      check_index(k);
    }
    SparseVec acc;
    for (const auto& [i, ci] : u.terms())
      for (const auto& [j, cj] : v.terms()) {
        SparseVec b = bracket_basis(i, j);
        if (!b.zero()) acc.add_scaled(b, ci * cj);
      }
    return acc;
  }

  // For each j with [e_i, e_j] nonzero (any order of i,j in storage): the
  // pair (j, value). Used by span and closure sweeps.
  struct AdjEntry {
    int other;
    const SparseVec* value;
    int sign;  // [e_i, e_other] = sign * (*value)
  };
  const std::vector<AdjEntry>& adjacent(long long i) const {
    return rows_[static_cast<std::size_t>(i)];
  }

  // All brackets [v, e_j], j = 0..dim-1, as sparse (j -> vector) pairs.
  std::vector<std::pair<int, SparseVec>> bracket_with_basis(const SparseVec& v) const {
    std::map<int, SparseVec> acc;
    for (const auto& [i, ci] : v.terms()) {
      check_index(i);
      for (const AdjEntry& e : adjacent(i)) {
        acc[e.other].add_scaled(*e.value, ci * Rational(e.sign));
      }
    }
    std::vector<std::pair<int, SparseVec>> out;
    for (auto& [j, w] : acc)
      if (!w.zero()) out.emplace_back(j, std::move(w));
    return out;
  }

 private:
  void check_index(long long i) const {
    if (i < 0 || i >= dim()) throw InputError("coordinate index out of range");
  }

  void build_rows() {
    rows_.assign(static_cast<std::size_t>(dim()), {});
    for (const auto& [ij, vec] : table_) {
      auto [i, j] = ij;
      rows_[static_cast<std::size_t>(i)].push_back({j, &vec, 1});
      if (i != j)
        rows_[static_cast<std::size_t>(j)].push_back(
            {i, &vec, -koszul_sign(parity(i), parity(j))});
    }
  }

  long long even_dim_ = 0;
  long long odd_dim_ = 0;
  BracketTable table_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<AdjEntry>> rows_;
};

// Z2-graded subspace of a d-dimensional ambient space whose first
// ambient_even coordinates are even. Stored as a reduced echelon basis of
// homogeneous vectors, so equal subspaces compare equal coordinatewise.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(long long ambient_dim, long long ambient_even)
      : ambient_dim_(ambient_dim), ambient_even_(ambient_even) {}

  static GradedSubspace zero(const LieSuperalgebra& L) {
    return GradedSubspace(L.dim(), L.even_dim());
  }

  static GradedSubspace full(const LieSuperalgebra& L) {
    GradedSubspace u = zero(L);
    for (long long i = 0; i < L.dim(); ++i) u.insert(SparseVec::unit(i));
    return u;
  }

  // Span of arbitrary vectors of a graded subspace: each vector is split
  // into its parity components first. (If the span of the inputs is not
  // graded this enlarges it to the graded closure; see is_graded_span.)
  static GradedSubspace span(const LieSuperalgebra& L, const std::vector<SparseVec>& gens) {
    GradedSubspace u = zero(L);
    for (const auto& v : gens) u.insert(v);
    return u;
  }

  // True when the plain linear span of the vectors is already graded.
  static bool is_graded_span(const LieSuperalgebra& L, const std::vector<SparseVec>& gens) {
    Echelon plain;
    for (const auto& v : gens) plain.insert(v);
    GradedSubspace u = span(L, gens);
    return plain.rank() == u.echelon().rank();
  }

  long long ambient_dim() const { return ambient_dim_; }
  long long ambient_even() const { return ambient_even_; }

  // Splits v into parity components and inserts both. Returns true if the
  // subspace grew.
  bool insert(const SparseVec& v) {
    check(v);
    SparseVec even = v.filtered([&](Key k) { return k < ambient_even_; });
    SparseVec odd = v.filtered([&](Key k) { return k >= ambient_even_; });
    bool grew = false;
    if (!even.zero()) grew |= ech_.insert(std::move(even));
    if (!odd.zero()) grew |= ech_.insert(std::move(odd));
    return grew;
  }

  bool contains(const SparseVec& v) const {
    check(v);
    return ech_.contains(v);
  }

  bool contains(const GradedSubspace& other) const {
    for (const auto& row : other.ech_.rows())
      if (!ech_.contains(row)) return false;
    return true;
  }

  SparseVec reduce(SparseVec v) const {
    check(v);
    return ech_.reduce(std::move(v));
  }

  SuperDim sdim() const {
    SuperDim d;
    for (Key p : ech_.pivots()) (p < ambient_even_ ? d.even : d.odd) += 1;
    return d;
  }

  long long dim() const { return ech_.rank(); }
  const Echelon& echelon() const { return ech_; }

  // Ambient indices without a pivot, ascending; a complement basis.
  std::vector<long long> complement_indices() const {
    std::vector<long long> out;
    for (long long i = 0; i < ambient_dim_; ++i)
      if (!ech_.has_pivot(i)) out.push_back(i);
    return out;
  }

  bool operator==(const GradedSubspace&) const = default;

 private:
  void check(const SparseVec& v) const {
    for (const auto& [k, c] : v.terms()) {
      (void)c;
      if (k < 0 || k >= ambient_dim_) throw InputError("vector exceeds ambient dimension");
    }
  }

  long long ambient_dim_ = 0;
  long long ambient_even_ = 0;
  Echelon ech_;
};

inline SuperDim superdim(const LieSuperalgebra& L) { return L.sdim(); }
inline SuperDim superdim(const GradedSubspace& U) { return U.sdim(); }

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  enum class Kind { grading, skew_symmetry, jacobi };
  Kind kind;
  long long i = -1, j = -1, k = -1;
  SparseVec residual;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Graded Jacobi residual on basis triples:
//   (-1)^{|i||k|}[e_i,[e_j,e_k]] + (-1)^{|j||i|}[e_j,[e_k,e_i]]
//   + (-1)^{|k||j|}[e_k,[e_i,e_j]].
inline SparseVec jacobi_residual(const LieSuperalgebra& L, long long i, long long j, long long k) {
  Parity pi = L.parity(i), pj = L.parity(j), pk = L.parity(k);
  SparseVec acc;
  acc.add_scaled(L.bracket(SparseVec::unit(i), L.bracket_basis(j, k)),
                 Rational(koszul_sign(pi, pk)));
  acc.add_scaled(L.bracket(SparseVec::unit(j), L.bracket_basis(k, i)),
                 Rational(koszul_sign(pj, pi)));
  acc.add_scaled(L.bracket(SparseVec::unit(k), L.bracket_basis(i, j)),
                 Rational(koszul_sign(pk, pj)));
  return acc;
}

// Residual for homogeneous coordinate vectors with the given parities.
inline SparseVec jacobi_residual(const LieSuperalgebra& L, const SparseVec& u, Parity pu,
                                 const SparseVec& v, Parity pv, const SparseVec& w, Parity pw) {
  SparseVec acc;
  acc.add_scaled(L.bracket(u, L.bracket(v, w)), Rational(koszul_sign(pu, pw)));
  acc.add_scaled(L.bracket(v, L.bracket(w, u)), Rational(koszul_sign(pv, pu)));
  acc.add_scaled(L.bracket(w, L.bracket(u, v)), Rational(koszul_sign(pw, pv)));
  return acc;
}

inline ValidationReport validate(const LieSuperalgebra& L) {
  ValidationReport report;
  const long long d = L.dim();

  for (const auto& [ij, vec] : L.entries()) {
    auto [i, j] = ij;
    if (i == j && L.parity(i) == Parity::even) {
      report.issues.push_back({ValidationIssue::Kind::skew_symmetry, i, j, -1, vec,
                               "[x,x] must vanish for even x at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")"});
    }
    Parity expect = L.parity(i) + L.parity(j);
    SparseVec bad = vec.filtered([&](Key k) { return L.parity(k) != expect; });
    if (!bad.zero()) {
      report.issues.push_back({ValidationIssue::Kind::grading, i, j, -1, bad,
                               "bracket (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") leaves the " + to_string(expect) + " component"});
    }
  }

  // Jacobi needs checking only on triples where at least one pairwise
  // bracket is nonzero.
  std::vector<bool> nonzero(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), false);
  for (const auto& [ij, vec] : L.entries()) {
    (void)vec;
    auto [i, j] = ij;
    nonzero[static_cast<std::size_t>(i) * d + j] = true;
    nonzero[static_cast<std::size_t>(j) * d + i] = true;
  }
  auto nz = [&](long long a, long long b) { return nonzero[static_cast<std::size_t>(a) * d + b]; };
  for (long long i = 0; i < d; ++i)
    for (long long j = i; j < d; ++j)
      for (long long k = j; k < d; ++k) {
        if (!nz(i, j) && !nz(j, k) && !nz(i, k)) continue;
        SparseVec res = jacobi_residual(L, i, j, k);
        if (!res.zero()) {
          report.issues.push_back({ValidationIssue::Kind::jacobi, i, j, k, res,
                                   "graded Jacobi fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) + ")"});
        }
      }
  return report;
}

// ---------------------------------------------------------------------------
// Structural subspaces

inline GradedSubspace derived_subalgebra(const LieSuperalgebra& L) {
  GradedSubspace out = GradedSubspace::zero(L);
  for (const auto& [ij, vec] : L.entries()) {
    (void)ij;
    out.insert(vec);
  }
  return out;
}

inline GradedSubspace center(const LieSuperalgebra& L) {
  const long long d = L.dim();
  // Constraints: for u = sum u_i e_i, every component of every [u, e_j]
  // vanishes. Row key space: one row per (j, component k).
  std::map<std::pair<int, long long>, std::vector<SparseVec::Term>> rows;
  for (long long i = 0; i < d; ++i) {
    for (const auto& e : L.adjacent(i)) {
      for (const auto& [k, c] : e.value->terms()) {
        rows[{e.other, k}].emplace_back(i, c * Rational(e.sign));
      }
    }
  }
  std::vector<SparseVec> constraints;
  constraints.reserve(rows.size());
  for (auto& [jk, terms] : rows) {
    (void)jk;
    constraints.push_back(SparseVec::from_terms(std::move(terms)));
  }
  GradedSubspace out = GradedSubspace::zero(L);
  for (const auto& v : kernel_basis(constraints, d)) out.insert(v);
  return out;
}

// Span of [U, L] for a graded subspace U.
inline GradedSubspace bracket_subspace(const LieSuperalgebra& L, const GradedSubspace& U) {
  GradedSubspace out = GradedSubspace::zero(L);
  for (const auto& row : U.echelon().rows())
    for (auto& [j, w] : L.bracket_with_basis(row)) {
      (void)j;
      out.insert(w);
    }
  return out;
}

// gamma_1 = L, gamma_{k+1} = [gamma_k, L], listed until the series stabilizes
// (the stable term, zero or not, is included).
inline std::vector<GradedSubspace> lower_central_series(const LieSuperalgebra& L) {
  std::vector<GradedSubspace> series;
  series.push_back(GradedSubspace::full(L));
  while (true) {
    GradedSubspace next = bracket_subspace(L, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

// Nilpotency class, or nullopt when L is not nilpotent. The zero algebra has
// class 0, abelian algebras class 1.
inline std::optional<long long> nilpotency_class(const LieSuperalgebra& L) {
  auto series = lower_central_series(L);
  if (series.back().dim() != 0) return std::nullopt;
  long long cls = 0;
  for (const auto& g : series)
    if (g.dim() != 0) ++cls;
  return cls;
}

inline bool is_graded_ideal(const LieSuperalgebra& L, const GradedSubspace& U) {
  if (U.ambient_dim() != L.dim()) throw InputError("subspace/algebra dimension mismatch");
  for (const auto& row : U.echelon().rows())
    for (const auto& [j, w] : L.bracket_with_basis(row)) {
      (void)j;
      if (!U.contains(w)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Direct sum and quotient

// Basis of the sum is ordered: L-even, K-even, L-odd, K-odd, so the
// even-first convention is preserved. Labels are carried over; colliding
// labels from the right summand get primes.
inline LieSuperalgebra direct_sum(const LieSuperalgebra& L, const LieSuperalgebra& K) {
  const long long le = L.even_dim(), lo = L.dim() - le;
  const long long ke = K.even_dim(), ko = K.dim() - ke;
  auto map_left = [&](long long i) { return i < le ? i : i + ke; };
  auto map_right = [&](long long i) { return i < ke ? le + i : le + lo + i; };

  BracketTable table;
  auto add_side = [&](const LieSuperalgebra& side, auto&& remap) {
    for (const auto& [ij, vec] : side.entries()) {
      auto [i, j] = ij;
      long long a = remap(i), b = remap(j);
      SparseVec w = vec.mapped([&](Key k) { return remap(k); });
      if (a <= b) {
        table[{static_cast<int>(a), static_cast<int>(b)}] = std::move(w);
      } else {
        w.scale(Rational(-koszul_sign(side.parity(i), side.parity(j))));
        table[{static_cast<int>(b), static_cast<int>(a)}] = std::move(w);
      }
    }
  };
  add_side(L, map_left);
  add_side(K, map_right);

  std::vector<std::string> labels(static_cast<std::size_t>(L.dim() + K.dim()));
  std::vector<std::string> used;
  auto unique_label = [&](std::string s) {
    while (std::find(used.begin(), used.end(), s) != used.end()) s += "'";
    used.push_back(s);
    return s;
  };
  for (long long i = 0; i < L.dim(); ++i)
    labels[static_cast<std::size_t>(map_left(i))] = unique_label(L.label(i));
  for (long long i = 0; i < K.dim(); ++i)
    labels[static_cast<std::size_t>(map_right(i))] = unique_label(K.label(i));

  std::string name;
  if (!L.name().empty() && !K.name().empty()) name = L.name() + "+" + K.name();
  return LieSuperalgebra(le + ke, lo + ko, std::move(table), std::move(name), std::move(labels));
}

// Quotient L/I together with the projection data.
struct Quotient {
  LieSuperalgebra algebra;
  GradedSubspace ideal;
  std::vector<long long> ambient_of;  // quotient basis index -> ambient index

  // Coordinates of an ambient vector in the quotient basis.
  SparseVec project(const SparseVec& v) const {
    SparseVec reduced = ideal.reduce(v);
    std::vector<SparseVec::Term> terms;
    for (const auto& [k, c] : reduced.terms()) {
      auto it = std::lower_bound(ambient_of.begin(), ambient_of.end(), k);
      if (it == ambient_of.end() || *it != k)
        throw InternalError("reduced vector not supported on the complement");
      terms.emplace_back(it - ambient_of.begin(), c);
    }
    return SparseVec::from_terms(std::move(terms));
  }
};

inline Quotient quotient(const LieSuperalgebra& L, const GradedSubspace& I) {
  if (I.ambient_dim() != L.dim()) throw InputError("ideal/algebra dimension mismatch");
  if (!is_graded_ideal(L, I)) throw DomainError("subspace is not a graded ideal");

  std::vector<long long> comp = I.complement_indices();
  long long q_even = 0;
  for (long long idx : comp)
    if (L.parity(idx) == Parity::even) ++q_even;
  const long long q_dim = static_cast<long long>(comp.size());

  auto pos_of = [&](Key k) {
    auto it = std::lower_bound(comp.begin(), comp.end(), k);
    return static_cast<long long>(it - comp.begin());
  };

  BracketTable table;
  for (long long a = 0; a < q_dim; ++a)
    for (long long b = a; b < q_dim; ++b) {
      long long i = comp[static_cast<std::size_t>(a)], j = comp[static_cast<std::size_t>(b)];
      if (i == j && L.parity(i) == Parity::even) continue;
      SparseVec w = I.reduce(L.bracket_basis(i, j));
      if (w.zero()) continue;
      table[{static_cast<int>(a), static_cast<int>(b)}] =
          w.mapped([&](Key k) { return pos_of(k); });
    }

  std::vector<std::string> labels;
  labels.reserve(comp.size());
  for (long long idx : comp) labels.push_back(L.label(idx));

  Quotient q{LieSuperalgebra(q_even, q_dim - q_even, std::move(table), {}, std::move(labels)), I,
             std::move(comp)};
  return q;
}

// ---------------------------------------------------------------------------
// Change of basis (parity preserving)

using RationalMatrix = std::vector<std::vector<Rational>>;  // column-major: [col][row]

// New basis f_a = sum_i P[a][i] e_i, with separate blocks for the even and
// odd parts. Throws DomainError if either block is singular.
inline LieSuperalgebra change_basis(const LieSuperalgebra& L, const RationalMatrix& even_block,
                                    const RationalMatrix& odd_block) {
  const long long ne = L.even_dim(), no = L.dim() - ne;
  if (static_cast<long long>(even_block.size()) != ne ||
      static_cast<long long>(odd_block.size()) != no)
    throw InputError("basis-change block size mismatch");

  // Columns of P as ambient vectors.
  std::vector<SparseVec> new_basis;
  new_basis.reserve(static_cast<std::size_t>(L.dim()));
  auto push_block = [&](const RationalMatrix& block, long long offset, long long rows) {
    for (const auto& col : block) {
      if (static_cast<long long>(col.size()) != rows)
        throw InputError("basis-change block size mismatch");
      std::vector<SparseVec::Term> terms;
      for (long long r = 0; r < rows; ++r)
        if (col[static_cast<std::size_t>(r)] != 0)
          terms.emplace_back(offset + r, col[static_cast<std::size_t>(r)]);
      new_basis.push_back(SparseVec::from_terms(std::move(terms)));
    }
  };
  push_block(even_block, 0, ne);
  push_block(odd_block, ne, no);

  // Solve coordinates in the new basis via an augmented echelon.
  Echelon solver;
  for (long long a = 0; a < L.dim(); ++a) {
    SparseVec v = new_basis[static_cast<std::size_t>(a)];
    v.add_scaled(SparseVec::unit(kAugBase + a), Rational(1));
    if (!solver.insert(std::move(v))) throw DomainError("basis-change block is singular");
  }
  auto to_new_coords = [&](const SparseVec& v) {
    SparseVec red = solver.reduce(v);
    if (!red.zero_below_aug()) throw InternalError("basis change failed to span");
    std::vector<SparseVec::Term> terms;
    for (const auto& [k, c] : red.terms()) terms.emplace_back(k - kAugBase, -c);
    return SparseVec::from_terms(std::move(terms));
  };

  BracketTable table;
  for (long long a = 0; a < L.dim(); ++a)
    for (long long b = a; b < L.dim(); ++b) {
      if (a == b && L.parity(a) == Parity::even) continue;
      SparseVec w = L.bracket(new_basis[static_cast<std::size_t>(a)],
                              new_basis[static_cast<std::size_t>(b)]);
      if (w.zero()) continue;
      table[{static_cast<int>(a), static_cast<int>(b)}] = to_new_coords(w);
    }
  return LieSuperalgebra(ne, no, std::move(table), L.name(), {});
}

}  // namespace superlie

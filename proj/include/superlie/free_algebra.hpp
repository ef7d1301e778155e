#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/errors.hpp"
#include "superlie/grading.hpp"
#include "superlie/sparse.hpp"

namespace superlie {

// Hard ceilings for the brute-force machinery. Beyond these the operations
// refuse instead of silently thrashing.
struct OracleLimits {
  int max_generators = 8;
  int max_class = 5;
};

// Expected super-dimension of each graded piece of the free Lie superalgebra
// on (even_gens | odd_gens) generators, degrees 1..max_degree. Derived from
// the enveloping-algebra identity: the free associative superalgebra counts
// (p + q*z)^d words in degree d, and its basis of ordered monomials over the
// Lie basis (odd elements square-free) determines the Lie dimensions
// recursively. Entirely combinatorial, independent of the linear algebra in
// the construction below, so it doubles as a consistency oracle.
inline std::vector<SuperDim> free_dimension_table(long long even_gens, long long odd_gens,
                                                  int max_degree) {
  using Pair = std::pair<Int, Int>;  // coefficients of 1 and z
  const int D = max_degree;
  std::vector<Pair> assoc(static_cast<std::size_t>(D) + 1, Pair{0, 0});
  assoc[0] = {1, 0};
  for (int d = 1; d <= D; ++d) {
    const Pair& prev = assoc[static_cast<std::size_t>(d - 1)];
    assoc[static_cast<std::size_t>(d)] = {prev.first * even_gens + prev.second * odd_gens,
                                          prev.first * odd_gens + prev.second * even_gens};
  }

  // Explicit return type: with expression templates a deduced return would
  // reference the dead locals.
  auto binom = [](const Int& n, long long k) -> Int {
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
      num *= n - i;
      den *= i + 1;
    }
    return num / den;
  };

  std::vector<Pair> series(static_cast<std::size_t>(D) + 1, Pair{0, 0});
  series[0] = {1, 0};
  std::vector<SuperDim> dims;
  for (int d = 1; d <= D; ++d) {
    Int e = assoc[static_cast<std::size_t>(d)].first - series[static_cast<std::size_t>(d)].first;
    Int o = assoc[static_cast<std::size_t>(d)].second - series[static_cast<std::size_t>(d)].second;
    if (e < 0 || o < 0) throw InternalError("free dimension recursion went negative");
    dims.push_back({e.convert_to<long long>(), o.convert_to<long long>()});

    // Multiply the running series by (1 - t^d)^{-e} (1 + z t^d)^{o}.
    std::vector<Pair> factor(static_cast<std::size_t>(D) + 1, Pair{0, 0});
    for (long long a = 0; a * d <= D; ++a) {
      Int even_ways = binom(e + a - 1, a);  // multisets of even elements
      if (even_ways == 0) continue;
      for (long long b = 0; (a + b) * d <= D; ++b) {
        Int odd_ways = binom(o, b);  // subsets of odd elements
        if (odd_ways == 0) continue;
        Pair& slot = factor[static_cast<std::size_t>((a + b) * d)];
        (b % 2 == 0 ? slot.first : slot.second) += even_ways * odd_ways;
      }
    }
    std::vector<Pair> next(static_cast<std::size_t>(D) + 1, Pair{0, 0});
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) {
        const Pair& x = series[static_cast<std::size_t>(i)];
        const Pair& y = factor[static_cast<std::size_t>(j)];
        Pair& slot = next[static_cast<std::size_t>(i + j)];
        slot.first += x.first * y.first + x.second * y.second;
        slot.second += x.first * y.second + x.second * y.first;
      }
    series = std::move(next);
  }
  return dims;
}

// The free nilpotent Lie superalgebra of class <= class_bound on graded
// generators, realized inside the free associative superalgebra. The basis
// consists of left-normed bracket words selected degree by degree; structure
// constants come from expanding commutators of basis words and solving in
// the associative coordinates. Basis order follows the library convention:
// even vectors first (by degree within each parity).
class TruncatedFreeAlgebra {
 public:
  TruncatedFreeAlgebra(std::vector<Parity> gen_parities, int class_bound,
                       const OracleLimits& limits = {}) {
    build(std::move(gen_parities), class_bound, limits);
  }

  const LieSuperalgebra& algebra() const { return algebra_; }
  int class_bound() const { return class_bound_; }
  long long generator_count() const { return static_cast<long long>(gen_parities_.size()); }
  Parity generator_parity(int g) const { return gen_parities_[static_cast<std::size_t>(g)]; }

  // Basis index of the degree-1 element for generator g.
  long long generator_basis_index(int g) const {
    return gen_index_[static_cast<std::size_t>(g)];
  }

  long long degree(long long basis_index) const {
    return degree_[static_cast<std::size_t>(basis_index)];
  }

  // The left-normed bracket word of a basis element: the generator sequence
  // g_1, ..., g_d standing for [g_1, [g_2, [..., [g_{d-1}, g_d]...]]].
  const std::vector<int>& word(long long basis_index) const {
    return word_[static_cast<std::size_t>(basis_index)];
  }

  SuperDim degree_dims(int d) const { return degree_dims_[static_cast<std::size_t>(d - 1)]; }

  // Pretty printing; generator names are supplied by the caller.
  std::string word_string(long long basis_index, const std::vector<std::string>& names) const {
    const auto& seq = word(basis_index);
    std::string out;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      out += "[" + names[static_cast<std::size_t>(seq[i])] + ",";
    out += names[static_cast<std::size_t>(seq.back())];
    out += std::string(seq.size() - 1, ']');
    return out;
  }

  std::string combo_string(const SparseVec& v, const std::vector<std::string>& names) const {
    if (v.zero()) return "0";
    std::string out;
    for (const auto& [k, c] : v.terms()) {
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (mag != 1) out += to_string(mag) + "*";
      out += word_string(k, names);
    }
    return out;
  }

  // Indices of basis elements of degree >= 2, i.e. the derived subalgebra.
  GradedSubspace derived_span() const {
    GradedSubspace out = GradedSubspace::zero(algebra_);
    for (long long i = 0; i < algebra_.dim(); ++i)
      if (degree(i) >= 2) out.insert(SparseVec::unit(i));
    return out;
  }

 private:
  // Associative words of a fixed degree are encoded in base (p+1), letters
  // shifted by one; per-degree solvers never mix word lengths.
  void build(std::vector<Parity> gen_parities, int class_bound, const OracleLimits& limits) {
    const int p = static_cast<int>(gen_parities.size());
    if (p == 0) throw InputError("free algebra needs at least one generator");
    if (class_bound < 1) throw InputError("class bound must be at least 1");
    if (p > limits.max_generators)
      throw LimitError("generator count " + std::to_string(p) + " exceeds the configured limit " +
                       std::to_string(limits.max_generators));
    if (class_bound > limits.max_class)
      throw LimitError("class bound " + std::to_string(class_bound) +
                       " exceeds the configured limit " + std::to_string(limits.max_class));
    gen_parities_ = std::move(gen_parities);
    class_bound_ = class_bound;

    const Key base = p + 1;
    Key max_key = 1;
    for (int d = 0; d < class_bound; ++d) max_key *= base;
    if (max_key >= kAugBase) throw LimitError("word keys would overflow; lower the limits");

    struct Elt {
      int degree;
      Parity parity;
      std::vector<int> seq;
      SparseVec expansion;
    };
    std::vector<Elt> elts;
    std::vector<std::vector<long long>> by_degree(static_cast<std::size_t>(class_bound) + 1);
    // Per-degree augmented solvers over associative word coordinates.
    std::vector<Echelon> solver(static_cast<std::size_t>(class_bound) + 1);

    auto insert_elt = [&](Elt e) {
      SparseVec row = e.expansion;
      row.add_scaled(SparseVec::unit(kAugBase + static_cast<Key>(elts.size())), Rational(1));
      if (!solver[static_cast<std::size_t>(e.degree)].insert(std::move(row))) return false;
      by_degree[static_cast<std::size_t>(e.degree)].push_back(static_cast<long long>(elts.size()));
      elts.push_back(std::move(e));
      return true;
    };

    for (int g = 0; g < p; ++g) {
      insert_elt({1, gen_parities_[static_cast<std::size_t>(g)], {g},
                  SparseVec::unit(static_cast<Key>(g) + 1)});
    }

    auto word_parity = [&](const std::vector<int>& seq) {
      Parity par = Parity::even;
      for (int g : seq) par = par + gen_parities_[static_cast<std::size_t>(g)];
      return par;
    };

    // Super-commutator of expansions of degrees da, db.
    auto commutator = [&](const SparseVec& ea, int da, Parity pa, const SparseVec& eb, int db,
                          Parity pb) {
      Key shift_b = 1;
      for (int i = 0; i < db; ++i) shift_b *= base;
      Key shift_a = 1;
      for (int i = 0; i < da; ++i) shift_a *= base;
      std::vector<SparseVec::Term> terms;
      terms.reserve(2 * ea.size() * eb.size());
      const Rational sign(-koszul_sign(pa, pb));
      for (const auto& [ka, ca] : ea.terms())
        for (const auto& [kb, cb] : eb.terms()) {
          terms.emplace_back(ka * shift_b + kb, ca * cb);
          terms.emplace_back(kb * shift_a + ka, sign * ca * cb);
        }
      return SparseVec::from_terms(std::move(terms));
    };

    for (int d = 2; d <= class_bound; ++d) {
      // Candidates [g, w] over the degree-(d-1) basis; a maximal independent
      // subset becomes the degree-d basis.
      std::vector<long long> prev = by_degree[static_cast<std::size_t>(d - 1)];
      for (int g = 0; g < p; ++g) {
        for (long long w : prev) {
          // Copy: insert_elt grows elts and would invalidate a reference.
          const SparseVec w_expansion = elts[static_cast<std::size_t>(w)].expansion;
          const Parity w_parity = elts[static_cast<std::size_t>(w)].parity;
          const std::vector<int> w_seq = elts[static_cast<std::size_t>(w)].seq;
          SparseVec x =
              commutator(SparseVec::unit(static_cast<Key>(g) + 1), 1,
                         gen_parities_[static_cast<std::size_t>(g)], w_expansion, d - 1,
                         w_parity);
          if (x.zero()) continue;
          std::vector<int> seq;
          seq.reserve(w_seq.size() + 1);
          seq.push_back(g);
          seq.insert(seq.end(), w_seq.begin(), w_seq.end());
          insert_elt({d, word_parity(seq), std::move(seq), std::move(x)});
        }
      }
    }

    // Per-degree dimensions must match the combinatorial table.
    auto expected = free_dimension_table(
        static_cast<long long>(std::count(gen_parities_.begin(), gen_parities_.end(),
                                          Parity::even)),
        static_cast<long long>(std::count(gen_parities_.begin(), gen_parities_.end(),
                                          Parity::odd)),
        class_bound);
    degree_dims_.clear();
    for (int d = 1; d <= class_bound; ++d) {
      SuperDim got;
      for (long long i : by_degree[static_cast<std::size_t>(d)])
        (elts[static_cast<std::size_t>(i)].parity == Parity::even ? got.even : got.odd) += 1;
      if (got != expected[static_cast<std::size_t>(d - 1)])
        throw InternalError("free algebra degree " + std::to_string(d) + " has dimension " +
                            got.to_string() + ", expected " +
                            expected[static_cast<std::size_t>(d - 1)].to_string());
      degree_dims_.push_back(got);
    }

    // Permute even-first.
    const long long n = static_cast<long long>(elts.size());
    std::vector<long long> perm(static_cast<std::size_t>(n));
    long long next = 0;
    for (long long i = 0; i < n; ++i)
      if (elts[static_cast<std::size_t>(i)].parity == Parity::even)
        perm[static_cast<std::size_t>(i)] = next++;
    const long long even_count = next;
    for (long long i = 0; i < n; ++i)
      if (elts[static_cast<std::size_t>(i)].parity == Parity::odd)
        perm[static_cast<std::size_t>(i)] = next++;

    // Solve coordinates of a degree-d expansion in the construction basis.
    auto solve = [&](const SparseVec& x, int d) {
      SparseVec res = solver[static_cast<std::size_t>(d)].reduce(x);
      if (!res.zero_below_aug())
        throw InternalError("bracket expansion escaped the degree-" + std::to_string(d) +
                            " span");
      std::vector<SparseVec::Term> terms;
      for (const auto& [k, c] : res.terms())
        terms.emplace_back(perm[static_cast<std::size_t>(k - kAugBase)], -c);
      return SparseVec::from_terms(std::move(terms));
    };

    BracketTable table;
    for (long long a = 0; a < n; ++a) {
      const Elt& ea = elts[static_cast<std::size_t>(a)];
      for (long long b = a; b < n; ++b) {
        const Elt& eb = elts[static_cast<std::size_t>(b)];
        if (ea.degree + eb.degree > class_bound) continue;  // truncated to zero
        if (a == b && ea.parity == Parity::even) continue;
        SparseVec x = commutator(ea.expansion, ea.degree, ea.parity, eb.expansion, eb.degree,
                                 eb.parity);
        if (x.zero()) continue;
        SparseVec coords = solve(x, ea.degree + eb.degree);
        if (coords.zero()) continue;
        long long i = perm[static_cast<std::size_t>(a)], j = perm[static_cast<std::size_t>(b)];
        if (i <= j) {
          table[{static_cast<int>(i), static_cast<int>(j)}] = std::move(coords);
        } else {
          coords.scale(Rational(-koszul_sign(ea.parity, eb.parity)));
          table[{static_cast<int>(j), static_cast<int>(i)}] = std::move(coords);
        }
      }
    }

    degree_.assign(static_cast<std::size_t>(n), 0);
    word_.assign(static_cast<std::size_t>(n), {});
    for (long long i = 0; i < n; ++i) {
      const Elt& e = elts[static_cast<std::size_t>(i)];
      degree_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = e.degree;
      word_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = e.seq;
    }
    gen_index_.assign(static_cast<std::size_t>(p), 0);
    for (int g = 0; g < p; ++g)
      gen_index_[static_cast<std::size_t>(g)] = perm[static_cast<std::size_t>(g)];

    algebra_ = LieSuperalgebra(even_count, n - even_count, std::move(table));
  }

  LieSuperalgebra algebra_;
  std::vector<Parity> gen_parities_;
  int class_bound_ = 0;
  std::vector<long long> gen_index_;
  std::vector<long long> degree_;
  std::vector<std::vector<int>> word_;
  std::vector<SuperDim> degree_dims_;
};

inline TruncatedFreeAlgebra free_nilpotent(const std::vector<Parity>& gen_parities,
                                           int class_bound, const OracleLimits& limits = {}) {
  return TruncatedFreeAlgebra(gen_parities, class_bound, limits);
}

// Construction depends only on the parity sequence and the class bound, so
// repeated oracle runs share the result. The cache holds immutable values
// and is safe for concurrent readers.
inline std::shared_ptr<const TruncatedFreeAlgebra> free_nilpotent_cached(
    const std::vector<Parity>& gen_parities, int class_bound, const OracleLimits& limits = {}) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const TruncatedFreeAlgebra>> cache;
  std::string sig;
  sig.reserve(gen_parities.size());
  for (Parity p : gen_parities) sig += (p == Parity::even ? 'e' : 'o');
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(std::move(sig), class_bound);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto value = std::make_shared<const TruncatedFreeAlgebra>(gen_parities, class_bound, limits);
  cache.emplace(std::move(key), value);
  return value;
}

}  // namespace superlie

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "superlie/errors.hpp"
#include "superlie/rational.hpp"

namespace superlie {

using Key = std::int64_t;

// Keys at or above kAugBase are bookkeeping columns: they ride along in
// eliminations but are never eligible as pivots. Used to track which
// combination of inserted vectors produced a row.
inline constexpr Key kAugBase = Key(1) << 40;

// Sorted sparse vector over exact rationals.
class SparseVec {
 public:
  using Term = std::pair<Key, Rational>;

  SparseVec() = default;

  static SparseVec unit(Key k, Rational c = Rational(1)) {
    SparseVec v;
    if (c != 0) v.terms_.emplace_back(k, std::move(c));
    return v;
  }

  // Sorts, combines duplicate keys, drops zeros.
  static SparseVec from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& t : terms) {
      if (!v.terms_.empty() && v.terms_.back().first == t.first)
        v.terms_.back().second += t.second;
      else
        v.terms_.push_back(std::move(t));
    }
    std::erase_if(v.terms_, [](const Term& t) { return t.second == 0; });
    return v;
  }

  bool zero() const { return terms_.empty(); }
  bool zero_below_aug() const { return terms_.empty() || terms_.front().first >= kAugBase; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Rational* coeff(Key k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.first < key; });
    if (it == terms_.end() || it->first != k) return nullptr;
    return &it->second;
  }

  std::optional<Term> leading() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front();
  }

  // First term below the augmentation region.
  std::optional<Term> leading_pivot() const {
    if (zero_below_aug()) return std::nullopt;
    return terms_.front();
  }

  // *this += c * o
  void add_scaled(const SparseVec& o, const Rational& c) {
    if (c == 0 || o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
      if (a->first < b->first) {
        out.push_back(*a++);
      } else if (b->first < a->first) {
        Rational v = c * b->second;
        if (v != 0) out.emplace_back(b->first, std::move(v));
        ++b;
      } else {
        Rational v = a->second + c * b->second;
        if (v != 0) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    for (; a != ae; ++a) out.push_back(*a);
    for (; b != be; ++b) {
      Rational v = c * b->second;
      if (v != 0) out.emplace_back(b->first, std::move(v));
    }
    terms_ = std::move(out);
  }

  void scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return;
    }
    for (auto& t : terms_) t.second *= c;
  }

  SparseVec scaled(const Rational& c) const {
    SparseVec v = *this;
    v.scale(c);
    return v;
  }

  void negate() {
    for (auto& t : terms_) t.second = -t.second;
  }

  // Applies f to every key and re-normalizes. Colliding images are summed.
  SparseVec mapped(const std::function<Key(Key)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(f(k), c);
    return from_terms(std::move(out));
  }

  // Drops every term whose key fails the predicate.
  SparseVec filtered(const std::function<bool(Key)>& keep) const {
    SparseVec v;
    for (const auto& t : terms_)
      if (keep(t.first)) v.terms_.push_back(t);
    return v;
  }

  bool operator==(const SparseVec&) const = default;

 private:
  std::vector<Term> terms_;
};

// Row space in reduced echelon form: pivots are the smallest keys of their
// rows, pivot coefficients are 1, and pivot columns are eliminated from all
// other rows. Rows are kept sorted by pivot, so equal subspaces compare equal.
class Echelon {
 public:
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<Key>& pivots() const { return pivots_; }

  bool has_pivot(Key k) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), k);
    return it != pivots_.end() && *it == k;
  }

  const SparseVec* row_for_pivot(Key k) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), k);
    if (it == pivots_.end() || *it != k) return nullptr;
    return &rows_[static_cast<std::size_t>(it - pivots_.begin())];
  }

  // Eliminates every pivot key present in v. Augmented keys ride along.
  SparseVec reduce(SparseVec v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      const auto& [k, c] = v.terms()[i];
      if (k >= kAugBase) break;
      const SparseVec* row = row_for_pivot(k);
      if (row == nullptr) {
        ++i;
        continue;
      }
      v.add_scaled(*row, -c);
      // Elimination removes key k and introduces only larger keys, so the
      // scan position stays valid.
    }
    return v;
  }

  // Returns true if the rank grew.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    auto lead = v.leading_pivot();
    if (!lead) return false;
    v.scale(Rational(1) / lead->second);
    Key p = lead->first;
    for (auto& row : rows_) {
      if (const Rational* c = row.coeff(p)) row.add_scaled(v, -*c);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
  }

  bool contains(const SparseVec& v) const { return reduce(v).zero_below_aug(); }

  bool operator==(const Echelon&) const = default;

 private:
  std::vector<SparseVec> rows_;
  std::vector<Key> pivots_;
};

// Basis of the solution space of the homogeneous system whose rows are the
// given functionals on columns 0..ncols-1.
inline std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, Key ncols) {
  Echelon ech;
  for (const auto& r : rows) ech.insert(r);
  std::vector<SparseVec> out;
  for (Key f = 0; f < ncols; ++f) {
    if (ech.has_pivot(f)) continue;
    std::vector<SparseVec::Term> terms;
    terms.emplace_back(f, Rational(1));
    for (std::size_t r = 0; r < ech.rows().size(); ++r) {
      if (const Rational* c = ech.rows()[r].coeff(f))
        terms.emplace_back(ech.pivots()[r], -*c);
    }
    out.push_back(SparseVec::from_terms(std::move(terms)));
  }
  return out;
}

}  // namespace superlie

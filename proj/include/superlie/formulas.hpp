#pragma once

#include <string_view>

#include "superlie/errors.hpp"
#include "superlie/grading.hpp"

namespace superlie {

// Closed-form super-dimension formulas. All of them are pure integer
// arithmetic on parameters; adapters that derive parameters from an algebra
// live in capability.hpp so misuse stays type-visible.

// Rule identifiers attached to computed values so reports stay traceable to
// the exact formula that produced them.
namespace rules {
inline constexpr std::string_view multiplier_bound = "multiplier-bound";
inline constexpr std::string_view abelian_multiplier = "abelian-multiplier";
inline constexpr std::string_view even_heisenberg_multiplier = "even-heisenberg-multiplier";
inline constexpr std::string_view odd_heisenberg_multiplier = "odd-heisenberg-multiplier";
inline constexpr std::string_view direct_sum_multiplier = "direct-sum-multiplier";
inline constexpr std::string_view corank_defect = "corank-defect";
inline constexpr std::string_view even_heisenberg_corank = "even-heisenberg-corank";
inline constexpr std::string_view odd_heisenberg_corank = "odd-heisenberg-corank";
inline constexpr std::string_view direct_sum_corank = "direct-sum-corank";
inline constexpr std::string_view exterior_square_extension = "exterior-square-extension";
inline constexpr std::string_view direct_sum_exterior_square = "direct-sum-exterior-square";
}  // namespace rules

struct MultiplierValue {
  SuperDim value;
  std::string_view rule;
};

// Universal bound: dim M(L) <= [(m+n)^2 + (n-m)] / 2 for dim L = (m|n).
// The numerator is always even.
inline long long multiplier_bound(long long m, long long n) {
  if (m < 0 || n < 0 || m + n < 1) throw DomainError("multiplier_bound requires m + n >= 1");
  long long num = (m + n) * (m + n) + (n - m);
  return num / 2;
}

// dim M(A(m|n)) = ( (m^2 + n^2 + n - m)/2 | mn ).
inline MultiplierValue multiplier_abelian(long long m, long long n) {
  if (m < 0 || n < 0) throw DomainError("multiplier_abelian requires m, n >= 0");
  return {{(m * m + n * n + n - m) / 2, m * n}, rules::abelian_multiplier};
}

// Three-case formula for H(m,n).
inline MultiplierValue multiplier_heisenberg_even(long long m, long long n) {
  if (m < 0 || n < 0 || m + n < 1)
    throw DomainError("multiplier_heisenberg_even requires m + n >= 1");
  if (m == 1 && n == 0) return {{2, 0}, rules::even_heisenberg_multiplier};
  if (m == 0 && n == 1) return {{0, 0}, rules::even_heisenberg_multiplier};
  // n(n+1) is always even, so the even part is an integer.
  return {{2 * m * m - m + n * (n + 1) / 2 - 1, 2 * m * n}, rules::even_heisenberg_multiplier};
}

// Two-case formula for H_m.
inline MultiplierValue multiplier_heisenberg_odd(long long m) {
  if (m < 1) throw DomainError("multiplier_heisenberg_odd requires m >= 1");
  if (m == 1) return {{1, 1}, rules::odd_heisenberg_multiplier};
  return {{m * m, m * m - 1}, rules::odd_heisenberg_multiplier};
}

// Dimension of the graded tensor product of spaces of the given dimensions:
// parities add, so (a|b) x (c|d) pairs into (ac + bd | ad + bc).
inline SuperDim graded_tensor_dim(const SuperDim& a, const SuperDim& b) {
  return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

// dim M(H + K) = dim M(H) + dim M(K) + dim(H/H' (x) K/K').
inline MultiplierValue multiplier_direct_sum(const SuperDim& mult_h, const SuperDim& mult_k,
                                             const SuperDim& ab_h, const SuperDim& ab_k) {
  return {mult_h + mult_k + graded_tensor_dim(ab_h, ab_k), rules::direct_sum_multiplier};
}

// Corank t(L) = bound - dim M(L). Negative results mean the inputs do not
// belong to a real algebra, which is a caller bug.
inline long long corank(const SuperDim& algebra_dim, const SuperDim& multiplier) {
  long long t = multiplier_bound(algebra_dim.even, algebra_dim.odd) - multiplier.total();
  if (t < 0)
    throw DomainError("multiplier dimension exceeds the universal bound; inconsistent inputs");
  return t;
}

// t(H(m,n)) = 2m + n + 1, valid for m + n >= 2.
inline long long corank_heisenberg_even(long long m, long long n) {
  if (m < 0 || n < 0 || m + n < 2)
    throw DomainError("corank_heisenberg_even closed form requires m + n >= 2");
  return 2 * m + n + 1;
}

// t(H_m) = 2m + 2, valid for m >= 2.
inline long long corank_heisenberg_odd(long long m) {
  if (m < 2) throw DomainError("corank_heisenberg_odd closed form requires m >= 2");
  return 2 * m + 2;
}

// t(L + K) = t(L) + t(K) + (m+n)(r+s) - dim(L/L' (x) K/K').
inline long long corank_direct_sum(long long t_l, long long t_k, const SuperDim& dim_l,
                                   const SuperDim& dim_k, const SuperDim& ab_l,
                                   const SuperDim& ab_k) {
  return t_l + t_k + dim_l.total() * dim_k.total() - graded_tensor_dim(ab_l, ab_k).total();
}

// dim(L ^ L) = dim M(L) + dim L', by the central extension
// 0 -> M(L) -> L ^ L -> L' -> 0.
inline SuperDim exterior_square_dim(const SuperDim& mult, const SuperDim& derived) {
  return mult + derived;
}

// dim((H+K) ^ (H+K)) = dim(H^H) + dim(K^K) + dim(H/H' (x) K/K').
inline SuperDim exterior_square_direct_sum_dim(const SuperDim& ext_h, const SuperDim& ext_k,
                                               const SuperDim& ab_h, const SuperDim& ab_k) {
  return ext_h + ext_k + graded_tensor_dim(ab_h, ab_k);
}

}  // namespace superlie

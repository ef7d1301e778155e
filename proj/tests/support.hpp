#pragma once

// Shared test helpers.

#include <random>
#include <vector>

#include "superlie/algebra.hpp"

namespace testsupport {

using namespace superlie;

// Random invertible matrix with small integer entries: a unit lower- times
// unit upper-triangular product composed with a permutation, so the
// determinant is +-1 and coefficients stay tame.
inline RationalMatrix random_invertible(std::mt19937& rng, long long n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rational>> lower(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<Rational>> upper = lower;
  for (long long i = 0; i < n; ++i) {
    lower[i][i] = 1;
    upper[i][i] = 1;
    for (long long j = 0; j < i; ++j) lower[i][j] = entry(rng);
    for (long long j = i + 1; j < n; ++j) upper[i][j] = entry(rng);
  }
  std::vector<long long> perm(n);
  for (long long i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  // product = P * L * U, stored column-major (columns are images).
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (long long col = 0; col < n; ++col)
    for (long long row = 0; row < n; ++row) {
      Rational acc = 0;
      for (long long k = 0; k < n; ++k) acc += lower[row][k] * upper[k][col];
      out[col][perm[row]] = acc;
    }
  return out;
}

// Random parity-preserving change of basis of L.
inline LieSuperalgebra scrambled(std::mt19937& rng, const LieSuperalgebra& L) {
  long long ne = L.even_dim(), no = L.dim() - ne;
  return change_basis(L, random_invertible(rng, ne), random_invertible(rng, no));
}

}  // namespace testsupport

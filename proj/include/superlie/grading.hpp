#pragma once

#include <ostream>
#include <string>

#include "superlie/errors.hpp"

namespace superlie {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}

// (-1)^{|a||b|}, the sign that shows up in graded skew-symmetry and Jacobi.
inline constexpr int koszul_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// A pair (even-dimension | odd-dimension).
struct SuperDim {
  long long even = 0;
  long long odd = 0;

  long long total() const { return even + odd; }

  SuperDim operator+(const SuperDim& o) const { return {even + o.even, odd + o.odd}; }
  SuperDim& operator+=(const SuperDim& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  bool operator==(const SuperDim&) const = default;

  std::string to_string() const {
    return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
  }
};

inline SuperDim checked_sub(const SuperDim& a, const SuperDim& b) {
  if (a.even < b.even || a.odd < b.odd)
    throw InternalError("super-dimension subtraction underflow: " + a.to_string() + " - " +
                        b.to_string());
  return {a.even - b.even, a.odd - b.odd};
}

inline std::ostream& operator<<(std::ostream& os, const SuperDim& d) { return os << d.to_string(); }

}  // namespace superlie

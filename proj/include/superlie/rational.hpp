#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "superlie/errors.hpp"

namespace superlie {

// The kernel works over exact rationals with arbitrary-precision integer
// parts. No floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
  Int d = rat_den(q);
  if (d == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + d.str();
}

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw InputError("malformed rational '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    return make_rational(std::move(num), std::move(den));
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(0);  // unreachable
}

}  // namespace superlie

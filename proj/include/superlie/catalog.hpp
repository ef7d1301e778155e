#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/errors.hpp"

namespace superlie {

// A(m|n): zero brackets.
inline LieSuperalgebra abelian(long long m, long long n) {
  if (m < 0 || n < 0) throw DomainError("abelian parameters must be nonnegative");
  std::vector<std::string> labels;
  for (long long i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));
  for (long long i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return LieSuperalgebra(m, n, {}, "A(" + std::to_string(m) + "|" + std::to_string(n) + ")",
                         std::move(labels));
}

// H(m,n), the Heisenberg family with even one-dimensional center:
// even basis x_1..x_2m, z with [x_i, x_{m+i}] = z, odd basis y_1..y_n with
// [y_j, y_j] = z. Dimension (2m+1 | n).
inline LieSuperalgebra heisenberg_even(long long m, long long n) {
  if (m < 0 || n < 0 || m + n < 1)
    throw DomainError("heisenberg_even requires m, n >= 0 and m + n >= 1");
  const long long ze = 2 * m;  // index of z
  BracketTable table;
  for (long long i = 0; i < m; ++i)
    table[{static_cast<int>(i), static_cast<int>(m + i)}] = SparseVec::unit(ze);
  for (long long j = 0; j < n; ++j) {
    long long y = 2 * m + 1 + j;
    table[{static_cast<int>(y), static_cast<int>(y)}] = SparseVec::unit(ze);
  }
  std::vector<std::string> labels;
  for (long long i = 1; i <= 2 * m; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("z");
  for (long long j = 1; j <= n; ++j) labels.push_back("y" + std::to_string(j));
  return LieSuperalgebra(2 * m + 1, n, std::move(table),
                         "H(" + std::to_string(m) + "," + std::to_string(n) + ")",
                         std::move(labels));
}

// H_m, the Heisenberg family with odd one-dimensional center:
// even x_1..x_m, odd y_1..y_m, z with [x_j, y_j] = z. Dimension (m | m+1).
inline LieSuperalgebra heisenberg_odd(long long m) {
  if (m < 1) throw DomainError("heisenberg_odd requires m >= 1");
  const long long z = 2 * m;
  BracketTable table;
  for (long long j = 0; j < m; ++j)
    table[{static_cast<int>(j), static_cast<int>(m + j)}] = SparseVec::unit(z);
  std::vector<std::string> labels;
  for (long long j = 1; j <= m; ++j) labels.push_back("x" + std::to_string(j));
  for (long long j = 1; j <= m; ++j) labels.push_back("y" + std::to_string(j));
  labels.push_back("z");
  return LieSuperalgebra(m, m + 1, std::move(table), "H_" + std::to_string(m), std::move(labels));
}

// Named one-off examples. "cover_of_H1" is the (1|3)-dimensional algebra
// <x, y, r, z | [x,y]=r, [x,r]=z> whose central quotient is H_1.
inline LieSuperalgebra named_example(const std::string& label) {
  if (label == "cover_of_H1") {
    // Basis: x (even); y, r, z (odd).
    BracketTable table;
    table[{0, 1}] = SparseVec::unit(2);  // [x,y] = r
    table[{0, 2}] = SparseVec::unit(3);  // [x,r] = z
    return LieSuperalgebra(1, 3, std::move(table), "cover_of_H1", {"x", "y", "r", "z"});
  }
  throw InputError("unknown named example '" + label + "'");
}

struct FamilyTag {
  enum class Kind { abelian, heisenberg_even, heisenberg_odd, named };
  Kind kind = Kind::abelian;
  long long m = 0, n = 0;
  std::string label;

  std::string to_string() const {
    switch (kind) {
      case Kind::abelian:
        return "A(" + std::to_string(m) + "|" + std::to_string(n) + ")";
      case Kind::heisenberg_even:
        return "H(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Kind::heisenberg_odd:
        return "H_" + std::to_string(m);
      case Kind::named:
        return label;
    }
    return {};
  }

  bool operator==(const FamilyTag&) const = default;
};

inline LieSuperalgebra construct(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyTag::Kind::abelian:
      return abelian(tag.m, tag.n);
    case FamilyTag::Kind::heisenberg_even:
      return heisenberg_even(tag.m, tag.n);
    case FamilyTag::Kind::heisenberg_odd:
      return heisenberg_odd(tag.m);
    case FamilyTag::Kind::named:
      return named_example(tag.label);
  }
  throw InputError("bad family tag");
}

// Parses expressions like "A(2|3)", "H(1,0)", "H_2", "cover_of_H1" and
// sums of those joined with '+', e.g. "H(1,0)+A(1|0)".
inline std::vector<FamilyTag> parse_family_expression(std::string_view expr) {
  std::vector<FamilyTag> tags;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("bad algebra expression '" + std::string(expr) + "' at offset " +
                     std::to_string(pos) + ": " + why);
  };
  auto skip_ws = [&] {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= expr.size() || expr[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto number = [&]() -> long long {
    skip_ws();
    std::size_t start = pos;
    while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoll(std::string(expr.substr(start, pos - start)));
  };

  while (true) {
    skip_ws();
    if (pos >= expr.size()) fail("expected an algebra atom");
    FamilyTag tag;
    if (expr[pos] == 'A') {
      ++pos;
      expect('(');
      tag.kind = FamilyTag::Kind::abelian;
      tag.m = number();
      expect('|');
      tag.n = number();
      expect(')');
    } else if (expr[pos] == 'H') {
      ++pos;
      skip_ws();
      if (pos < expr.size() && expr[pos] == '_') {
        ++pos;
        tag.kind = FamilyTag::Kind::heisenberg_odd;
        tag.m = number();
      } else {
        expect('(');
        tag.kind = FamilyTag::Kind::heisenberg_even;
        tag.m = number();
        expect(',');
        tag.n = number();
        expect(')');
      }
    } else if (expr[pos] == '0') {
      ++pos;
      tag.kind = FamilyTag::Kind::abelian;
      tag.m = tag.n = 0;
    } else {
      std::size_t start = pos;
      while (pos < expr.size() &&
             (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_'))
        ++pos;
      if (pos == start) fail("unrecognized atom");
      tag.kind = FamilyTag::Kind::named;
      tag.label = std::string(expr.substr(start, pos - start));
    }
    tags.push_back(std::move(tag));
    skip_ws();
    if (pos >= expr.size()) break;
    expect('+');
  }
  return tags;
}

inline LieSuperalgebra construct_expression(std::string_view expr) {
  auto tags = parse_family_expression(expr);
  LieSuperalgebra acc = construct(tags.front());
  for (std::size_t i = 1; i < tags.size(); ++i) acc = direct_sum(acc, construct(tags[i]));
  return acc;
}

}  // namespace superlie

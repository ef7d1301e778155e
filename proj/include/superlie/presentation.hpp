#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/errors.hpp"
#include "superlie/grading.hpp"
#include "superlie/interchange.hpp"

namespace superlie {

// A bracket word: nested brackets over generators with rational coefficients.
struct BracketTerm {
  enum class Kind { generator, bracket, sum, scale };
  Kind kind = Kind::generator;
  int gen = -1;             // generator index, Kind::generator
  Rational coeff = 1;       // Kind::scale
  std::vector<BracketTerm> args;

  static BracketTerm generator(int g) {
    BracketTerm t;
    t.kind = Kind::generator;
    t.gen = g;
    return t;
  }
  static BracketTerm bracket(BracketTerm a, BracketTerm b) {
    BracketTerm t;
    t.kind = Kind::bracket;
    t.args = {std::move(a), std::move(b)};
    return t;
  }
  static BracketTerm sum(std::vector<BracketTerm> terms) {
    BracketTerm t;
    t.kind = Kind::sum;
    t.args = std::move(terms);
    return t;
  }
  static BracketTerm scale(Rational c, BracketTerm a) {
    BracketTerm t;
    t.kind = Kind::scale;
    t.coeff = std::move(c);
    t.args = {std::move(a)};
    return t;
  }
};

// Generators with parities, relator bracket words, and the truncation class
// for the oracle computations built on this presentation.
struct FreePresentation {
  std::vector<std::pair<std::string, Parity>> generators;
  std::vector<BracketTerm> relators;
  int class_bound = 2;
};

// Well-defined parity of a term; throws InputError on a mixed sum.
inline Parity term_parity(const FreePresentation& p, const BracketTerm& t) {
  switch (t.kind) {
    case BracketTerm::Kind::generator:
      if (t.gen < 0 || t.gen >= static_cast<int>(p.generators.size()))
        throw InputError("term references a generator out of range");
      return p.generators[static_cast<std::size_t>(t.gen)].second;
    case BracketTerm::Kind::bracket:
      return term_parity(p, t.args[0]) + term_parity(p, t.args[1]);
    case BracketTerm::Kind::scale:
      return term_parity(p, t.args[0]);
    case BracketTerm::Kind::sum: {
      if (t.args.empty()) throw InputError("empty sum in relator");
      Parity first = term_parity(p, t.args[0]);
      for (std::size_t i = 1; i < t.args.size(); ++i)
        if (term_parity(p, t.args[i]) != first)
          throw InputError("relator is not homogeneous: sum mixes parities");
      return first;
    }
  }
  throw InternalError("bad term kind");
}

inline void check_presentation(const FreePresentation& p) {
  if (p.class_bound < 2) throw InputError("class-bound must be at least 2");
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    for (std::size_t j = i + 1; j < p.generators.size(); ++j)
      if (p.generators[i].first == p.generators[j].first)
        throw InputError("duplicate generator name '" + p.generators[i].first + "'");
  for (const auto& r : p.relators) (void)term_parity(p, r);
}

// ---------------------------------------------------------------------------
// S-expression reader/writer
//
//   (presentation
//     (version 1)
//     (generators (x even) (y odd))
//     (class-bound 3)
//     (relators
//       (bracket y y)
//       (sum (bracket x y) (scale -1 z))))

namespace sexpr {

struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  std::size_t line = 0, col = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node n = value();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing content after expression");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("presentation parse error at line " + std::to_string(line_) + ", column " +
                     std::to_string(col_) + ": " + why);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Node value() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    Node n;
    n.line = line_;
    n.col = col_;
    if (text_[pos_] == '(') {
      advance();
      n.is_list = true;
      while (true) {
        skip_ws();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        n.items.push_back(value());
      }
      return n;
    }
    if (text_[pos_] == ')') fail("unexpected ')'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';')
      advance();
    n.atom = std::string(text_.substr(start, pos_ - start));
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace sexpr

namespace detail {

inline BracketTerm parse_term(const sexpr::Node& node, const FreePresentation& p) {
  auto gen_index = [&](const std::string& name, const sexpr::Node& at) -> int {
    for (std::size_t g = 0; g < p.generators.size(); ++g)
      if (p.generators[g].first == name) return static_cast<int>(g);
    throw InputError("unknown generator '" + name + "' at line " + std::to_string(at.line) +
                     ", column " + std::to_string(at.col));
  };
  if (!node.is_list) return BracketTerm::generator(gen_index(node.atom, node));
  if (node.items.empty() || node.items[0].is_list)
    throw InputError("relator term must start with bracket/sum/scale (line " +
                     std::to_string(node.line) + ")");
  const std::string& head = node.items[0].atom;
  if (head == "bracket") {
    if (node.items.size() != 3)
      throw InputError("(bracket a b) takes two arguments (line " + std::to_string(node.line) +
                       ")");
    return BracketTerm::bracket(parse_term(node.items[1], p), parse_term(node.items[2], p));
  }
  if (head == "sum") {
    if (node.items.size() < 2)
      throw InputError("(sum ...) needs at least one term (line " + std::to_string(node.line) +
                       ")");
    std::vector<BracketTerm> terms;
    for (std::size_t i = 1; i < node.items.size(); ++i)
      terms.push_back(parse_term(node.items[i], p));
    return BracketTerm::sum(std::move(terms));
  }
  if (head == "scale") {
    if (node.items.size() != 3 || node.items[1].is_list)
      throw InputError("(scale q t) takes a rational and a term (line " +
                       std::to_string(node.line) + ")");
    return BracketTerm::scale(parse_rational(node.items[1].atom), parse_term(node.items[2], p));
  }
  throw InputError("unknown term head '" + head + "' at line " + std::to_string(node.line));
}

}  // namespace detail

inline FreePresentation read_presentation(const std::string& text) {
  sexpr::Node root = sexpr::Parser(text).parse();
  if (!root.is_list || root.items.empty() || root.items[0].is_list ||
      root.items[0].atom != "presentation")
    throw InputError("expected a (presentation ...) form");

  FreePresentation p;
  const sexpr::Node* relators = nullptr;
  bool saw_version = false;
  for (std::size_t i = 1; i < root.items.size(); ++i) {
    const sexpr::Node& section = root.items[i];
    if (!section.is_list || section.items.empty() || section.items[0].is_list)
      throw InputError("bad presentation section at line " + std::to_string(section.line));
    const std::string& head = section.items[0].atom;
    if (head == "version") {
      if (section.items.size() != 2 || section.items[1].atom != "1")
        throw InputError("unsupported presentation version (this reader handles 1)");
      saw_version = true;
    } else if (head == "generators") {
      for (std::size_t g = 1; g < section.items.size(); ++g) {
        const sexpr::Node& gen = section.items[g];
        if (!gen.is_list || gen.items.size() != 2 || gen.items[0].is_list ||
            gen.items[1].is_list)
          throw InputError("generators are (name even|odd) pairs (line " +
                           std::to_string(gen.line) + ")");
        Parity par;
        if (gen.items[1].atom == "even")
          par = Parity::even;
        else if (gen.items[1].atom == "odd")
          par = Parity::odd;
        else
          throw InputError("generator parity must be 'even' or 'odd' (line " +
                           std::to_string(gen.line) + ")");
        p.generators.emplace_back(gen.items[0].atom, par);
      }
    } else if (head == "class-bound") {
      if (section.items.size() != 2 || section.items[1].is_list)
        throw InputError("(class-bound N) takes one integer");
      try {
        p.class_bound = std::stoi(section.items[1].atom);
      } catch (const std::exception&) {
        throw InputError("bad class-bound '" + section.items[1].atom + "'");
      }
    } else if (head == "relators") {
      relators = &section;
    } else {
      throw InputError("unknown presentation section '" + head + "' at line " +
                       std::to_string(section.line));
    }
  }
  if (!saw_version) throw InputError("presentation is missing (version 1)");
  if (relators != nullptr)
    for (std::size_t r = 1; r < relators->items.size(); ++r)
      p.relators.push_back(detail::parse_term(relators->items[r], p));
  check_presentation(p);
  return p;
}

inline FreePresentation read_presentation_file(const std::string& path) {
  return read_presentation(detail::file_contents(path));
}

inline std::string term_to_string(const FreePresentation& p, const BracketTerm& t) {
  switch (t.kind) {
    case BracketTerm::Kind::generator:
      return p.generators[static_cast<std::size_t>(t.gen)].first;
    case BracketTerm::Kind::bracket:
      return "(bracket " + term_to_string(p, t.args[0]) + " " + term_to_string(p, t.args[1]) +
             ")";
    case BracketTerm::Kind::sum: {
      std::string out = "(sum";
      for (const auto& a : t.args) out += " " + term_to_string(p, a);
      return out + ")";
    }
    case BracketTerm::Kind::scale:
      return "(scale " + to_string(t.coeff) + " " + term_to_string(p, t.args[0]) + ")";
  }
  return {};
}

inline std::string write_presentation(const FreePresentation& p) {
  std::string out = "(presentation\n  (version 1)\n  (generators";
  for (const auto& [name, parity] : p.generators)
    out += " (" + name + " " + to_string(parity) + ")";
  out += ")\n  (class-bound " + std::to_string(p.class_bound) + ")\n  (relators";
  for (const auto& r : p.relators) out += "\n    " + term_to_string(p, r);
  out += "))\n";
  return out;
}

// Canonical presentation of a nilpotent algebra: one generator per basis
// vector, one relator [e_i, e_j] - sum c^k_ij e_k per stored pair (the even
// diagonal vanishes identically and is skipped), class bound class(L) + 1.
inline FreePresentation presentation_of(const LieSuperalgebra& L) {
  auto cls = nilpotency_class(L);
  if (!cls) throw DomainError("presentation_of requires a nilpotent algebra");

  FreePresentation p;
  p.class_bound = static_cast<int>(*cls) + 1;
  if (p.class_bound < 2) p.class_bound = 2;

  std::vector<std::string> names;
  bool distinct = !L.labels().empty();
  if (distinct) {
    names = L.labels();
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  if (!distinct) {
    names.clear();
    for (long long i = 0; i < L.dim(); ++i) names.push_back("g" + std::to_string(i));
  }
  for (long long i = 0; i < L.dim(); ++i)
    p.generators.emplace_back(names[static_cast<std::size_t>(i)], L.parity(i));

  for (long long i = 0; i < L.dim(); ++i)
    for (long long j = i; j < L.dim(); ++j) {
      if (i == j && L.parity(i) == Parity::even) continue;
      BracketTerm lhs = BracketTerm::bracket(BracketTerm::generator(static_cast<int>(i)),
                                             BracketTerm::generator(static_cast<int>(j)));
      SparseVec value = L.bracket_basis(i, j);
      if (value.zero()) {
        p.relators.push_back(std::move(lhs));
        continue;
      }
      std::vector<BracketTerm> terms;
      terms.push_back(std::move(lhs));
      for (const auto& [k, c] : value.terms())
        terms.push_back(BracketTerm::scale(-c, BracketTerm::generator(static_cast<int>(k))));
      p.relators.push_back(BracketTerm::sum(std::move(terms)));
    }
  check_presentation(p);
  return p;
}

}  // namespace superlie

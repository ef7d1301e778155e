#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superlie/free_algebra.hpp"

using namespace superlie;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
}

TEST_CASE("free dimension table reproduces Witt dimensions") {
  // Free Lie algebra on 2 even generators: 2, 1, 2, 3, 6.
  auto dims = free_dimension_table(2, 0, 5);
  REQUIRE(dims.size() == 5);
  CHECK(dims[0] == SuperDim{2, 0});
  CHECK(dims[1] == SuperDim{1, 0});
  CHECK(dims[2] == SuperDim{2, 0});
  CHECK(dims[3] == SuperDim{3, 0});
  CHECK(dims[4] == SuperDim{6, 0});

  // On 3 even generators: 3, 3, 8, 18.
  auto d3 = free_dimension_table(3, 0, 4);
  CHECK(d3[0] == SuperDim{3, 0});
  CHECK(d3[1] == SuperDim{3, 0});
  CHECK(d3[2] == SuperDim{8, 0});
  CHECK(d3[3] == SuperDim{18, 0});

  // One even and one odd generator: (1|1), (1|1), (1|1) by hand expansion.
  auto dxy = free_dimension_table(1, 1, 3);
  CHECK(dxy[0] == SuperDim{1, 1});
  CHECK(dxy[1] == SuperDim{1, 1});
  CHECK(dxy[2] == SuperDim{1, 1});

  // Two odd generators, degree 2: the super-symmetric square (3|0).
  auto dyy = free_dimension_table(0, 2, 2);
  CHECK(dyy[0] == SuperDim{0, 2});
  CHECK(dyy[1] == SuperDim{3, 0});
}

TEST_CASE("free algebra on one even generator is abelian") {
  TruncatedFreeAlgebra F({Parity::even}, 3);
  CHECK(F.algebra().dim() == 1);
  CHECK(F.algebra().entries().empty());
}

TEST_CASE("free algebra on one odd generator stops at degree 2") {
  TruncatedFreeAlgebra F2({Parity::odd}, 2);
  CHECK(F2.algebra().sdim() == SuperDim{1, 1});
  // [y,[y,y]] = 0 by the graded Jacobi identity, so class 3 adds nothing.
  TruncatedFreeAlgebra F3({Parity::odd}, 3);
  CHECK(F3.algebra().sdim() == SuperDim{1, 1});
}

TEST_CASE("free algebra on (x even, y odd) matches the worked listing") {
  TruncatedFreeAlgebra F({Parity::even, Parity::odd}, 2);
  // Degrees: d1 = (1|1), d2 = {[x,y] odd, [y,y] even}.
  CHECK(F.algebra().sdim() == SuperDim{2, 2});
  CHECK(F.degree_dims(1) == SuperDim{1, 1});
  CHECK(F.degree_dims(2) == SuperDim{1, 1});

  TruncatedFreeAlgebra F3({Parity::even, Parity::odd}, 3);
  CHECK(F3.algebra().sdim() == SuperDim{3, 3});

  // Word strings of the degree-3 basis: the even one is [x,[y,y]] and the
  // odd one [x,[x,y]] with the candidate order used here; [y,[x,y]] is
  // eliminated by the Jacobi relation [x,[y,y]] = 2[y,[x,y]].
  std::vector<std::string> words;
  for (long long i = 0; i < F3.algebra().dim(); ++i)
    if (F3.degree(i) == 3) words.push_back(F3.word_string(i, kXY));
  REQUIRE(words.size() == 2);
  CHECK((words[0] == "[x,[y,y]]" || words[1] == "[x,[y,y]]"));
  CHECK((words[0] == "[x,[x,y]]" || words[1] == "[x,[x,y]]"));
}

TEST_CASE("free algebra structure constants satisfy the axioms") {
  for (auto [pe, po, cls] : std::vector<std::tuple<int, int, int>>{
           {2, 0, 3}, {1, 1, 3}, {0, 2, 3}, {2, 1, 3}, {1, 2, 2}, {3, 0, 4}}) {
    std::vector<Parity> gens;
    for (int i = 0; i < pe; ++i) gens.push_back(Parity::even);
    for (int i = 0; i < po; ++i) gens.push_back(Parity::odd);
    TruncatedFreeAlgebra F(gens, cls);
    CAPTURE(pe, po, cls);
    CHECK(validate(F.algebra()).ok());
    // Truncation: gamma_{class_bound+1} vanishes, gamma_{class_bound} does
    // not (all these examples have nonzero top degree).
    CHECK(nilpotency_class(F.algebra()) == cls);
  }
}

TEST_CASE("generator bracket lands on the expected basis word") {
  TruncatedFreeAlgebra F({Parity::even, Parity::odd}, 2);
  long long x = F.generator_basis_index(0), y = F.generator_basis_index(1);
  SparseVec xy = F.algebra().bracket(SparseVec::unit(x), SparseVec::unit(y));
  REQUIRE(xy.size() == 1);
  CHECK(F.word(xy.terms()[0].first) == std::vector<int>{0, 1});
  CHECK(xy.terms()[0].second == 1);

  // [y,y] is a basis word with coefficient 1 as well.
  SparseVec yy = F.algebra().bracket(SparseVec::unit(y), SparseVec::unit(y));
  REQUIRE(yy.size() == 1);
  CHECK(F.word(yy.terms()[0].first) == std::vector<int>{1, 1});
  CHECK(yy.terms()[0].second == 1);

  // [x, [x,y]] in degree 3.
  TruncatedFreeAlgebra F3({Parity::even, Parity::odd}, 3);
  x = F3.generator_basis_index(0);
  y = F3.generator_basis_index(1);
  SparseVec inner = F3.algebra().bracket(SparseVec::unit(x), SparseVec::unit(y));
  SparseVec outer = F3.algebra().bracket(SparseVec::unit(x), inner);
  REQUIRE(outer.size() == 1);
  CHECK(F3.word_string(outer.terms()[0].first, kXY) == "[x,[x,y]]");
  CHECK(outer.terms()[0].second == 1);

  // The Jacobi relation [x,[y,y]] = 2[y,[x,y]] identified during selection.
  SparseVec yyv = F3.algebra().bracket(SparseVec::unit(y), SparseVec::unit(y));
  SparseVec xyy = F3.algebra().bracket(SparseVec::unit(x), yyv);
  SparseVec yxy = F3.algebra().bracket(SparseVec::unit(y), inner);
  SparseVec diff = xyy;
  diff.add_scaled(yxy, Rational(-2));
  CHECK(diff.zero());
}

TEST_CASE("degree truncation kills long brackets") {
  TruncatedFreeAlgebra F({Parity::even, Parity::even}, 2);
  long long a = F.generator_basis_index(0), b = F.generator_basis_index(1);
  SparseVec ab = F.algebra().bracket(SparseVec::unit(a), SparseVec::unit(b));
  CHECK_FALSE(ab.zero());
  CHECK(F.algebra().bracket(SparseVec::unit(a), ab).zero());
}

TEST_CASE("per-degree dimensions match the combinatorial table", "[property]") {
  for (int pe = 0; pe <= 3; ++pe)
    for (int po = 0; po <= 3 - pe; ++po) {
      if (pe + po == 0) continue;
      for (int cls = 1; cls <= 4; ++cls) {
        std::vector<Parity> gens;
        for (int i = 0; i < pe; ++i) gens.push_back(Parity::even);
        for (int i = 0; i < po; ++i) gens.push_back(Parity::odd);
        // The constructor itself asserts agreement with the table; also
        // check the reported totals add up.
        TruncatedFreeAlgebra F(gens, cls);
        SuperDim total;
        for (int d = 1; d <= cls; ++d) total += F.degree_dims(d);
        CAPTURE(pe, po, cls);
        CHECK(total == F.algebra().sdim());
      }
    }
}

TEST_CASE("limits are enforced") {
  std::vector<Parity> many(9, Parity::even);
  CHECK_THROWS_AS(TruncatedFreeAlgebra(many, 2), LimitError);
  CHECK_THROWS_AS(TruncatedFreeAlgebra({Parity::even}, 6), LimitError);
  CHECK_THROWS_AS(TruncatedFreeAlgebra({}, 2), InputError);
  OracleLimits wide{10, 6};
  CHECK_NOTHROW(TruncatedFreeAlgebra({Parity::even, Parity::even}, 6, wide));
}

TEST_CASE("cached construction is shared") {
  auto a = free_nilpotent_cached({Parity::even, Parity::odd}, 3);
  auto b = free_nilpotent_cached({Parity::even, Parity::odd}, 3);
  CHECK(a.get() == b.get());
  auto c = free_nilpotent_cached({Parity::odd, Parity::even}, 3);
  CHECK(a.get() != c.get());
}

#include <catch2/catch_amalgamated.hpp>

#include "superlie/catalog.hpp"

using namespace superlie;

TEST_CASE("abelian family") {
  CHECK(abelian(1, 0).sdim() == SuperDim{1, 0});
  auto a = abelian(2, 3);
  CHECK(a.sdim() == SuperDim{2, 3});
  CHECK(derived_subalgebra(a).dim() == 0);
  CHECK(validate(a).ok());
  CHECK(abelian(0, 0).dim() == 0);
}

TEST_CASE("even-center Heisenberg family") {
  auto h10 = heisenberg_even(1, 0);
  CHECK(h10.sdim() == SuperDim{3, 0});
  CHECK(h10.bracket_basis(0, 1) == SparseVec::unit(2));

  auto h01 = heisenberg_even(0, 1);
  CHECK(h01.sdim() == SuperDim{1, 1});
  CHECK(h01.bracket_basis(1, 1) == SparseVec::unit(0));

  CHECK(center(heisenberg_even(2, 1)).sdim() == SuperDim{1, 0});

  for (auto [m, n] : {std::pair{1LL, 0LL}, {0LL, 1LL}, {2LL, 0LL}, {0LL, 3LL}, {2LL, 2LL}}) {
    auto h = heisenberg_even(m, n);
    CAPTURE(m, n);
    CHECK(h.sdim() == SuperDim{2 * m + 1, n});
    CHECK(validate(h).ok());
    auto z = center(h);
    CHECK(z.sdim() == SuperDim{1, 0});
    CHECK(z == derived_subalgebra(h));
  }
  CHECK_THROWS_AS(heisenberg_even(0, 0), DomainError);
}

TEST_CASE("odd-center Heisenberg family") {
  auto h1 = heisenberg_odd(1);
  CHECK(h1.sdim() == SuperDim{1, 2});
  CHECK(h1.bracket_basis(0, 1) == SparseVec::unit(2));

  CHECK(heisenberg_odd(2).sdim() == SuperDim{2, 3});

  for (long long m = 1; m <= 4; ++m) {
    auto h = heisenberg_odd(m);
    CAPTURE(m);
    CHECK(h.sdim() == SuperDim{m, m + 1});
    CHECK(validate(h).ok());
    auto z = center(h);
    CHECK(z.sdim() == SuperDim{0, 1});
    CHECK(z == derived_subalgebra(h));
    CHECK(nilpotency_class(h) == 2);
  }
  CHECK_THROWS_AS(heisenberg_odd(0), DomainError);
}

TEST_CASE("named example cover_of_H1") {
  auto cover = named_example("cover_of_H1");
  CHECK(cover.sdim() == SuperDim{1, 3});
  CHECK(validate(cover).ok());
  CHECK(center(cover).sdim() == SuperDim{0, 1});
  CHECK(nilpotency_class(cover) == 3);
  CHECK_THROWS_AS(named_example("nope"), InputError);
}

TEST_CASE("family expression parsing") {
  CHECK(construct_expression("A(2|3)").sdim() == SuperDim{2, 3});
  CHECK(construct_expression("H(1,0)").name() == "H(1,0)");
  CHECK(construct_expression("H_2").sdim() == SuperDim{2, 3});
  CHECK(construct_expression("H(1,0)+A(1|0)").sdim() == SuperDim{4, 0});
  CHECK(construct_expression(" H_1 + A(0|2) ").sdim() == SuperDim{1, 4});
  CHECK(construct_expression("cover_of_H1").sdim() == SuperDim{1, 3});
  CHECK(construct_expression("0").dim() == 0);
  CHECK_THROWS_AS(construct_expression("B(1|2)"), InputError);
  CHECK_THROWS_AS(construct_expression("H(1,0)+"), InputError);
  CHECK_THROWS_AS(construct_expression("A(1,2)"), InputError);
}

TEST_CASE("tag round trip strings") {
  for (const char* expr : {"A(1|2)", "H(2,1)", "H_3", "cover_of_H1"}) {
    auto tags = parse_family_expression(expr);
    REQUIRE(tags.size() == 1);
    CHECK(tags[0].to_string() == expr);
  }
}

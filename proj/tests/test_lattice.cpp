#include <doctest.h>

#include <random>

#include "ratsurf/error.hpp"
#include "ratsurf/lattice.hpp"
#include "support.hpp"

using namespace ratsurf;
using test_support::E;
using test_support::times;

TEST_CASE("intersect uses diag(1, -1, ..., -1)") {
  CHECK(intersect(E(4, 0), E(4, 0)) == 1);
  CHECK(intersect(E(4, 1), E(4, 1)) == -1);
  CHECK(intersect(-canonical_class(7), -canonical_class(7)) == 3);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(intersect(E(5, i), E(5, j)) == 0);
}

TEST_CASE("intersect rejects mismatched lengths") {
  try {
    intersect(E(3, 0), E(4, 0));
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dimension);
  }
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(1) == DivisorClass{-3});
  CHECK(canonical_class(3) == DivisorClass{-3, 1, 1});
  CHECK_THROWS_AS(canonical_class(0), Error);
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto k = canonical_class(n + 1);
    CHECK(intersect(k, k) == 9 - static_cast<long>(n));
  }
}

TEST_CASE("Riemann-Roch Euler characteristic") {
  CHECK(chi_riemann_roch(DivisorClass::zero(4)) == 1);
  CHECK(chi_riemann_roch(E(4, 0)) == 3);
  CHECK(chi_riemann_roch(-canonical_class(9)) == 2);
}

TEST_CASE("adjunction genus") {
  CHECK(adjunction_genus(E(3, 1)) == 0);
  CHECK(adjunction_genus(-canonical_class(10)) == 1);
  CHECK(adjunction_genus(times(3, E(2, 0))) == 1);
  CHECK(adjunction_genus(E(1, 0)) == 0);
}

TEST_CASE("contract_project") {
  const auto k = canonical_class(10);
  const auto e9 = E(10, 9);
  const auto f = E(10, 0) - E(10, 1);
  CHECK(contract_project(f, e9) == f);

  const auto k_y = contract_project(k, e9);
  CHECK(k_y == k - e9);
  CHECK(intersect(k_y, k_y) == intersect(k, k) + 1);

  CHECK(contract_project(E(3, 0) - E(3, 1), E(3, 1)) == E(3, 0));
  CHECK(intersect(E(3, 0), E(3, 0)) == 1);

  CHECK_THROWS_AS(contract_project(f, E(10, 0)), Error);
}

TEST_CASE("lattice context tracks the contracted canonical class") {
  LatticeContext ctx(10);
  CHECK(intersect(ctx.canonical(), ctx.canonical()) == 0);
  auto c1 = ctx.contract(E(10, 9));
  CHECK(intersect(c1.canonical(), c1.canonical()) == 1);
  CHECK(c1.is_exceptional(E(10, 8)));
  CHECK_FALSE(c1.is_exceptional(E(10, 0)));
  auto c2 = c1.contract(E(10, 8));
  CHECK(c2.contracted().size() == 2);
  CHECK(intersect(c2.canonical(), c2.canonical()) == 2);
  CHECK(c2.project(E(10, 0) - E(10, 8)) == E(10, 0));
  CHECK_THROWS_AS(c2.contract(E(10, 0) - E(10, 1) - E(10, 9)), Error);
}

TEST_CASE("big coordinates stay exact") {
  const Integer big("123456789012345678901234567890");
  DivisorClass f(std::vector<Integer>{big, big, 1});
  CHECK_FALSE(f.is_small());
  CHECK(intersect(f, f) == big * big - big * big - 1);
  CHECK((f + f).divided_by(2) == f);
  DivisorClass g = DivisorClass::from_int64(std::vector<std::int64_t>{INT64_MAX, INT64_MIN, 0});
  CHECK(intersect(g, g) == Integer(std::to_string(INT64_MAX)) * Integer(std::to_string(INT64_MAX)) -
                               Integer(std::to_string(INT64_MIN)) * Integer(std::to_string(INT64_MIN)));
}

TEST_CASE("content and ordering") {
  CHECK(DivisorClass({6, -2, -4}).content() == 2);
  CHECK(DivisorClass::zero(3).content() == 0);
  CHECK(DivisorClass({0, 1}) < DivisorClass({1, 0}));
  CHECK(DivisorClass({3, -1, 0}).to_string() == "(3; -1, 0)");
}

TEST_CASE("property: the form is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rank = 1 + trial % 12;
    const auto f = test_support::random_class(rng, rank, -50, 50);
    const auto g = test_support::random_class(rng, rank, -50, 50);
    const auto h = test_support::random_class(rng, rank, -50, 50);
    const Integer a(trial - 250);
    CHECK(intersect(f, g) == intersect(g, f));
    CHECK(intersect(f + a * g, h) == intersect(f, h) + a * intersect(g, h));
  }
}

TEST_CASE("property: Riemann-Roch symmetry chi(F) + chi(K - F) = F.(F - K) + 2") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rank = 1 + trial % 12;
    const auto f = test_support::random_class(rng, rank, -20, 20);
    const auto k = canonical_class(rank);
    CHECK(chi_riemann_roch(f) + chi_riemann_roch(k - f) == intersect(f, f - k) + 2);
    CHECK(chi_riemann_roch(f) - adjunction_genus(f) == -intersect(k, f));
  }
}

TEST_CASE("property: contraction preserves products inside E-perp") {
  std::mt19937_64 rng(13);
  const std::size_t rank = 9;
  const auto e = E(rank, 0) - E(rank, 1) - E(rank, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = test_support::random_class(rng, rank, -10, 10);
    const auto g = test_support::random_class(rng, rank, -10, 10);
    const auto pf = contract_project(f, e);
    const auto pg = contract_project(g, e);
    CHECK(intersect(pf, e) == 0);
    CHECK(contract_project(pf, e) == pf);
    CHECK(intersect(pf, pg) == intersect(f, g) + intersect(f, e) * intersect(g, e));
  }
}

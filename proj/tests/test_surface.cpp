#include <doctest.h>

#include <algorithm>
#include <random>

#include "ratsurf/cone.hpp"
#include "ratsurf/error.hpp"
#include "ratsurf/surface.hpp"
#include "support.hpp"

using namespace ratsurf;
using test_support::E;
using test_support::times;

TEST_CASE("builtin del Pezzo specs validate") {
  for (int n = 0; n <= 8; ++n) {
    const auto spec = builtin_spec("delpezzo", n);
    CHECK(validate_spec(spec).empty());
    CHECK(spec.h0_anticanonical == 10 - n);
  }
  CHECK(builtin_spec("delpezzo", 6).curves.size() == 27);
  CHECK(builtin_spec("delpezzo", 8).h0_anticanonical == 2);
}

TEST_CASE("builtin specs reject bad parameters") {
  auto domain = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Domain;
    }
    return false;
  };
  CHECK(domain([] { builtin_spec("delpezzo", 12); }));
  CHECK(domain([] { builtin_spec("delpezzo", -1); }));
  CHECK(domain([] { builtin_spec("cubic_pencil", 8); }));
  CHECK(domain([] { builtin_spec("torsion", 9, 1); }));
  CHECK(domain([] { builtin_spec("quartic", 3); }));
}

TEST_CASE("validation names the broken rule") {
  auto spec = builtin_spec("delpezzo", 3);
  auto bad = spec;
  bad.curves.push_back({E(4, 0) - E(4, 1), false});
  bad.normalize();
  auto v = validate_spec(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].field.rfind("curves", 0) == 0);

  bad = spec;
  bad.ample = DivisorClass{3, 0, -1, -1};
  v = validate_spec(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].field == "ample");

  bad = spec;
  bad.curves.push_back(bad.curves.front());
  CHECK_FALSE(validate_spec(bad).empty());

  bad = spec;
  bad.h0_anticanonical = 3;
  CHECK(validate_spec(bad).size() == 1);

  bad = spec;
  bad.restriction.rows.push_back({{1, 2}, 0});
  CHECK_FALSE(validate_spec(bad).empty());
  CHECK_THROWS_AS(require_valid(bad), Error);
}

TEST_CASE("lambda membership") {
  const auto dp = builtin_spec("delpezzo", 4);
  CHECK(lambda_contains(dp, DivisorClass::zero(5)));
  CHECK_FALSE(lambda_contains(dp, E(5, 1) - E(5, 2)));

  const auto cp = builtin_spec("cubic_pencil", 9);
  CHECK(lambda_contains(cp, -cp.canonical()));
  const auto t2 = builtin_spec("torsion", 9, 2);
  CHECK_FALSE(lambda_contains(t2, -t2.canonical()));
  CHECK(lambda_contains(t2, times(-2, t2.canonical())));

  try {
    lambda_contains(dp, E(5, 0));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("tau") {
  CHECK(tau(builtin_spec("cubic_pencil", 9)) == Integer(1));
  CHECK(tau(builtin_spec("torsion", 9, 2)) == Integer(2));
  CHECK(tau(builtin_spec("torsion", 9, 3)) == Integer(3));
  CHECK(tau(builtin_spec("torsion", 9, 12)) == Integer(12));
  CHECK_FALSE(tau(builtin_spec("delpezzo", 8)).has_value());

  auto spec = builtin_spec("cubic_pencil", 9);
  spec.restriction.rows.push_back({std::vector<Integer>(10, 0), 4});
  spec.restriction.rows.back().coeffs[2] = 2;
  spec.restriction.rows.push_back({std::vector<Integer>(10, 0), 6});
  spec.restriction.rows.back().coeffs[3] = 1;
  // 2t = 0 mod 4 and t = 0 mod 6
  CHECK(tau(spec) == Integer(6));
}

TEST_CASE("exceptional enumeration examples") {
  CHECK(enumerate_exceptional_classes(0, 5).classes.empty());
  const auto three = enumerate_exceptional_classes(3, 1);
  const std::vector<DivisorClass> expected{
      {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, -1, -1, 0}, {1, -1, 0, -1}, {1, 0, -1, -1}};
  CHECK(three.classes == expected);
  CHECK(three.saturated);
  CHECK(enumerate_exceptional_classes(6, 10).classes.size() == 27);
  const long counts[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int n = 0; n <= 8; ++n) {
    auto e = enumerate_exceptional_classes(n, 10);
    CHECK(e.classes.size() == static_cast<std::size_t>(counts[n]));
    CHECK(e.saturated);
  }
}

TEST_CASE("n = 9 enumeration is never saturated") {
  const auto e = enumerate_exceptional_classes(9, 3);
  CHECK_FALSE(e.saturated);
  CHECK_FALSE(e.max_degree.has_value());
  CHECK(e.classes.size() == 9 + 36 + 126 + 252);
}

TEST_CASE("root enumeration") {
  CHECK(enumerate_root_classes(builtin_spec("delpezzo", 6), 10).classes.empty());
  const auto no_rows = test_support::fixture_spec("delpezzo8_no_rows.json");
  const auto roots = enumerate_root_classes(no_rows, 10);
  CHECK(roots.classes.size() == 120);
  CHECK(roots.saturated);

  SurfaceSpec two;
  two.n = 2;
  two.ample = DivisorClass{7, -2, -2};
  const auto r2 = enumerate_root_classes(two, 3);
  CHECK(std::find(r2.classes.begin(), r2.classes.end(), DivisorClass{0, 1, -1}) != r2.classes.end());
  CHECK(std::find(r2.classes.begin(), r2.classes.end(), DivisorClass{0, -1, 1}) == r2.classes.end());
}

TEST_CASE("property: enumeration is idempotent past the saturating bound") {
  for (int n = 1; n <= 8; ++n) {
    const auto spec = builtin_spec("delpezzo", n);
    const auto e = enumerate_exceptional_classes(spec, 20);
    REQUIRE(e.max_degree.has_value());
    const long b = *e.max_degree;
    const auto at = enumerate_exceptional_classes(spec, b);
    const auto past = enumerate_exceptional_classes(spec, b + 2);
    CHECK(at.saturated);
    CHECK(at.classes == past.classes);
    for (const auto& c : at.classes) {
      CHECK(adjunction_genus(c) == 0);
      CHECK(intersect(spec.ample, c) > 0);
    }
    CHECK(std::is_sorted(at.classes.begin(), at.classes.end()));
    CHECK(std::adjacent_find(at.classes.begin(), at.classes.end()) == at.classes.end());
  }
}

TEST_CASE("catalog curves meet the ample witness positively") {
  for (const char* kind : {"cubic_pencil", "torsion"}) {
    const auto spec = builtin_spec(kind, 9, 2);
    for (const auto& c : spec.curves) CHECK(intersect(spec.ample, c.cls) > 0);
  }
}

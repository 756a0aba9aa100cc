#include <doctest.h>

#include <algorithm>

#include "ratsurf/cone.hpp"
#include "ratsurf/error.hpp"
#include "ratsurf/oracle.hpp"
#include "support.hpp"

using namespace ratsurf;
using namespace ratsurf::oracle;
using test_support::E;

TEST_CASE("scan_box visits every point once, in order") {
  std::vector<Point> seen;
  scan_box({{0, -1}, {1, 1}}, [&](const Point& p) { seen.push_back(p); });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == Point{0, -1});
  CHECK(seen.back() == Point{1, 1});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("scan_box refuses oversized or malformed boxes") {
  auto refused = [](const SearchBox& b, std::uint64_t cap) {
    try {
      scan_box(b, [](const Point&) {}, cap);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Refusal;
    }
    return false;
  };
  CHECK(refused(SearchBox::uniform(9, -10, 10), kDefaultVolumeCap));
  CHECK(refused(SearchBox::uniform(3, 0, 9), 999));
  CHECK_FALSE(refused(SearchBox::uniform(3, 0, 9), 1000));
  CHECK(refused({{1}, {0}}, 10));
  CHECK(SearchBox::uniform(40, -100, 100).volume() == UINT64_MAX);
}

TEST_CASE("brute_solve_quadratic examples") {
  const auto six = brute_solve_quadratic(4, -1, 1, SearchBox::uniform(4, -1, 1));
  const std::vector<DivisorClass> expected{
      {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, -1, -1, 0}, {1, -1, 0, -1}, {1, 0, -1, -1}};
  CHECK(six == expected);
  CHECK(brute_solve_quadratic(1, -1, 1, SearchBox::uniform(1, -50, 50)).empty());
}

TEST_CASE("brute_solve_quadratic agrees with the engine for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto brute = brute_solve_quadratic(n + 1, -1, 1, SearchBox::uniform(n + 1, -2, 2));
    CHECK(brute == enumerate_exceptional_classes(n, 10).classes);
  }
}

TEST_CASE("monoid membership examples") {
  const auto dp3 = builtin_spec("delpezzo", 3);
  std::vector<DivisorClass> gens;
  for (const auto& c : dp3.curves) gens.push_back(c.cls);
  CHECK(brute_monoid_membership(gens, DivisorClass::zero(4), 0));
  CHECK(brute_monoid_membership(gens, E(4, 0) - E(4, 1) - E(4, 2), 1));
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) CHECK_FALSE(brute_monoid_membership(gens, E(4, j) - E(4, i), 6));
  // E0 = (E0 - E1 - E2) + E1 + E2 needs three summands
  CHECK(brute_monoid_membership(gens, E(4, 0), 3));
  CHECK_FALSE(brute_monoid_membership(gens, E(4, 0), 2));
  CHECK_FALSE(brute_monoid_membership(gens, DivisorClass{1, -1, 0, 0} + DivisorClass{1, -1, -1, 0}, 1));
}

TEST_CASE("monoid search refuses past its state cap") {
  std::vector<Point> gens{{1, 0}, {0, 1}, {1, 1}};
  MonoidSearch search(gens, 5);
  try {
    search.contains({40, -1}, 50);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Refusal);
  }
}

TEST_CASE("brute_check_chain") {
  CHECK(brute_check_chain(std::vector<DivisorClass>{E(3, 1)}));
  CHECK_FALSE(brute_check_chain(std::vector<DivisorClass>{DivisorClass{0, 1, -1, 0, 0}, DivisorClass{0, 0, 0, 1, -1}}));
  CHECK_FALSE(brute_check_chain(std::vector<DivisorClass>{}));

  // N1 = E1 - E2, N2 = E2 is a chain; the pencil C = E0 - E1 meets N1 once
  const std::vector<DivisorClass> chain{{0, 1, -1}, {0, 0, 1}};
  CHECK(brute_check_chain(chain));
  const std::vector<DivisorClass> swapped{chain[1], chain[0]};
  CHECK_FALSE(brute_check_chain(swapped));

  const DivisorClass cubic{3, -1, -1, -1, -1, -1, -1, -1, -1, -1};
  const std::vector<DivisorClass> e9{DivisorClass::basis(10, 9)};
  CHECK(brute_check_chain(e9, &cubic));
  const DivisorClass line = DivisorClass::basis(10, 0);
  CHECK_FALSE(brute_check_chain(e9, &line));
}

TEST_CASE("oracle runs are reproducible") {
  const auto a = brute_solve_quadratic(6, -2, 0, SearchBox::uniform(6, -2, 2));
  const auto b = brute_solve_quadratic(6, -2, 0, SearchBox::uniform(6, -2, 2));
  CHECK(a == b);
  CHECK(a.size() == 40);
}

TEST_CASE("n = 8 roots: engine positives and their negatives are the 240 brute-force solutions") {
  const auto spec = test_support::fixture_spec("delpezzo8_no_rows.json");
  SearchBox box{std::vector<std::int64_t>(9, -2), std::vector<std::int64_t>(9, 2)};
  box.lower[0] = -3;
  box.upper[0] = 3;
  const auto brute = brute_solve_quadratic(9, -2, 0, box);
  CHECK(brute.size() == 240);
  std::vector<DivisorClass> both;
  for (const auto& r : enumerate_root_classes(spec, 10).classes) {
    both.push_back(r);
    both.push_back(-r);
  }
  std::sort(both.begin(), both.end());
  CHECK(both == brute);
}

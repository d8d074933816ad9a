#include "wreath/errors.hpp"
#include "wreath/perm.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace wreath;

namespace {

// The running example of S_{5,4}: [4^1 5^3 1^3 3^1 2^0].
ColoredPermutation s54_example() { return parse_permutation("4^1 5^3 1^3 3^1 2^0", 4); }

ColoredPermutation signed_perm(std::vector<int> word) { return ColoredPermutation::from_signed(word); }

std::vector<ColoredPermutation> group(int n, int r) {
  std::vector<ColoredPermutation> out;
  for_each_group_element(n, r, [&](const ColoredPermutation& p) { out.push_back(p); });
  return out;
}

} // namespace

TEST_CASE("identity") {
  const auto id = ColoredPermutation::identity(3, 2);
  CHECK(format_colored(id) == "1^0 2^0 3^0");
  CHECK(ColoredPermutation::identity(0, 4).n() == 0);
  CHECK(cycle_type(id) == RPartition::bipartition({1, 1, 1}, {}));
  CHECK(id.apply(2, 1) == std::pair{2, 1});
}

TEST_CASE("apply follows the colored function") {
  const auto p = s54_example();
  CHECK(p.apply(1, 0) == std::pair{4, 1});
  CHECK(p.apply(1, 3) == std::pair{4, 0});
  CHECK_THROWS_AS((void)p.apply(6, 0), PreconditionError);
  CHECK_THROWS_AS((void)p.apply(1, 4), PreconditionError);
}

TEST_CASE("compose applies the right factor first") {
  // Under that convention [-1,2] after [2,1] is [2,-1]; [-2,1] is the other order.
  CHECK(compose(signed_perm({-1, 2}), signed_perm({2, 1})) == signed_perm({2, -1}));
  CHECK(compose(signed_perm({2, 1}), signed_perm({-1, 2})) == signed_perm({-2, 1}));
  CHECK_THROWS_AS((void)compose(ColoredPermutation::identity(2, 2), ColoredPermutation::identity(3, 2)),
                  PreconditionError);
}

TEST_CASE("inverse and conjugate") {
  CHECK(inverse(signed_perm({-1, 2})) == signed_perm({-1, 2}));
  const auto p = s54_example();
  CHECK(inverse(inverse(p)) == p);
  CHECK(conjugate(p, ColoredPermutation::identity(5, 4)) == p);
  CHECK(conjugate(p, p) == p);
}

TEST_CASE("group laws on small groups") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 3; ++n) {
      const auto g = group(n, r);
      const auto id = ColoredPermutation::identity(n, r);
      for (const auto& a : g) {
        CHECK(compose(a, id) == a);
        CHECK(compose(id, a) == a);
        CHECK(compose(a, inverse(a)) == id);
        if (n <= 2 || r <= 2)
          for (const auto& b : g)
            for (const auto& c : g)
              REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
      }
    }
}

TEST_CASE("group order by enumeration") {
  long expected_orders[4][6] = {{}, {1, 1, 2, 6, 24, 120}, {1, 2, 8, 48, 384, 3840}, {1, 3, 18, 162, 1944, 29160}};
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      std::set<ColoredPermutation> seen;
      for_each_group_element(n, r, [&](const ColoredPermutation& p) { seen.insert(p); });
      CHECK(static_cast<long>(seen.size()) == expected_orders[r][n]);
    }
}

TEST_CASE("cycle decomposition and type") {
  const auto p = s54_example();
  CHECK(format_cycles(p) == "(1^3 4^1 3^1)(2^0 5^3)");
  CHECK(cycle_type(p) == RPartition(4, {{}, {3}, {}, {2}}));

  const auto b8 = signed_perm({2, 7, -1, -5, 8, 3, 6, -4});
  const auto cycles = cycle_decomposition(b8);
  REQUIRE(cycles.size() == 2);
  CHECK(cycle_type(b8) == RPartition::bipartition({3}, {5}));

  CHECK(cycle_type(signed_perm({2, 7, 3, -4, 8, -1, -6, -5})) == RPartition::bipartition({4, 1}, {2, 1}));

  const auto id = ColoredPermutation::identity(3, 2);
  const auto fixed = cycle_decomposition(id);
  CHECK(fixed.size() == 3);
  for (const auto& c : fixed) {
    CHECK(c.length() == 1);
    CHECK(c.cycle_color == 0);
  }
}

TEST_CASE("cycles round trip on S_{4,3}") {
  for_each_group_element(4, 3, [](const ColoredPermutation& p) {
    REQUIRE(from_cycles(4, 3, cycle_decomposition(p)) == p);
  });
}

TEST_CASE("conjugation preserves cycle type") {
  const auto g = group(3, 2);
  for (const auto& p : g)
    for (const auto& h : g)
      REQUIRE(cycle_type(conjugate(p, h)) == cycle_type(p));
}

TEST_CASE("parse and format") {
  const auto p = s54_example();
  CHECK(format_colored(p) == "4^1 5^3 1^3 3^1 2^0");
  CHECK(parse_permutation(format_permutation(p), 4) == p);

  const auto b8 = parse_permutation("2,7,-1,-5,8,3,6,-4", 2);
  CHECK(b8 == signed_perm({2, 7, -1, -5, 8, 3, 6, -4}));
  CHECK(format_permutation(b8) == "2,7,-1,-5,8,3,6,-4");
  CHECK(parse_permutation("1^0", 1) == ColoredPermutation::identity(1, 1));

  CHECK_THROWS_AS(parse_permutation("1 x", 2), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 1", 2), ParseError);
  CHECK_THROWS_AS(parse_permutation("1^2", 2), ParseError);
  CHECK_THROWS_AS(parse_permutation("-1", 3), ParseError);

  for_each_group_element(3, 3, [](const ColoredPermutation& q) {
    REQUIRE(parse_permutation(format_permutation(q), 3) == q);
  });
}

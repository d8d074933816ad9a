#include "wreath/classes.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace wreath;

namespace {

RPartition bi(std::vector<int> even, std::vector<int> odd) { return RPartition::bipartition(even, odd); }

ColoredPermutation signed_perm(std::vector<int> word) { return ColoredPermutation::from_signed(word); }

} // namespace

TEST_CASE("label syntax") {
  CHECK(parse_label("3;5") == bi({3}, {5}));
  CHECK(parse_label("5;") == bi({5}, {}));
  CHECK(parse_label(";1,1") == bi({}, {1, 1}));
  CHECK(parse_label(";;").r() == 3);
  CHECK(format_label(bi({4, 1}, {2, 1})) == "4,1;2,1");
  CHECK(parse_label("1,4;1,2") == bi({4, 1}, {2, 1}));
  CHECK_THROWS_AS(parse_label("3;x"), ParseError);
  CHECK_THROWS_AS(parse_label("3,,1;"), ParseError);
  CHECK_THROWS_AS(parse_label("0;"), ParseError);
  CHECK_THROWS_AS(parse_label("3;5", 3), ParseError);
}

TEST_CASE("enumerate r-partitions") {
  CHECK(enumerate_r_partitions(1, 2) == std::vector<RPartition>{bi({1}, {}), bi({}, {1})});
  CHECK(enumerate_r_partitions(2, 2) ==
        std::vector<RPartition>{bi({1, 1}, {}), bi({1}, {1}), bi({}, {1, 1}), bi({2}, {}), bi({}, {2})});
  // 36 bipartitions of 5; 20 is the count for n = 4.
  CHECK(enumerate_r_partitions(4, 2).size() == 20);
  CHECK(enumerate_r_partitions(5, 2).size() == 36);
  CHECK(enumerate_r_partitions(0, 3).size() == 1);
  std::size_t total = 0;
  for (int n = 1; n <= 6; ++n)
    total += enumerate_r_partitions(n, 2).size();
  CHECK(total == 138);
}

TEST_CASE("centralizers and class sizes") {
  CHECK(centralizer_order(bi({3}, {5})) == 60);
  CHECK(centralizer_order(bi({4, 1}, {2, 1})) == 128);
  CHECK(class_size(bi({4, 1}, {2, 1})) == 80640);
  for (int n = 0; n <= 6; ++n)
    CHECK(centralizer_order(RPartition::identity_type(n, 2)) == group_order(n, 2));
  CHECK(class_size(bi({2}, {})) == 2);
  CHECK(class_size(bi({3}, {})) == 8);

  std::vector<Integer> sizes;
  for (const auto& label : enumerate_r_partitions(2, 2))
    sizes.push_back(class_size(label));
  CHECK(sizes == std::vector<Integer>{1, 2, 1, 2, 2});

  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 7; ++n) {
      Integer total = 0;
      for (const auto& label : enumerate_r_partitions(n, r))
        total += class_size(label);
      CHECK(total == group_order(n, r));
    }
}

TEST_CASE("min cycle length") {
  CHECK(min_cycle_length(bi({3}, {5})) == 3);
  CHECK(has_no_cycles_up_to(bi({3}, {5}), 2));
  CHECK_FALSE(has_no_cycles_up_to(bi({3}, {5}), 3));
  CHECK(min_cycle_length(bi({4, 1}, {2, 1})) == 1);
  CHECK(has_no_cycles_up_to(RPartition::identity_type(0, 2), 100));
}

TEST_CASE("small classes") {
  CHECK(enumerate_class(bi({1, 1, 1}, {})) == std::vector{ColoredPermutation::identity(3, 2)});
  CHECK(enumerate_class(bi({}, {1, 1, 1})) == std::vector{signed_perm({-1, -2, -3})});
  const auto two = enumerate_class(bi({2}, {}));
  CHECK(std::set(two.begin(), two.end()) == std::set{signed_perm({2, 1}), signed_perm({-2, -1})});
}

TEST_CASE("constructive and filter enumeration agree") {
  ComputeLimits filter;
  filter.strategy = EnumerationStrategy::filter;
  ComputeLimits constructive;
  constructive.strategy = EnumerationStrategy::constructive;
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= (r == 3 ? 4 : 5); ++n)
      for (const auto& label : enumerate_r_partitions(n, r)) {
        const auto a = enumerate_class(label, filter);
        const auto b = enumerate_class(label, constructive);
        const std::set<ColoredPermutation> sa(a.begin(), a.end());
        const std::set<ColoredPermutation> sb(b.begin(), b.end());
        REQUIRE(sb.size() == b.size());
        REQUIRE(sa == sb);
        REQUIRE(Integer(static_cast<unsigned long>(b.size())) == class_size(label));
        for (const auto& p : b)
          REQUIRE(cycle_type(p) == label);
      }
}

TEST_CASE("ranked access matches enumeration order") {
  const auto label = bi({3, 1}, {2});
  const auto all = enumerate_class(label);
  for (std::size_t i = 0; i < all.size(); ++i)
    REQUIRE(class_element_at(label, Integer(static_cast<unsigned long>(i))) == all[i]);
  std::vector<ColoredPermutation> middle;
  for_each_in_class_range(label, 10, 25, [&](const ColoredPermutation& p) { middle.push_back(p); });
  CHECK(std::vector(all.begin() + 10, all.begin() + 35) == middle);
  CHECK_THROWS((void)class_element_at(label, class_size(label)));
}

TEST_CASE("budget guards") {
  ComputeLimits tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_class(bi({5}, {}), tiny), BudgetExceeded);
  tiny.budget = 4;
  tiny.strategy = EnumerationStrategy::filter;
  CHECK_THROWS_AS(enumerate_class(bi({2}, {}), tiny), BudgetExceeded);
}

TEST_CASE("uniform sampling") {
  CHECK(sample_uniform(bi({1, 1, 1, 1}, {}), 17) == ColoredPermutation::identity(4, 2));
  const auto label = bi({3}, {});
  CHECK(sample_uniform(label, 5) == sample_uniform(label, 5));
  // 8 elements, 8000 draws: every element should appear near 1000 times.
  std::map<ColoredPermutation, int> hits;
  for (std::uint64_t s = 0; s < 8000; ++s) {
    const auto p = sample_uniform(label, s);
    REQUIRE(cycle_type(p) == label);
    ++hits[p];
  }
  CHECK(hits.size() == 8);
  for (const auto& [p, c] : hits) {
    CHECK(c > 850);
    CHECK(c < 1150);
  }
}

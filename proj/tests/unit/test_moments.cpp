#include "wreath/classes.hpp"
#include "wreath/moments.hpp"

#include <doctest.h>

using namespace wreath;

namespace {

RPartition bi(std::vector<int> even, std::vector<int> odd) { return RPartition::bipartition(even, odd); }

Pcp pcp(int n, int r, std::vector<Constraint> cs) { return Pcp(n, r, std::move(cs)); }

std::vector<Pcp> inv_set(int n) {
  const auto x = builtin_inv(n);
  std::vector<Pcp> out;
  for (const auto& t : x.terms())
    out.push_back(t.pcp);
  return out;
}

} // namespace

TEST_CASE("fixed-point imbalance") {
  const auto d = delta(bi({4, 1}, {2, 1}));
  CHECK(d.d1 == 0);
  CHECK(d.d2 == 0);
  CHECK(delta(bi({1, 1, 1}, {})).d2 == 9);
  CHECK(delta(bi({1}, {1, 1})).d1 == -1);
  CHECK(delta_power(bi({1}, {1, 1}), 3) == -7);
}

TEST_CASE("brute moments") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(brute_moment(builtin_des_b(n), RPartition::identity_type(n, 2), 1).value == 0);
    CHECK(brute_moment(builtin_des_b(n), bi({}, std::vector<int>(static_cast<std::size_t>(n), 1)), 1).value == n);
  }
  CHECK(brute_distribution(builtin_des_b(2), bi({2}, {})) == Distribution{{Rational(1), Integer(2)}});

  const auto dist = brute_group_distribution(builtin_des_b(3));
  Integer total = 0;
  for (const auto& [v, c] : dist)
    total += c;
  CHECK(total == 48);
  CHECK(distribution_moment(dist, 1) == Rational(3, 2));
}

TEST_CASE("parallel and serial brute agree") {
  ComputeLimits many;
  many.jobs = 4;
  const auto label = bi({3}, {3});
  for (const char* name : {"des_b", "inv_b"})
    CHECK(brute_distribution(builtin(name, 6), label, many) == brute_distribution(builtin(name, 6), label));
  const Statistic plain(6, 2, 0, builtin_inv(6).terms());
  CHECK(brute_distribution(plain, label, many) == brute_distribution(builtin_inv(6), label));
}

TEST_CASE("indicator probability") {
  CHECK(indicator_probability(pcp(3, 2, {{1, 2, 1}}), bi({3}, {})) == Rational(1, 4));
  CHECK(brute_probability(pcp(3, 2, {{1, 2, 1}}), bi({3}, {})) == Rational(1, 4));
  CHECK(indicator_probability(pcp(5, 2, {{3, 3, 0}}), bi({5}, {})) == 0);
  CHECK(indicator_probability(pcp(5, 2, {{1, 2, 0}, {2, 1, 0}}), bi({5}, {})) == 0);
  CHECK_THROWS_AS(indicator_probability(pcp(4, 2, {{1, 2, 0}, {2, 3, 0}}), bi({2, 2}, {})), PreconditionError);
}

TEST_CASE("means on classes without short cycles") {
  for (int n = 2; n <= 7; ++n)
    CHECK(mean_no_short_cycles(builtin_neg(n)) == ratio(-n * (n + 1), 4));
  CHECK(mean_no_short_cycles(builtin_des_b(5)) == brute_moment(builtin_des_b(5), bi({5}, {}), 1).value);
  CHECK(mean_no_short_cycles(Statistic(4, 2, Rational(7, 3))) == Rational(7, 3));
}

TEST_CASE("kth moments against brute force") {
  const auto five = bi({5}, {});
  for (const char* name : {"des_b", "inv", "neg", "inv_b"}) {
    const auto x = builtin(name, 5);
    CHECK(kth_moment_no_short_cycles(x, 2) == brute_moment(x, five, 2).value);
    CHECK(kth_moment_no_short_cycles(x, 2) == brute_moment(x, bi({}, {5}), 2).value);
  }
  const auto neg6 = builtin_neg(6);
  CHECK(kth_moment_no_short_cycles(neg6, 3) == brute_moment(neg6, bi({6}, {}), 3).value);
  CHECK(kth_moment_no_short_cycles(neg6, 3) == brute_moment(neg6, bi({}, {6}), 3).value);
  const auto a = Statistic::indicator(pcp(5, 2, {{1, 2, 0}, {2, 4, 1}}));
  CHECK(kth_moment_no_short_cycles(a, 2) == indicator_probability(a.terms()[0].pcp, five));
  CHECK_THROWS_AS(kth_moment_no_short_cycles(builtin_inv(4), 2), PreconditionError);
}

TEST_CASE("weighted inversion mean") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& label : enumerate_r_partitions(n, 2)) {
      std::map<std::pair<int, int>, Rational> ones;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          ones[{i, j}] = 1;
      if (label.multiplicity(1, 0) == label.multiplicity(1, 1))
        CHECK(weighted_inversion_mean(ones, label) == ratio(n * (n - 1), 4));

      const std::map<std::pair<int, int>, Rational> single = {{{1, n}, Rational(1)}};
      const auto swapped = bi(label.parts(1), label.parts(0));
      CHECK(weighted_inversion_mean(single, label) + weighted_inversion_mean(single, swapped) == 1);
      CHECK(weighted_inversion_mean(single, label) == brute_moment(inv_ij_indicator(n, 1, n), label, 1).value);
    }
  CHECK(weighted_inversion_mean({{{1, 2}, Rational(1)}}, bi({}, {1, 1})) == 1);
}

TEST_CASE("closed-form means") {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    CHECK(mean_des_b(bi(ones, {})) == 0);
    CHECK(mean_des_b(bi({}, ones)) == n);
    CHECK(mean_inv_b(bi({}, ones)) == n * n);
  }
  CHECK(mean_des_b(bi({3}, {5})) == 4);
  for (int n = 1; n <= 5; ++n)
    for (const auto& label : enumerate_r_partitions(n, 2))
      for (const char* name : {"des_b", "neg", "inv", "inv_b"}) {
        const auto x = builtin(name, n);
        REQUIRE(closed_form_mean(x.native(), label) == brute_moment(x, label, 1).value);
      }
}

TEST_CASE("whole-group means") {
  CHECK(whole_group_mean("des_b", 7) == Rational(7, 2));
  CHECK(whole_group_mean("inv", 4) == 3);
  for (int n = 1; n <= 5; ++n)
    for (const char* name : {"des_b", "neg", "inv", "inv_b"}) {
      CHECK(whole_group_mean(name, n) == distribution_moment(brute_group_distribution(builtin(name, n)), 1));
      Rational weighted = 0;
      for (const auto& label : enumerate_r_partitions(n, 2))
        weighted += closed_form_mean(builtin(name, n).native(), label) * Rational(class_size(label));
      CHECK(weighted / Rational(group_order(n, 2)) == whole_group_mean(name, n));
    }
  CHECK_THROWS_AS(whole_group_mean("maj", 3), PreconditionError);
}

TEST_CASE("order-invariant polynomials") {
  const auto p = oie_polynomial(inv_set(4), 4, 1);
  CHECK(p == ExactPolynomial({Rational(0), Rational(-1, 4), Rational(1, 4)}));
  CHECK(p(5) == brute_moment(builtin_inv(5), bi({5}, {}), 1).value);

  OieOptions forced;
  forced.interpolate = true;
  CHECK(oie_polynomial(inv_set(4), 4, 1, forced) == p);
  CHECK(oie_polynomial({}, 4, 1).is_zero());

  // All pairs i < j mapped with color 1: the extension of {(1,2,1)} from n0 = 2.
  const std::vector<Pcp> rises = {pcp(2, 2, {{1, 2, 1}})};
  OieOptions hold_out;
  hold_out.exclude_nodes = {5};
  const auto q = oie_polynomial(rises, 2, 2, hold_out);
  CHECK(q.degree() <= 2);
  const auto x5 = statistic_from_set(5, 2, order_invariant_extension(rises, 2, 5));
  CHECK(q(5) == brute_moment(x5, bi({5}, {}), 2).value);
  CHECK(q(5) == brute_moment(x5, bi({}, {5}), 2).value);
}

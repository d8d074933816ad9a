// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "wreath/classes.hpp"
#include "wreath/degree.hpp"
#include "wreath/genfunc.hpp"
#include "wreath/moments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace wreath;

namespace {

// Tolerances for the desk-scale CLT check on B_100.
constexpr double kSkewTolerance = 0.05;
constexpr double kKurtosisTolerance = 0.1;
constexpr std::uint32_t kSeed = 20240611;
constexpr int kPcpsPerSize = 50;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok)
      detail.str("");
    if (!ok)
      detail << "; ";
    ok = false;
    detail << why;
  }
};

ComputeLimits limits() {
  ComputeLimits l;
  l.jobs = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  return l;
}

Pcp random_pcp(int n, int r, int m, std::mt19937& rng, bool want_acyclic) {
  std::vector<int> from(static_cast<std::size_t>(n));
  std::vector<int> to(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> color(0, r - 1);
  for (;;) {
    for (int i = 0; i < n; ++i)
      from[static_cast<std::size_t>(i)] = to[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(from.begin(), from.end(), rng);
    std::shuffle(to.begin(), to.end(), rng);
    std::vector<Constraint> cs;
    for (int i = 0; i < m; ++i)
      cs.push_back({from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(i)], color(rng)});
    Pcp pcp(n, r, cs);
    if (is_acyclic(pcp) == want_acyclic)
      return pcp;
  }
}

// Criterion 1: centralizer class sizes against grouping the whole group.
void class_sizes(Outcome& out) {
  int checked = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      std::map<RPartition, Integer> counts;
      for_each_group_element(n, r, [&](const ColoredPermutation& p) { ++counts[cycle_type(p)]; });
      const auto labels = enumerate_r_partitions(n, r);
      if (labels.size() != counts.size())
        out.fail("class count mismatch for n=" + std::to_string(n) + " r=" + std::to_string(r));
      for (const auto& label : labels) {
        ++checked;
        if (class_size(label) != counts[label])
          out.fail("size of " + format_label(label));
      }
    }
  if (out.ok)
    out.detail << checked << " classes, n<=5, r<=3";
}

// Criterion 2: Pr[satisfies K] = 1/((n-1)...(n-m) r^m) for acyclic K, 0 otherwise.
void indicator_lemma(Outcome& out) {
  std::mt19937 rng(kSeed);
  long classes = 0;
  long pcps = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 2; n <= 6; ++n)
      for (const auto& label : enumerate_r_partitions(n, r)) {
        const int shortest = min_cycle_length(label);
        if (shortest <= 1)
          continue;
        const auto elements = enumerate_class(label, limits());
        const Integer size = class_size(label);
        ++classes;
        for (int m = 1; m <= 3 && m < shortest; ++m) {
          const Integer denom = falling_factorial(n - 1, static_cast<unsigned long>(m)) *
                                power(r, static_cast<unsigned long>(m));
          auto count = [&](const Pcp& pcp) {
            long c = 0;
            for (const auto& p : elements)
              c += satisfies(p, pcp) ? 1 : 0;
            return Integer(c);
          };
          for (int i = 0; i < kPcpsPerSize; ++i) {
            const Pcp pcp = random_pcp(n, r, m, rng, true);
            ++pcps;
            if (count(pcp) * denom != size)
              out.fail("acyclic " + format_pcp(pcp) + " on " + format_label(label));
          }
          for (int i = 0; i < 10; ++i) {
            const Pcp pcp = random_pcp(n, r, m, rng, false);
            ++pcps;
            if (count(pcp) != 0)
              out.fail("cyclic " + format_pcp(pcp) + " on " + format_label(label));
          }
        }
      }
  if (out.ok)
    out.detail << classes << " classes, " << pcps << " pcps";
}

// Criterion 3: the four closed-form means on every class of B_n, n <= 6.
void closed_means(Outcome& out) {
  int pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const char* name : {"des_b", "neg", "inv", "inv_b"}) {
      const Statistic x = builtin(name, n);
      for (const auto& label : enumerate_r_partitions(n, 2)) {
        ++pairs;
        if (closed_form_mean(x.native(), label) != brute_moment(x, label, 1, limits()).value)
          out.fail(std::string(name) + " on " + format_label(label));
      }
    }
  }
  if (out.ok)
    out.detail << pairs << " class/statistic pairs";
}

// Criterion 4: brute kth moments agree on classes of B_6 without cycles <= 2k.
void moment_stability(Outcome& out) {
  const int n = 6;
  int compared = 0;
  for (const char* name : {"des_b", "inv"}) {
    const Statistic x = builtin(name, n);
    for (int k = 1; k <= 2; ++k) {
      std::set<Rational> values;
      int classes = 0;
      for (const auto& label : enumerate_r_partitions(n, 2)) {
        if (!has_no_cycles_up_to(label, 2 * k))
          continue;
        values.insert(brute_moment(x, label, k, limits()).value);
        ++classes;
      }
      compared += classes;
      if (classes < 2)
        out.fail(std::string(name) + " k=" + std::to_string(k) + " has fewer than two classes");
      if (values.size() != 1)
        out.fail(std::string(name) + " k=" + std::to_string(k) + " moments differ across classes");
      else if (*values.begin() != kth_moment_no_short_cycles(x, k, limits()))
        out.fail(std::string(name) + " k=" + std::to_string(k) + " disagrees with the formula engine");
    }
  }
  if (out.ok)
    out.detail << compared << " class moments on B_6";
}

// Criterion 5: degree lower bounds by exact linear algebra.
void degree_results(Outcome& out) {
  auto expect = [&](const char* name, int n, bool want) {
    const auto cert = in_degree_span(builtin(name, n), 1, limits());
    if (cert.in_span != want)
      out.fail(std::string(name) + " on B_" + std::to_string(n) + " expected " + (want ? "true" : "false"));
    if (!cert.in_span && cert.witness_elements.empty())
      out.fail(std::string(name) + " on B_" + std::to_string(n) + " has no witness");
  };
  for (int n : {3, 4}) {
    expect("des_b", n, false);
    expect("inv", n, false);
    expect("inv_b", n, false);
    expect("neg", n, true);
  }
  expect("des_b", 2, true);
  if (out.ok)
    out.detail << "des_b, inv, inv_b not degree 1 on B_3, B_4; neg degree 1; des_b degree 1 on B_2";
}

ExactPolynomial truncated_long_cycle(int n) {
  // (1-t)^{n+1} sum_{k>=2} N(2k-1, 2n) t^k, kept to degree n+1.
  std::vector<Rational> series(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 2; k <= n + 1; ++k)
    series[static_cast<std::size_t>(k)] = Rational(necklace_count(2L * k - 1, n));
  std::vector<Rational> out(static_cast<std::size_t>(n) + 2, 0);
  for (int d = 0; d <= n + 1; ++d)
    for (int j = 0; j <= d; ++j) {
      Rational c(binomial(n + 1, static_cast<unsigned long>(j)));
      if (j % 2 == 1)
        c = -c;
      out[static_cast<std::size_t>(d)] += c * series[static_cast<std::size_t>(d - j)];
    }
  return ExactPolynomial(out);
}

bool distinct_parts(const std::vector<int>& parts) {
  return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

// Criterion 6: class descent polynomials.
void generating_functions(Outcome& out) {
  for (int n = 1; n <= 8; ++n) {
    ExactPolynomial total;
    for (const auto& label : enumerate_r_partitions(n, 2)) {
      const auto poly = class_descent_poly(label);
      total += poly;
      if (poly(1) != Rational(class_size(label)))
        out.fail("B(1) != class size for " + format_label(label));
      if (n <= 6 && poly != brute_descent_poly(label, limits()))
        out.fail("brute descent polynomial differs for " + format_label(label));
      const auto& even = label.parts(0);
      const auto& odd = label.parts(1);
      if (distinct_parts(even) && distinct_parts(odd) && label.multiplicity(1, 0) == 1 &&
          label.multiplicity(1, 1) == 1 && poly != class_descent_poly(RPartition::bipartition(odd, even)))
        out.fail("swap symmetry fails for " + format_label(label));
    }
    if (n <= 7 && total != group_descent_poly(n))
      out.fail("class sum differs from B_n(t) for n=" + std::to_string(n));

    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    if (class_descent_poly(RPartition::bipartition(ones, {})) != ExactPolynomial::monomial(1, 1))
      out.fail("((1^n),) is not t for n=" + std::to_string(n));
    if (class_descent_poly(RPartition::bipartition({}, ones)) !=
        ExactPolynomial::monomial(1, static_cast<std::size_t>(n) + 1))
      out.fail("(,(1^n)) is not t^{n+1} for n=" + std::to_string(n));
    if (n >= 2) {
      const auto expected = truncated_long_cycle(n);
      if (class_descent_poly(RPartition::bipartition({n}, {})) != expected)
        out.fail("((n),) necklace form fails for n=" + std::to_string(n));
      if (class_descent_poly(RPartition::bipartition({}, {n})) != expected)
        out.fail("(,(n)) necklace form fails for n=" + std::to_string(n));
    }
  }
  if (out.ok)
    out.detail << "sums n<=7, brute n<=6, B(1) and special cases n<=8";
}

// Criterion 7: divisibility of the expansion remainders by powers of (1-t).
void expansion_theorems(Outcome& out) {
  int classes = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& label : enumerate_r_partitions(n, 2)) {
      ++classes;
      try {
        (void)expansion_remainder(label);
      } catch (const Error& e) {
        out.fail(format_label(label) + ": " + e.what());
      }
    }
  for (int n = 1; n <= 9; ++n) {
    try {
      (void)long_cycle_remainder(RPartition::bipartition({n}, {}), (n - 1) / 2);
    } catch (const Error& e) {
      out.fail("((" + std::to_string(n) + "),): " + e.what());
    }
  }
  if (out.ok)
    out.detail << classes << " classes mod (1-t)^2, ((n),) mod (1-t)^{l+1} for n<=9";
}

// Criterion 8: E_{((2k+1),)}[des_B^k] = E_{B_{2k+1}}[des_B^k].
void moment_equality(Outcome& out) {
  for (int k = 1; k <= 3; ++k) {
    const auto label = RPartition::bipartition({2 * k + 1}, {});
    if (poly_moment(class_descent_poly(label), k) != poly_moment(group_descent_poly(2 * k + 1), k))
      out.fail("k=" + std::to_string(k));
  }
  if (out.ok)
    out.detail << "k = 1, 2, 3";
}

// Criterion 9: exact low moments of B_n(t) and standardized moments of B_100(t).
void clt(Outcome& out) {
  for (int n = 1; n <= 50; ++n) {
    const auto poly = group_descent_poly(n);
    const Rational mean = poly_moment(poly, 1);
    const Rational var = poly_moment(poly, 2) - mean * mean;
    // B_1 = {[1], [-1]} has variance 1/4; (n+1)/12 starts at n = 2.
    const Rational expected_var = n == 1 ? Rational(1, 4) : ratio(n + 1, 12);
    if (mean != ratio(n, 2) || var != expected_var)
      out.fail("mean or variance at n=" + std::to_string(n));
    if (n <= 5) {
      const auto dist = brute_group_distribution(builtin_des_b(n), limits());
      const Rational m1 = distribution_moment(dist, 1);
      if (m1 != mean || distribution_moment(dist, 2) - m1 * m1 != var)
        out.fail("brute group moments differ at n=" + std::to_string(n));
    }
  }
  const auto big = clt_report_group(100);
  const double kurtosis = big.excess_kurtosis + 3.0;
  if (std::fabs(big.skewness) > kSkewTolerance)
    out.fail("skewness " + std::to_string(big.skewness));
  if (std::fabs(kurtosis - 3.0) > kKurtosisTolerance)
    out.fail("kurtosis " + std::to_string(kurtosis));
  const auto cls = clt_report_class(RPartition::bipartition({9}, {}));
  const auto grp = clt_report_group(9);
  if (cls.mean != grp.mean || cls.variance != grp.variance)
    out.fail("((9),) mean or variance differs from B_9");
  if (out.ok)
    out.detail << "B_100 skew " << big.skewness << ", kurtosis " << kurtosis;
}

// Criterion 10: polynomiality for the order-invariant extension of inv.
void oie(Outcome& out) {
  const int n0 = 4;
  std::vector<Pcp> set;
  const Statistic base = builtin_inv(n0);
  for (const auto& t : base.terms())
    set.push_back(t.pcp);

  const auto p1 = oie_polynomial(set, n0, 1, {}, limits());
  const ExactPolynomial expected({Rational(0), Rational(-1, 4), Rational(1, 4)});
  if (p1 != expected)
    out.fail("k=1 polynomial is " + format_polynomial(p1, "n"));
  for (int n : {5, 6, 7}) {
    const auto label = RPartition::bipartition({n}, {});
    if (p1(n) != brute_moment(builtin_inv(n), label, 1, limits()).value)
      out.fail("k=1 brute mismatch at n=" + std::to_string(n));
  }

  OieOptions options;
  options.exclude_nodes = {7};
  const auto p2 = oie_polynomial(set, n0, 2, options, limits());
  if (p2.degree() > 4)
    out.fail("k=2 degree " + std::to_string(p2.degree()));
  const Rational held_out = brute_moment(builtin_inv(7), RPartition::bipartition({7}, {}), 2, limits()).value;
  if (p2(7) != held_out)
    out.fail("k=2 held-out n=7: " + to_string(p2(7)) + " vs brute " + to_string(held_out));
  if (out.ok)
    out.detail << "p1 = " << format_polynomial(p1, "n") << "; p2(7) = " << to_string(held_out);
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds; // 0 means no runtime bound
  std::function<void(Outcome&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "class sizes", 30, class_sizes},
      {2, "indicator probability lemma", 120, indicator_lemma},
      {3, "closed-form means", 120, closed_means},
      {4, "moment stability", 0, moment_stability},
      {5, "degree results", 60, degree_results},
      {6, "generating functions", 180, generating_functions},
      {7, "expansion theorems", 0, expansion_theorems},
      {8, "moment equality", 0, moment_equality},
      {9, "CLT at desk scale", 60, clt},
      {10, "order-invariant polynomiality", 180, oie},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      out.fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
    if (!out.ok)
      ++failures;
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

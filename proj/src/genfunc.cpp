#include "wreath/genfunc.hpp"

#include "wreath/classes.hpp"
#include "wreath/moments.hpp"
#include "wreath/statistic.hpp"

#include <cmath>
#include <map>

namespace wreath {

int mobius(long d) {
  if (d < 1)
    throw PreconditionError("mobius needs d >= 1");
  int sign = 1;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p != 0)
      continue;
    d /= p;
    if (d % p == 0)
      return 0;
    sign = -sign;
  }
  if (d > 1)
    sign = -sign;
  return sign;
}

Integer necklace_count(long q, long m) {
  if (q < 1 || q % 2 == 0)
    throw PreconditionError("necklace_count needs an odd q >= 1, got " + std::to_string(q));
  if (m < 1)
    throw PreconditionError("necklace_count needs m >= 1");
  Integer sum = 0;
  for (long d = 1; d <= m; d += 2) {
    if (m % d != 0)
      continue;
    const int mu = mobius(d);
    if (mu != 0)
      sum += mu * (power(q, static_cast<unsigned long>(m / d)) - 1);
  }
  const Integer denom = 2 * m;
  if (sum % denom != 0)
    throw Error("necklace sum is not divisible by 2m");
  return sum / denom;
}

namespace {

// Coefficient of t^d in (1-t)^{n+1} sum_k c_k t^k.
Integer alternating_extract(int n, int d, const std::vector<Integer>& c) {
  Integer total = 0;
  for (int k = 1; k <= d; ++k) {
    const Integer term = binomial(n + 1, static_cast<unsigned long>(d - k)) * c[static_cast<std::size_t>(k)];
    if ((d - k) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

ExactPolynomial from_integer_coefficients(const std::vector<Integer>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (const auto& v : c)
    q.emplace_back(v);
  return ExactPolynomial(std::move(q));
}

// Length -> multiplicity for one color component.
std::map<int, int> multiplicities(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int p : parts)
    ++m[p];
  return m;
}

Rational scaled_poly_factor(int n) {
  return Rational(1) / Rational(group_order(n, 2));
}

ExactPolynomial divide_repeatedly(ExactPolynomial p, int times) {
  for (int i = 0; i < times; ++i) {
    auto [q, rem] = divide_by_one_minus_t(p);
    if (rem != 0)
      throw Error("remainder " + to_string(rem) + " after dividing by (1-t) " + std::to_string(i + 1) + " times");
    p = std::move(q);
  }
  return p;
}

void require_bipartition(const RPartition& label) {
  if (label.r() != 2)
    throw PreconditionError("descent generating functions are defined on B_n (r = 2)");
}

} // namespace

ExactPolynomial group_descent_poly(int n) {
  if (n < 0)
    throw PreconditionError("n must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 1; k <= n + 1; ++k)
    c[static_cast<std::size_t>(k)] = power(2 * k - 1, static_cast<unsigned long>(n));
  std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 2, 0);
  for (int d = 1; d <= n + 1; ++d)
    coeffs[static_cast<std::size_t>(d)] = alternating_extract(n, d, c);
  return from_integer_coefficients(coeffs);
}

Integer class_series_coefficient(const RPartition& label, long k) {
  require_bipartition(label);
  if (k < 1)
    return 0;
  const auto lam = multiplicities(label.parts(0));
  const auto mu = multiplicities(label.parts(1));
  const long q = 2 * k - 1;
  Integer c = 1;
  for (const auto& [i, m] : mu)
    c *= binomial(necklace_count(q, i), static_cast<unsigned long>(m));
  for (const auto& [i, m] : lam) {
    if (i == 1)
      c *= binomial(k - 1 + m, static_cast<unsigned long>(m));
    else
      c *= binomial(necklace_count(q, i) + m - 1, static_cast<unsigned long>(m));
  }
  return c;
}

ExactPolynomial class_descent_poly(const RPartition& label) {
  require_bipartition(label);
  const int n = label.n();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 1; k <= n + 1; ++k)
    c[static_cast<std::size_t>(k)] = class_series_coefficient(label, k);
  std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 2, 0);
  for (int d = 1; d <= n + 1; ++d)
    coeffs[static_cast<std::size_t>(d)] = alternating_extract(n, d, c);
  return from_integer_coefficients(coeffs);
}

Integer descent_count(const RPartition& label, int d) {
  require_bipartition(label);
  const int n = label.n();
  if (d < 1 || d > n + 1)
    throw PreconditionError("d must lie in [1, n+1] = [1, " + std::to_string(n + 1) + "]");
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 1; k <= d; ++k)
    c[static_cast<std::size_t>(k)] = class_series_coefficient(label, k);
  return alternating_extract(n, d, c);
}

ExactPolynomial brute_descent_poly(const RPartition& label, const ComputeLimits& limits) {
  require_bipartition(label);
  std::vector<Integer> coeffs(static_cast<std::size_t>(label.n()) + 2, 0);
  for_each_in_class(
      label, [&](const ColoredPermutation& p) { ++coeffs[static_cast<std::size_t>(des_b(p) + 1)]; }, limits);
  return from_integer_coefficients(coeffs);
}

Rational poly_moment(const ExactPolynomial& p, int k) {
  if (p.is_zero())
    throw PreconditionError("moments of the zero polynomial are undefined");
  if (k < 0)
    throw PreconditionError("moment order must be nonnegative");
  Rational total = 0;
  Rational mass = 0;
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    const Rational& w = p.coefficients()[d];
    if (w < 0)
      throw PreconditionError("distribution polynomial has a negative coefficient");
    mass += w;
    if (w != 0)
      total += w * Rational(power(static_cast<long>(d) - 1, static_cast<unsigned long>(k)));
  }
  return total / mass;
}

ExactPolynomial expansion_remainder(const RPartition& label) {
  require_bipartition(label);
  const int n = label.n();
  if (n < 1)
    throw PreconditionError("expansion needs n >= 1");
  const long d2 = delta(label).d2;
  ExactPolynomial diff = class_descent_poly(label) * (Rational(1) / Rational(class_size(label)));
  diff -= group_descent_poly(n) * scaled_poly_factor(n);
  const ExactPolynomial one_minus_t({Rational(1), Rational(-1)});
  diff -= one_minus_t * group_descent_poly(n - 1) * (scaled_poly_factor(n - 1) * ratio(d2, 2L * n));
  return divide_repeatedly(std::move(diff), 2);
}

ExactPolynomial long_cycle_remainder(const RPartition& label, int ell) {
  require_bipartition(label);
  if (ell < 0)
    throw PreconditionError("l must be nonnegative");
  if (!has_no_cycles_up_to(label, 2 * ell))
    throw PreconditionError("class " + format_label(label) + " has a cycle of length <= " + std::to_string(2 * ell));
  const int n = label.n();
  ExactPolynomial diff = class_descent_poly(label) * (Rational(1) / Rational(class_size(label)));
  diff -= group_descent_poly(n) * scaled_poly_factor(n);
  return divide_repeatedly(std::move(diff), ell + 1);
}

bool moment_equality_check(const RPartition& label, int k) {
  require_bipartition(label);
  if (k < 1)
    throw PreconditionError("k must be at least 1");
  if (!has_no_cycles_up_to(label, 2 * k))
    throw PreconditionError("class " + format_label(label) + " has a cycle of length <= " + std::to_string(2 * k));
  return poly_moment(class_descent_poly(label), k) == poly_moment(group_descent_poly(label.n()), k);
}

CltReport clt_from_poly(const ExactPolynomial& p, int n, const std::string& source) {
  const Rational m1 = poly_moment(p, 1);
  const Rational m2 = poly_moment(p, 2);
  const Rational m3 = poly_moment(p, 3);
  const Rational m4 = poly_moment(p, 4);
  CltReport report;
  report.n = n;
  report.source = source;
  report.mean = m1;
  report.variance = m2 - m1 * m1;
  if (report.variance == 0)
    throw PreconditionError("degenerate distribution: zero variance");
  const Rational c3 = m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1;
  const Rational c4 = m4 - 4 * m1 * m3 + 6 * m1 * m1 * m2 - 3 * m1 * m1 * m1 * m1;
  const Rational v = report.variance;
  const Rational skew_sq = c3 * c3 / (v * v * v);
  report.skewness = (c3 < 0 ? -1.0 : 1.0) * std::sqrt(skew_sq.get_d());
  report.excess_kurtosis = Rational(c4 / (v * v) - 3).get_d();
  return report;
}

CltReport clt_report_group(int n) { return clt_from_poly(group_descent_poly(n), n, "whole_group"); }

CltReport clt_report_class(const RPartition& label) {
  return clt_from_poly(class_descent_poly(label), label.n(), format_label(label));
}

} // namespace wreath

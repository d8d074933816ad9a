#ifndef WREATH_GENFUNC_HPP
#define WREATH_GENFUNC_HPP

#include "wreath/errors.hpp"
#include "wreath/polynomial.hpp"
#include "wreath/rpartition.hpp"

#include <string>

namespace wreath {

/// Number-theoretic Moebius function, d >= 1.
int mobius(long d);

/// N(q, 2m) = (1/2m) sum_{d | m, d odd} mu(d) (q^{m/d} - 1), for odd q >= 1 and m >= 1.
Integer necklace_count(long q, long m);

/// B_n(t) = sum over B_n of t^{des_B + 1}.
ExactPolynomial group_descent_poly(int n);

/// Coefficient of t^k in B_{lambda,mu}(t) / (1 - t)^{n+1}.
Integer class_series_coefficient(const RPartition& label, long k);

/// B_{lambda,mu}(t) = sum over the class of t^{des_B + 1}.
ExactPolynomial class_descent_poly(const RPartition& label);

/// Number of class elements with d - 1 descents, 1 <= d <= n + 1.
Integer descent_count(const RPartition& label, int d);

/// The same polynomial by enumerating the class.
ExactPolynomial brute_descent_poly(const RPartition& label, const ComputeLimits& limits = {});

/// sum_d coeff_d (d - 1)^k / P(1).
Rational poly_moment(const ExactPolynomial& p, int k);

/// g(t) with B_{lambda,mu}/|C| - B_n/(2^n n!) - (1-t)/(2n) B_{n-1}/(2^{n-1}(n-1)!) Delta^2 = (1-t)^2 g.
/// Throws Error if the division leaves a remainder.
ExactPolynomial expansion_remainder(const RPartition& label);

/// g(t) with B_{lambda,mu}/|C| - B_n/(2^n n!) = (1-t)^{l+1} g, for classes without cycles of length <= 2l.
ExactPolynomial long_cycle_remainder(const RPartition& label, int ell);

/// E_{lambda,mu}[des_B^k] == E_{B_n}[des_B^k], for classes without cycles of length <= 2k.
bool moment_equality_check(const RPartition& label, int k);

struct CltReport {
  int n = 0;
  Rational mean;
  Rational variance;
  double skewness = 0;
  double excess_kurtosis = 0;
  std::string source;
};

/// Exact mean and variance plus standardized third and fourth moments of (exponent - 1) under p.
CltReport clt_from_poly(const ExactPolynomial& p, int n, const std::string& source);
CltReport clt_report_group(int n);
CltReport clt_report_class(const RPartition& label);

} // namespace wreath

#endif // WREATH_GENFUNC_HPP

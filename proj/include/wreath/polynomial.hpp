#ifndef WREATH_POLYNOMIAL_HPP
#define WREATH_POLYNOMIAL_HPP

#include "wreath/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wreath {

/// Dense polynomial with exact rational coefficients; index = exponent.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class ExactPolynomial {
public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coefficients);

  static ExactPolynomial constant(const Rational& c);
  static ExactPolynomial monomial(const Rational& c, std::size_t exponent);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t exponent) const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;

  ExactPolynomial& operator+=(const ExactPolynomial& other);
  ExactPolynomial& operator-=(const ExactPolynomial& other);
  ExactPolynomial& operator*=(const Rational& c);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const Rational& c) { return a *= c; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// (quotient, remainder) with p = (1 - t) * quotient + remainder.
std::pair<ExactPolynomial, Rational> divide_by_one_minus_t(const ExactPolynomial& p);

/// The unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
ExactPolynomial lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Human-readable form in the given variable, highest power first.
std::string format_polynomial(const ExactPolynomial& p, const std::string& var = "t");

} // namespace wreath

#endif // WREATH_POLYNOMIAL_HPP

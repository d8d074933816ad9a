#include "wreath/polynomial.hpp"

#include "wreath/errors.hpp"

#include <algorithm>

namespace wreath {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ExactPolynomial ExactPolynomial::constant(const Rational& c) { return ExactPolynomial({c}); }

ExactPolynomial ExactPolynomial::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> v(exponent + 1, 0);
  v[exponent] = c;
  return ExactPolynomial(std::move(v));
}

Rational ExactPolynomial::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_)
    v *= c;
  trim();
  return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPolynomial(std::move(out));
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

std::pair<ExactPolynomial, Rational> divide_by_one_minus_t(const ExactPolynomial& p) {
  // Synthetic division by (t - 1), then flip the sign of the quotient.
  const auto& c = p.coefficients();
  if (c.empty())
    return {ExactPolynomial(), Rational(0)};
  std::vector<Rational> q(c.size() - 1, 0);
  Rational carry = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    carry = c[i] + carry;
    if (i > 0)
      q[i - 1] = carry;
  }
  for (auto& v : q)
    v = -v;
  return {ExactPolynomial(std::move(q)), carry};
}

ExactPolynomial lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size())
    throw PreconditionError("interpolation needs as many values as nodes");
  ExactPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ExactPolynomial basis = ExactPolynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i)
        continue;
      if (xs[i] == xs[j])
        throw PreconditionError("interpolation nodes must be distinct");
      basis = basis * ExactPolynomial({-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

std::string format_polynomial(const ExactPolynomial& p, const std::string& var) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (std::size_t e = p.coefficients().size(); e-- > 0;) {
    Rational c = p.coefficients()[e];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    if (negative)
      c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = c == 1 && e > 0;
    if (!unit)
      out += to_string(c);
    if (e > 0) {
      if (!unit)
        out += " ";
      out += var;
      if (e > 1)
        out += "^" + std::to_string(e);
    }
  }
  return out;
}

} // namespace wreath

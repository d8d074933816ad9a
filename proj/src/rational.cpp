#include "wreath/rational.hpp"

#include "wreath/errors.hpp"

#include <cctype>

namespace wreath {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d = integer_from(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(const Integer& top, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

Integer binomial(long top, unsigned long k) { return binomial(Integer(top), k); }

Integer power(long base, unsigned long exponent) {
  Integer out;
  Integer b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

Integer falling_factorial(long top, unsigned long k) {
  Integer out = 1;
  for (unsigned long i = 0; i < k; ++i)
    out *= top - static_cast<long>(i);
  return out;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0)
    throw PreconditionError("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace wreath

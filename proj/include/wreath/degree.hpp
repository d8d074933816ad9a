#ifndef WREATH_DEGREE_HPP
#define WREATH_DEGREE_HPP

#include "wreath/errors.hpp"
#include "wreath/statistic.hpp"

#include <vector>

namespace wreath {

struct SpanCertificate {
  bool in_span = false;
  // Set when in_span: a combination of constants and indicators of size <= m equal to X everywhere.
  Statistic decomposition;
  // Set otherwise: weights y on group elements with sum_p y_p I(p) = 0 for every
  // basis indicator (and for the constant) while sum_p y_p X(p) != 0.
  std::vector<ColoredPermutation> witness_elements;
  std::vector<Rational> witness_weights;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
};

/// Exact membership of X in span{1, I_pcp : |pcp| <= m} over all of S_{n,r}.
/// Work is bounded by rows * columns <= limits.budget.
SpanCertificate in_degree_span(const Statistic& x, int m, const ComputeLimits& limits = {});

} // namespace wreath

#endif // WREATH_DEGREE_HPP

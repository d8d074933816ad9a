#ifndef WREATH_MOMENTS_HPP
#define WREATH_MOMENTS_HPP

#include "wreath/errors.hpp"
#include "wreath/polynomial.hpp"
#include "wreath/rpartition.hpp"
#include "wreath/statistic.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wreath {

enum class MomentMethod { brute, formula, closed_form, genfunc, interpolated };

std::string method_name(MomentMethod method);

struct MomentResult {
  Rational value;
  MomentMethod method = MomentMethod::brute;
  RPartition class_label;
  int k = 1;
};

/// Fixed-point imbalance of a bipartition: d1 = m1(lambda) - m1(mu), d2 = m1(lambda)^2 - m1(mu)^2.
struct DeltaPair {
  long d1 = 0;
  long d2 = 0;
};

DeltaPair delta(const RPartition& label);

/// m1(lambda)^k - m1(mu)^k.
Integer delta_power(const RPartition& label, int k);

/// value -> number of class elements taking it.
using Distribution = std::map<Rational, Integer>;

Distribution brute_distribution(const Statistic& x, const RPartition& label, const ComputeLimits& limits = {});

/// Distribution over the whole group S_{n,r}.
Distribution brute_group_distribution(const Statistic& x, const ComputeLimits& limits = {});

/// sum v^k count / total.
Rational distribution_moment(const Distribution& dist, int k);

MomentResult brute_moment(const Statistic& x, const RPartition& label, int k, const ComputeLimits& limits = {});

/// Fraction of the class satisfying pcp, by enumeration.
Rational brute_probability(const Pcp& pcp, const RPartition& label, const ComputeLimits& limits = {});

/// 1/((n-1)...(n-m) r^m) for acyclic pcps of size m, 0 otherwise. Requires
/// that the class has no cycles of length <= m.
Rational indicator_probability(const Pcp& pcp, const RPartition& label);

/// The mean shared by every class without cycles of length <= degree_bound(X).
Rational mean_no_short_cycles(const Statistic& x);

/// E[X^k] on classes without cycles of length <= k * degree_bound(X).
/// X^{k-1} is expanded explicitly; the last factor is streamed.
Rational kth_moment_no_short_cycles(const Statistic& x, int k, const ComputeLimits& limits = {});

/// Weights wt(i, j) for i < j; the statistic sum wt(i, j) inv_ij. Needs r = 2,
/// and n >= 3 whenever beta = sum (j - i - 1) wt(i, j) is nonzero.
Rational weighted_inversion_mean(const std::map<std::pair<int, int>, Rational>& wt, const RPartition& label);

Rational mean_des_b(const RPartition& label);
Rational mean_neg(const RPartition& label);
Rational mean_inv(const RPartition& label);
Rational mean_inv_b(const RPartition& label);
Rational closed_form_mean(NativeKind kind, const RPartition& label);

/// E over all of B_n for des_b, inv, neg, inv_b.
Rational whole_group_mean(std::string_view name, int n);

struct OieOptions {
  // Force interpolation even for k = 1.
  bool interpolate = false;
  // Degrees never used as interpolation nodes.
  std::vector<int> exclude_nodes;
};

/// The polynomial p(n) of degree <= mk giving E[X_n^k] on classes without
/// cycles of length <= mk, for the order-invariant extension of `set` (on S_{n0,r}).
ExactPolynomial oie_polynomial(const std::vector<Pcp>& set, int n0, int k, const OieOptions& options = {},
                               const ComputeLimits& limits = {});

} // namespace wreath

#endif // WREATH_MOMENTS_HPP

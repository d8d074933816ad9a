#ifndef WREATH_STATISTIC_HPP
#define WREATH_STATISTIC_HPP

#include "wreath/errors.hpp"
#include "wreath/perm.hpp"
#include "wreath/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// omega(from) = to and tau(to) = color.
struct Constraint {
  int from = 0;
  int to = 0;
  int color = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

/// A partial colored permutation (K, kappa). Constraints are kept sorted by `from`.
class PartialColoredPermutation {
public:
  PartialColoredPermutation() = default;
  PartialColoredPermutation(int n, int r, std::vector<Constraint> constraints);

  /// r = 2 shorthand: (i, j) means omega(i) = |j| with color 1 iff j < 0.
  static PartialColoredPermutation from_signed(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return n_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  friend bool operator==(const PartialColoredPermutation&, const PartialColoredPermutation&) = default;
  friend auto operator<=>(const PartialColoredPermutation&, const PartialColoredPermutation&) = default;

private:
  int n_ = 0;
  int r_ = 1;
  std::vector<Constraint> constraints_;
};

using Pcp = PartialColoredPermutation;

bool satisfies(const ColoredPermutation& p, const Pcp& pcp);

/// No directed cycle in the graph with edges from -> to.
bool is_acyclic(const Pcp& pcp);

/// The union, or nothing when the two constraint sets clash on a source or a target.
std::optional<Pcp> merge_if_compatible(const Pcp& a, const Pcp& b);

/// Sorted set of elements appearing as a source or a target.
std::vector<int> support(const Pcp& pcp);

/// Relabels through f, given as the images of support(pcp) in increasing order.
/// f must be strictly increasing with values in [1, target_n].
Pcp apply_order_injection(const Pcp& pcp, const std::vector<int>& images, int target_n);

/// Relabels the support onto [s] preserving order, s = |support|.
Pcp compress_support(const Pcp& pcp);

/// Every pcp of S_{n,r} with exactly m constraints, in increasing order.
std::vector<Pcp> enumerate_pcps(int n, int r, int m);

std::string format_pcp(const Pcp& pcp);

enum class NativeKind { none, des_b, inv, neg, inv_b };

struct Term {
  Rational coeff;
  Pcp pcp;
};

/// constant + sum coeff * I_pcp. The native tag lets built-ins evaluate directly;
/// any arithmetic on a statistic drops it.
class Statistic {
public:
  Statistic() = default;
  Statistic(int n, int r, Rational constant = 0, std::vector<Term> terms = {}, NativeKind native = NativeKind::none);

  static Statistic indicator(const Pcp& pcp, const Rational& coeff = 1);

  int n() const { return n_; }
  int r() const { return r_; }
  const Rational& constant() const { return constant_; }
  const std::vector<Term>& terms() const { return terms_; }
  NativeKind native() const { return native_; }

  /// Largest term size, 0 without terms.
  int degree_bound() const;

  bool is_zero() const { return constant_ == 0 && terms_.empty(); }

private:
  int n_ = 0;
  int r_ = 1;
  Rational constant_;
  std::vector<Term> terms_;
  NativeKind native_ = NativeKind::none;
};

Statistic add(const Statistic& x, const Statistic& y);
Statistic scale(const Statistic& x, const Rational& c);

/// Expands term by term through merge_if_compatible. Throws BudgetExceeded when
/// the normalized product would exceed max_terms.
Statistic multiply(const Statistic& x, const Statistic& y, std::size_t max_terms = kDefaultMaxTerms);

Statistic statistic_power(const Statistic& x, int k, std::size_t max_terms = kDefaultMaxTerms);

/// Evaluates the decomposition.
Rational evaluate(const Statistic& x, const ColoredPermutation& p);

/// Uses the native evaluator when present.
Rational evaluate_fast(const Statistic& x, const ColoredPermutation& p);

long des_b(const ColoredPermutation& p);
long inv(const ColoredPermutation& p);
long neg(const ColoredPermutation& p);
long inv_b(const ColoredPermutation& p);
long native_value(NativeKind kind, const ColoredPermutation& p);

Statistic builtin_des_b(int n);
Statistic builtin_inv(int n);
Statistic builtin_neg(int n);
Statistic builtin_inv_b(int n);

/// Names: des_b, inv, neg, inv_b.
Statistic builtin(std::string_view name, int n);
std::optional<NativeKind> parse_native_kind(std::string_view name);
std::string native_name(NativeKind kind);

/// I[omega(i) > omega(j)] in the signed word, 1 <= i < j <= n.
Statistic inv_ij_indicator(int n, int i, int j);

/// I[omega(i) < omega(-i)], i.e. position i carries a negative value.
Statistic inv_neg_ii_indicator(int n, int i);

/// Same size throughout and closed under order-preserving relabelings into [n].
bool is_order_invariant_set(const std::vector<Pcp>& set);

/// C_n for the order-invariant extension of C, given on S_{n0,r}. Sorted, no duplicates.
std::vector<Pcp> order_invariant_extension(const std::vector<Pcp>& set, int n0, int n);

/// The statistic sum_{pcp in set} I_pcp on S_{n,r}.
Statistic statistic_from_set(int n, int r, const std::vector<Pcp>& set);

} // namespace wreath

#endif // WREATH_STATISTIC_HPP

#ifndef WREATH_CLASSES_HPP
#define WREATH_CLASSES_HPP

#include "wreath/errors.hpp"
#include "wreath/perm.hpp"
#include "wreath/rational.hpp"
#include "wreath/rpartition.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace wreath {

struct ClassSummary {
  RPartition label;
  Integer centralizer_order;
  Integer class_size;
};

/// r^n * n!
Integer group_order(int n, int r);

/// Every r-partition of n exactly once, in canonical label order: by the
/// pooled cycle-length partition (lexicographic on decreasing parts), then
/// color component by color component with larger partitions first.
std::vector<RPartition> enumerate_r_partitions(int n, int r);

/// prod over colors c and lengths i of (r*i)^{m_i(lambda^c)} * m_i(lambda^c)!
Integer centralizer_order(const RPartition& label);

/// r^n n! / centralizer_order(label).
Integer class_size(const RPartition& label);

ClassSummary summarize(const RPartition& label);

/// Minimum part over all colors; INT_MAX for the empty partition.
int min_cycle_length(const RPartition& label);

/// True iff the class has no cycles of length 1, ..., m.
bool has_no_cycles_up_to(const RPartition& label, int m);

/// The element with the given rank under the constructive parametrization:
/// the smallest unused element leads the next cycle, a cycle type is chosen,
/// the remaining cycle entries are an ordered selection, all but the last
/// entry are colored freely and the last one fixes the cycle color.
/// Ranks run over [0, class_size(label)).
ColoredPermutation class_element_at(const RPartition& label, const Integer& rank);

using ElementVisitor = std::function<void(const ColoredPermutation&)>;

/// Visits the constructive ranks [first, first + count) in order.
void for_each_in_class_range(const RPartition& label, const Integer& first, const Integer& count,
                             const ElementVisitor& visit);

/// Visits every element of the class exactly once. The filter strategy scans
/// all of S_{n,r} (r^n n! must fit in the budget); the constructive path,
/// also used by `automatic`, needs only the class size to fit.
void for_each_in_class(const RPartition& label, const ElementVisitor& visit, const ComputeLimits& limits = {});

std::vector<ColoredPermutation> enumerate_class(const RPartition& label, const ComputeLimits& limits = {});

/// Exactly uniform over the class, deterministic in the seed.
ColoredPermutation sample_uniform(const RPartition& label, std::uint64_t seed);

} // namespace wreath

#endif // WREATH_CLASSES_HPP

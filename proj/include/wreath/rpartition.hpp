#ifndef WREATH_RPARTITION_HPP
#define WREATH_RPARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// An r-tuple of integer partitions; component c lists the lengths of the
/// cycles of color c. For r = 2 this is the bipartition (lambda, mu) with
/// lambda the even (color 0) cycles and mu the odd (color 1) cycles.
class RPartition {
public:
  RPartition() = default;

  /// Parts are sorted into weakly decreasing order; every part must be positive.
  RPartition(int r, std::vector<std::vector<int>> parts);

  static RPartition bipartition(std::vector<int> even, std::vector<int> odd);

  /// ((1^n), empty, ..., empty): the cycle type of the identity.
  static RPartition identity_type(int n, int r);

  int n() const { return n_; }
  int r() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts(int color) const { return parts_.at(color); }
  const std::vector<std::vector<int>>& components() const { return parts_; }

  /// m_length(lambda^color): number of cycles of the given length and color.
  int multiplicity(int length, int color) const;

  /// Total number of cycles.
  int num_cycles() const;

  /// All parts of all colors, weakly decreasing.
  std::vector<int> pooled_parts() const;

  friend bool operator==(const RPartition&, const RPartition&) = default;
  friend auto operator<=>(const RPartition&, const RPartition&) = default;

private:
  int n_ = 0;
  std::vector<std::vector<int>> parts_{std::vector<int>{}};
};

using BiPartition = RPartition;

/// Label text: components separated by ';', parts by ','. "3,1;2" is
/// ((3,1),(2)); "5;" is ((5),empty); ";;3;2" is an r = 4 label.
std::string format_label(const RPartition& label);

/// Parses label text. The number of components fixes r unless
/// expected_r is given, in which case the two must agree.
RPartition parse_label(std::string_view text, std::optional<int> expected_r = std::nullopt);

/// Canonical display order of labels (see enumerate_r_partitions).
bool label_order_less(const RPartition& a, const RPartition& b);

} // namespace wreath

#endif // WREATH_RPARTITION_HPP

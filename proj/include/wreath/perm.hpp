#ifndef WREATH_PERM_HPP
#define WREATH_PERM_HPP

#include "wreath/rpartition.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wreath {

/// An element (omega, tau) of the colored permutation group S_{n,r}.
///
/// Elements are 1-based. omega is stored as its one-line word and tau as a
/// coloring of VALUES: color_of(j) is tau(j). The superscript shown at
/// position i in one-line notation is therefore color_of(image(i)).
/// As a bijection of [n]^r the element acts by
///   i^c  ->  omega(i)^(tau(omega(i)) + c).
class ColoredPermutation {
public:
  ColoredPermutation() = default;

  /// image[i-1] = omega(i), color_of_value[j-1] = tau(j).
  ColoredPermutation(std::vector<int> image, std::vector<int> color_of_value, int r);

  static ColoredPermutation identity(int n, int r);

  /// Builds an element of B_n from a signed one-line word: negative entries are color 1.
  static ColoredPermutation from_signed(std::span<const int> word);

  int n() const { return static_cast<int>(image_.size()); }
  int r() const { return r_; }

  int image(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  int color_of(int value) const { return color_[static_cast<std::size_t>(value - 1)]; }
  int color_at_position(int i) const { return color_of(image(i)); }

  /// (-1)^tau(omega(i)) * omega(i); requires r = 2.
  int signed_image(int i) const;

  /// The signed one-line word; requires r = 2.
  std::vector<int> signed_word() const;

  /// f(i^c) as an (element, color) pair.
  std::pair<int, int> apply(int i, int c) const;

  const std::vector<int>& images() const { return image_; }
  const std::vector<int>& colors() const { return color_; }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
  int r_ = 1;
  std::vector<int> image_;
  std::vector<int> color_;
};

/// compose(a, b) = f_a o f_b: b is applied first.
ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b);
ColoredPermutation inverse(const ColoredPermutation& p);
/// g p g^{-1}.
ColoredPermutation conjugate(const ColoredPermutation& p, const ColoredPermutation& g);

struct ColoredCycle {
  /// (element, tau(element)) in cycle order, starting at the minimal element.
  std::vector<std::pair<int, int>> entries;
  int cycle_color = 0;

  int length() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const ColoredCycle&, const ColoredCycle&) = default;
};

/// Cycles sorted by their minimal element.
std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& p);
ColoredPermutation from_cycles(int n, int r, const std::vector<ColoredCycle>& cycles);

RPartition cycle_type(const ColoredPermutation& p);

/// Parses "4^1 5^3 1^3 3^1 2^0" (general r) or "2,7,-1,-5" (signed, r = 2).
/// Tokens may be separated by spaces and/or commas. A plain unsigned token is
/// read as color 0. Signed tokens require r = 2.
ColoredPermutation parse_permutation(std::string_view text, int r);

/// Signed comma form for r = 2, "v^c" space-separated tokens otherwise.
std::string format_permutation(const ColoredPermutation& p);
std::string format_colored(const ColoredPermutation& p);
std::string format_cycles(const ColoredPermutation& p);

/// Visits every element of S_{n,r} (r^n n! of them) in a fixed order.
void for_each_group_element(int n, int r, const std::function<void(const ColoredPermutation&)>& visit);

} // namespace wreath

#endif // WREATH_PERM_HPP

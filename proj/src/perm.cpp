#include "wreath/perm.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace wreath {

namespace {

int mod(int a, int r) {
  const int m = a % r;
  return m < 0 ? m + r : m;
}

void require_same_group(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.n() != b.n() || a.r() != b.r())
    throw PreconditionError("colored permutations from different groups: S_{" + std::to_string(a.n()) + "," +
                            std::to_string(a.r()) + "} vs S_{" + std::to_string(b.n()) + "," +
                            std::to_string(b.r()) + "}");
}

} // namespace

ColoredPermutation::ColoredPermutation(std::vector<int> image, std::vector<int> color_of_value, int r)
    : r_(r), image_(std::move(image)), color_(std::move(color_of_value)) {
  if (r_ < 1)
    throw PreconditionError("number of colors must be at least 1");
  if (image_.size() != color_.size())
    throw PreconditionError("image and coloring have different lengths");
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n())
      throw PreconditionError("image value " + std::to_string(v) + " outside [1," + std::to_string(n()) + "]");
    if (seen[static_cast<std::size_t>(v)])
      throw PreconditionError("image value " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int c : color_)
    if (c < 0 || c >= r_)
      throw PreconditionError("color " + std::to_string(c) + " outside [0," + std::to_string(r_) + ")");
}

ColoredPermutation ColoredPermutation::identity(int n, int r) {
  if (n < 0)
    throw PreconditionError("degree must be nonnegative");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return ColoredPermutation(std::move(image), std::vector<int>(static_cast<std::size_t>(n), 0), r);
}

ColoredPermutation ColoredPermutation::from_signed(std::span<const int> word) {
  std::vector<int> image(word.size());
  std::vector<int> color(word.size(), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v == 0 || static_cast<std::size_t>(std::abs(v)) > word.size())
      throw PreconditionError("signed entry " + std::to_string(v) + " out of range");
    image[i] = std::abs(v);
    color[static_cast<std::size_t>(std::abs(v) - 1)] = v < 0 ? 1 : 0;
  }
  return ColoredPermutation(std::move(image), std::move(color), 2);
}

int ColoredPermutation::signed_image(int i) const {
  if (r_ != 2)
    throw PreconditionError("signed view requires r = 2");
  const int v = image(i);
  return color_of(v) == 1 ? -v : v;
}

std::vector<int> ColoredPermutation::signed_word() const {
  std::vector<int> word(image_.size());
  for (int i = 1; i <= n(); ++i)
    word[static_cast<std::size_t>(i - 1)] = signed_image(i);
  return word;
}

std::pair<int, int> ColoredPermutation::apply(int i, int c) const {
  if (i < 1 || i > n())
    throw PreconditionError("element " + std::to_string(i) + " outside [1," + std::to_string(n()) + "]");
  if (c < 0 || c >= r_)
    throw PreconditionError("color " + std::to_string(c) + " outside [0," + std::to_string(r_) + ")");
  const int v = image(i);
  return {v, mod(color_of(v) + c, r_)};
}

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
  require_same_group(a, b);
  const int n = a.n();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<int> color(static_cast<std::size_t>(n));
  // f_a(f_b(i^0)) = f_a(w_b(i)^{t_b(w_b(i))}) = w_a(w_b(i))^{t_a(w_a(w_b(i))) + t_b(w_b(i))}
  for (int i = 1; i <= n; ++i) {
    const int mid = b.image(i);
    const int v = a.image(mid);
    image[static_cast<std::size_t>(i - 1)] = v;
    color[static_cast<std::size_t>(v - 1)] = mod(a.color_of(v) + b.color_of(mid), a.r());
  }
  return ColoredPermutation(std::move(image), std::move(color), a.r());
}

ColoredPermutation inverse(const ColoredPermutation& p) {
  const int n = p.n();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<int> color(static_cast<std::size_t>(n));
  // f^{-1}(j^0) = w^{-1}(j)^{-t(j)}
  for (int i = 1; i <= n; ++i) {
    const int j = p.image(i);
    image[static_cast<std::size_t>(j - 1)] = i;
    color[static_cast<std::size_t>(i - 1)] = mod(-p.color_of(j), p.r());
  }
  return ColoredPermutation(std::move(image), std::move(color), p.r());
}

ColoredPermutation conjugate(const ColoredPermutation& p, const ColoredPermutation& g) {
  require_same_group(p, g);
  return compose(compose(g, p), inverse(g));
}

std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& p) {
  std::vector<ColoredCycle> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(p.n()) + 1, false);
  for (int start = 1; start <= p.n(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    ColoredCycle cycle;
    int total = 0;
    for (int e = start; !seen[static_cast<std::size_t>(e)]; e = p.image(e)) {
      seen[static_cast<std::size_t>(e)] = true;
      cycle.entries.emplace_back(e, p.color_of(e));
      total += p.color_of(e);
    }
    cycle.cycle_color = mod(total, p.r());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

ColoredPermutation from_cycles(int n, int r, const std::vector<ColoredCycle>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    const auto& e = cycle.entries;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const int from = e[k].first;
      const int to = e[(k + 1) % e.size()].first;
      if (from < 1 || from > n || image[static_cast<std::size_t>(from - 1)] != 0)
        throw PreconditionError("cycles do not partition [n]");
      image[static_cast<std::size_t>(from - 1)] = to;
      color[static_cast<std::size_t>(from - 1)] = e[k].second;
    }
  }
  return ColoredPermutation(std::move(image), std::move(color), r);
}

RPartition cycle_type(const ColoredPermutation& p) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(p.r()));
  std::vector<bool> seen(static_cast<std::size_t>(p.n()) + 1, false);
  for (int start = 1; start <= p.n(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    int length = 0;
    int total = 0;
    for (int e = start; !seen[static_cast<std::size_t>(e)]; e = p.image(e)) {
      seen[static_cast<std::size_t>(e)] = true;
      ++length;
      total += p.color_of(e);
    }
    parts[static_cast<std::size_t>(mod(total, p.r()))].push_back(length);
  }
  return RPartition(p.r(), std::move(parts));
}

ColoredPermutation parse_permutation(std::string_view text, int r) {
  if (r < 1)
    throw ParseError("number of colors must be at least 1");
  std::vector<std::pair<int, int>> tokens; // (value, color) per position
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
    if (pos >= text.size())
      break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',')
      ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    const auto caret = token.find('^');
    const std::string_view value_text = token.substr(0, caret);
    int value = 0;
    auto [vp, vec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (vec != std::errc() || vp != value_text.data() + value_text.size())
      throw ParseError("malformed token '" + std::string(token) + "'");
    int color = 0;
    if (caret != std::string_view::npos) {
      if (value < 0)
        throw ParseError("token '" + std::string(token) + "' mixes a sign with a color");
      const std::string_view color_text = token.substr(caret + 1);
      auto [cp, cec] = std::from_chars(color_text.data(), color_text.data() + color_text.size(), color);
      if (cec != std::errc() || cp != color_text.data() + color_text.size())
        throw ParseError("malformed color in token '" + std::string(token) + "'");
      if (color < 0 || color >= r)
        throw ParseError("color " + std::to_string(color) + " out of range for r = " + std::to_string(r));
    } else if (value < 0) {
      if (r != 2)
        throw ParseError("signed entries are only meaningful for r = 2");
      value = -value;
      color = 1;
    }
    if (value == 0)
      throw ParseError("entries are 1-based; found 0");
    tokens.emplace_back(value, color);
  }
  const int n = static_cast<int>(tokens.size());
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i < n; ++i) {
    const auto [v, c] = tokens[static_cast<std::size_t>(i)];
    if (v > n)
      throw ParseError("entry " + std::to_string(v) + " exceeds n = " + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw ParseError("duplicate image " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
    image[static_cast<std::size_t>(i)] = v;
    colors[static_cast<std::size_t>(v - 1)] = c;
  }
  return ColoredPermutation(std::move(image), std::move(colors), r);
}

std::string format_colored(const ColoredPermutation& p) {
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1)
      out += ' ';
    out += std::to_string(p.image(i)) + '^' + std::to_string(p.color_at_position(i));
  }
  return out;
}

std::string format_permutation(const ColoredPermutation& p) {
  if (p.r() != 2)
    return format_colored(p);
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1)
      out += ',';
    out += std::to_string(p.signed_image(i));
  }
  return out;
}

std::string format_cycles(const ColoredPermutation& p) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(p)) {
    out += '(';
    for (std::size_t k = 0; k < cycle.entries.size(); ++k) {
      if (k > 0)
        out += ' ';
      out += std::to_string(cycle.entries[k].first) + '^' + std::to_string(cycle.entries[k].second);
    }
    out += ')';
  }
  return out;
}

void for_each_group_element(int n, int r, const std::function<void(const ColoredPermutation&)>& visit) {
  if (n < 0 || r < 1)
    throw PreconditionError("need n >= 0 and r >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
      visit(ColoredPermutation(image, color, r));
      int k = n - 1;
      while (k >= 0 && color[static_cast<std::size_t>(k)] == r - 1)
        color[static_cast<std::size_t>(k--)] = 0;
      if (k < 0)
        break;
      ++color[static_cast<std::size_t>(k)];
    }
  } while (std::next_permutation(image.begin(), image.end()));
}

} // namespace wreath

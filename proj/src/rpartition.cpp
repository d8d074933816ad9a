#include "wreath/rpartition.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace wreath {

RPartition::RPartition(int r, std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
  if (r < 1)
    throw PreconditionError("r-partition needs r >= 1");
  if (static_cast<int>(parts_.size()) != r)
    throw PreconditionError("r-partition has " + std::to_string(parts_.size()) +
                            " components, expected " + std::to_string(r));
  n_ = 0;
  for (auto& component : parts_) {
    for (int part : component) {
      if (part <= 0)
        throw PreconditionError("partition parts must be positive");
      n_ += part;
    }
    std::sort(component.begin(), component.end(), std::greater<>());
  }
}

RPartition RPartition::bipartition(std::vector<int> even, std::vector<int> odd) {
  return RPartition(2, {std::move(even), std::move(odd)});
}

RPartition RPartition::identity_type(int n, int r) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(r));
  parts[0].assign(static_cast<std::size_t>(n), 1);
  return RPartition(r, std::move(parts));
}

int RPartition::multiplicity(int length, int color) const {
  const auto& component = parts_.at(color);
  return static_cast<int>(std::count(component.begin(), component.end(), length));
}

int RPartition::num_cycles() const {
  int total = 0;
  for (const auto& component : parts_)
    total += static_cast<int>(component.size());
  return total;
}

std::vector<int> RPartition::pooled_parts() const {
  std::vector<int> all;
  for (const auto& component : parts_)
    all.insert(all.end(), component.begin(), component.end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return all;
}

std::string format_label(const RPartition& label) {
  std::string out;
  for (int c = 0; c < label.r(); ++c) {
    if (c > 0)
      out += ';';
    const auto& component = label.parts(c);
    for (std::size_t i = 0; i < component.size(); ++i) {
      if (i > 0)
        out += ',';
      out += std::to_string(component[i]);
    }
  }
  return out;
}

RPartition parse_label(std::string_view text, std::optional<int> expected_r) {
  std::vector<std::vector<int>> parts(1);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("malformed class label '" + std::string(text) + "': " + why);
  };
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find_first_of(",;", pos), text.size());
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    const char sep = end < text.size() ? text[end] : '\0';
    if (!token.empty()) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw fail("bad part '" + std::string(token) + "'");
      if (value <= 0)
        throw fail("parts must be positive");
      parts.back().push_back(value);
    } else if (sep == ',' || (pos > 0 && text[pos - 1] == ',')) {
      throw fail("empty part");
    }
    if (sep == ';')
      parts.emplace_back();
    if (end >= text.size())
      break;
    pos = end + 1;
  }
  const int r = static_cast<int>(parts.size());
  if (expected_r && *expected_r != r)
    throw fail("expected " + std::to_string(*expected_r) + " color components, found " + std::to_string(r));
  return RPartition(r, std::move(parts));
}

bool label_order_less(const RPartition& a, const RPartition& b) {
  if (a.r() != b.r())
    return a.r() < b.r();
  if (a.n() != b.n())
    return a.n() < b.n();
  const auto pa = a.pooled_parts();
  const auto pb = b.pooled_parts();
  if (pa != pb)
    return pa < pb;
  for (int c = 0; c < a.r(); ++c) {
    if (a.parts(c) != b.parts(c))
      return a.parts(c) > b.parts(c);
  }
  return false;
}

} // namespace wreath

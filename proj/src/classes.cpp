#include "wreath/classes.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <random>

namespace wreath {

namespace {

void partitions_of(int k, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(k - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_of(k, k, prefix, out);
  return out;
}

struct CycleSlot {
  int length;
  int color;
  int count;
};

// Walks the constructive parametrization of a conjugacy class in rank order.
// Subtrees lying entirely before the requested first rank are skipped by size.
class ConstructiveWalker {
public:
  ConstructiveWalker(const RPartition& label, const ElementVisitor& visit) : r_(label.r()), visit_(visit) {
    std::map<std::pair<int, int>, int> counts;
    for (int c = 0; c < label.r(); ++c)
      for (int part : label.parts(c))
        ++counts[{part, c}];
    for (const auto& [key, count] : counts)
      slots_.push_back({key.first, key.second, count});
    n_ = label.n();
    for (int e = 1; e <= n_; ++e)
      avail_.push_back(e);
    image_.assign(static_cast<std::size_t>(n_), 0);
    color_.assign(static_cast<std::size_t>(n_), 0);
  }

  void run(Integer skip, Integer count) {
    skip_ = std::move(skip);
    remaining_ = std::move(count);
    if (remaining_ > 0)
      next_cycle();
  }

private:
  Integer completions(int elements) const {
    Integer total = factorial(static_cast<unsigned long>(elements));
    int cycles = 0;
    Integer denom = 1;
    for (const auto& s : slots_) {
      cycles += s.count;
      denom *= power(s.length, static_cast<unsigned long>(s.count)) * factorial(static_cast<unsigned long>(s.count));
    }
    total *= power(r_, static_cast<unsigned long>(elements - cycles));
    return total / denom;
  }

  // Returns false once the requested range is exhausted.
  bool next_cycle() {
    if (avail_.empty()) {
      visit_(ColoredPermutation(image_, color_, r_));
      --remaining_;
      return remaining_ > 0;
    }
    const int u = static_cast<int>(avail_.size());
    for (auto& slot : slots_) {
      if (slot.count == 0)
        continue;
      const int len = slot.length;
      --slot.count;
      bool keep_going = true;
      bool skipped = false;
      if (skip_ > 0) {
        rest_ = completions(u - len);
        const Integer size = falling_factorial(u - 1, static_cast<unsigned long>(len - 1)) *
                             power(r_, static_cast<unsigned long>(len - 1)) * rest_;
        if (skip_ >= size) {
          skip_ -= size;
          skipped = true;
        }
      }
      if (!skipped) {
        cycle_.assign(1, avail_.front());
        used_.assign(avail_.size(), false);
        used_[0] = true;
        keep_going = choose_entry(slot);
      }
      ++slot.count;
      if (!keep_going)
        return false;
    }
    return true;
  }

  bool choose_entry(const CycleSlot& slot) {
    const int len = slot.length;
    if (static_cast<int>(cycle_.size()) == len) {
      cycle_colors_.assign(static_cast<std::size_t>(len), 0);
      return choose_color(slot, 0, 0);
    }
    const int pool = static_cast<int>(avail_.size()) - 1;
    const int picked = static_cast<int>(cycle_.size()) - 1;
    const int left_after = len - 2 - picked;
    for (std::size_t idx = 1; idx < avail_.size(); ++idx) {
      if (used_[idx])
        continue;
      if (skip_ > 0) {
        const Integer size = falling_factorial(pool - 1 - picked, static_cast<unsigned long>(left_after)) *
                             power(r_, static_cast<unsigned long>(len - 1)) *
                             completions(static_cast<int>(avail_.size()) - len);
        if (skip_ >= size) {
          skip_ -= size;
          continue;
        }
      }
      used_[idx] = true;
      cycle_.push_back(avail_[idx]);
      const bool keep_going = choose_entry(slot);
      cycle_.pop_back();
      used_[idx] = false;
      if (!keep_going)
        return false;
    }
    return true;
  }

  bool choose_color(const CycleSlot& slot, int entry, int color_sum) {
    const int len = slot.length;
    if (entry == len - 1) {
      const int last = ((slot.color - color_sum) % r_ + r_) % r_;
      cycle_colors_[static_cast<std::size_t>(entry)] = last;
      return place_cycle();
    }
    for (int c = 0; c < r_; ++c) {
      if (skip_ > 0) {
        const Integer size = power(r_, static_cast<unsigned long>(len - 2 - entry)) *
                             completions(static_cast<int>(avail_.size()) - len);
        if (skip_ >= size) {
          skip_ -= size;
          continue;
        }
      }
      cycle_colors_[static_cast<std::size_t>(entry)] = c;
      if (!choose_color(slot, entry + 1, color_sum + c))
        return false;
    }
    return true;
  }

  bool place_cycle() {
    const std::vector<int> cycle = cycle_;
    const std::vector<int> colors = cycle_colors_;
    const std::vector<bool> used = used_;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      image_[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
      color_[static_cast<std::size_t>(from - 1)] = colors[k];
    }
    const std::vector<int> saved_avail = avail_;
    std::vector<int> next_avail;
    for (std::size_t idx = 0; idx < avail_.size(); ++idx)
      if (!used[idx])
        next_avail.push_back(avail_[idx]);
    avail_ = std::move(next_avail);
    const bool keep_going = next_cycle();
    avail_ = saved_avail;
    cycle_ = cycle;
    cycle_colors_ = colors;
    used_ = used;
    return keep_going;
  }

  int r_;
  int n_ = 0;
  const ElementVisitor& visit_;
  std::vector<CycleSlot> slots_;
  std::vector<int> avail_;
  std::vector<int> image_;
  std::vector<int> color_;
  std::vector<int> cycle_;
  std::vector<int> cycle_colors_;
  std::vector<bool> used_;
  Integer skip_;
  Integer remaining_;
  Integer rest_;
};

} // namespace

Integer group_order(int n, int r) {
  if (n < 0 || r < 1)
    throw PreconditionError("need n >= 0 and r >= 1");
  return power(r, static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n));
}

std::vector<RPartition> enumerate_r_partitions(int n, int r) {
  if (n < 0 || r < 1)
    throw PreconditionError("need n >= 0 and r >= 1");
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    by_size[static_cast<std::size_t>(k)] = partitions_of(k);

  std::vector<RPartition> out;
  std::vector<std::vector<int>> current(static_cast<std::size_t>(r));
  auto fill = [&](auto&& self, int color, int left) -> void {
    if (color == r - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
        current[static_cast<std::size_t>(color)] = p;
        out.emplace_back(r, current);
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        current[static_cast<std::size_t>(color)] = p;
        self(self, color + 1, left - k);
      }
    }
  };
  fill(fill, 0, n);
  std::sort(out.begin(), out.end(), label_order_less);
  return out;
}

Integer centralizer_order(const RPartition& label) {
  Integer z = 1;
  const int r = label.r();
  for (int c = 0; c < r; ++c) {
    const auto& parts = label.parts(c);
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i])
        ++j;
      const auto m = static_cast<unsigned long>(j - i);
      z *= power(static_cast<long>(r) * parts[i], m) * factorial(m);
      i = j;
    }
  }
  return z;
}

Integer class_size(const RPartition& label) { return group_order(label.n(), label.r()) / centralizer_order(label); }

ClassSummary summarize(const RPartition& label) {
  return {label, centralizer_order(label), class_size(label)};
}

int min_cycle_length(const RPartition& label) {
  int best = INT_MAX;
  for (const auto& component : label.components())
    if (!component.empty())
      best = std::min(best, component.back());
  return best;
}

bool has_no_cycles_up_to(const RPartition& label, int m) { return min_cycle_length(label) > m; }

void for_each_in_class_range(const RPartition& label, const Integer& first, const Integer& count,
                             const ElementVisitor& visit) {
  const Integer size = class_size(label);
  if (first < 0 || count < 0 || first + count > size)
    throw PreconditionError("rank range outside [0, class size)");
  if (count == 0)
    return;
  ConstructiveWalker walker(label, visit);
  walker.run(first, count);
}

ColoredPermutation class_element_at(const RPartition& label, const Integer& rank) {
  ColoredPermutation out;
  for_each_in_class_range(label, rank, 1, [&](const ColoredPermutation& p) { out = p; });
  return out;
}

void for_each_in_class(const RPartition& label, const ElementVisitor& visit, const ComputeLimits& limits) {
  const Integer whole = group_order(label.n(), label.r());
  const Integer budget(std::to_string(limits.budget));
  if (limits.strategy == EnumerationStrategy::filter) {
    if (whole > budget)
      throw BudgetExceeded("filtering S_{" + std::to_string(label.n()) + "," + std::to_string(label.r()) +
                           "} needs " + to_string(whole) + " element visits, budget is " +
                           std::to_string(limits.budget));
    for_each_group_element(label.n(), label.r(), [&](const ColoredPermutation& p) {
      if (cycle_type(p) == label)
        visit(p);
    });
    return;
  }
  const Integer size = class_size(label);
  if (size > budget)
    throw BudgetExceeded("class " + format_label(label) + " has " + to_string(size) +
                         " elements, budget is " + std::to_string(limits.budget));
  for_each_in_class_range(label, 0, size, visit);
}

std::vector<ColoredPermutation> enumerate_class(const RPartition& label, const ComputeLimits& limits) {
  std::vector<ColoredPermutation> out;
  for_each_in_class(label, [&](const ColoredPermutation& p) { out.push_back(p); }, limits);
  return out;
}

ColoredPermutation sample_uniform(const RPartition& label, std::uint64_t seed) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(Integer(std::to_string(seed)));
  return class_element_at(label, rng.get_z_range(class_size(label)));
}

} // namespace wreath

#include "wreath/statistic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wreath {

namespace {

void require_same_space(int n1, int r1, int n2, int r2) {
  if (n1 != n2 || r1 != r2)
    throw PreconditionError("mismatched groups S_{" + std::to_string(n1) + "," + std::to_string(r1) + "} and S_{" +
                            std::to_string(n2) + "," + std::to_string(r2) + "}");
}

Constraint signed_constraint(int i, int v) { return {i, std::abs(v), v < 0 ? 1 : 0}; }

// Calls visit(subset) for every increasing k-subset of [1, n].
template <class Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n)
    return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    visit(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1)
      --i;
    if (i < 0)
      return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

using TermMap = std::map<Pcp, Rational>;

std::vector<Term> to_terms(TermMap&& map) {
  std::vector<Term> out;
  out.reserve(map.size());
  for (auto& [pcp, coeff] : map)
    if (coeff != 0)
      out.push_back({std::move(coeff), pcp});
  return out;
}

} // namespace

PartialColoredPermutation::PartialColoredPermutation(int n, int r, std::vector<Constraint> constraints)
    : n_(n), r_(r), constraints_(std::move(constraints)) {
  if (n < 0 || r < 1)
    throw PreconditionError("need n >= 0 and r >= 1");
  std::sort(constraints_.begin(), constraints_.end());
  std::vector<bool> seen_to(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t h = 0; h < constraints_.size(); ++h) {
    const auto& c = constraints_[h];
    if (c.from < 1 || c.from > n || c.to < 1 || c.to > n)
      throw PreconditionError("constraint (" + std::to_string(c.from) + "," + std::to_string(c.to) +
                              ") outside [1," + std::to_string(n) + "]");
    if (c.color < 0 || c.color >= r)
      throw PreconditionError("constraint color " + std::to_string(c.color) + " outside [0," + std::to_string(r) + ")");
    if (h > 0 && constraints_[h - 1].from == c.from)
      throw PreconditionError("element " + std::to_string(c.from) + " constrained twice");
    if (seen_to[static_cast<std::size_t>(c.to)])
      throw PreconditionError("image " + std::to_string(c.to) + " used twice");
    seen_to[static_cast<std::size_t>(c.to)] = true;
  }
}

PartialColoredPermutation PartialColoredPermutation::from_signed(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Constraint> cs;
  for (const auto& [i, v] : pairs) {
    if (v == 0)
      throw PreconditionError("signed image 0 is not allowed");
    cs.push_back(signed_constraint(i, v));
  }
  return PartialColoredPermutation(n, 2, std::move(cs));
}

bool satisfies(const ColoredPermutation& p, const Pcp& pcp) {
  require_same_space(p.n(), p.r(), pcp.n(), pcp.r());
  for (const auto& c : pcp.constraints())
    if (p.image(c.from) != c.to || p.color_of(c.to) != c.color)
      return false;
  return true;
}

bool is_acyclic(const Pcp& pcp) {
  const auto& cs = pcp.constraints();
  auto next = [&](int v) -> int {
    auto it = std::lower_bound(cs.begin(), cs.end(), v, [](const Constraint& c, int x) { return c.from < x; });
    return it != cs.end() && it->from == v ? it->to : 0;
  };
  for (const auto& c : cs) {
    int v = c.to;
    for (std::size_t steps = 0; v != 0 && steps <= cs.size(); ++steps) {
      if (v == c.from)
        return false;
      v = next(v);
    }
  }
  return true;
}

std::optional<Pcp> merge_if_compatible(const Pcp& a, const Pcp& b) {
  require_same_space(a.n(), a.r(), b.n(), b.r());
  std::vector<Constraint> merged;
  merged.reserve(a.constraints().size() + b.constraints().size());
  std::set_union(a.constraints().begin(), a.constraints().end(), b.constraints().begin(), b.constraints().end(),
                 std::back_inserter(merged));
  for (std::size_t h = 1; h < merged.size(); ++h)
    if (merged[h].from == merged[h - 1].from)
      return std::nullopt;
  std::vector<int> tos;
  tos.reserve(merged.size());
  for (const auto& c : merged)
    tos.push_back(c.to);
  std::sort(tos.begin(), tos.end());
  if (std::adjacent_find(tos.begin(), tos.end()) != tos.end())
    return std::nullopt;
  return Pcp(a.n(), a.r(), std::move(merged));
}

std::vector<int> support(const Pcp& pcp) {
  std::vector<int> s;
  for (const auto& c : pcp.constraints()) {
    s.push_back(c.from);
    s.push_back(c.to);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Pcp apply_order_injection(const Pcp& pcp, const std::vector<int>& images, int target_n) {
  const auto supp = support(pcp);
  if (images.size() != supp.size())
    throw PreconditionError("injection must list one image per support element");
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] < 1 || images[k] > target_n)
      throw PreconditionError("injection image " + std::to_string(images[k]) + " outside [1," +
                              std::to_string(target_n) + "]");
    if (k > 0 && images[k] <= images[k - 1])
      throw PreconditionError("injection is not strictly increasing");
  }
  auto f = [&](int v) {
    return images[static_cast<std::size_t>(std::lower_bound(supp.begin(), supp.end(), v) - supp.begin())];
  };
  std::vector<Constraint> cs;
  cs.reserve(pcp.constraints().size());
  for (const auto& c : pcp.constraints())
    cs.push_back({f(c.from), f(c.to), c.color});
  return Pcp(target_n, pcp.r(), std::move(cs));
}

Pcp compress_support(const Pcp& pcp) {
  const int s = static_cast<int>(support(pcp).size());
  std::vector<int> images(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k)
    images[static_cast<std::size_t>(k)] = k + 1;
  return apply_order_injection(pcp, images, s);
}

std::vector<Pcp> enumerate_pcps(int n, int r, int m) {
  std::vector<Pcp> out;
  if (m < 0 || m > n)
    return out;
  for_each_combination(n, m, [&](const std::vector<int>& froms) {
    for_each_combination(n, m, [&](const std::vector<int>& targets) {
      std::vector<int> tos = targets;
      do {
        long colorings = 1;
        for (int h = 0; h < m; ++h)
          colorings *= r;
        for (long code = 0; code < colorings; ++code) {
          std::vector<Constraint> cs(static_cast<std::size_t>(m));
          long rest = code;
          for (int h = m - 1; h >= 0; --h) {
            cs[static_cast<std::size_t>(h)] = {froms[static_cast<std::size_t>(h)], tos[static_cast<std::size_t>(h)],
                                               static_cast<int>(rest % r)};
            rest /= r;
          }
          out.emplace_back(n, r, std::move(cs));
        }
      } while (std::next_permutation(tos.begin(), tos.end()));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_pcp(const Pcp& pcp) {
  std::string out = "{";
  for (std::size_t h = 0; h < pcp.constraints().size(); ++h) {
    const auto& c = pcp.constraints()[h];
    if (h > 0)
      out += ",";
    out += "(" + std::to_string(c.from) + "," + std::to_string(c.to) + "," + std::to_string(c.color) + ")";
  }
  return out + "}";
}

Statistic::Statistic(int n, int r, Rational constant, std::vector<Term> terms, NativeKind native)
    : n_(n), r_(r), constant_(std::move(constant)), native_(native) {
  if (n < 0 || r < 1)
    throw PreconditionError("need n >= 0 and r >= 1");
  TermMap map;
  for (auto& t : terms) {
    require_same_space(n, r, t.pcp.n(), t.pcp.r());
    if (t.pcp.size() == 0)
      constant_ += t.coeff;
    else
      map[std::move(t.pcp)] += t.coeff;
  }
  terms_ = to_terms(std::move(map));
}

Statistic Statistic::indicator(const Pcp& pcp, const Rational& coeff) {
  return Statistic(pcp.n(), pcp.r(), 0, {{coeff, pcp}});
}

int Statistic::degree_bound() const {
  int m = 0;
  for (const auto& t : terms_)
    m = std::max(m, t.pcp.size());
  return m;
}

Statistic add(const Statistic& x, const Statistic& y) {
  require_same_space(x.n(), x.r(), y.n(), y.r());
  std::vector<Term> terms = x.terms();
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return Statistic(x.n(), x.r(), x.constant() + y.constant(), std::move(terms));
}

Statistic scale(const Statistic& x, const Rational& c) {
  std::vector<Term> terms = x.terms();
  for (auto& t : terms)
    t.coeff *= c;
  return Statistic(x.n(), x.r(), x.constant() * c, std::move(terms));
}

Statistic multiply(const Statistic& x, const Statistic& y, std::size_t max_terms) {
  require_same_space(x.n(), x.r(), y.n(), y.r());
  TermMap map;
  Rational constant = x.constant() * y.constant();
  auto check = [&] {
    if (map.size() > max_terms)
      throw BudgetExceeded("product has more than " + std::to_string(max_terms) + " terms");
  };
  if (x.constant() != 0)
    for (const auto& t : y.terms())
      map[t.pcp] += x.constant() * t.coeff;
  if (y.constant() != 0)
    for (const auto& t : x.terms())
      map[t.pcp] += y.constant() * t.coeff;
  check();
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      auto merged = merge_if_compatible(a.pcp, b.pcp);
      if (!merged)
        continue;
      map[std::move(*merged)] += a.coeff * b.coeff;
    }
    check();
  }
  return Statistic(x.n(), x.r(), std::move(constant), to_terms(std::move(map)));
}

Statistic statistic_power(const Statistic& x, int k, std::size_t max_terms) {
  if (k < 0)
    throw PreconditionError("moment order must be nonnegative");
  Statistic result(x.n(), x.r(), 1);
  for (int i = 0; i < k; ++i)
    result = multiply(result, x, max_terms);
  return result;
}

Rational evaluate(const Statistic& x, const ColoredPermutation& p) {
  require_same_space(x.n(), x.r(), p.n(), p.r());
  Rational total = x.constant();
  for (const auto& t : x.terms()) {
    bool ok = true;
    for (const auto& c : t.pcp.constraints()) {
      if (p.image(c.from) != c.to || p.color_of(c.to) != c.color) {
        ok = false;
        break;
      }
    }
    if (ok)
      total += t.coeff;
  }
  return total;
}

Rational evaluate_fast(const Statistic& x, const ColoredPermutation& p) {
  if (x.native() != NativeKind::none) {
    require_same_space(x.n(), x.r(), p.n(), p.r());
    return Rational(native_value(x.native(), p));
  }
  return evaluate(x, p);
}

long des_b(const ColoredPermutation& p) {
  long count = 0;
  int prev = 0;
  for (int i = 1; i <= p.n(); ++i) {
    const int cur = p.signed_image(i);
    if (prev > cur)
      ++count;
    prev = cur;
  }
  return count;
}

long inv(const ColoredPermutation& p) {
  const auto w = p.signed_word();
  long count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j])
        ++count;
  return count;
}

long neg(const ColoredPermutation& p) {
  long total = 0;
  for (int i = 1; i <= p.n(); ++i) {
    const int v = p.signed_image(i);
    if (v < 0)
      total += v;
  }
  return total;
}

long inv_b(const ColoredPermutation& p) { return inv(p) - neg(p); }

long native_value(NativeKind kind, const ColoredPermutation& p) {
  switch (kind) {
  case NativeKind::des_b:
    return des_b(p);
  case NativeKind::inv:
    return inv(p);
  case NativeKind::neg:
    return neg(p);
  case NativeKind::inv_b:
    return inv_b(p);
  case NativeKind::none:
    break;
  }
  throw PreconditionError("statistic has no native evaluator");
}

namespace {

void require_positive(int n) {
  if (n < 1)
    throw PreconditionError("built-in statistics need n >= 1");
}

// I{(i, l), (j, k)} over signed k < l with |k| != |l|.
void add_pair_inversions(int n, int i, int j, std::vector<Term>& terms) {
  for (int l = -n; l <= n; ++l) {
    for (int k = -n; k < l; ++k) {
      if (k == 0 || l == 0 || std::abs(k) == std::abs(l))
        continue;
      terms.push_back({1, Pcp(n, 2, {signed_constraint(i, l), signed_constraint(j, k)})});
    }
  }
}

std::vector<Term> inv_terms(int n) {
  std::vector<Term> terms;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add_pair_inversions(n, i, j, terms);
  return terms;
}

std::vector<Term> neg_terms(int n) {
  std::vector<Term> terms;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      terms.push_back({-j, Pcp(n, 2, {{i, j, 1}})});
  return terms;
}

} // namespace

Statistic builtin_des_b(int n) {
  require_positive(n);
  std::vector<Term> terms;
  for (int j = 1; j <= n; ++j)
    terms.push_back({1, Pcp(n, 2, {{1, j, 1}})});
  for (int i = 1; i < n; ++i)
    add_pair_inversions(n, i, i + 1, terms);
  return Statistic(n, 2, 0, std::move(terms), NativeKind::des_b);
}

Statistic builtin_inv(int n) {
  require_positive(n);
  return Statistic(n, 2, 0, inv_terms(n), NativeKind::inv);
}

Statistic builtin_neg(int n) {
  require_positive(n);
  return Statistic(n, 2, 0, neg_terms(n), NativeKind::neg);
}

Statistic builtin_inv_b(int n) {
  require_positive(n);
  auto terms = inv_terms(n);
  for (auto& t : neg_terms(n)) {
    t.coeff = -t.coeff;
    terms.push_back(std::move(t));
  }
  return Statistic(n, 2, 0, std::move(terms), NativeKind::inv_b);
}

std::optional<NativeKind> parse_native_kind(std::string_view name) {
  if (name == "des_b" || name == "des_B")
    return NativeKind::des_b;
  if (name == "inv")
    return NativeKind::inv;
  if (name == "neg")
    return NativeKind::neg;
  if (name == "inv_b" || name == "inv_B")
    return NativeKind::inv_b;
  return std::nullopt;
}

std::string native_name(NativeKind kind) {
  switch (kind) {
  case NativeKind::des_b:
    return "des_b";
  case NativeKind::inv:
    return "inv";
  case NativeKind::neg:
    return "neg";
  case NativeKind::inv_b:
    return "inv_b";
  case NativeKind::none:
    break;
  }
  return "custom";
}

Statistic builtin(std::string_view name, int n) {
  const auto kind = parse_native_kind(name);
  if (!kind)
    throw PreconditionError("unknown statistic '" + std::string(name) + "' (expected des_b, inv, neg or inv_b)");
  switch (*kind) {
  case NativeKind::des_b:
    return builtin_des_b(n);
  case NativeKind::inv:
    return builtin_inv(n);
  case NativeKind::neg:
    return builtin_neg(n);
  default:
    return builtin_inv_b(n);
  }
}

Statistic inv_ij_indicator(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw PreconditionError("inv_ij needs 1 <= i < j <= n");
  std::vector<Term> terms;
  add_pair_inversions(n, i, j, terms);
  return Statistic(n, 2, 0, std::move(terms));
}

Statistic inv_neg_ii_indicator(int n, int i) {
  if (i < 1 || i > n)
    throw PreconditionError("inv_neg_ii needs 1 <= i <= n");
  std::vector<Term> terms;
  for (int j = 1; j <= n; ++j)
    terms.push_back({1, Pcp(n, 2, {{i, j, 1}})});
  return Statistic(n, 2, 0, std::move(terms));
}

bool is_order_invariant_set(const std::vector<Pcp>& set) {
  if (set.empty())
    return true;
  const int n = set.front().n();
  const int r = set.front().r();
  const int m = set.front().size();
  for (const auto& pcp : set)
    if (pcp.n() != n || pcp.r() != r || pcp.size() != m)
      return false;
  const std::set<Pcp> members(set.begin(), set.end());
  for (const auto& pcp : members) {
    bool closed = true;
    for_each_combination(n, static_cast<int>(support(pcp).size()), [&](const std::vector<int>& images) {
      if (closed && !members.count(apply_order_injection(pcp, images, n)))
        closed = false;
    });
    if (!closed)
      return false;
  }
  return true;
}

std::vector<Pcp> order_invariant_extension(const std::vector<Pcp>& set, int n0, int n) {
  if (n < 0)
    throw PreconditionError("target degree must be nonnegative");
  std::set<Pcp> out;
  if (set.empty())
    return {};
  const int m = set.front().size();
  for (const auto& pcp : set) {
    if (pcp.n() != n0)
      throw PreconditionError("every pcp must live on S_{n0,r}");
    if (pcp.size() != m)
      throw PreconditionError("order-invariant sets need pcps of a single size");
  }
  if (n <= n0) {
    for (const auto& pcp : set) {
      const auto supp = support(pcp);
      if (supp.empty() || supp.back() <= n)
        out.insert(Pcp(n, pcp.r(), pcp.constraints()));
    }
  }
  if (n >= n0) {
    std::set<Pcp> images;
    for_each_combination(n, n0, [&](const std::vector<int>& f) {
      for (const auto& pcp : set) {
        std::vector<Constraint> cs;
        for (const auto& c : pcp.constraints())
          cs.push_back({f[static_cast<std::size_t>(c.from - 1)], f[static_cast<std::size_t>(c.to - 1)], c.color});
        images.insert(Pcp(n, pcp.r(), std::move(cs)));
      }
    });
    if (n == n0 && images != out)
      throw Error("order-invariant extension branches disagree at n = n0");
    out = std::move(images);
  }
  return {out.begin(), out.end()};
}

Statistic statistic_from_set(int n, int r, const std::vector<Pcp>& set) {
  std::vector<Term> terms;
  terms.reserve(set.size());
  for (const auto& pcp : set)
    terms.push_back({1, pcp});
  return Statistic(n, r, 0, std::move(terms));
}

} // namespace wreath

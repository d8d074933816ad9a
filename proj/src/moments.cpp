#include "wreath/moments.hpp"

#include "wreath/classes.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace wreath {

std::string method_name(MomentMethod method) {
  switch (method) {
  case MomentMethod::brute:
    return "brute";
  case MomentMethod::formula:
    return "formula";
  case MomentMethod::closed_form:
    return "closed_form";
  case MomentMethod::genfunc:
    return "genfunc";
  case MomentMethod::interpolated:
    return "interpolated";
  }
  return "unknown";
}

namespace {

void require_bipartition(const RPartition& label) {
  if (label.r() != 2)
    throw PreconditionError("fixed-point imbalance is defined for r = 2 only");
}

void require_matching(const Statistic& x, const RPartition& label) {
  if (x.n() != label.n() || x.r() != label.r())
    throw PreconditionError("statistic lives on S_{" + std::to_string(x.n()) + "," + std::to_string(x.r()) +
                            "} but the class " + format_label(label) + " on S_{" + std::to_string(label.n()) + "," +
                            std::to_string(label.r()) + "}");
}

Integer budget_of(const ComputeLimits& limits) { return Integer(std::to_string(limits.budget)); }

// 1 / ((n-1)(n-2)...(n-m) r^m)
Rational acyclic_weight(int n, int r, int m) {
  return Rational(1) / Rational(falling_factorial(n - 1, static_cast<unsigned long>(m)) *
                                power(r, static_cast<unsigned long>(m)));
}

unsigned worker_count(const ComputeLimits& limits) { return std::max(1u, limits.jobs); }

} // namespace

DeltaPair delta(const RPartition& label) {
  require_bipartition(label);
  const long a = label.multiplicity(1, 0);
  const long b = label.multiplicity(1, 1);
  return {a - b, a * a - b * b};
}

Integer delta_power(const RPartition& label, int k) {
  require_bipartition(label);
  return power(label.multiplicity(1, 0), static_cast<unsigned long>(k)) -
         power(label.multiplicity(1, 1), static_cast<unsigned long>(k));
}

Distribution brute_distribution(const Statistic& x, const RPartition& label, const ComputeLimits& limits) {
  require_matching(x, label);
  const Integer size = class_size(label);
  const unsigned jobs = worker_count(limits);
  const bool native = x.native() != NativeKind::none;

  struct Local {
    std::map<long, unsigned long> native_counts;
    std::map<Rational, unsigned long> counts;
  };
  auto visitor = [&](Local& local) {
    return [&x, &local, native](const ColoredPermutation& p) {
      if (native)
        ++local.native_counts[native_value(x.native(), p)];
      else
        ++local.counts[evaluate(x, p)];
    };
  };

  std::vector<Local> locals;
  if (jobs == 1 || size < 4096) {
    locals.resize(1);
    for_each_in_class(label, visitor(locals[0]), limits);
  } else {
    if (size > budget_of(limits))
      throw BudgetExceeded("class " + format_label(label) + " has " + to_string(size) + " elements, budget is " +
                           std::to_string(limits.budget));
    locals.resize(jobs);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      const Integer first = size * t / jobs;
      const Integer last = size * (t + 1) / jobs;
      threads.emplace_back([&, t, first, last] {
        try {
          for_each_in_class_range(label, first, last - first, visitor(locals[t]));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : threads)
      th.join();
    for (auto& e : errors)
      if (e)
        std::rethrow_exception(e);
  }

  Distribution dist;
  for (const auto& local : locals) {
    for (const auto& [v, c] : local.native_counts)
      dist[Rational(v)] += c;
    for (const auto& [v, c] : local.counts)
      dist[v] += c;
  }
  return dist;
}

Distribution brute_group_distribution(const Statistic& x, const ComputeLimits& limits) {
  const Integer order = group_order(x.n(), x.r());
  if (order > budget_of(limits))
    throw BudgetExceeded("S_{" + std::to_string(x.n()) + "," + std::to_string(x.r()) + "} has " + to_string(order) +
                         " elements, budget is " + std::to_string(limits.budget));
  std::map<Rational, unsigned long> counts;
  for_each_group_element(x.n(), x.r(), [&](const ColoredPermutation& p) { ++counts[evaluate_fast(x, p)]; });
  Distribution dist;
  for (const auto& [v, c] : counts)
    dist[v] = c;
  return dist;
}

Rational distribution_moment(const Distribution& dist, int k) {
  if (k < 0)
    throw PreconditionError("moment order must be nonnegative");
  Rational total = 0;
  Integer count = 0;
  for (const auto& [v, c] : dist) {
    Rational vk = 1;
    for (int i = 0; i < k; ++i)
      vk *= v;
    total += vk * Rational(c);
    count += c;
  }
  if (count == 0)
    throw PreconditionError("empty distribution");
  return total / Rational(count);
}

MomentResult brute_moment(const Statistic& x, const RPartition& label, int k, const ComputeLimits& limits) {
  return {distribution_moment(brute_distribution(x, label, limits), k), MomentMethod::brute, label, k};
}

Rational brute_probability(const Pcp& pcp, const RPartition& label, const ComputeLimits& limits) {
  if (pcp.n() != label.n() || pcp.r() != label.r())
    throw PreconditionError("pcp and class live in different groups");
  unsigned long hits = 0;
  unsigned long total = 0;
  for_each_in_class(
      label,
      [&](const ColoredPermutation& p) {
        ++total;
        if (satisfies(p, pcp))
          ++hits;
      },
      limits);
  return ratio(Integer(std::to_string(hits)), Integer(std::to_string(total)));
}

Rational indicator_probability(const Pcp& pcp, const RPartition& label) {
  if (pcp.n() != label.n() || pcp.r() != label.r())
    throw PreconditionError("pcp and class live in different groups");
  const int m = pcp.size();
  if (!has_no_cycles_up_to(label, m))
    throw PreconditionError("class " + format_label(label) + " has a cycle of length <= " + std::to_string(m));
  if (!is_acyclic(pcp))
    return 0;
  return acyclic_weight(label.n(), label.r(), m);
}

Rational mean_no_short_cycles(const Statistic& x) {
  const int m = x.degree_bound();
  if (m > 0 && m > x.n() - 1)
    throw PreconditionError("degree bound " + std::to_string(m) + " must be at most n - 1 = " +
                            std::to_string(x.n() - 1));
  Rational total = x.constant();
  std::vector<Rational> by_size(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& t : x.terms())
    if (is_acyclic(t.pcp))
      by_size[static_cast<std::size_t>(t.pcp.size())] += t.coeff;
  for (int s = 1; s <= m; ++s)
    if (by_size[static_cast<std::size_t>(s)] != 0)
      total += by_size[static_cast<std::size_t>(s)] * acyclic_weight(x.n(), x.r(), s);
  return total;
}

namespace {

// Terms stored back to back; the constant becomes a term with no constraints.
struct FlatTerms {
  std::vector<Constraint> data;
  std::vector<std::size_t> offset{0};
  std::vector<Rational> coeff;

  std::size_t size() const { return coeff.size(); }
  const Constraint* begin(std::size_t i) const { return data.data() + offset[i]; }
  const Constraint* end(std::size_t i) const { return data.data() + offset[i + 1]; }
};

FlatTerms flatten(const Statistic& x) {
  FlatTerms f;
  if (x.constant() != 0) {
    f.offset.push_back(0);
    f.coeff.push_back(x.constant());
  }
  for (const auto& t : x.terms()) {
    f.data.insert(f.data.end(), t.pcp.constraints().begin(), t.pcp.constraints().end());
    f.offset.push_back(f.data.size());
    f.coeff.push_back(t.coeff);
  }
  return f;
}

// Merges two sorted constraint lists into out. Returns the merged size, or -1 on a clash
// or when the union contains a directed cycle.
int merge_acyclic(const Constraint* a, const Constraint* ae, const Constraint* b, const Constraint* be,
                  std::vector<Constraint>& out, std::vector<int>& tos) {
  out.clear();
  while (a != ae || b != be) {
    if (b == be || (a != ae && *a < *b)) {
      out.push_back(*a++);
    } else if (a == ae || *b < *a) {
      out.push_back(*b++);
    } else {
      out.push_back(*a++);
      ++b;
    }
    if (out.size() > 1 && out[out.size() - 2].from == out.back().from)
      return -1;
  }
  tos.clear();
  for (const auto& c : out)
    tos.push_back(c.to);
  std::sort(tos.begin(), tos.end());
  if (std::adjacent_find(tos.begin(), tos.end()) != tos.end())
    return -1;
  auto next = [&](int v) -> int {
    auto it = std::lower_bound(out.begin(), out.end(), v, [](const Constraint& c, int x) { return c.from < x; });
    return it != out.end() && it->from == v ? it->to : 0;
  };
  for (const auto& c : out) {
    int v = c.to;
    for (std::size_t steps = 0; v != 0 && steps <= out.size(); ++steps) {
      if (v == c.from)
        return -1;
      v = next(v);
    }
  }
  return static_cast<int>(out.size());
}

__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

bool fits_int64(const Rational& q) { return q.get_den() == 1 && q.get_num().fits_slong_p(); }

} // namespace

Rational kth_moment_no_short_cycles(const Statistic& x, int k, const ComputeLimits& limits) {
  if (k < 0)
    throw PreconditionError("moment order must be nonnegative");
  if (k == 0)
    return 1;
  const int n = x.n();
  const int m = x.degree_bound();
  if (m > 0 && static_cast<long>(m) * k > n - 1)
    throw PreconditionError("m * k = " + std::to_string(m * k) + " must be at most n - 1 = " + std::to_string(n - 1));
  if (k == 1)
    return mean_no_short_cycles(x);

  const FlatTerms a = flatten(statistic_power(x, k - 1, limits.max_terms));
  const FlatTerms b = flatten(x);
  const std::size_t max_size = static_cast<std::size_t>(m) * static_cast<std::size_t>(k);

  // Exact 128-bit accumulation when every product and the running sums provably fit.
  bool integral = std::all_of(a.coeff.begin(), a.coeff.end(), fits_int64) &&
                  std::all_of(b.coeff.begin(), b.coeff.end(), fits_int64);
  if (integral) {
    Integer amax = 0;
    Integer bmax = 0;
    for (const auto& c : a.coeff)
      amax = std::max(amax, Integer(abs(c.get_num())));
    for (const auto& c : b.coeff)
      bmax = std::max(bmax, Integer(abs(c.get_num())));
    const Integer bound = amax * bmax * Integer(std::to_string(a.size())) * Integer(std::to_string(b.size()));
    integral = mpz_sizeinbase(bound.get_mpz_t(), 2) < 125;
  }

  const unsigned jobs = std::min<unsigned>(worker_count(limits), static_cast<unsigned>(std::max<std::size_t>(1, a.size())));
  std::vector<std::vector<wide_int>> wide(jobs, std::vector<wide_int>(max_size + 1, 0));
  std::vector<std::vector<Rational>> exact(jobs, std::vector<Rational>(max_size + 1, 0));
  std::vector<long> a_small;
  std::vector<long> b_small;
  if (integral) {
    for (const auto& c : a.coeff)
      a_small.push_back(c.get_num().get_si());
    for (const auto& c : b.coeff)
      b_small.push_back(c.get_num().get_si());
  }

  auto work = [&](unsigned t) {
    std::vector<Constraint> merged;
    std::vector<int> tos;
    for (std::size_t i = t; i < a.size(); i += jobs) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const int s = merge_acyclic(a.begin(i), a.end(i), b.begin(j), b.end(j), merged, tos);
        if (s < 0)
          continue;
        if (integral)
          wide[t][static_cast<std::size_t>(s)] += static_cast<wide_int>(a_small[i]) * b_small[j];
        else
          exact[t][static_cast<std::size_t>(s)] += a.coeff[i] * b.coeff[j];
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t)
      threads.emplace_back(work, t);
    for (auto& th : threads)
      th.join();
  }

  auto to_integer = [](wide_int v) {
    const bool negative = v < 0;
    wide_uint u = negative ? -static_cast<wide_uint>(v) : static_cast<wide_uint>(v);
    Integer z(static_cast<unsigned long>(u >> 64));
    z <<= 64;
    z += static_cast<unsigned long>(u & ~0UL);
    return negative ? Integer(-z) : z;
  };

  Rational total = 0;
  for (std::size_t s = 0; s <= max_size; ++s) {
    Rational sum = 0;
    for (unsigned t = 0; t < jobs; ++t)
      sum += integral ? Rational(to_integer(wide[t][s])) : exact[t][s];
    if (sum != 0)
      total += sum * acyclic_weight(n, x.r(), static_cast<int>(s));
  }
  return total;
}

Rational weighted_inversion_mean(const std::map<std::pair<int, int>, Rational>& wt, const RPartition& label) {
  require_bipartition(label);
  const long n = label.n();
  Rational alpha = 0;
  Rational beta = 0;
  for (const auto& [ij, w] : wt) {
    const auto [i, j] = ij;
    if (!(1 <= i && i < j && j <= n))
      throw PreconditionError("weight index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") needs 1 <= i < j <= n");
    alpha += w;
    beta += w * (j - i - 1);
  }
  if (n < 2)
    return 0;
  if (beta != 0 && n < 3)
    throw PreconditionError("the weighted inversion formula needs n >= 3 when beta is nonzero");
  const auto [d1, d2] = delta(label);
  const Rational nn1(n * (n - 1));
  Rational mean = alpha / 2 * (1 + Rational(d1 - d2) / nn1);
  if (beta != 0)
    mean -= beta / Rational(2 * (n - 2)) * (ratio(d1, n - 1) - Rational(d2) / nn1);
  return mean;
}

Rational mean_des_b(const RPartition& label) {
  const auto [d1, d2] = delta(label);
  (void)d1;
  const long n = label.n();
  if (n < 1)
    throw PreconditionError("des_b needs n >= 1");
  return ratio(n, 2) - ratio(d2, 2 * n);
}

Rational mean_neg(const RPartition& label) {
  const auto [d1, d2] = delta(label);
  (void)d2;
  const long n = label.n();
  return ratio(-n * (n + 1), 4) + ratio((n + 1) * d1, 4);
}

Rational mean_inv(const RPartition& label) {
  const auto [d1, d2] = delta(label);
  const long n = label.n();
  return ratio(n * (n - 1), 4) - ratio((n - 3) * d1, 12) - ratio(d2, 6);
}

Rational mean_inv_b(const RPartition& label) {
  const auto [d1, d2] = delta(label);
  const long n = label.n();
  return ratio(n * n, 2) - ratio(n * d1, 3) - ratio(d2, 6);
}

Rational closed_form_mean(NativeKind kind, const RPartition& label) {
  switch (kind) {
  case NativeKind::des_b:
    return mean_des_b(label);
  case NativeKind::inv:
    return mean_inv(label);
  case NativeKind::neg:
    return mean_neg(label);
  case NativeKind::inv_b:
    return mean_inv_b(label);
  case NativeKind::none:
    break;
  }
  throw PreconditionError("no closed form for a custom statistic");
}

Rational whole_group_mean(std::string_view name, int n) {
  const auto kind = parse_native_kind(name);
  if (!kind)
    throw PreconditionError("unknown statistic '" + std::string(name) + "'");
  const long nn = n;
  switch (*kind) {
  case NativeKind::des_b:
    return ratio(nn, 2);
  case NativeKind::inv:
    return ratio(nn * (nn - 1), 4);
  case NativeKind::neg:
    return ratio(-nn * (nn + 1), 4);
  default:
    return ratio(nn * nn, 2);
  }
}

ExactPolynomial oie_polynomial(const std::vector<Pcp>& set, int n0, int k, const OieOptions& options,
                               const ComputeLimits& limits) {
  if (k < 1)
    throw PreconditionError("moment order must be at least 1");
  if (set.empty())
    return {};
  if (!is_order_invariant_set(set))
    throw PreconditionError("the pcp set is not order-invariant");
  if (set.front().n() != n0)
    throw PreconditionError("the pcp set must live on S_{n0,r}");
  const int m = set.front().size();
  const int r = set.front().r();
  if (m == 0)
    return ExactPolynomial::constant(1);

  if (k == 1 && !options.interpolate) {
    // |A_{s,s}|: acyclic members relabeled onto their support [s].
    std::map<int, std::set<Pcp>> acyclic_by_support;
    for (const auto& pcp : set)
      if (is_acyclic(pcp)) {
        const Pcp c = compress_support(pcp);
        acyclic_by_support[c.n()].insert(c);
      }
    ExactPolynomial p;
    for (const auto& [s, members] : acyclic_by_support) {
      ExactPolynomial term = ExactPolynomial::monomial(1, 1);
      for (int t = m + 1; t <= s - 1; ++t)
        term = term * ExactPolynomial({Rational(-t), Rational(1)});
      const Rational scale =
          Rational(Integer(std::to_string(members.size()))) /
          Rational(factorial(static_cast<unsigned long>(s)) * power(r, static_cast<unsigned long>(m)));
      p += term * scale;
    }
    return p;
  }

  const int degree = m * k;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int n = degree + 1; static_cast<int>(xs.size()) < degree + 1; ++n) {
    if (std::find(options.exclude_nodes.begin(), options.exclude_nodes.end(), n) != options.exclude_nodes.end())
      continue;
    const Statistic xn = statistic_from_set(n, r, order_invariant_extension(set, n0, n));
    xs.emplace_back(n);
    ys.push_back(kth_moment_no_short_cycles(xn, k, limits));
  }
  return lagrange_interpolate(xs, ys);
}

} // namespace wreath

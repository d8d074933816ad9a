// wreath-stats: moments and distributions of statistics on conjugacy classes of S_{n,r}.

#include "wreath/classes.hpp"
#include "wreath/degree.hpp"
#include "wreath/genfunc.hpp"
#include "wreath/io.hpp"
#include "wreath/moments.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace wreath;

namespace {

constexpr int kFormatVersion = 1;

enum ExitCode { kOk = 0, kFailure = 1, kPrecondition = 2, kBudget = 3, kParse = 4 };

// One result, rendered either as a JSON envelope or as a CSV table.
struct Output {
  Json payload;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Globals {
  std::string format = "json";
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::uint64_t seed = 0;

  ComputeLimits limits() const {
    ComputeLimits l;
    l.budget = budget;
    l.jobs = jobs;
    return l;
  }
};

void emit(const std::string& command, const Json& parameters, const Output& out, const std::string& format) {
  if (format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
          s += ',';
        s += csv_field(cells[i]);
      }
      return s;
    };
    std::cout << line(out.header) << '\n';
    for (const auto& row : out.rows)
      std::cout << line(row) << '\n';
    return;
  }
  Json envelope = {{"command", command},
                   {"parameters", parameters},
                   {"format_version", kFormatVersion},
                   {"payload", out.payload}};
  std::cout << envelope.dump(2) << '\n';
}

RPartition label_arg(const std::string& text) { return parse_label(text); }

Statistic statistic_for(const std::string& name, const std::string& file, int n, int r) {
  if (!file.empty()) {
    Statistic x = load_statistic(file);
    if (x.n() != n || x.r() != r)
      throw PreconditionError("statistic file is for S_{" + std::to_string(x.n()) + "," + std::to_string(x.r()) +
                              "} but the class is in S_{" + std::to_string(n) + "," + std::to_string(r) + "}");
    return x;
  }
  if (name.empty())
    throw PreconditionError("give --stat or --stat-file");
  if (r != 2)
    throw PreconditionError("built-in statistics live on B_n (r = 2)");
  return builtin(name, n);
}

Output polynomial_output(const ExactPolynomial& p, const std::string& var) {
  Output out;
  out.payload = {{"variable", var}, {"coefficients", to_json(p)}, {"text", format_polynomial(p, var)}};
  out.header = {"exponent", "coefficient"};
  for (std::size_t e = 0; e < p.coefficients().size(); ++e)
    out.rows.push_back({std::to_string(e), to_string(p.coefficients()[e])});
  return out;
}

Output distribution_output(const Distribution& dist) {
  Output out;
  out.payload = to_json(dist);
  out.header = {"value", "count"};
  for (const auto& [v, c] : dist)
    out.rows.push_back({to_string(v), to_string(c)});
  return out;
}

MomentResult compute_moment(const Statistic& x, const RPartition& label, int k, const std::string& method,
                            const ComputeLimits& limits) {
  const int m = x.degree_bound();
  auto formula_ok = [&](std::string* why) {
    if (m > 0 && !has_no_cycles_up_to(label, m * k)) {
      if (why)
        *why = "class " + format_label(label) + " has a cycle of length <= mk = " + std::to_string(m * k);
      return false;
    }
    if (m > 0 && m * k > label.n() - 1) {
      if (why)
        *why = "mk = " + std::to_string(m * k) + " exceeds n - 1 = " + std::to_string(label.n() - 1);
      return false;
    }
    return true;
  };
  const bool closed_ok = k == 1 && x.native() != NativeKind::none && label.r() == 2;

  if (method == "brute")
    return brute_moment(x, label, k, limits);
  if (method == "closed") {
    if (!closed_ok)
      throw PreconditionError("closed forms exist only for k = 1 and the built-in statistics on B_n");
    return {closed_form_mean(x.native(), label), MomentMethod::closed_form, label, k};
  }
  if (method == "formula") {
    std::string why;
    if (!formula_ok(&why))
      throw PreconditionError(why);
    return {kth_moment_no_short_cycles(x, k, limits), MomentMethod::formula, label, k};
  }
  if (method == "genfunc") {
    if (x.native() != NativeKind::des_b)
      throw PreconditionError("the genfunc method covers des_b only");
    return {poly_moment(class_descent_poly(label), k), MomentMethod::genfunc, label, k};
  }
  // auto
  if (closed_ok)
    return {closed_form_mean(x.native(), label), MomentMethod::closed_form, label, k};
  if (formula_ok(nullptr))
    return {kth_moment_no_short_cycles(x, k, limits), MomentMethod::formula, label, k};
  return brute_moment(x, label, k, limits);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size())
        throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError("malformed integer list '" + text + "'");
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

Output clt_output(const std::vector<CltReport>& reports) {
  Output out;
  out.payload = Json::array();
  out.header = {"source", "n", "mean", "variance", "skewness", "excess_kurtosis"};
  for (const auto& r : reports) {
    out.payload.push_back(to_json(r));
    out.rows.push_back({r.source, std::to_string(r.n), to_string(r.mean), to_string(r.variance),
                        Json(r.skewness).dump(), Json(r.excess_kurtosis).dump()});
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact moments and distributions of statistics on conjugacy classes of S_{n,r}"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", g.budget, "Enumeration budget in element visits (env WREATH_STATS_BUDGET overrides)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampling");

  std::function<std::pair<Json, Output>()> run;

  int n = 0;
  int r = 2;
  int min_cycle = 0;
  auto* classes = app.add_subcommand("classes", "List conjugacy classes with centralizer orders and sizes");
  classes->add_option("--n", n)->required();
  classes->add_option("--r", r)->required();
  classes->add_option("--min-cycle", min_cycle, "Keep classes whose cycles are all longer than this");
  classes->callback([&] {
    run = [&] {
      Output out;
      out.payload = Json::array();
      out.header = {"label", "centralizer_order", "class_size"};
      for (const auto& label : enumerate_r_partitions(n, r)) {
        if (min_cycle > 0 && !has_no_cycles_up_to(label, min_cycle))
          continue;
        const auto s = summarize(label);
        out.payload.push_back({{"label", format_label(label)},
                               {"parts", to_json(label)},
                               {"centralizer_order", to_string(s.centralizer_order)},
                               {"class_size", to_string(s.class_size)}});
        out.rows.push_back({format_label(label), to_string(s.centralizer_order), to_string(s.class_size)});
      }
      return std::pair{Json{{"n", n}, {"r", r}, {"min_cycle", min_cycle}}, out};
    };
  });

  std::string stat;
  std::string stat_file;
  std::string class_text;
  bool whole_group = false;
  auto* dist = app.add_subcommand("dist", "Exact value distribution of a statistic on a class or the whole group");
  dist->add_option("--stat", stat, "Built-in statistic: des_b, inv, neg, inv_b");
  dist->add_option("--stat-file", stat_file, "Statistic JSON file");
  dist->add_option("--class", class_text, "Class label such as \"3,1;2\"");
  dist->add_flag("--group", whole_group, "Use all of S_{n,r}");
  dist->add_option("--n", n, "Degree when --group is given");
  dist->add_option("--r", r, "Colors when --group is given");
  dist->callback([&] {
    run = [&] {
      Json params = {{"stat", stat.empty() ? stat_file : stat}};
      Distribution d;
      if (whole_group) {
        params["group"] = {{"n", n}, {"r", r}};
        d = brute_group_distribution(statistic_for(stat, stat_file, n, r), g.limits());
      } else {
        if (class_text.empty())
          throw PreconditionError("give --class or --group");
        const auto label = label_arg(class_text);
        params["class"] = format_label(label);
        d = brute_distribution(statistic_for(stat, stat_file, label.n(), label.r()), label, g.limits());
      }
      return std::pair{params, distribution_output(d)};
    };
  });

  int k = 1;
  std::string method = "auto";
  auto* moment = app.add_subcommand("moment", "k-th moment of a statistic on a class");
  moment->add_option("--stat", stat);
  moment->add_option("--stat-file", stat_file);
  moment->add_option("--class", class_text)->required();
  moment->add_option("--k", k)->check(CLI::NonNegativeNumber);
  moment->add_option("--method", method)->check(CLI::IsMember({"brute", "formula", "closed", "genfunc", "auto"}));
  moment->callback([&] {
    run = [&] {
      const auto label = label_arg(class_text);
      const auto x = statistic_for(stat, stat_file, label.n(), label.r());
      const auto result = compute_moment(x, label, k, method, g.limits());
      Output out;
      out.payload = to_json(result);
      out.header = {"class", "stat", "k", "method", "value"};
      const std::string stat_name = stat.empty() ? stat_file : stat;
      out.payload["stat"] = stat_name;
      out.rows.push_back({format_label(label), stat_name, std::to_string(k), method_name(result.method),
                          to_string(result.value)});
      return std::pair{Json{{"stat", stat_name}, {"class", format_label(label)}, {"k", k}, {"method", method}}, out};
    };
  });

  auto* genfunc = app.add_subcommand("genfunc", "Descent generating polynomial of B_n or of a class");
  genfunc->add_option("--n", n, "Whole group B_n");
  genfunc->add_option("--class", class_text, "Class label");
  genfunc->callback([&] {
    run = [&] {
      if (!class_text.empty()) {
        const auto label = label_arg(class_text);
        return std::pair{Json{{"class", format_label(label)}}, polynomial_output(class_descent_poly(label), "t")};
      }
      if (genfunc->count("--n") == 0)
        throw PreconditionError("give --n or --class");
      return std::pair{Json{{"n", n}}, polynomial_output(group_descent_poly(n), "t")};
    };
  });

  int d = 0;
  auto* dcount = app.add_subcommand("descent-count", "Class elements with d - 1 descents");
  dcount->add_option("--class", class_text)->required();
  dcount->add_option("--d", d, "Omit to list every d");
  dcount->callback([&] {
    run = [&] {
      const auto label = label_arg(class_text);
      Output out;
      out.payload = Json::array();
      out.header = {"d", "count"};
      std::vector<int> ds;
      if (dcount->count("--d"))
        ds.push_back(d);
      else
        for (int e = 1; e <= label.n() + 1; ++e)
          ds.push_back(e);
      for (int e : ds) {
        const auto c = descent_count(label, e);
        out.payload.push_back({{"d", e}, {"count", to_string(c)}});
        out.rows.push_back({std::to_string(e), to_string(c)});
      }
      Json params = {{"class", format_label(label)}};
      if (dcount->count("--d"))
        params["d"] = d;
      return std::pair{params, out};
    };
  });

  std::string n_list;
  std::vector<std::string> class_list;
  auto* clt = app.add_subcommand("clt", "Exact mean, variance and standardized moments of des_b");
  clt->add_option("--n-list", n_list, "Comma-separated degrees for whole groups");
  clt->add_option("--class-list", class_list, "Class labels")->expected(1, -1);
  clt->callback([&] {
    run = [&] {
      std::vector<CltReport> reports;
      Json params = Json::object();
      if (!n_list.empty()) {
        params["n_list"] = parse_int_list(n_list);
        for (int m : parse_int_list(n_list))
          reports.push_back(clt_report_group(m));
      }
      if (!class_list.empty()) {
        params["class_list"] = class_list;
        for (const auto& c : class_list)
          reports.push_back(clt_report_class(label_arg(c)));
      }
      if (reports.empty())
        throw PreconditionError("give --n-list or --class-list");
      return std::pair{params, clt_output(reports)};
    };
  });

  int m = 1;
  auto* degree = app.add_subcommand("degree", "Does a statistic lie in the span of indicators of size <= m?");
  degree->add_option("--stat", stat);
  degree->add_option("--stat-file", stat_file);
  degree->add_option("--n", n, "Degree for built-in statistics");
  degree->add_option("--m", m)->required();
  degree->callback([&] {
    run = [&] {
      const Statistic x = stat_file.empty() ? statistic_for(stat, "", n, 2) : load_statistic(stat_file);
      const auto cert = in_degree_span(x, m, g.limits());
      Output out;
      out.payload = {{"in_span", cert.in_span},
                     {"rows", cert.rows},
                     {"columns", cert.columns},
                     {"rank", cert.rank}};
      out.header = {"in_span", "rows", "columns", "rank", "certificate_size"};
      if (cert.in_span) {
        out.payload["decomposition"] = to_json(cert.decomposition);
      } else {
        Json w = Json::array();
        for (std::size_t i = 0; i < cert.witness_elements.size(); ++i)
          w.push_back({{"element", format_permutation(cert.witness_elements[i])},
                       {"weight", to_string(cert.witness_weights[i])}});
        out.payload["witness"] = std::move(w);
      }
      const std::size_t cert_size = cert.in_span ? cert.decomposition.terms().size() : cert.witness_elements.size();
      out.rows.push_back({cert.in_span ? "true" : "false", std::to_string(cert.rows), std::to_string(cert.columns),
                          std::to_string(cert.rank), std::to_string(cert_size)});
      return std::pair{Json{{"stat", stat.empty() ? stat_file : stat}, {"n", x.n()}, {"m", m}}, out};
    };
  });

  std::string pcp_file;
  std::string oie_builtin;
  int n0 = 0;
  std::string exclude;
  auto* oie = app.add_subcommand("oie", "Polynomial in n for moments of an order-invariant extension");
  oie->add_option("--file", pcp_file, "Statistic JSON whose terms (coefficient 1) form the pcp set");
  oie->add_option("--builtin", oie_builtin, "inv: the inversion set on B_{n0}");
  oie->add_option("--n0", n0, "Base degree for --builtin");
  oie->add_option("--k", k)->check(CLI::PositiveNumber);
  oie->add_option("--exclude", exclude, "Comma-separated degrees never used as interpolation nodes");
  oie->callback([&] {
    run = [&] {
      Statistic base;
      Json params = {{"k", k}};
      if (!pcp_file.empty()) {
        base = load_statistic(pcp_file);
        params["file"] = pcp_file;
      } else if (oie_builtin == "inv") {
        base = builtin_inv(n0);
        params["builtin"] = "inv";
      } else {
        throw PreconditionError("give --file or --builtin inv");
      }
      if (base.constant() != 0)
        throw PreconditionError("an order-invariant statistic has no constant term");
      std::vector<Pcp> set;
      for (const auto& t : base.terms()) {
        if (t.coeff != 1)
          throw PreconditionError("an order-invariant statistic has all coefficients equal to 1");
        set.push_back(t.pcp);
      }
      params["n0"] = base.n();
      OieOptions options;
      if (!exclude.empty()) {
        options.exclude_nodes = parse_int_list(exclude);
        params["exclude"] = options.exclude_nodes;
      }
      return std::pair{params, polynomial_output(oie_polynomial(set, base.n(), k, options, g.limits()), "n")};
    };
  });

  int count = 1;
  auto* sample = app.add_subcommand("sample", "Uniform random elements of a class");
  sample->add_option("--class", class_text)->required();
  sample->add_option("--count", count)->check(CLI::PositiveNumber);
  sample->callback([&] {
    run = [&] {
      const auto label = label_arg(class_text);
      Output out;
      out.payload = Json::array();
      out.header = {"index", "element", "cycles"};
      for (int i = 0; i < count; ++i) {
        const auto p = sample_uniform(label, g.seed + static_cast<std::uint64_t>(i));
        out.payload.push_back({{"index", i}, {"element", format_permutation(p)}, {"cycles", format_cycles(p)}});
        out.rows.push_back({std::to_string(i), format_permutation(p), format_cycles(p)});
      }
      return std::pair{Json{{"class", format_label(label)}, {"count", count}, {"seed", g.seed}}, out};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  }

  if (const char* env = std::getenv("WREATH_STATS_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "parse error: WREATH_STATS_BUDGET must be a nonnegative integer\n";
      return kParse;
    }
  }

  try {
    auto [params, out] = run();
    std::string command = app.get_subcommands().front()->get_name();
    emit(command, params, out, g.format);
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}

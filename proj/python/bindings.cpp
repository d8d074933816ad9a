#include "wreath/classes.hpp"
#include "wreath/degree.hpp"
#include "wreath/genfunc.hpp"
#include "wreath/io.hpp"
#include "wreath/moments.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wreath;

namespace {

py::object to_py(const Integer& z) { return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10)); }

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

py::list to_py(const ExactPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients())
    out.append(to_py(c));
  return out;
}

RPartition label(const std::string& text) { return parse_label(text); }

ComputeLimits limits(unsigned jobs, std::uint64_t budget) {
  ComputeLimits l;
  l.jobs = jobs;
  l.budget = budget;
  return l;
}

} // namespace

PYBIND11_MODULE(_wreath_stats, m) {
  m.doc() = "Exact statistics on conjugacy classes of colored permutation groups";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ColoredPermutation>(m, "ColoredPermutation")
      .def(py::init<std::vector<int>, std::vector<int>, int>(), py::arg("image"), py::arg("color_of_value"),
           py::arg("r"))
      .def_static("identity", &ColoredPermutation::identity, py::arg("n"), py::arg("r"))
      .def_static("from_signed", [](const std::vector<int>& w) { return ColoredPermutation::from_signed(w); })
      .def_static("parse", &parse_permutation, py::arg("text"), py::arg("r"))
      .def_property_readonly("n", &ColoredPermutation::n)
      .def_property_readonly("r", &ColoredPermutation::r)
      .def("image", &ColoredPermutation::image)
      .def("color_of", &ColoredPermutation::color_of)
      .def("apply", &ColoredPermutation::apply)
      .def("signed_word", &ColoredPermutation::signed_word)
      .def("cycles", &format_cycles)
      .def("cycle_type", [](const ColoredPermutation& p) { return format_label(cycle_type(p)); })
      .def("__eq__", [](const ColoredPermutation& a, const ColoredPermutation& b) { return a == b; })
      .def("__hash__", [](const ColoredPermutation& p) { return py::hash(py::str(format_colored(p))); })
      .def("__repr__", [](const ColoredPermutation& p) { return "ColoredPermutation(" + format_permutation(p) + ")"; })
      .def("__str__", &format_permutation);

  m.def("compose", &compose, "Apply b first, then a", py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse);
  m.def("conjugate", &conjugate, "g p g^-1", py::arg("p"), py::arg("g"));

  m.def("classes", [](int n, int r) {
    py::list out;
    for (const auto& l : enumerate_r_partitions(n, r))
      out.append(format_label(l));
    return out;
  });
  m.def("class_size", [](const std::string& l) { return to_py(class_size(label(l))); });
  m.def("centralizer_order", [](const std::string& l) { return to_py(centralizer_order(label(l))); });
  m.def("enumerate_class", [](const std::string& l) { return enumerate_class(label(l)); });
  m.def("sample_uniform", [](const std::string& l, std::uint64_t seed) { return sample_uniform(label(l), seed); },
        py::arg("label"), py::arg("seed"));

  py::class_<Statistic>(m, "Statistic")
      .def_property_readonly("n", &Statistic::n)
      .def_property_readonly("r", &Statistic::r)
      .def_property_readonly("degree_bound", &Statistic::degree_bound)
      .def_property_readonly("num_terms", [](const Statistic& x) { return x.terms().size(); })
      .def("__call__", [](const Statistic& x, const ColoredPermutation& p) { return to_py(evaluate_fast(x, p)); })
      .def("to_json", [](const Statistic& x) { return to_json(x).dump(); });

  m.def("builtin", &builtin, "des_b, inv, neg or inv_b on B_n", py::arg("name"), py::arg("n"));
  m.def("statistic_from_json", [](const std::string& text) { return statistic_from_json(parse_json(text)); });
  m.def("multiply", [](const Statistic& x, const Statistic& y) { return multiply(x, y); });
  m.def("evaluate", [](const Statistic& x, const ColoredPermutation& p) { return to_py(evaluate(x, p)); });

  m.def(
      "brute_moment",
      [](const Statistic& x, const std::string& l, int k, unsigned jobs, std::uint64_t budget) {
        return to_py(brute_moment(x, label(l), k, limits(jobs, budget)).value);
      },
      py::arg("stat"), py::arg("label"), py::arg("k") = 1, py::arg("jobs") = 1, py::arg("budget") = kDefaultBudget);
  m.def("brute_distribution", [](const Statistic& x, const std::string& l) {
    py::dict out;
    for (const auto& [v, c] : brute_distribution(x, label(l)))
      out[to_py(v)] = to_py(c);
    return out;
  });
  m.def("closed_form_mean", [](const std::string& name, const std::string& l) {
    const auto kind = parse_native_kind(name);
    if (!kind)
      throw PreconditionError("unknown statistic '" + name + "'");
    return to_py(closed_form_mean(*kind, label(l)));
  });
  m.def("whole_group_mean", [](const std::string& name, int n) { return to_py(whole_group_mean(name, n)); });
  m.def(
      "kth_moment_no_short_cycles",
      [](const Statistic& x, int k, unsigned jobs) { return to_py(kth_moment_no_short_cycles(x, k, limits(jobs, kDefaultBudget))); },
      py::arg("stat"), py::arg("k"), py::arg("jobs") = 1);
  m.def("in_degree_span", [](const Statistic& x, int m_) { return in_degree_span(x, m_).in_span; });
  m.def(
      "oie_inv_polynomial",
      [](int n0, int k, std::vector<int> exclude) {
        const auto inv = builtin_inv(n0);
        std::vector<Pcp> set;
        for (const auto& t : inv.terms())
          set.push_back(t.pcp);
        OieOptions options;
        options.exclude_nodes = std::move(exclude);
        return to_py(oie_polynomial(set, n0, k, options));
      },
      "Coefficients of p(n) for the inversion extension from B_{n0}", py::arg("n0"), py::arg("k"),
      py::arg("exclude") = std::vector<int>{});

  m.def("mobius", &mobius);
  m.def("necklace_count", [](long q, long m_) { return to_py(necklace_count(q, m_)); });
  m.def("group_descent_poly", [](int n) { return to_py(group_descent_poly(n)); });
  m.def("class_descent_poly", [](const std::string& l) { return to_py(class_descent_poly(label(l))); });
  m.def("descent_count", [](const std::string& l, int d) { return to_py(descent_count(label(l), d)); });
  m.def("clt_report", [](int n) {
    const auto r = clt_report_group(n);
    py::dict out;
    out["n"] = r.n;
    out["mean"] = to_py(r.mean);
    out["variance"] = to_py(r.variance);
    out["skewness"] = r.skewness;
    out["excess_kurtosis"] = r.excess_kurtosis;
    return out;
  });
}

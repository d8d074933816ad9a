#include "wreath/io.hpp"

#include <fstream>
#include <sstream>

namespace wreath {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RPartition& label) {
  Json out = Json::array();
  for (const auto& component : label.components())
    out.push_back(component);
  return out;
}

Json to_json(const ExactPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients())
    out.push_back(to_string(c));
  return out;
}

Json to_json(const Pcp& pcp) {
  Json out = Json::array();
  for (const auto& c : pcp.constraints())
    out.push_back({c.from, c.to, c.color});
  return out;
}

Json to_json(const Statistic& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms())
    terms.push_back({{"coeff", to_string(t.coeff)}, {"constraints", to_json(t.pcp)}});
  return {{"n", x.n()}, {"r", x.r()}, {"constant", to_string(x.constant())}, {"terms", std::move(terms)}};
}

Json to_json(const MomentResult& m) {
  return {{"class", format_label(m.class_label)},
          {"k", m.k},
          {"method", method_name(m.method)},
          {"value", to_string(m.value)}};
}

Json to_json(const CltReport& report) {
  return {{"source", report.source},
          {"n", report.n},
          {"mean", to_string(report.mean)},
          {"variance", to_string(report.variance)},
          {"skewness", report.skewness},
          {"excess_kurtosis", report.excess_kurtosis}};
}

Json to_json(const Distribution& dist) {
  Json out = Json::array();
  for (const auto& [v, c] : dist)
    out.push_back({{"value", to_string(v)}, {"count", to_string(c)}});
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

RPartition label_from_json(const Json& j) {
  if (j.is_string())
    return parse_label(j.get<std::string>());
  if (!j.is_array() || j.empty())
    throw ParseError("class label must be a nonempty array of arrays");
  std::vector<std::vector<int>> parts;
  for (const auto& component : j) {
    if (!component.is_array())
      throw ParseError("class label component must be an array");
    std::vector<int> c;
    for (const auto& part : component) {
      if (!part.is_number_integer() || part.get<long>() < 1)
        throw ParseError("class label parts must be positive integers");
      c.push_back(part.get<int>());
    }
    parts.push_back(std::move(c));
  }
  const int r = static_cast<int>(parts.size());
  return RPartition(r, std::move(parts));
}

Statistic statistic_from_json(const Json& j) {
  try {
    if (!j.is_object())
      throw ParseError("statistic must be a JSON object");
    const int n = j.at("n").get<int>();
    const int r = j.value("r", 2);
    const Rational constant = j.contains("constant") ? rational_from_json(j.at("constant")) : Rational(0);
    std::vector<Term> terms;
    for (const auto& t : j.value("terms", Json::array())) {
      const Rational coeff = t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1);
      std::vector<Constraint> cs;
      for (const auto& c : t.at("constraints")) {
        if (!c.is_array())
          throw ParseError("constraint must be an array");
        if (c.size() == 3) {
          cs.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
        } else if (c.size() == 2 && r == 2) {
          const int v = c[1].get<int>();
          if (v == 0)
            throw ParseError("signed image 0 is not allowed");
          cs.push_back({c[0].get<int>(), std::abs(v), v < 0 ? 1 : 0});
        } else {
          throw ParseError("constraint must be [i, j, c] (or [i, +-j] when r = 2), got " + c.dump());
        }
      }
      terms.push_back({coeff, Pcp(n, r, std::move(cs))});
    }
    return Statistic(n, r, constant, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed statistic JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid statistic: ") + e.what());
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Statistic load_statistic(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return statistic_from_json(parse_json(buffer.str()));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

} // namespace wreath

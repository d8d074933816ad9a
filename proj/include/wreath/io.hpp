#ifndef WREATH_IO_HPP
#define WREATH_IO_HPP

#include "wreath/genfunc.hpp"
#include "wreath/moments.hpp"
#include "wreath/polynomial.hpp"
#include "wreath/rpartition.hpp"
#include "wreath/statistic.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace wreath {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings ("p" when q = 1).
Json to_json(const Rational& q);
Json to_json(const RPartition& label);
Json to_json(const ExactPolynomial& p);
Json to_json(const Pcp& pcp);
Json to_json(const Statistic& x);
Json to_json(const MomentResult& m);
Json to_json(const CltReport& report);
Json to_json(const Distribution& dist);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

/// Array of arrays of positive integers, one per color.
RPartition label_from_json(const Json& j);

/// {n, r, constant, terms: [{coeff, constraints: [[i,j,c], ...]}]}. For r = 2 a
/// constraint may also be written [i, +-j].
Statistic statistic_from_json(const Json& j);

Statistic load_statistic(const std::string& path);

Json parse_json(std::string_view text);

/// Quotes a CSV field when it contains a separator, a quote or a newline.
std::string csv_field(const std::string& s);

} // namespace wreath

#endif // WREATH_IO_HPP

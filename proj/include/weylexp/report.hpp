#pragma once

// Serialization of reports: JSON (schema 1, round-trippable), CSV and an
// aligned plain-text table.

#include <string>
#include <vector>

#include <json.hpp>

#include "weylexp/exponents.hpp"
#include "weylexp/verify.hpp"

namespace weylexp {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones strings.
Json int_to_json(const Int &x);
Int int_from_json(const Json &j);

/// {"a": .., "b": .., "display": "a+b*tau"}
Json golden_to_json(const GoldenInt &x);
GoldenInt golden_from_json(const Json &j);

Json kind_to_json(const RootSystemKind &kind);
RootSystemKind kind_from_json(const Json &j);

Json to_json(const ExponentReport &r, bool with_timings = false);
ExponentReport exponent_report_from_json(const Json &j);

Json to_json(const H2Report &r);
H2Report h2_report_from_json(const Json &j);

Json to_json(const TorsionBounds &t);
TorsionBounds torsion_bounds_from_json(const Json &j);

Json to_json(const CheckResult &c);

/// Rows of the exponent table: kind, tau_2..tau_4, Dynkin indices, gcd,
/// torsion bounds, CH^4 constants.
std::string render_table(const std::vector<ExponentReport> &reports,
                         const std::vector<H2Report> &h2 = {});
std::string render_csv(const std::vector<ExponentReport> &reports,
                       const std::vector<H2Report> &h2 = {});

/// Left-aligned columns separated by two spaces.
std::string align_columns(const std::vector<std::vector<std::string>> &rows);
std::string csv_line(const std::vector<std::string> &cells);

} // namespace weylexp

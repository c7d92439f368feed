#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kirchhoff1d/analysis.hpp"
#include "kirchhoff1d/calculus.hpp"
#include "kirchhoff1d/problem.hpp"
#include "kirchhoff1d/properties.hpp"
#include "kirchhoff1d/solver.hpp"

namespace kirchhoff1d {

using json = nlohmann::json;

/// Full-precision decimal rendering (17 significant digits, round-trips bit-exactly).
std::string format_full(double v);

json field_to_json(const ExponentField& field);
ExponentField field_from_json(const json& j);

json kirchhoff_to_json(const KirchhoffFunction& M);
KirchhoffFunction kirchhoff_from_json(const json& j);

json spec_to_json(const ProblemSpec& spec);
ProblemSpec spec_from_json(const json& j);

json options_to_json(const SolverOptions& opts);
SolverOptions options_from_json(const json& j);

json exponent_report_to_json(const ExponentReport& report);
json rate_fit_to_json(const RateFit& fit);
json order_report_to_json(const OrderReport& report);
json stability_report_to_json(const StabilityReport& report);
json profile_meta_to_json(const SolutionProfile& profile, const SolverOptions& opts);

/// CSV with header `x,u`, one row per node, 17 significant digits.
void write_profile_csv(const std::string& path, const DiscreteFunction& u);
DiscreteFunction read_profile_csv(const std::string& path);

/// Generic numeric CSV with a header row.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);
std::pair<std::vector<std::string>, std::vector<std::vector<double>>> read_table_csv(
    const std::string& path);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace kirchhoff1d

#include "kirchhoff1d/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kirchhoff1d {

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json field_to_json(const ExponentField& field) {
  switch (field.kind) {
    case ExponentField::Kind::Constant:
      return {{"kind", "constant"}, {"value", field.c0}};
    case ExponentField::Kind::Sinusoidal:
      return {{"kind", "sinusoidal"}, {"base", field.c0}, {"amplitude", field.c1}};
    case ExponentField::Kind::Affine:
      return {{"kind", "affine"}, {"a", field.c0}, {"b", field.c1}};
    case ExponentField::Kind::Tabulated:
      return {{"kind", "tabulated"}, {"nodes", field.nodes}, {"values", field.values}};
  }
  throw std::logic_error("unreachable field kind");
}

ExponentField field_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ExponentField::constant(j.at("value").get<double>());
  if (kind == "sinusoidal")
    return ExponentField::sinusoidal(j.at("base").get<double>(),
                                     j.at("amplitude").get<double>());
  if (kind == "affine")
    return ExponentField::affine(j.at("a").get<double>(), j.at("b").get<double>());
  if (kind == "tabulated")
    return ExponentField::tabulated(j.at("nodes").get<std::vector<double>>(),
                                    j.at("values").get<std::vector<double>>());
  throw std::invalid_argument("unknown field kind: " + kind);
}

json kirchhoff_to_json(const KirchhoffFunction& M) {
  switch (M.kind) {
    case KirchhoffFunction::Kind::Constant:
      return {{"kind", "constant"}, {"value", M.c}};
    case KirchhoffFunction::Kind::AffineSqrt:
      return {{"kind", "affine_sqrt"}, {"coefficient", M.c}};
    case KirchhoffFunction::Kind::Polynomial:
      return {{"kind", "polynomial"}, {"coefficients", M.coefficients}};
  }
  throw std::logic_error("unreachable Kirchhoff kind");
}

KirchhoffFunction kirchhoff_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return KirchhoffFunction::constant(j.at("value").get<double>());
  if (kind == "affine_sqrt")
    return KirchhoffFunction::affine_sqrt(j.at("coefficient").get<double>());
  if (kind == "polynomial")
    return KirchhoffFunction::polynomial(j.at("coefficients").get<std::vector<double>>());
  throw std::invalid_argument("unknown Kirchhoff kind: " + kind);
}

json spec_to_json(const ProblemSpec& spec) {
  json j{{"p", field_to_json(spec.p)},
         {"alpha", spec.alpha},
         {"beta", spec.beta},
         {"lambda", spec.lambda},
         {"theta", spec.theta},
         {"f", field_to_json(spec.f)},
         {"M", kirchhoff_to_json(spec.M_p)}};
  if (spec.q) j["q"] = field_to_json(*spec.q);
  if (spec.M_q) j["M_q"] = kirchhoff_to_json(*spec.M_q);
  return j;
}

ProblemSpec spec_from_json(const json& j) {
  ProblemSpec spec = default_spec();
  if (j.contains("p")) spec.p = field_from_json(j.at("p"));
  if (j.contains("q") && !j.at("q").is_null()) spec.q = field_from_json(j.at("q"));
  if (j.contains("alpha")) spec.alpha = j.at("alpha").get<double>();
  if (j.contains("beta")) spec.beta = j.at("beta").get<double>();
  if (j.contains("lambda")) spec.lambda = j.at("lambda").get<double>();
  if (j.contains("theta")) spec.theta = j.at("theta").get<double>();
  if (j.contains("f")) spec.f = field_from_json(j.at("f"));
  if (j.contains("M")) spec.M_p = kirchhoff_from_json(j.at("M"));
  if (j.contains("M_q") && !j.at("M_q").is_null())
    spec.M_q = kirchhoff_from_json(j.at("M_q"));
  return spec;
}

json options_to_json(const SolverOptions& opts) {
  return {{"newton_tol", opts.newton_tol},
          {"newton_max_iter", opts.newton_max_iter},
          {"newton_min_step", opts.newton_min_step},
          {"picard_tol", opts.picard_tol},
          {"picard_max_iter", opts.picard_max_iter},
          {"picard_relaxation", opts.picard_relaxation},
          {"delta_flux", opts.delta_flux},
          {"positivity_floor", opts.positivity_floor}};
}

SolverOptions options_from_json(const json& j) {
  SolverOptions opts;
  if (j.contains("newton_tol")) opts.newton_tol = j.at("newton_tol").get<double>();
  if (j.contains("newton_max_iter")) opts.newton_max_iter = j.at("newton_max_iter").get<int>();
  if (j.contains("newton_min_step")) opts.newton_min_step = j.at("newton_min_step").get<double>();
  if (j.contains("picard_tol")) opts.picard_tol = j.at("picard_tol").get<double>();
  if (j.contains("picard_max_iter")) opts.picard_max_iter = j.at("picard_max_iter").get<int>();
  if (j.contains("picard_relaxation"))
    opts.picard_relaxation = j.at("picard_relaxation").get<double>();
  if (j.contains("delta_flux")) opts.delta_flux = j.at("delta_flux").get<double>();
  if (j.contains("positivity_floor"))
    opts.positivity_floor = j.at("positivity_floor").get<double>();
  return opts;
}

json exponent_report_to_json(const ExponentReport& report) {
  json j{{"mu1", report.mu1},
         {"blow_up", report.blow_up},
         {"gamma_holder", report.gamma_holder},
         {"p_min", report.p_min},
         {"p_max", report.p_max},
         {"alpha", report.alpha},
         {"alpha_f", report.alpha_f}};
  j["mu2"] = report.mu2 ? json(*report.mu2) : json();
  j["gamma_rate"] = report.gamma_rate ? json(*report.gamma_rate) : json();
  j["gamma_rate_applicable"] = report.gamma_rate.has_value();
  if (report.q_min) j["q_min"] = *report.q_min;
  if (report.q_max) j["q_max"] = *report.q_max;
  return j;
}

json rate_fit_to_json(const RateFit& fit) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"r_squared", fit.r_squared},
          {"n_points", fit.n_points}};
}

json order_report_to_json(const OrderReport& report) {
  return {{"holds", report.holds},
          {"max_violation", report.max_violation},
          {"worst_node", report.worst_node},
          {"tolerance", report.tolerance}};
}

json stability_report_to_json(const StabilityReport& report) {
  return {{"data_distance", report.data_distance},
          {"solution_distance", report.solution_distance},
          {"ratio", report.ratio}};
}

json profile_meta_to_json(const SolutionProfile& profile, const SolverOptions& opts) {
  json j{{"eps", profile.eps},
         {"K_p", profile.K_p},
         {"picard_iters", profile.picard_iters},
         {"final_residual_norm", profile.final_residual_norm},
         {"converged", profile.converged},
         {"options", options_to_json(opts)}};
  if (profile.K_q) j["K_q"] = *profile.K_q;
  return j;
}

void write_profile_csv(const std::string& path, const DiscreteFunction& u) {
  std::vector<std::vector<double>> rows;
  rows.reserve(u.size());
  for (int i = 0; i < u.size(); ++i)
    rows.push_back({u.grid.node(i), u[i]});
  write_table_csv(path, {"x", "u"}, rows);
}

DiscreteFunction read_profile_csv(const std::string& path) {
  auto [header, rows] = read_table_csv(path);
  if (header.size() != 2 || header[0] != "x" || header[1] != "u")
    throw std::invalid_argument("profile CSV must carry header x,u: " + path);
  if (rows.size() < 5) throw std::invalid_argument("profile CSV too short: " + path);
  Grid grid(int(rows.size()) - 1);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(row.at(1));
  return DiscreteFunction(grid, std::move(values));
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 == header.size() ? "\n" : ",");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << format_full(row[i]) << (i + 1 == row.size() ? "\n" : ",");
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>> read_table_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw std::invalid_argument("malformed numeric cell '" + cell + "' in " + path);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return {header, rows};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return json::parse(in);
}

}  // namespace kirchhoff1d

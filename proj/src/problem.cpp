#include "kirchhoff1d/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kirchhoff1d {

ExponentField ExponentField::constant(double value) {
  ExponentField field;
  field.kind = Kind::Constant;
  field.c0 = value;
  return field;
}

ExponentField ExponentField::sinusoidal(double base, double amplitude) {
  ExponentField field;
  field.kind = Kind::Sinusoidal;
  field.c0 = base;
  field.c1 = amplitude;
  return field;
}

ExponentField ExponentField::affine(double offset, double slope) {
  ExponentField field;
  field.kind = Kind::Affine;
  field.c0 = offset;
  field.c1 = slope;
  return field;
}

ExponentField ExponentField::tabulated(std::vector<double> nodes, std::vector<double> values) {
  if (nodes.size() < 2 || nodes.size() != values.size())
    throw std::invalid_argument("tabulated field needs matching node/value lists of size >= 2");
  if (nodes.front() != 0.0 || nodes.back() != 1.0)
    throw std::invalid_argument("tabulated nodes must cover [0,1]");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i] > nodes[i - 1]))
      throw std::invalid_argument("tabulated nodes must be strictly increasing");
  ExponentField field;
  field.kind = Kind::Tabulated;
  field.nodes = std::move(nodes);
  field.values = std::move(values);
  return field;
}

double ExponentField::eval(double x) const {
  if (x < 0.0 || x > 1.0) throw std::domain_error("field evaluation outside [0,1]");
  switch (kind) {
    case Kind::Constant:
      return c0;
    case Kind::Sinusoidal:
      return c0 + c1 * std::sin(M_PI * x);
    case Kind::Affine:
      return c0 + c1 * x;
    case Kind::Tabulated: {
      auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
      std::size_t j = (it == nodes.begin()) ? 0 : std::size_t(it - nodes.begin()) - 1;
      if (j >= nodes.size() - 1) j = nodes.size() - 2;
      double t = (x - nodes[j]) / (nodes[j + 1] - nodes[j]);
      return (1.0 - t) * values[j] + t * values[j + 1];
    }
  }
  throw std::logic_error("unreachable field kind");
}

ExponentField ExponentField::shifted(double c) const {
  ExponentField out = *this;
  switch (kind) {
    case Kind::Constant:
    case Kind::Sinusoidal:
    case Kind::Affine:
      out.c0 += c;
      break;
    case Kind::Tabulated:
      for (double& v : out.values) v += c;
      break;
  }
  return out;
}

FieldBounds field_bounds(const ExponentField& field, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("field_bounds needs at least 2 samples");
  FieldBounds b{field.eval(0.0), field.eval(0.0)};
  for (int i = 1; i < n_samples; ++i) {
    double v = field.eval(double(i) / (n_samples - 1));
    b.min = std::min(b.min, v);
    b.max = std::max(b.max, v);
  }
  return b;
}

KirchhoffFunction KirchhoffFunction::constant(double m) {
  KirchhoffFunction M;
  M.kind = Kind::Constant;
  M.c = m;
  return M;
}

KirchhoffFunction KirchhoffFunction::affine_sqrt(double coefficient) {
  KirchhoffFunction M;
  M.kind = Kind::AffineSqrt;
  M.c = coefficient;
  return M;
}

KirchhoffFunction KirchhoffFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty())
    throw std::invalid_argument("polynomial Kirchhoff function needs coefficients");
  KirchhoffFunction M;
  M.kind = Kind::Polynomial;
  M.coefficients = std::move(coefficients);
  return M;
}

double KirchhoffFunction::value(double t) const {
  if (t < 0.0) throw std::domain_error("Kirchhoff function evaluated at negative argument");
  switch (kind) {
    case Kind::Constant:
      return c;
    case Kind::AffineSqrt:
      return 1.0 + c * std::sqrt(t);
    case Kind::Polynomial: {
      double s = std::sqrt(t), acc = 0.0, pw = 1.0;
      for (double ck : coefficients) {
        acc += ck * pw;
        pw *= s;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable Kirchhoff kind");
}

double KirchhoffFunction::antiderivative(double t) const {
  if (t < 0.0) throw std::domain_error("Kirchhoff antiderivative evaluated at negative argument");
  switch (kind) {
    case Kind::Constant:
      return c * t;
    case Kind::AffineSqrt:
      return t + (2.0 * c / 3.0) * t * std::sqrt(t);
    case Kind::Polynomial: {
      // integral of c_k s^k with s = sqrt(tau): sum 2 c_k t^{(k+2)/2} / (k+2)
      double s = std::sqrt(t), acc = 0.0, pw = t;  // pw = s^{k+2}, starting at k = 0
      for (std::size_t k = 0; k < coefficients.size(); ++k) {
        acc += 2.0 * coefficients[k] * pw / double(k + 2);
        pw *= s;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable Kirchhoff kind");
}

ProblemSpec default_spec() {
  ProblemSpec spec;
  const int cells = 2000;
  std::vector<double> nodes(cells + 1), values(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    double x = double(i) / cells;
    nodes[i] = x;
    values[i] = 1.0 + x * (1.0 - x);
  }
  spec.f = ExponentField::tabulated(std::move(nodes), std::move(values));
  return spec;
}

namespace {

void check_kirchhoff(const KirchhoffFunction& M, const std::string& label,
                     std::vector<Violation>& violations) {
  const double t_max = 10.0;
  const int n = 101;
  double prev = M.value(0.0);
  bool positive = prev > 0.0, monotone = true;
  for (int i = 1; i < n; ++i) {
    double v = M.value(t_max * i / (n - 1));
    positive = positive && v > 0.0;
    monotone = monotone && v + 1e-12 >= prev;
    prev = v;
  }
  if (!positive)
    violations.push_back({label + "-positive", label + " must be positive for t >= 0"});
  if (!monotone)
    violations.push_back({label + "-monotone", label + " must be nondecreasing"});
  if (M.antiderivative(0.0) != 0.0)
    violations.push_back({label + "-antiderivative", label + " antiderivative must vanish at 0"});
  // derivative consistency by central differences at interior sample points
  const double step = 1e-5;
  for (int i = 1; i <= 10; ++i) {
    double t = t_max * i / 10.0;
    double fd = (M.antiderivative(t + step) - M.antiderivative(t - step)) / (2.0 * step);
    if (std::abs(fd - M.value(t)) > 1e-6 * (1.0 + std::abs(M.value(t)))) {
      violations.push_back(
          {label + "-antiderivative", label + " antiderivative inconsistent with value"});
      break;
    }
  }
}

}  // namespace

ValidationReport validate_spec(const ProblemSpec& spec, int n_samples) {
  ValidationReport report;
  if (n_samples < 2) n_samples = 2;
  auto& v = report.violations;

  if (!(spec.alpha > 0.0))
    v.push_back({"singular-exponent", "alpha must be positive"});
  report.regime = spec.alpha >= 1.0 ? Regime::Strong : Regime::Weak;

  FieldBounds pb = field_bounds(spec.p, n_samples);
  report.p_min = pb.min;
  report.p_max = pb.max;
  if (!(pb.min > 1.0))
    v.push_back({"growth-exponent", "exponent must exceed 1 at every grid node"});

  if (spec.q) {
    FieldBounds qb = field_bounds(*spec.q, n_samples);
    report.q_min = qb.min;
    report.q_max = qb.max;
    if (!(qb.min > 1.0))
      v.push_back({"growth-exponent-q", "exponent must exceed 1 at every grid node"});
    if (!(qb.max < pb.min))
      v.push_back({"ordering", "q+ must stay below p-"});
  }
  if (!(pb.max < spec.beta))
    v.push_back({"ordering", "beta must exceed p+"});

  FieldBounds fb = field_bounds(spec.f, n_samples);
  if (fb.min < 0.0)
    v.push_back({"forcing-sign", "forcing must be nonnegative"});
  if (spec.alpha >= 1.0 && fb.max <= 0.0)
    v.push_back({"forcing-nontrivial", "forcing must not vanish identically in the strong regime"});

  if (spec.lambda < 0.0) v.push_back({"reaction-weight", "lambda must be nonnegative"});
  if (spec.theta < 0.0) v.push_back({"zero-order-weight", "theta must be nonnegative"});

  check_kirchhoff(spec.M_p, "kirchhoff-p", v);
  if (spec.M_q) check_kirchhoff(*spec.M_q, "kirchhoff-q", v);

  report.valid = v.empty();
  return report;
}

}  // namespace kirchhoff1d

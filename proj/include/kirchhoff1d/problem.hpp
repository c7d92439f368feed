#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kirchhoff1d {

/**
 * Spatially varying exponent or coefficient on the unit interval.
 *
 * Closed-form kinds are evaluated analytically; tabulated data is
 * interpolated linearly and reproduces its nodal values exactly.
 * When a field is used as a growth exponent it must stay above 1 on
 * the whole interval (checked by validate_spec, not here).
 */
struct ExponentField {
  enum class Kind { Constant, Sinusoidal, Affine, Tabulated };

  Kind kind = Kind::Constant;
  double c0 = 0.0;  // Constant: value; Sinusoidal: base; Affine: offset
  double c1 = 0.0;  // Sinusoidal: amplitude; Affine: slope
  std::vector<double> nodes;   // Tabulated only, strictly increasing, spans [0,1]
  std::vector<double> values;  // Tabulated only, one per node

  static ExponentField constant(double value);
  static ExponentField sinusoidal(double base, double amplitude);  // base + amplitude*sin(pi x)
  static ExponentField affine(double offset, double slope);        // offset + slope*x
  static ExponentField tabulated(std::vector<double> nodes, std::vector<double> values);

  /// Evaluate at x in [0,1]; throws std::domain_error outside.
  double eval(double x) const;

  /// Shift the field by a constant (used for ordered-data experiments).
  ExponentField shifted(double c) const;

  bool operator==(const ExponentField&) const = default;
};

struct FieldBounds {
  double min;
  double max;
};

/// Min/max over n_samples uniform sample points including both endpoints.
FieldBounds field_bounds(const ExponentField& field, int n_samples);

/**
 * Nonlocal coefficient M(t) applied to the gradient modular, together
 * with its closed-form antiderivative (M integrated from 0).
 * Polynomial coefficients are in powers of sqrt(t).
 */
struct KirchhoffFunction {
  enum class Kind { Constant, AffineSqrt, Polynomial };

  Kind kind = Kind::Constant;
  double c = 1.0;  // Constant: m; AffineSqrt: coefficient of sqrt(t) in 1 + c*sqrt(t)
  std::vector<double> coefficients;  // Polynomial only

  static KirchhoffFunction constant(double m);
  static KirchhoffFunction affine_sqrt(double coefficient);
  static KirchhoffFunction polynomial(std::vector<double> coefficients);

  /// M(t) for t >= 0; throws std::domain_error for t < 0.
  double value(double t) const;
  /// Integral of M over [0,t]; vanishes at t = 0 by construction.
  double antiderivative(double t) const;

  bool operator==(const KirchhoffFunction&) const = default;
};

/**
 * Full problem instance on (0,1) with homogeneous Dirichlet conditions:
 *
 *   -( Mp(modular_p(u)) phi_p(u') )' - ( Mq(modular_q(u)) phi_q(u') )'
 *     + theta (|u|^{p-2}u + |u|^{q-2}u)  =  f(x) / u^alpha + lambda |u|^{beta-2}u
 *
 * with phi_p(s) = |s|^{p(x)-2}s.  The secondary exponent q, its Kirchhoff
 * coefficient and theta are optional hooks; the reference experiment drops
 * them.  beta is a constant scalar in this one-dimensional model.
 */
struct ProblemSpec {
  ExponentField p = ExponentField::sinusoidal(2.0, 1.0);
  std::optional<ExponentField> q;
  double alpha = 1.5;   // singular exponent; strong regime iff >= 1
  double beta = 4.0;    // reaction exponent
  double lambda = 0.1;  // reaction weight, >= 0
  double theta = 0.0;   // zero-order weight, >= 0
  ExponentField f = ExponentField::constant(1.0);
  KirchhoffFunction M_p = KirchhoffFunction::affine_sqrt(0.5);
  std::optional<KirchhoffFunction> M_q;

  bool operator==(const ProblemSpec&) const = default;
};

/**
 * Reference problem: p(x) = 2 + sin(pi x), alpha = 1.5, beta = 4,
 * lambda = 0.1, f(x) = 1 + x(1-x), M(t) = 1 + sqrt(t)/2.
 * The quadratic forcing is tabulated on 2000 uniform cells so that every
 * grid whose cell count divides 2000 sees exact nodal values.
 */
ProblemSpec default_spec();

enum class Regime { Weak, Strong };

struct Violation {
  std::string condition;
  std::string message;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool valid = false;
  Regime regime = Regime::Weak;
  std::vector<Violation> violations;
  double p_min = 0.0;
  double p_max = 0.0;
  std::optional<double> q_min;
  std::optional<double> q_max;
};

/**
 * Check a spec against the structural conditions on an n_samples grid:
 * exponents above 1, ordering q- <= q+ < p- <= p+ < beta, nonnegative
 * forcing (not identically zero in the strong regime), nonnegative
 * lambda/theta, and positivity/monotonicity/antiderivative consistency
 * of the Kirchhoff coefficients.  Violations are reported, never thrown.
 */
ValidationReport validate_spec(const ProblemSpec& spec, int n_samples = 1001);

}  // namespace kirchhoff1d

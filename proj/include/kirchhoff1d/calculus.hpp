#pragma once

#include <vector>

#include "kirchhoff1d/problem.hpp"

namespace kirchhoff1d {

/// Uniform grid on [0,1] with n_cells >= 4 cells; node i sits at i/n_cells.
struct Grid {
  int n_cells;

  explicit Grid(int cells);
  int n_nodes() const { return n_cells + 1; }
  double spacing() const { return 1.0 / n_cells; }
  double node(int i) const { return double(i) / n_cells; }
  double midpoint(int i) const { return (i + 0.5) / n_cells; }

  bool operator==(const Grid&) const = default;
};

/// Nodal values over a grid, one per node.
struct DiscreteFunction {
  Grid grid;
  std::vector<double> values;

  DiscreteFunction(Grid g, std::vector<double> v);
  static DiscreteFunction zero(Grid g);

  template <class F>
  static DiscreteFunction sample(Grid g, F&& fn) {
    std::vector<double> v(g.n_nodes());
    for (int i = 0; i < g.n_nodes(); ++i) v[i] = fn(g.node(i));
    return DiscreteFunction(g, std::move(v));
  }

  int size() const { return int(values.size()); }
  double operator[](int i) const { return values[i]; }
  double& operator[](int i) { return values[i]; }

  bool operator==(const DiscreteFunction&) const = default;
};

DiscreteFunction subtract(const DiscreteFunction& a, const DiscreteFunction& b);

double linf_norm(const DiscreteFunction& u);
/// Trapezoid-rule L2 norm.
double l2_norm(const DiscreteFunction& u);
/// Midpoint-rule seminorm of the forward-difference gradient.
double h1_seminorm(const DiscreteFunction& u);
/// sqrt(l2^2 + seminorm^2).
double h1_norm(const DiscreteFunction& u);

/// Lower truncation max{eps, s}; eps must be positive.
double truncate_lower(double eps, double s);

/// Double truncation max{delta, min{s, 1/eps}}; requires delta <= 1/eps.
double truncate_double(double eps, double delta, double s);

/**
 * Gradient modular: midpoint-rule value of the integral of
 * |u'|^{p(x)} / p(x), with the difference quotient living on cell
 * midpoints.  This is the argument fed to the Kirchhoff coefficient.
 */
double modular(const DiscreteFunction& u, const ExponentField& p);

/**
 * Approximate energy of a nonnegative profile at truncation level eps:
 * Kirchhoff antiderivatives of the modulars, plus theta zero-order
 * terms, minus the truncated singular potential, minus the
 * lambda-reaction term.  Zero-order integrals use the trapezoid rule.
 * The singular potential evaluates u^{1-alpha}/(1-alpha) where u >= eps
 * and freezes at eps^{1-alpha}/(1-alpha) below; alpha = 1 is rejected
 * (logarithmic antiderivative, unsupported).
 */
double energy(const DiscreteFunction& u, const ProblemSpec& spec, double eps);

struct SingularMass {
  double lhs;          // sum over interior nodes with u < eps of h f / max(u, floor)^alpha
  double bound_scale;  // eps^{1-alpha} ||f||_inf |Omega|^{1/p+}, the estimate's right side at C = 1
};

/**
 * Contribution of the singular source on the sublevel set {u < eps}.
 * Boundary nodes are excluded: they carry the Dirichlet zeros and the
 * continuous integral runs over the open interval.  The floor guards
 * division on non-truncated inputs.
 */
SingularMass singular_mass(const DiscreteFunction& u, const ProblemSpec& spec, double eps,
                           double floor = 1e-12);

}  // namespace kirchhoff1d

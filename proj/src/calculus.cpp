#include "kirchhoff1d/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kirchhoff1d {

Grid::Grid(int cells) : n_cells(cells) {
  if (cells < 4) throw std::invalid_argument("grid needs at least 4 cells");
}

DiscreteFunction::DiscreteFunction(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (int(values.size()) != grid.n_nodes())
    throw std::invalid_argument("value count must equal node count");
}

DiscreteFunction DiscreteFunction::zero(Grid g) {
  return DiscreteFunction(g, std::vector<double>(g.n_nodes(), 0.0));
}

DiscreteFunction subtract(const DiscreteFunction& a, const DiscreteFunction& b) {
  if (a.grid != b.grid) throw std::domain_error("grid mismatch");
  std::vector<double> v(a.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] - b.values[i];
  return DiscreteFunction(a.grid, std::move(v));
}

double linf_norm(const DiscreteFunction& u) {
  double m = 0.0;
  for (double v : u.values) m = std::max(m, std::abs(v));
  return m;
}

double l2_norm(const DiscreteFunction& u) {
  const double h = u.grid.spacing();
  double acc = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    double w = (i == 0 || i == u.size() - 1) ? h / 2.0 : h;
    acc += w * u[i] * u[i];
  }
  return std::sqrt(acc);
}

double h1_seminorm(const DiscreteFunction& u) {
  const double h = u.grid.spacing();
  double acc = 0.0;
  for (int i = 0; i + 1 < u.size(); ++i) {
    double s = (u[i + 1] - u[i]) / h;
    acc += h * s * s;
  }
  return std::sqrt(acc);
}

double h1_norm(const DiscreteFunction& u) {
  double a = l2_norm(u), b = h1_seminorm(u);
  return std::sqrt(a * a + b * b);
}

double truncate_lower(double eps, double s) {
  if (!(eps > 0.0)) throw std::domain_error("truncation level must be positive");
  return std::max(eps, s);
}

double truncate_double(double eps, double delta, double s) {
  if (!(eps > 0.0) || !(delta > 0.0))
    throw std::domain_error("truncation levels must be positive");
  if (delta > 1.0 / eps)
    throw std::domain_error("inconsistent truncation bounds: delta exceeds 1/eps");
  return std::max(delta, std::min(s, 1.0 / eps));
}

double modular(const DiscreteFunction& u, const ExponentField& p) {
  const double h = u.grid.spacing();
  double acc = 0.0;
  for (int i = 0; i + 1 < u.size(); ++i) {
    double s = std::abs(u[i + 1] - u[i]) / h;
    double pm = p.eval(u.grid.midpoint(i));
    acc += h * std::pow(s, pm) / pm;
  }
  return acc;
}

double energy(const DiscreteFunction& u, const ProblemSpec& spec, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  if (spec.alpha == 1.0)
    throw std::domain_error("energy undefined at alpha = 1 (logarithmic antiderivative)");
  for (double v : u.values)
    if (v < 0.0) throw std::domain_error("energy requires a nonnegative profile");

  double E = spec.M_p.antiderivative(modular(u, spec.p));
  if (spec.q) {
    const KirchhoffFunction Mq =
        spec.M_q ? *spec.M_q : KirchhoffFunction::constant(1.0);
    E += Mq.antiderivative(modular(u, *spec.q));
  }

  const double h = u.grid.spacing();
  const double one_minus_a = 1.0 - spec.alpha;
  double singular = 0.0, reaction = 0.0, zero_order = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    double x = u.grid.node(i);
    double w = (i == 0 || i == u.size() - 1) ? h / 2.0 : h;
    double pot = (u[i] >= eps) ? std::pow(u[i], one_minus_a) / one_minus_a
                               : std::pow(eps, one_minus_a) / one_minus_a;
    singular += w * spec.f.eval(x) * pot;
    reaction += w * std::pow(std::abs(u[i]), spec.beta) / spec.beta;
    if (spec.theta > 0.0) {
      double px = spec.p.eval(x);
      zero_order += w * std::pow(std::abs(u[i]), px) / px;
      if (spec.q) {
        double qx = spec.q->eval(x);
        zero_order += w * std::pow(std::abs(u[i]), qx) / qx;
      }
    }
  }
  return E + spec.theta * zero_order - singular - spec.lambda * reaction;
}

SingularMass singular_mass(const DiscreteFunction& u, const ProblemSpec& spec, double eps,
                           double floor) {
  if (!(floor > 0.0)) throw std::domain_error("floor must be positive");
  for (double v : u.values)
    if (v < 0.0) throw std::domain_error("singular_mass requires a nonnegative profile");

  const double h = u.grid.spacing();
  double lhs = 0.0;
  for (int i = 1; i + 1 < u.size(); ++i) {
    if (u[i] < eps)
      lhs += h * spec.f.eval(u.grid.node(i)) / std::pow(std::max(u[i], floor), spec.alpha);
  }
  FieldBounds fb = field_bounds(spec.f, u.grid.n_nodes());
  FieldBounds pb = field_bounds(spec.p, u.grid.n_nodes());
  double f_inf = std::max(std::abs(fb.min), std::abs(fb.max));
  double bound = std::pow(eps, 1.0 - spec.alpha) * f_inf * std::pow(1.0, 1.0 / pb.max);
  return {lhs, bound};
}

}  // namespace kirchhoff1d

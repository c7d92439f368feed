#include "kirchhoff1d/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kirchhoff1d {

ExponentReport theoretical_exponents(const ProblemSpec& spec, double alpha_f, int n_samples) {
  ExponentReport report;
  report.alpha = spec.alpha;
  report.alpha_f = alpha_f;

  FieldBounds pb = field_bounds(spec.p, n_samples);
  report.p_min = pb.min;
  report.p_max = pb.max;

  report.mu1 = 2.0 / (pb.max - 1.0 + spec.alpha);
  double denom = pb.min - 1.0 - spec.alpha;
  if (denom > 0.0)
    report.mu2 = 2.0 / denom;
  else
    report.blow_up = true;

  if (spec.alpha >= 1.0)
    report.gamma_rate = std::min((spec.alpha - 1.0) / (2.0 * spec.alpha), 1.0 / pb.max);

  double gh = std::min({alpha_f, (pb.min - 1.0) / pb.max, 0.5});
  if (spec.q) {
    FieldBounds qb = field_bounds(*spec.q, n_samples);
    report.q_min = qb.min;
    report.q_max = qb.max;
    gh = std::min(gh, (qb.min - 1.0) / qb.max);
  }
  report.gamma_holder = gh;
  return report;
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::domain_error("rate fit needs at least 2 points");
  std::vector<double> lx, ly;
  for (auto [eps, err] : points) {
    if (!(eps > 0.0) || !(err > 0.0))
      throw std::domain_error("rate fit needs positive abscissae and values");
    lx.push_back(std::log10(eps));
    ly.push_back(std::log10(err));
  }
  const double n = double(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::domain_error("rate fit needs distinct abscissae");

  RateFit fit;
  fit.n_points = int(points.size());
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

BoundaryFit fit_boundary(const DiscreteFunction& u, Side side, double window) {
  if (!(window > 0.0 && window < 0.5))
    throw std::invalid_argument("fit window must lie in (0, 0.5)");
  const int n = u.grid.n_cells;
  const int boundary = side == Side::Left ? 0 : n;
  if (u[boundary] != 0.0)
    throw std::invalid_argument("profile must vanish at the chosen boundary");

  std::vector<double> d, v;
  for (int i = 0; i <= n; ++i) {
    // distance to the boundary as an exact grid node, so mirrored windows
    // select mirrored node sets
    double dist = side == Side::Left ? u.grid.node(i) : u.grid.node(n - i);
    if (dist > 0.0 && dist <= window) {
      d.push_back(dist);
      v.push_back(u[i]);
    }
  }
  if (d.size() < 4) throw std::invalid_argument("fit window must contain at least 4 nodes");

  double sdv = 0.0, sdd = 0.0, svv = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sdv += d[i] * v[i];
    sdd += d[i] * d[i];
    svv += v[i] * v[i];
  }
  if (svv == 0.0) throw std::domain_error("degenerate fit: window is identically zero");

  BoundaryFit fit{};
  fit.linear_slope = sdv / sdd;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double r = v[i] - fit.linear_slope * d[i];
    ss_res += r * r;
  }
  fit.r_squared_linear = 1.0 - ss_res / svv;

  // log-log slope over the strictly positive window values
  std::vector<double> ld, lv;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (v[i] > 0.0) {
      ld.push_back(std::log(d[i]));
      lv.push_back(std::log(v[i]));
    }
  }
  if (ld.size() < 2) throw std::domain_error("degenerate fit: too few positive window values");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < ld.size(); ++i) {
    mx += ld[i];
    my += lv[i];
  }
  mx /= double(ld.size());
  my /= double(ld.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ld.size(); ++i) {
    sxx += (ld[i] - mx) * (ld[i] - mx);
    sxy += (ld[i] - mx) * (lv[i] - my);
  }
  fit.power_exponent = sxy / sxx;
  return fit;
}

std::vector<EnergyDecayEntry> energy_decay(const ContinuationResult& result,
                                           const ProblemSpec& spec) {
  if (result.profiles.size() < 2)
    throw std::domain_error("energy decay needs at least 2 profiles");
  double ref = energy(result.profiles.back().u, spec, result.profiles.back().eps);
  std::vector<EnergyDecayEntry> entries;
  for (const SolutionProfile& profile : result.profiles) {
    double E = energy(profile.u, spec, profile.eps);
    entries.push_back({profile.eps, E, std::abs(E - ref)});
  }
  return entries;
}

TestFunction TestFunction::bump(double a, double b) {
  if (!(a > 0.0)) throw std::domain_error("test function support must stay away from 0");
  if (!(b > a)) throw std::invalid_argument("bump interval must be nonempty");
  TestFunction h;
  h.kind = Kind::Bump;
  h.a = a;
  h.b = b;
  h.support_lo = a;
  h.support_hi = b;
  return h;
}

TestFunction TestFunction::log_truncated(double k) {
  if (!(k > 1.0)) throw std::invalid_argument("log truncation level must exceed 1");
  TestFunction h;
  h.kind = Kind::LogTruncated;
  h.k = k;
  h.support_lo = 1.0 / k;
  h.support_hi = k;
  return h;
}

TestFunction TestFunction::zero() {
  TestFunction h;
  h.kind = Kind::Zero;
  h.support_lo = 1.0;
  h.support_hi = 1.0;
  return h;
}

double TestFunction::eval(double s) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Bump: {
      if (s <= a || s >= b) return 0.0;
      double width = b - a;
      return std::exp(4.0 / (width * width) - 1.0 / ((s - a) * (b - s)));
    }
    case Kind::LogTruncated:
      return (s >= 1.0 / k && s <= k) ? std::log(s) : 0.0;
  }
  throw std::logic_error("unreachable test function kind");
}

RenormalizedCheck renormalized_check(const SolutionProfile& profile, const ProblemSpec& spec,
                                     const TestFunction& h) {
  if (!profile.converged)
    throw std::invalid_argument("renormalized check needs a converged profile");
  if (!(h.support_lo > 0.0))
    throw std::domain_error("test function support must stay away from 0");

  const DiscreteFunction& u = profile.u;
  const Grid grid = u.grid;
  const double hg = grid.spacing();
  const double eps = profile.eps;
  const double delta = profile.delta_flux;
  const double K_q = profile.K_q.value_or(1.0);

  std::vector<double> hu(u.size());
  for (int i = 0; i < u.size(); ++i) hu[i] = h.eval(u[i]);

  double lhs = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    double s = (u[i + 1] - u[i]) / hg;
    double dv = hu[i + 1] - hu[i];
    lhs += profile.K_p * regularized_flux(s, spec.p.eval(grid.midpoint(i)), delta) * dv;
    if (spec.q) lhs += K_q * regularized_flux(s, spec.q->eval(grid.midpoint(i)), delta) * dv;
  }

  double rhs = 0.0, rhs_pure = 0.0;
  for (int i = 1; i < grid.n_cells; ++i) {
    double v = hu[i];
    if (v == 0.0) continue;
    double x = grid.node(i);
    double reaction = spec.lambda * std::pow(std::abs(u[i]), spec.beta - 2.0) * u[i];
    rhs += hg * v * (spec.f.eval(x) * std::pow(u[i] + eps, -spec.alpha) + reaction);
    rhs_pure += hg * v * (spec.f.eval(x) * std::pow(u[i], -spec.alpha) + reaction);
    if (spec.theta > 0.0) {
      double px = spec.p.eval(x);
      double zero_order = std::pow(std::abs(u[i]), px - 2.0) * u[i];
      if (spec.q) {
        double qx = spec.q->eval(x);
        zero_order += std::pow(std::abs(u[i]), qx - 2.0) * u[i];
      }
      lhs += hg * spec.theta * zero_order * v;
    }
  }
  return {std::abs(lhs - rhs), std::abs(rhs), std::abs(lhs - rhs_pure), std::abs(rhs_pure)};
}

double renormalized_residual(const SolutionProfile& profile, const ProblemSpec& spec,
                             const TestFunction& h) {
  return renormalized_check(profile, spec, h).residual;
}

}  // namespace kirchhoff1d

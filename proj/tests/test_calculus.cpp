#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kirchhoff1d/calculus.hpp"

using namespace kirchhoff1d;

namespace {

// composite Simpson quadrature, the independent oracle for the modular
double simpson(double (*g)(double), double a, double b, int n) {
  double h = (b - a) / n, acc = g(a) + g(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return acc * h / 3.0;
}

double grad_energy_density(double x) {
  double s = M_PI * std::cos(M_PI * x);
  return s * s / 2.0;
}

}  // namespace

TEST_CASE("grid and discrete function basics") {
  Grid grid(10);
  CHECK(grid.node(0) == 0.0);
  CHECK(grid.node(10) == 1.0);
  CHECK(grid.spacing() == doctest::Approx(0.1));
  CHECK_THROWS_AS(Grid(3), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteFunction(grid, std::vector<double>(5, 0.0)), std::invalid_argument);
  CHECK(DiscreteFunction::zero(grid).size() == 11);
}

TEST_CASE("lower truncation") {
  CHECK(truncate_lower(0.1, 0.05) == 0.1);
  CHECK(truncate_lower(0.1, 0.5) == 0.5);
  CHECK(truncate_lower(0.1, 0.1) == 0.1);
  CHECK_THROWS_AS(truncate_lower(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(truncate_lower(-0.1, 1.0), std::domain_error);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    double s = dist(rng);
    double t = truncate_lower(0.25, s);
    CHECK(t >= 0.25);
    CHECK(truncate_lower(0.25, t) == t);  // idempotent
  }
}

TEST_CASE("double truncation") {
  CHECK(truncate_double(0.5, 0.1, 10.0) == 2.0);
  CHECK(truncate_double(0.5, 0.1, 0.01) == 0.1);
  CHECK(truncate_double(0.5, 0.1, 1.0) == 1.0);
  CHECK_THROWS_AS(truncate_double(0.5, 3.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(truncate_double(-0.5, 0.1, 1.0), std::domain_error);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    double t = truncate_double(0.25, 0.05, dist(rng));
    CHECK(t >= 0.05);
    CHECK(t <= 4.0);
  }
}

TEST_CASE("modular of simple profiles") {
  Grid grid(100);
  ExponentField p2 = ExponentField::constant(2.0);

  DiscreteFunction linear = DiscreteFunction::sample(grid, [](double x) { return x; });
  CHECK(modular(linear, p2) == doctest::Approx(0.5).epsilon(1e-13));

  CHECK(modular(DiscreteFunction::zero(grid), ExponentField::sinusoidal(2.0, 1.0)) == 0.0);
}

TEST_CASE("modular of the sine profile against quadrature") {
  Grid grid(1000);
  DiscreteFunction u =
      DiscreteFunction::sample(grid, [](double x) { return std::sin(M_PI * x); });
  double value = modular(u, ExponentField::constant(2.0));
  double oracle = simpson(grad_energy_density, 0.0, 1.0, 20000);
  CHECK(oracle == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-10));
  CHECK(value == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-3));
  CHECK(value == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("modular homogeneity for constant exponent") {
  Grid grid(64);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DiscreteFunction u = DiscreteFunction::zero(grid);
  for (int i = 0; i < u.size(); ++i) u[i] = dist(rng);
  DiscreteFunction scaled = u;
  for (int i = 0; i < u.size(); ++i) scaled[i] *= 2.0;
  ExponentField p2 = ExponentField::constant(2.0);
  CHECK(modular(scaled, p2) == 4.0 * modular(u, p2));  // exact: scaling by a power of two
}

TEST_CASE("energy of constant and linear profiles") {
  Grid grid(16);  // power-of-two spacing keeps the trapezoid weights exact
  ProblemSpec spec;
  spec.p = ExponentField::constant(2.0);
  spec.f = ExponentField::constant(1.0);
  spec.M_p = KirchhoffFunction::constant(1.0);
  spec.lambda = 0.0;

  SUBCASE("zero profile, alpha = 2") {
    spec.alpha = 2.0;
    double E = energy(DiscreteFunction::zero(grid), spec, 0.25);
    CHECK(E == doctest::Approx(4.0).epsilon(1e-14));
  }
  SUBCASE("zero profile, alpha = 1.5") {
    spec.alpha = 1.5;
    double E = energy(DiscreteFunction::zero(grid), spec, 0.01);
    CHECK(E == doctest::Approx(20.0).epsilon(1e-12));
  }
  SUBCASE("linear profile carries only the gradient term") {
    spec.alpha = 1.5;
    spec.f = ExponentField::constant(0.0);
    DiscreteFunction u = DiscreteFunction::sample(grid, [](double x) { return x; });
    CHECK(energy(u, spec, 0.1) == doctest::Approx(0.5).epsilon(1e-13));
  }
}

TEST_CASE("energy decreases in lambda") {
  Grid grid(50);
  ProblemSpec spec = default_spec();
  DiscreteFunction u =
      DiscreteFunction::sample(grid, [](double x) { return std::sin(M_PI * x); });
  spec.lambda = 0.1;
  double e1 = energy(u, spec, 0.01);
  spec.lambda = 0.2;
  double e2 = energy(u, spec, 0.01);
  CHECK(e2 < e1);
}

TEST_CASE("energy rejects alpha = 1 and negative profiles") {
  Grid grid(10);
  ProblemSpec spec = default_spec();
  spec.alpha = 1.0;
  CHECK_THROWS_AS(energy(DiscreteFunction::zero(grid), spec, 0.1), std::domain_error);

  spec.alpha = 1.5;
  DiscreteFunction u = DiscreteFunction::zero(grid);
  u[3] = -0.1;
  CHECK_THROWS_AS(energy(u, spec, 0.1), std::domain_error);
}

TEST_CASE("singular mass vanishes above the threshold") {
  Grid grid(40);
  ProblemSpec spec = default_spec();
  double eps = 0.05;
  DiscreteFunction u = DiscreteFunction::sample(grid, [eps](double) { return 2.0 * eps; });
  SingularMass sm = singular_mass(u, spec, eps);
  CHECK(sm.lhs == 0.0);

  // any profile above eps gives an empty sublevel set
  DiscreteFunction v = DiscreteFunction::sample(grid, [eps](double x) { return eps + x; });
  CHECK(singular_mass(v, spec, eps).lhs == 0.0);
}

TEST_CASE("singular mass of the linear profile against quadrature") {
  // integral of x^{-1/2} over (0, 1/2); midpoint rule avoids the endpoint
  const int cells = 2'000'000;
  double oracle = 0.0, w = 0.5 / cells;
  for (int i = 0; i < cells; ++i) oracle += w / std::sqrt((i + 0.5) * w);
  CHECK(oracle == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(2e-3));

  Grid grid(200000);
  ProblemSpec spec = default_spec();
  spec.alpha = 0.5;
  spec.f = ExponentField::constant(1.0);
  DiscreteFunction u = DiscreteFunction::sample(grid, [](double x) { return x; });
  SingularMass sm = singular_mass(u, spec, 0.5, 1e-12);
  CHECK(sm.lhs == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-2));
  CHECK(sm.lhs == doctest::Approx(oracle).epsilon(1e-2));
}

TEST_CASE("singular mass bound scale") {
  Grid grid(100);
  ProblemSpec spec = default_spec();
  spec.alpha = 1.5;
  spec.f = ExponentField::constant(1.0);
  spec.p = ExponentField::constant(3.0);
  DiscreteFunction u = DiscreteFunction::sample(grid, [](double x) { return x; });
  SingularMass sm = singular_mass(u, spec, 0.01);
  CHECK(sm.bound_scale == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("norms of simple profiles") {
  Grid grid(128);
  DiscreteFunction one = DiscreteFunction::sample(grid, [](double) { return 1.0; });
  CHECK(l2_norm(one) == doctest::Approx(1.0).epsilon(1e-13));
  DiscreteFunction linear = DiscreteFunction::sample(grid, [](double x) { return x; });
  CHECK(h1_seminorm(linear) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(linf_norm(linear) == doctest::Approx(1.0));
  CHECK_THROWS_AS(subtract(one, DiscreteFunction::zero(Grid(64))), std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kirchhoff1d/problem.hpp"

using namespace kirchhoff1d;

TEST_CASE("field evaluation of closed-form kinds") {
  ExponentField sine = ExponentField::sinusoidal(2.0, 1.0);
  CHECK(sine.eval(0.5) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(sine.eval(0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sine.eval(1.0) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(ExponentField::constant(2.0).eval(0.37) == 2.0);
  CHECK(ExponentField::affine(1.0, 1.0).eval(0.25) == doctest::Approx(1.25));

  CHECK_THROWS_AS(sine.eval(-0.01), std::domain_error);
  CHECK_THROWS_AS(sine.eval(1.01), std::domain_error);
}

TEST_CASE("tabulated field reproduces nodal values exactly") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.5, 5.0);
  const int n = 17;
  std::vector<double> nodes(n), values(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = double(i) / (n - 1);
    values[i] = dist(rng);
  }
  ExponentField field = ExponentField::tabulated(nodes, values);
  for (int i = 0; i < n; ++i)
    CHECK(field.eval(nodes[i]) == values[i]);
  // interior points interpolate linearly
  double mid = (nodes[3] + nodes[4]) / 2.0;
  CHECK(field.eval(mid) == doctest::Approx((values[3] + values[4]) / 2.0));
}

TEST_CASE("tabulated field construction rejects malformed data") {
  CHECK_THROWS_AS(ExponentField::tabulated({0.0, 0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentField::tabulated({0.0, 0.5}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentField::tabulated({0.0, 0.5, 0.5, 1.0}, {1, 2, 3, 4}),
                  std::invalid_argument);
}

TEST_CASE("field bounds over uniform samples") {
  FieldBounds sine = field_bounds(ExponentField::sinusoidal(2.0, 1.0), 1001);
  CHECK(sine.min == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(sine.max == doctest::Approx(3.0).epsilon(1e-5));

  FieldBounds flat = field_bounds(ExponentField::constant(1.5), 2);
  CHECK(flat.min == 1.5);
  CHECK(flat.max == 1.5);

  FieldBounds ramp = field_bounds(ExponentField::affine(1.0, 1.0), 2);
  CHECK(ramp.min == doctest::Approx(1.0));
  CHECK(ramp.max == doctest::Approx(2.0));

  CHECK_THROWS_AS(field_bounds(ExponentField::constant(1.0), 1), std::invalid_argument);
}

TEST_CASE("shifted fields") {
  ExponentField f = ExponentField::sinusoidal(2.0, 1.0).shifted(0.5);
  CHECK(f.eval(0.0) == doctest::Approx(2.5));
  ExponentField t = ExponentField::tabulated({0.0, 1.0}, {1.0, 2.0}).shifted(-1.0);
  CHECK(t.eval(0.0) == doctest::Approx(0.0));
  CHECK(t.eval(1.0) == doctest::Approx(1.0));
}

TEST_CASE("Kirchhoff function values and antiderivative") {
  KirchhoffFunction M = KirchhoffFunction::affine_sqrt(0.5);
  CHECK(M.value(4.0) == doctest::Approx(2.0));
  CHECK(M.value(0.0) == doctest::Approx(1.0));
  CHECK(M.antiderivative(0.0) == 0.0);
  CHECK(M.antiderivative(1.0) == doctest::Approx(1.0 + 1.0 / 3.0));
  CHECK_THROWS_AS(M.value(-1.0), std::domain_error);
  CHECK_THROWS_AS(M.antiderivative(-0.5), std::domain_error);

  KirchhoffFunction flat = KirchhoffFunction::constant(2.5);
  CHECK(flat.value(7.0) == 2.5);
  CHECK(flat.antiderivative(2.0) == doctest::Approx(5.0));
}

TEST_CASE("polynomial Kirchhoff kind matches the affine-sqrt closed form") {
  KirchhoffFunction poly = KirchhoffFunction::polynomial({1.0, 0.5});
  KirchhoffFunction closed = KirchhoffFunction::affine_sqrt(0.5);
  for (double t : {0.0, 0.3, 1.0, 4.0, 9.0}) {
    CHECK(poly.value(t) == doctest::Approx(closed.value(t)).epsilon(1e-14));
    CHECK(poly.antiderivative(t) == doctest::Approx(closed.antiderivative(t)).epsilon(1e-14));
  }
}

TEST_CASE("antiderivative differentiates back to the value") {
  const double step = 1e-5;
  for (const KirchhoffFunction& M :
       {KirchhoffFunction::affine_sqrt(0.5), KirchhoffFunction::constant(2.0),
        KirchhoffFunction::polynomial({1.0, 0.25, 0.1})}) {
    for (int i = 1; i <= 10; ++i) {
      double t = i;
      double fd = (M.antiderivative(t + step) - M.antiderivative(t - step)) / (2.0 * step);
      CHECK(fd == doctest::Approx(M.value(t)).epsilon(1e-6));
    }
  }
}

TEST_CASE("reference spec validates as strong regime") {
  ProblemSpec spec = default_spec();
  ValidationReport report = validate_spec(spec, 1001);
  CHECK(report.valid);
  CHECK(report.regime == Regime::Strong);
  CHECK(report.p_min == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(report.p_max == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(report.violations.empty());
}

TEST_CASE("weak regime flag at alpha below 1") {
  ProblemSpec spec = default_spec();
  spec.alpha = 0.5;
  ValidationReport report = validate_spec(spec);
  CHECK(report.valid);
  CHECK(report.regime == Regime::Weak);

  spec.alpha = 1.0;  // threshold counts as strong
  CHECK(validate_spec(spec).regime == Regime::Strong);
}

TEST_CASE("default forcing is exact at the nodes of compatible grids") {
  ExponentField f = default_spec().f;
  for (int n : {100, 200, 400}) {
    for (int i = 0; i <= n; i += n / 10) {
      double x = double(i) / n;
      CHECK(f.eval(x) == 1.0 + x * (1.0 - x));
    }
  }
}

TEST_CASE("exponent at or below 1 is rejected") {
  ProblemSpec spec = default_spec();
  spec.p = ExponentField::constant(0.9);
  ValidationReport report = validate_spec(spec);
  CHECK_FALSE(report.valid);
  bool found = false;
  for (const Violation& v : report.violations)
    found = found || v.message.find("must exceed 1") != std::string::npos;
  CHECK(found);
}

TEST_CASE("validation flags broken ordering and signs") {
  ProblemSpec spec = default_spec();
  spec.q = ExponentField::constant(2.5);  // q+ above p- = 2
  CHECK_FALSE(validate_spec(spec).valid);

  spec = default_spec();
  spec.beta = 2.5;  // below p+ = 3
  CHECK_FALSE(validate_spec(spec).valid);

  spec = default_spec();
  spec.alpha = -1.0;
  CHECK_FALSE(validate_spec(spec).valid);

  spec = default_spec();
  spec.lambda = -0.1;
  CHECK_FALSE(validate_spec(spec).valid);

  spec = default_spec();
  spec.f = ExponentField::constant(-0.5);
  CHECK_FALSE(validate_spec(spec).valid);

  spec = default_spec();
  spec.f = ExponentField::constant(0.0);  // identically zero forcing, strong regime
  CHECK_FALSE(validate_spec(spec).valid);
  spec.alpha = 0.5;  // allowed in the weak regime
  CHECK(validate_spec(spec).valid);
}

TEST_CASE("decreasing Kirchhoff coefficient is rejected") {
  ProblemSpec spec = default_spec();
  spec.M_p = KirchhoffFunction::polynomial({2.0, -1.0});
  ValidationReport report = validate_spec(spec);
  CHECK_FALSE(report.valid);
}

TEST_CASE("validation is pure") {
  ProblemSpec spec = default_spec();
  spec.q = ExponentField::constant(0.8);
  ValidationReport a = validate_spec(spec);
  ValidationReport b = validate_spec(spec);
  CHECK(a.valid == b.valid);
  CHECK(a.violations == b.violations);
  CHECK(a.p_min == b.p_min);
  CHECK(a.p_max == b.p_max);
}

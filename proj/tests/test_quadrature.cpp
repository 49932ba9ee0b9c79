#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suncs/checks.hpp"
#include "suncs/quadrature.hpp"

using namespace suncs;

TEST_CASE("gauss-legendre rule on [0,1]") {
  std::vector<double> x, w;
  gauss_legendre_01(12, x, w);
  double sum = 0.0, linear = 0.0, high = 0.0;
  for (int i = 0; i < 12; ++i) {
    sum += w[i];
    linear += w[i] * x[i];
    high += w[i] * std::pow(x[i], 23);  // degree 2*12-1, still exact
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(linear == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(high == doctest::Approx(1.0 / 24.0).epsilon(1e-13));
}

TEST_CASE("grid construction and weights") {
  QuadratureGrid g2(2, 8, 8);
  CHECK(g2.size() == 512);

  QuadratureGrid g3(3, 8, 8);
  CHECK(g3.size() == 64ull * 512ull);

  for (std::size_t i = 0; i < g2.size(); ++i) CHECK(g2.weight(i) >= 0.0);

  // weights sum to the coset volume
  CHECK(coset_volume(2, g2) == doctest::Approx(coset_volume_exact(2)).epsilon(1e-13));

  // point() and weight() agree
  auto p = g3.point(12345);
  CHECK(p.weight == doctest::Approx(g3.weight(12345)).epsilon(1e-15));
  CHECK(p.angles.xi.size() == 2);
  CHECK(p.angles.phi.size() == 3);

  CHECK_THROWS_AS(QuadratureGrid(1, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureGrid(3, 0, 4), std::invalid_argument);
}

TEST_CASE("coset volumes") {
  CHECK(coset_volume_exact(2) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  CHECK(coset_volume_exact(3) == doctest::Approx(std::pow(2 * pi, 3) / 8.0).epsilon(1e-15));
  CHECK(coset_volume_exact(4) == doctest::Approx(std::pow(2 * pi, 4) / 48.0).epsilon(1e-15));

  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(checks::volume_error(n) < 1e-10);
  }
}

TEST_CASE("xi moments by quadrature match the closed form") {
  CHECK(checks::xi_moments(12) < 1e-12);
  CHECK(xi_moment_exact(1, 0) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("phase orthogonality on the uniform grid") {
  for (int N = 1; N <= 6; ++N) CHECK(checks::phase_orthogonality(N) < 1e-13);
}

TEST_CASE("resolution of unity") {
  {
    GridSpec spec = unity_thresholds(2, 1);
    UnityResult r = resolution_of_unity(2, 1, QuadratureGrid(2, spec.polar_order, spec.phase_order));
    CHECK(r.matrix.rows() == 2);
    CHECK(r.grid_sufficient);
    CHECK(r.max_abs_deviation < 1e-10);
  }
  {
    GridSpec spec = unity_thresholds(3, 2);
    UnityResult r = resolution_of_unity(3, 2, QuadratureGrid(3, spec.polar_order, spec.phase_order));
    CHECK(r.matrix.rows() == 6);
    CHECK(r.max_abs_deviation < 1e-10);
  }
  {
    // N = 0: prefactor times volume collapses to the 1x1 identity
    GridSpec spec = unity_thresholds(4, 0);
    UnityResult r = resolution_of_unity(4, 0, QuadratureGrid(4, spec.polar_order, spec.phase_order));
    CHECK(r.matrix.rows() == 1);
    CHECK(std::abs(r.matrix(0, 0) - Complex(1.0)) < 1e-12);
  }
  {
    // five polar axes at once
    GridSpec spec = unity_thresholds(5, 1);
    UnityResult r = resolution_of_unity(5, 1, QuadratureGrid(5, spec.polar_order, spec.phase_order));
    CHECK(r.matrix.rows() == 5);
    CHECK(r.max_abs_deviation < 1e-10);
  }
  {
    // an insufficient grid is flagged
    UnityResult r = resolution_of_unity(2, 3, QuadratureGrid(2, 2, 2));
    CHECK_FALSE(r.grid_sufficient);
  }
}

TEST_CASE("off-diagonal unity entries vanish by phase orthogonality") {
  GridSpec spec = unity_thresholds(3, 2);
  UnityResult r = resolution_of_unity(3, 2, QuadratureGrid(3, spec.polar_order, spec.phase_order));
  for (int a = 0; a < r.matrix.rows(); ++a)
    for (int b = 0; b < r.matrix.cols(); ++b)
      if (a != b) CHECK(std::abs(r.matrix(a, b)) < 1e-12);
}

TEST_CASE("results are stable once past the exactness thresholds") {
  GridSpec spec = unity_thresholds(2, 2);
  QuadratureGrid base(2, spec.polar_order, spec.phase_order);
  QuadratureGrid doubled(2, 2 * spec.polar_order, 2 * spec.phase_order);
  CHECK(std::abs(coset_volume(2, base) - coset_volume(2, doubled)) < 1e-12);
  const double r1 = resolution_of_unity(2, 2, base).max_abs_deviation;
  const double r2 = resolution_of_unity(2, 2, doubled).max_abs_deviation;
  CHECK(std::abs(r1 - r2) < 1e-12);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "suncs/checks.hpp"
#include "suncs/fundamental.hpp"
#include "suncs/haar.hpp"
#include "suncs/json_io.hpp"

using namespace suncs;

namespace {
const Complex I{0.0, 1.0};

AngleCoordinates angles3(double xi0, double xi1, double p0, double p1, double p2) {
  AngleCoordinates a;
  a.xi = {xi0, xi1};
  a.phi = {p0, p1, p2};
  return a;
}
}  // namespace

TEST_CASE("su2_matrix entries") {
  CHECK(max_abs(Matrix(su2_matrix(0, 0, 0) - Matrix::Identity(2, 2))) == 0.0);

  const double t = 0.81, p1 = 2.3, p2 = 5.1;
  Matrix g = su2_matrix(t, p1, p2);
  CHECK(std::abs(g(0, 0) - std::exp(I * p1) * std::cos(t)) < 1e-15);
  CHECK(std::abs(g(1, 0) - std::exp(I * p2) * std::sin(t)) < 1e-15);
  CHECK(std::abs(g.determinant() - Complex(1.0)) < 1e-15);

  Matrix w = su2_matrix(half_pi, 0, 0);
  Matrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK(max_abs(Matrix(w - expected)) < 1e-15);
}

TEST_CASE("middle_matrix block structure") {
  CHECK(max_abs(Matrix(middle_matrix(5, 0, 0) - Matrix::Identity(5, 5))) == 0.0);

  Matrix m = middle_matrix(4, half_pi, 0);
  Matrix expected = Matrix::Identity(4, 4);
  expected(0, 0) = 0;
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  expected(1, 1) = 0;
  CHECK(max_abs(Matrix(m - expected)) < 1e-15);
  CHECK_THROWS_AS(middle_matrix(1, 0, 0), std::invalid_argument);
}

TEST_CASE("build_group_element matches the explicit 3x3 product") {
  const double t = 0.7, p = 1.1;
  const double x1 = 0.45, q1 = 2.5, q2 = 0.3;  // left block
  const double x2 = 1.2, q3 = 4.0, q4 = 1.9;   // right block
  DecompositionTree tree = DecompositionTree::node(t, p, DecompositionTree::su2(x1, q1, q2),
                                                   DecompositionTree::su2(x2, q3, q4));
  Matrix l = Matrix::Identity(3, 3);
  l.bottomRightCorner(2, 2) = su2_matrix(x1, q1, q2);
  Matrix r = Matrix::Identity(3, 3);
  r.bottomRightCorner(2, 2) = su2_matrix(x2, q3, q4);
  Matrix expected = l * middle_matrix(3, t, p) * r;
  CHECK(max_abs(Matrix(build_group_element(tree) - expected)) < 1e-15);

  CHECK(max_abs(Matrix(build_group_element(DecompositionTree::identity(4)) -
                       Matrix::Identity(4, 4))) == 0.0);
}

TEST_CASE("built elements are special unitary") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix u = build_group_element(random_tree(5, rng));
    CHECK(max_abs(Matrix(u.adjoint() * u - Matrix::Identity(5, 5))) < 1e-12);
    CHECK(std::abs(u.determinant() - Complex(1.0)) < 1e-12);
  }
}

TEST_CASE("fundamental coherent state") {
  AngleCoordinates a2;
  a2.xi = {0.6};
  a2.phi = {1.2, 2.9};
  Vector c2 = coherent_state_fund(a2);
  CHECK(std::abs(c2[0] - std::exp(I * 1.2) * std::cos(0.6)) < 1e-15);
  CHECK(std::abs(c2[1] - std::exp(I * 2.9) * std::sin(0.6)) < 1e-15);

  AngleCoordinates a3 = angles3(0.5, 1.1, 0.3, 2.2, 4.4);
  Vector c3 = coherent_state_fund(a3);
  CHECK(std::abs(c3[0] - std::exp(I * 0.3) * std::cos(0.5)) < 1e-15);
  CHECK(std::abs(c3[1] - std::exp(I * 2.2) * std::sin(0.5) * std::cos(1.1)) < 1e-15);
  CHECK(std::abs(c3[2] - std::exp(I * 4.4) * std::sin(0.5) * std::sin(1.1)) < 1e-15);
  CHECK(std::abs(c3.norm() - 1.0) < 1e-15);

  AngleCoordinates zero;
  zero.xi = {0, 0, 0};
  zero.phi = {0, 0, 0, 0};
  Vector hw = coherent_state_fund(zero);
  CHECK(hw[0] == Complex(1.0));
  CHECK(hw.tail(3).norm() == 0.0);

  CHECK(checks::fundamental_norm(5, 100, 17) < 1e-12);
}

TEST_CASE("phase-fixed state") {
  AngleCoordinates a2;
  a2.xi = {0.4};
  a2.phi = {1.7, 2.6};
  PhaseFixedState fixed = phase_fixed_state(a2);
  CHECK(fixed.fixed_component == 0);
  // (cos(t'/2), e^{i(phi_1 - phi_0)} sin(t'/2)) with t' = 2 * xi_0
  const double tp = 2 * 0.4;
  CHECK(std::abs(fixed.amplitudes[0] - Complex(std::cos(tp / 2))) < 1e-15);
  CHECK(std::abs(fixed.amplitudes[1] - std::exp(I * (2.6 - 1.7)) * std::sin(tp / 2)) < 1e-15);

  AngleCoordinates zero;
  zero.xi = {0, 0};
  zero.phi = {0, 0, 0};
  CHECK(max_abs(Vector(phase_fixed_state(zero).amplitudes -
                       coherent_state_fund(zero))) == 0.0);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    PhaseFixedState s = phase_fixed_state(random_angles(3, rng));
    CHECK(s.amplitudes[0].imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(s.amplitudes[0].real() >= 0.0);
    CHECK(std::abs(s.amplitudes.norm() - 1.0) < 1e-13);
  }

  // pole: first amplitude vanishes, next nonzero component is fixed instead
  AngleCoordinates pole;
  pole.xi = {half_pi, 0.3};
  pole.phi = {0.9, 1.4, 0.2};
  PhaseFixedState s = phase_fixed_state(pole);
  CHECK(s.fixed_component == 1);
  CHECK(s.amplitudes[1].imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("metric and measure") {
  AngleCoordinates a2;
  a2.xi = {0.77};
  a2.phi = {0.1, 0.2};
  auto g2 = metric_diag(a2);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0] == 1.0);
  CHECK(g2[1] == doctest::Approx(std::cos(0.77) * std::cos(0.77)).epsilon(1e-15));
  CHECK(g2[2] == doctest::Approx(std::sin(0.77) * std::sin(0.77)).epsilon(1e-15));

  AngleCoordinates a3 = angles3(0.5, 1.1, 0, 0, 0);
  auto g3 = metric_diag(a3);
  REQUIRE(g3.size() == 5);
  const double s2 = std::sin(0.5) * std::sin(0.5);
  CHECK(g3[2] == doctest::Approx(s2).epsilon(1e-15));
  CHECK(g3[3] == doctest::Approx(s2 * std::cos(1.1) * std::cos(1.1)).epsilon(1e-15));
  CHECK(g3[4] == doctest::Approx(s2 * std::sin(1.1) * std::sin(1.1)).epsilon(1e-15));

  AngleCoordinates degenerate;
  degenerate.xi = {0, 0};
  degenerate.phi = {0, 0, 0};
  auto gd = metric_diag(degenerate);
  CHECK(gd == std::vector<double>{1, 1, 0, 0, 0});

  CHECK(measure_density(a2) == doctest::Approx(std::cos(0.77) * std::sin(0.77)).epsilon(1e-15));

  AngleCoordinates a4;
  a4.xi = {0.5, 0.8, 1.2};
  a4.phi = {0, 0, 0, 0};
  const double expected4 = std::cos(0.5) * std::pow(std::sin(0.5), 5) * std::cos(0.8) *
                           std::pow(std::sin(0.8), 3) * std::cos(1.2) * std::sin(1.2);
  CHECK(measure_density(a4) == doctest::Approx(expected4).epsilon(1e-14));

  AngleCoordinates at_pole;
  at_pole.xi = {0.0, 0.4, 0.6};
  at_pole.phi = {0, 0, 0, 0};
  CHECK(measure_density(at_pole) == 0.0);

  CHECK(checks::measure_vs_metric(6, 100, 23) < 1e-12);
}

TEST_CASE("metric matches the embedding by finite differences") {
  CHECK(checks::metric_finite_difference(2, 10, 29, 1e-4) < 1e-5);
  CHECK(checks::metric_finite_difference(4, 10, 31, 1e-4) < 1e-5);
}

TEST_CASE("decompose: canonical cases") {
  DecompositionTree id = decompose(Matrix::Identity(4, 4));
  CHECK(id.theta() == 0.0);
  CHECK(id.phi() == 0.0);
  CHECK(max_abs(Matrix(build_group_element(id) - Matrix::Identity(4, 4))) < 1e-15);

  const double t = 0.9, p = 2.7;
  DecompositionTree tree = decompose(middle_matrix(4, t, p));
  CHECK(tree.theta() == doctest::Approx(t).epsilon(1e-13));
  CHECK(tree.phi() == doctest::Approx(p).epsilon(1e-13));
  CHECK(max_abs(Matrix(build_group_element(tree.left()) - Matrix::Identity(3, 3))) < 1e-13);
  CHECK(max_abs(Matrix(build_group_element(tree.right()) - Matrix::Identity(3, 3))) < 1e-13);

  Matrix not_unitary = 2.0 * Matrix::Identity(3, 3);
  CHECK_THROWS_AS(decompose(not_unitary), std::invalid_argument);
}

TEST_CASE("decompose: degenerate first entries") {
  // |U_11| = 1
  Matrix d = Matrix::Identity(3, 3);
  d(0, 0) = std::exp(I * 1.3);
  d(1, 1) = std::exp(-I * 1.3);
  CHECK(max_abs(Matrix(build_group_element(decompose(d)) - d)) < 1e-13);

  // U_11 = 0
  Matrix w = Matrix::Zero(3, 3);
  w(0, 1) = -1;
  w(1, 0) = 1;
  w(2, 2) = 1;
  DecompositionTree tree = decompose(w);
  CHECK(tree.theta() == doctest::Approx(half_pi).epsilon(1e-14));
  CHECK(tree.phi() == 0.0);
  CHECK(max_abs(Matrix(build_group_element(tree) - w)) < 1e-13);
}

TEST_CASE("decompose round trip on Haar-random elements") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    double dev = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      Matrix u = haar_random_su(n, rng);
      DecompositionTree tree = decompose(u);
      dev = std::max(dev, max_abs(Matrix(build_group_element(tree) - u)));
    }
    CHECK(dev < 1e-10);
  }
}

TEST_CASE("decompose handles structured zero-heavy inputs") {
  // cyclic permutation with the sign pushed into one column to fix det = 1
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    Matrix p = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) p((k + 1) % n, k) = 1.0;
    p.col(0) *= p.determinant() == Complex(1.0) ? 1.0 : -1.0;
    CHECK(max_abs(Matrix(build_group_element(decompose(p)) - p)) < 1e-12);
  }

  // anti-diagonal exchange
  Matrix x = Matrix::Zero(4, 4);
  x(0, 3) = 1;
  x(1, 2) = -1;
  x(2, 1) = 1;
  x(3, 0) = -1;
  REQUIRE(std::abs(x.determinant() - Complex(1.0)) < 1e-14);
  CHECK(max_abs(Matrix(build_group_element(decompose(x)) - x)) < 1e-12);

  // block supported entirely in the stabilizer
  std::mt19937_64 rng(97);
  Matrix b = Matrix::Identity(5, 5);
  b.bottomRightCorner(2, 2) = su2_matrix(0.8, 1.1, 2.2);
  CHECK(max_abs(Matrix(build_group_element(decompose(b)) - b)) < 1e-12);

  // first column concentrated on the last row
  Matrix h = haar_random_su(4, rng);
  Matrix s = Matrix::Zero(4, 4);
  s(3, 0) = 1;
  s(0, 1) = 1;
  s(1, 2) = 1;
  s(2, 3) = 1;
  s.col(0) *= s.determinant() == Complex(1.0) ? 1.0 : -1.0;
  Matrix u = s * (Matrix::Identity(4, 4) + (h - Matrix::Identity(4, 4)) * 0.0);
  CHECK(max_abs(Matrix(build_group_element(decompose(u)) - u)) < 1e-12);

  // diagonal phase matrix
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = std::exp(I * 0.9);
  d(1, 1) = std::exp(I * 1.7);
  d(2, 2) = std::exp(-I * 2.6);
  CHECK(max_abs(Matrix(build_group_element(decompose(d)) - d)) < 1e-12);
}

TEST_CASE("decompose angles land in canonical ranges") {
  std::mt19937_64 rng(43);
  Matrix u = haar_random_su(5, rng);
  std::function<void(const DecompositionTree&)> walk = [&](const DecompositionTree& t) {
    CHECK(t.theta() >= 0.0);
    CHECK(t.theta() <= half_pi);
    if (t.is_leaf()) {
      CHECK(t.phi1() >= 0.0);
      CHECK(t.phi1() < two_pi);
      CHECK(t.phi2() >= 0.0);
      CHECK(t.phi2() < two_pi);
      return;
    }
    CHECK(t.phi() >= 0.0);
    CHECK(t.phi() < two_pi);
    walk(t.left());
    walk(t.right());
  };
  walk(decompose(u));
}

TEST_CASE("left spine carries the coherent state, right factor stabilizes") {
  CHECK(checks::left_spine_first_column(5, 20, 47) < 1e-13);
  CHECK(checks::right_factor_fixes_highest_weight(5, 20, 53) == 0.0);
}

TEST_CASE("gauss decomposition of su(2)") {
  GaussParameters g0 = gauss_decomposition_su2(0, 0, 0);
  CHECK(g0.zeta == Complex(0.0));
  CHECK(g0.nu == 0.0);

  GaussParameters g1 = gauss_decomposition_su2(pi / 4, 0, 0);
  CHECK(std::abs(g1.zeta - Complex(1.0)) < 1e-15);
  CHECK(g1.nu == doctest::Approx(std::log(1.0 / std::sqrt(2.0))).epsilon(1e-14));

  GaussParameters g2 = gauss_decomposition_su2(pi / 3, 0, half_pi);
  CHECK(std::abs(g2.zeta - I * std::sqrt(3.0)) < 1e-14);
  CHECK(g2.nu == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(max_abs(Matrix(gauss_product_su2(g2, 0) - su2_matrix(pi / 3, 0, half_pi))) < 1e-15);

  CHECK_THROWS_AS(gauss_decomposition_su2(half_pi, 0, 0), std::domain_error);
  CHECK(checks::gauss_su2_sweep(8, 6) < 1e-12);
}

TEST_CASE("lambda displacements reproduce the parameterized forms") {
  Matrix id3 = displacement_su3(0, 0, 0, 0, 0);
  CHECK(max_abs(Matrix(id3 - Matrix::Identity(3, 3))) < 1e-14);
  Matrix id4 = displacement_su4(0, 0, 0, 0, 0, 0, 0);
  CHECK(max_abs(Matrix(id4 - Matrix::Identity(4, 4))) < 1e-14);

  CHECK(checks::displacement_su3_equivalence(25, 59) < 1e-12);
  CHECK(checks::displacement_su4_equivalence(25, 61) < 1e-12);

  AngleCoordinates a3 = angles3(0.4, 0.9, 1.3, 2.1, 5.0);
  Matrix d = displacement_lambda(3, a3);
  CHECK(max_abs(Vector(d.col(0) - coherent_state_fund(a3))) < 1e-13);

  AngleCoordinates bad;
  bad.xi = {0.1};
  bad.phi = {0.0, 0.0};
  CHECK_THROWS_AS(displacement_lambda(2, bad), std::invalid_argument);
}

TEST_CASE("tree json round trip") {
  std::mt19937_64 rng(67);
  DecompositionTree tree = random_tree(4, rng);
  DecompositionTree back = tree_from_json(tree_to_json(tree));
  CHECK(max_abs(Matrix(build_group_element(back) - build_group_element(tree))) == 0.0);
}

TEST_CASE("json parsing rejects malformed payloads") {
  using nlohmann::json;
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0]],[[1,0],[0,0]]]")),
                  std::invalid_argument);  // ragged rows
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0],[\"x\",0]]]")), std::invalid_argument);
  CHECK_THROWS_AS(angles_from_json(json::parse("{\"xi\":[0]}")), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_json(json::parse("{\"theta\":0,\"left\":{}}")),
                  std::invalid_argument);

  Matrix m(1, 2);
  m << Complex(0.5, -1.5), Complex(0, 2);
  CHECK(max_abs(Matrix(matrix_from_json(matrix_to_json(m)) - m)) == 0.0);
}

TEST_CASE("angle validation") {
  AngleCoordinates good;
  good.xi = {0.3};
  good.phi = {0.0, 1.0};
  CHECK_NOTHROW(good.validate());

  AngleCoordinates ragged;
  ragged.xi = {0.3, 0.4};
  ragged.phi = {0.0, 1.0};
  CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);

  AngleCoordinates out_of_range;
  out_of_range.xi = {2.0};
  out_of_range.phi = {0.0, 1.0};
  CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);

  AngleCoordinates bad_phase;
  bad_phase.xi = {0.3};
  bad_phase.phi = {0.0, 7.0};
  CHECK_THROWS_AS(bad_phase.validate(), std::invalid_argument);
}

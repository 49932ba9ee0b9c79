#include "suncs/checks.hpp"

#include <algorithm>
#include <cmath>

#include "suncs/fundamental.hpp"
#include "suncs/generators.hpp"
#include "suncs/haar.hpp"
#include "suncs/quadrature.hpp"
#include "suncs/symrep.hpp"

namespace suncs::checks {

namespace {

const Complex kI{0.0, 1.0};

Matrix pauli(int k) {
  Matrix m(2, 2);
  switch (k) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// generators

double generator_hermiticity_tracelessness(int n) {
  const GeneratorSet set = lambda_set(n);
  double dev = 0.0;
  for (const Matrix& m : set.matrices) {
    dev = std::max(dev, max_abs(Matrix(m - m.adjoint())));
    dev = std::max(dev, std::abs(m.trace()));
  }
  return dev;
}

double generator_orthonormality(int n) {
  const GeneratorSet set = lambda_set(n);
  double dev = 0.0;
  for (int a = 0; a < set.count(); ++a)
    for (int b = 0; b < set.count(); ++b) {
      const Complex tr = (set.matrices[a] * set.matrices[b]).trace();
      dev = std::max(dev, std::abs(tr - (a == b ? Complex(2.0) : Complex(0.0))));
    }
  return dev;
}

double beta_theta_commutators(int n) { return verify_beta_theta_commutators(n); }

double pauli_recovery() {
  const GeneratorSet set = lambda_set(2);
  double dev = 0.0;
  for (int k = 1; k <= 3; ++k) dev = std::max(dev, max_abs(Matrix(set.lambda(k) - pauli(k))));
  return dev;
}

double herm_exp_additivity(int max_n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    const Matrix h = random_hermitian(n, rng);
    const double s = uni(rng), t = uni(rng);
    const Matrix lhs = herm_exp(h, s) * herm_exp(h, t);
    dev = std::max(dev, max_abs(Matrix(lhs - herm_exp(h, s + t))));
    const Matrix u = herm_exp(h, t);
    dev = std::max(dev, max_abs(Matrix(u.adjoint() * u - Matrix::Identity(n, n))));
  }
  return dev;
}

// ---------------------------------------------------------------------------
// fundamental

double fundamental_norm(int n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d)
    dev = std::max(dev, std::abs(coherent_state_fund(random_angles(n, rng)).norm() - 1.0));
  return dev;
}

double build_unitarity(int n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const Matrix u = build_group_element(random_tree(n, rng));
    dev = std::max(dev, max_abs(Matrix(u.adjoint() * u - Matrix::Identity(n, n))));
    dev = std::max(dev, std::abs(u.determinant() - Complex(1.0)));
  }
  return dev;
}

double decompose_roundtrip(int n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const Matrix u = haar_random_su(n, rng);
    dev = std::max(dev, max_abs(Matrix(build_group_element(decompose(u)) - u)));
  }
  return dev;
}

double left_spine_first_column(int n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const DecompositionTree tree = random_left_spine_tree(n, rng);
    const Matrix u = build_group_element(tree);
    const Vector expected = coherent_state_fund(left_spine_angles(tree));
    dev = std::max(dev, max_abs(Vector(u.col(0) - expected)));
  }
  return dev;
}

double right_factor_fixes_highest_weight(int n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const DecompositionTree tree =
        DecompositionTree::node(0.0, 0.0, DecompositionTree::identity(n - 1),
                                random_tree(n - 1, rng));
    Vector e1 = Vector::Zero(n);
    e1[0] = 1.0;
    dev = std::max(dev, max_abs(Vector(build_group_element(tree) * e1 - e1)));
  }
  return dev;
}

namespace {

// Coordinate k in metric order (xi_0, phi_0, ..., xi_{n-2}, phi_{n-2}, phi_{n-1}).
double& metric_coordinate(AngleCoordinates& a, int k) {
  const int n = a.group_dim();
  if (k == 2 * (n - 1)) return a.phi[n - 1];
  return k % 2 == 0 ? a.xi[k / 2] : a.phi[k / 2];
}

}  // namespace

double metric_finite_difference(int n, int draws, std::uint64_t seed, double step) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const AngleCoordinates a = random_angles(n, rng, 0.1);
    const std::vector<double> g = metric_diag(a);
    const int dims = 2 * n - 1;
    // per-coordinate central differences
    for (int k = 0; k < dims; ++k) {
      AngleCoordinates plus = a, minus = a;
      metric_coordinate(plus, k) += step;
      metric_coordinate(minus, k) -= step;
      const Vector diff = 0.5 * (coherent_state_fund(plus) - coherent_state_fund(minus));
      dev = std::max(dev, std::abs(diff.squaredNorm() / (step * step) - g[k]));
    }
    // one random direction
    AngleCoordinates plus = a, minus = a;
    double quad = 0.0;
    std::vector<double> dir(dims);
    double norm = 0.0;
    for (double& x : dir) {
      x = uni(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (int k = 0; k < dims; ++k) {
      const double delta = step * dir[k] / norm;
      metric_coordinate(plus, k) += delta;
      metric_coordinate(minus, k) -= delta;
      quad += g[k] * delta * delta;
    }
    const Vector diff = 0.5 * (coherent_state_fund(plus) - coherent_state_fund(minus));
    dev = std::max(dev, std::abs(diff.squaredNorm() - quad) / (step * step));
  }
  return dev;
}

double measure_vs_metric(int n, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const AngleCoordinates a = random_angles(n, rng);
    const std::vector<double> g = metric_diag(a);
    double det = 1.0;
    for (double c : g) det *= c;
    dev = std::max(dev, std::abs(measure_density(a) - std::sqrt(det)));
  }
  return dev;
}

double gauss_su2_sweep(int theta_steps, int phase_steps) {
  double dev = 0.0;
  for (int it = 0; it < theta_steps; ++it) {
    const double theta = half_pi * it / theta_steps;  // excludes pi/2
    for (int i1 = 0; i1 < phase_steps; ++i1)
      for (int i2 = 0; i2 < phase_steps; ++i2) {
        const double phi1 = two_pi * i1 / phase_steps;
        const double phi2 = two_pi * i2 / phase_steps;
        const GaussParameters g = gauss_decomposition_su2(theta, phi1, phi2);
        dev = std::max(dev,
                       max_abs(Matrix(gauss_product_su2(g, phi1) - su2_matrix(theta, phi1, phi2))));
      }
  }
  return dev;
}

double displacement_su3_equivalence(int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  std::uniform_real_distribution<double> polar(0.0, half_pi);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const double alpha = phase(rng), gamma = phase(rng);
    const double beta = -polar(rng);
    const double theta = polar(rng), phi = phase(rng);
    const Matrix disp = displacement_su3(alpha, beta, gamma, theta, phi);

    AngleCoordinates a;
    a.xi = {theta, -beta};
    a.phi = {phi, wrap_two_pi(alpha + gamma), wrap_two_pi(gamma - alpha)};
    Matrix l = Matrix::Identity(3, 3);
    l.bottomRightCorner(2, 2) = su2_matrix(a.xi[1], a.phi[1], a.phi[2]);
    dev = std::max(dev, max_abs(Matrix(disp - l * middle_matrix(3, theta, phi))));
    dev = std::max(dev, max_abs(Vector(disp.col(0) - coherent_state_fund(a))));
  }
  return dev;
}

double displacement_su4_equivalence(int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  std::uniform_real_distribution<double> polar(0.0, half_pi);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const double alpha = phase(rng), gamma = phase(rng);
    const double beta = -polar(rng);
    const double xi1 = polar(rng), phi1 = phase(rng);
    const double theta = polar(rng), phi = phase(rng);
    const Matrix disp = displacement_su4(alpha, beta, gamma, xi1, phi1, theta, phi);

    AngleCoordinates a;
    a.xi = {theta, xi1, -beta};
    a.phi = {phi, phi1, wrap_two_pi(alpha + gamma), wrap_two_pi(gamma - alpha)};
    dev = std::max(dev, max_abs(Vector(disp.col(0) - coherent_state_fund(a))));
  }
  return dev;
}

// ---------------------------------------------------------------------------
// symrep

double ladder_adjointness(int n, int N) {
  const OccupationBasis basis(n, N);
  double dev = 0.0;
  for (int h = 1; h <= n; ++h)
    for (int j = h + 1; j <= n; ++j)
      dev = std::max(dev, max_abs(Matrix(raising_op(basis, h, j).dense().adjoint() -
                                         lowering_op(basis, j, h).dense())));
  return dev;
}

double highest_weight_annihilation(int n, int N) {
  const OccupationBasis basis(n, N);
  std::vector<int> hw(n, 0);
  hw[0] = N;
  const int idx = basis.index_of(hw);
  Vector e = Vector::Zero(basis.dim());
  e[idx] = 1.0;
  double dev = 0.0;
  for (int h = 1; h <= n; ++h)
    for (int j = h + 1; j <= n; ++j) dev = std::max(dev, raising_op(basis, h, j).apply(e).norm());
  return dev;
}

double lift_ladder_consistency(int n, int N) {
  const OccupationBasis basis(n, N);
  double dev = 0.0;
  for (int h = 1; h <= n; ++h)
    for (int j = 1; j <= n; ++j) {
      if (h == j) continue;
      const Matrix lifted = lift_generator(basis, elementary(h, j, n)).dense();
      const Matrix direct =
          h < j ? raising_op(basis, h, j).dense() : lowering_op(basis, h, j).dense();
      dev = std::max(dev, max_abs(Matrix(lifted - direct)));
    }
  return dev;
}

double lift_cartan_and_number(int n, int N) {
  const OccupationBasis basis(n, N);
  const GeneratorSet set = lambda_set(n);
  double dev = 0.0;
  for (int h = 1; h <= n - 1; ++h) {
    // eta^h_h is lambda_{(h+1)^2 - 1} in the blockwise numbering
    const Matrix& eta = set.lambda((h + 1) * (h + 1) - 1);
    dev = std::max(
        dev, max_abs(Matrix(lift_generator(basis, eta).dense() - cartan_op(basis, h).dense())));
  }
  const Matrix number = lift_generator(basis, Matrix::Identity(n, n)).dense();
  dev = std::max(dev, max_abs(Matrix(
                          number - static_cast<double>(N) * Matrix::Identity(basis.dim(), basis.dim()))));
  return dev;
}

double rep_commutators(int n, int N) {
  const OccupationBasis basis(n, N);
  std::vector<Matrix> lifted(static_cast<std::size_t>(n) * n);
  for (int h = 1; h <= n; ++h)
    for (int j = 1; j <= n; ++j)
      lifted[(h - 1) * n + (j - 1)] = lift_generator(basis, elementary(h, j, n)).dense();
  const auto op = [&](int h, int j) -> const Matrix& { return lifted[(h - 1) * n + (j - 1)]; };
  double dev = 0.0;
  const int dim = basis.dim();
  for (int h = 1; h <= n; ++h)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          Matrix rhs = Matrix::Zero(dim, dim);
          if (j == k) rhs += op(h, l);
          if (l == h) rhs -= op(k, j);
          dev = std::max(dev,
                         max_abs(Matrix(op(h, j) * op(k, l) - op(k, l) * op(h, j) - rhs)));
        }
  return dev;
}

double oracle_equivalence(int n, int N, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const OccupationBasis basis(n, N);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const AngleCoordinates a = random_angles(n, rng, 0.05);
    const Vector direct = coherent_state(basis, a);
    dev = std::max(dev, max_abs(Vector(direct - tensor_power_oracle(basis, a))));
    dev = std::max(dev, max_abs(Vector(direct - stereographic_state(basis, angles_to_stereo(a)))));
    dev = std::max(dev, std::abs(direct.norm() - 1.0));
  }
  return dev;
}

double overlap_identity(int n, int N, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const OccupationBasis basis(n, N);
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const AngleCoordinates a = random_angles(n, rng);
    const AngleCoordinates b = random_angles(n, rng);
    const Complex closed = overlap_closed(a, b, N);
    const Complex direct = coherent_state(basis, a).dot(coherent_state(basis, b));
    dev = std::max(dev, std::abs(closed - direct));
    Complex powered{1.0, 0.0};
    const Complex base = overlap_closed(a, b, 1);
    for (int k = 0; k < N; ++k) powered *= base;
    dev = std::max(dev, std::abs(closed - powered));
    dev = std::max(dev, std::abs(overlap_closed(a, a, N) - Complex(1.0)));
  }
  return dev;
}

double lifted_displacement_su3(int N, int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const OccupationBasis basis(3, N);
  const GeneratorSet set = lambda_set(3);
  const Matrix l2 = lift_generator(basis, set.lambda(2)).dense();
  const Matrix l3 = lift_generator(basis, set.lambda(3)).dense();
  const Matrix l7 = lift_generator(basis, set.lambda(7)).dense();
  const Matrix l8p = lift_generator(basis, primed_lambda(3, 8)).dense();
  Vector hw = Vector::Zero(basis.dim());
  hw[0] = 1.0;  // the first basis state is (N, 0, 0)
  double dev = 0.0;
  for (int d = 0; d < draws; ++d) {
    const AngleCoordinates a = random_angles(3, rng);
    const double alpha = (a.phi[1] - a.phi[2]) / 2;
    const double gamma = (a.phi[1] + a.phi[2]) / 2;
    const double beta = -a.xi[1];
    const Vector state = herm_exp(l8p, alpha) * herm_exp(l7, beta) * herm_exp(l8p, gamma) *
                         herm_exp(l3, a.phi[0] / 2) * herm_exp(l2, -a.xi[0]) *
                         herm_exp(l3, a.phi[0] / 2) * hw;
    dev = std::max(dev, max_abs(Vector(state - coherent_state(basis, a))));
  }
  return dev;
}

// ---------------------------------------------------------------------------
// quadrature

double phase_orthogonality(int N) {
  const int q = 2 * N + 1;
  double dev = 0.0;
  for (int k = 1; k <= 2 * N; ++k) {
    Complex sum{0.0, 0.0};
    for (int i = 0; i < q; ++i) sum += std::exp(kI * (k * two_pi * i / q));
    dev = std::max(dev, std::abs(sum) * two_pi / q);
  }
  return dev;
}

double xi_moments(int max_m) {
  double dev = 0.0;
  for (int m = 0; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k)
      dev = std::max(dev,
                     std::abs(xi_moment_quadrature(m, k, m + 2) - xi_moment_exact(m, k)));
  return dev;
}

double volume_error(int n) {
  const GridSpec spec = volume_defaults(n);
  const QuadratureGrid grid(n, spec.polar_order, spec.phase_order);
  return std::abs(coset_volume(n, grid) - coset_volume_exact(n));
}

double unity_residual(int n, int N) {
  const GridSpec spec = unity_thresholds(n, N);
  const QuadratureGrid grid(n, spec.polar_order, spec.phase_order);
  return resolution_of_unity(n, N, grid).max_abs_deviation;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> run_suite(int n, int N, std::uint64_t seed, double tol_identity,
                                   double tol_reconstruction) {
  std::vector<CheckResult> out;
  const auto add = [&out](std::string name, double deviation, double tolerance) {
    out.push_back({std::move(name), deviation, tolerance, deviation <= tolerance});
  };

  add("generators/hermiticity_tracelessness", generator_hermiticity_tracelessness(n), tol_identity);
  add("generators/orthonormality", generator_orthonormality(n), tol_identity);
  add("generators/beta_theta_commutators", beta_theta_commutators(n), tol_identity);
  add("generators/pauli_recovery", pauli_recovery(), tol_identity);
  add("generators/herm_exp_additivity", herm_exp_additivity(8, 20, seed), 1e-11);

  add("fundamental/state_norm", fundamental_norm(n, 50, seed), tol_identity);
  add("fundamental/build_unitarity", build_unitarity(n, 20, seed), tol_identity);
  add("fundamental/decompose_roundtrip", decompose_roundtrip(n, 25, seed), tol_reconstruction);
  add("fundamental/left_spine_first_column", left_spine_first_column(n, 20, seed), tol_identity);
  add("fundamental/right_factor_stabilizer", right_factor_fixes_highest_weight(n, 20, seed),
      1e-15);
  add("fundamental/metric_finite_difference", metric_finite_difference(n, 20, seed, 1e-4), 1e-5);
  add("fundamental/measure_vs_metric", measure_vs_metric(n, 50, seed), tol_identity);
  add("fundamental/gauss_su2_product", gauss_su2_sweep(8, 6), tol_identity);
  add("fundamental/displacement_su3", displacement_su3_equivalence(20, seed), tol_identity);
  add("fundamental/displacement_su4", displacement_su4_equivalence(20, seed), tol_identity);

  add("symrep/ladder_adjointness", ladder_adjointness(n, N), 1e-15);
  add("symrep/highest_weight_annihilation", highest_weight_annihilation(n, N), 1e-15);
  add("symrep/lift_ladder_consistency", lift_ladder_consistency(n, N), 1e-15);
  add("symrep/lift_cartan_and_number", lift_cartan_and_number(n, N), tol_identity);
  add("symrep/rep_commutators", rep_commutators(n, N), tol_identity);
  add("symrep/oracle_equivalence", oracle_equivalence(n, N, 50, seed), tol_identity);
  add("symrep/overlap_identity", overlap_identity(n, N, 50, seed), tol_identity);
  add("symrep/lifted_displacement_su3", lifted_displacement_su3(std::min(N, 3), 10, seed),
      tol_reconstruction);

  add("quadrature/phase_orthogonality", phase_orthogonality(N), 1e-13);
  add("quadrature/xi_moments", xi_moments(12), tol_identity);
  add("quadrature/coset_volume", volume_error(n), tol_reconstruction);

  // Exactness grids grow as (N+n)^{n-1} (2N+1)^n points, so the unity check
  // runs at the largest configuration within a fixed budget (N shrinks first,
  // then n); the check name records what actually ran.
  const auto grid_points = [](int gn, int gN) {
    const GridSpec s = unity_thresholds(gn, gN);
    double pts = 1.0;
    for (int k = 0; k < gn - 1; ++k) pts *= s.polar_order;
    for (int k = 0; k < gn; ++k) pts *= s.phase_order;
    return pts;
  };
  constexpr double kUnityPointBudget = 5e6;
  int un = n, uN = N;
  while (uN > 1 && grid_points(un, uN) > kUnityPointBudget) --uN;
  while (un > 2 && grid_points(un, uN) > kUnityPointBudget) --un;
  add("quadrature/unity_residual[n=" + std::to_string(un) + ",N=" + std::to_string(uN) + "]",
      unity_residual(un, uN), tol_reconstruction);

  return out;
}

}  // namespace suncs::checks

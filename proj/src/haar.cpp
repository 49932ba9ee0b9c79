#include "suncs/haar.hpp"

#include <cmath>

namespace suncs {

Matrix haar_random_su(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    q.col(c) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
  }
  const double det_phase = std::arg(q.determinant());
  return q * std::exp(Complex(0.0, -det_phase / n));
}

Matrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (a + a.adjoint());
}

AngleCoordinates random_angles(int n, std::mt19937_64& rng, double xi_margin) {
  std::uniform_real_distribution<double> polar(xi_margin, half_pi - xi_margin);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  AngleCoordinates a;
  a.xi.resize(n - 1);
  a.phi.resize(n);
  for (double& x : a.xi) x = polar(rng);
  for (double& p : a.phi) p = phase(rng);
  return a;
}

DecompositionTree random_tree(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> polar(0.0, half_pi);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  if (n == 2) return DecompositionTree::su2(polar(rng), phase(rng), phase(rng));
  return DecompositionTree::node(polar(rng), phase(rng), random_tree(n - 1, rng),
                                 random_tree(n - 1, rng));
}

DecompositionTree random_left_spine_tree(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> polar(0.0, half_pi);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  if (n == 2) return DecompositionTree::su2(polar(rng), phase(rng), phase(rng));
  return DecompositionTree::node(polar(rng), phase(rng), random_left_spine_tree(n - 1, rng),
                                 DecompositionTree::identity(n - 1));
}

}  // namespace suncs

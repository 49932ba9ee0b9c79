#include "suncs/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace suncs {

namespace {

const Complex kI{0.0, 1.0};

Matrix theta_matrix(int h, int j, int n) {
  return elementary(h, j, n) + elementary(j, h, n);
}

Matrix beta_matrix(int h, int j, int n) {
  return -kI * (elementary(h, j, n) - elementary(j, h, n));
}

Matrix eta_matrix(int m, int n) {
  Matrix d = Matrix::Zero(n, n);
  for (int k = 1; k <= m; ++k) d(k - 1, k - 1) = 1.0;
  d(m, m) = -static_cast<double>(m);
  return std::sqrt(2.0 / (m * (m + 1.0))) * d;
}

// theta^a_b extended to a >= b: theta^a_b := theta^b_a, theta^a_a := 2 e^a_a.
Matrix theta_ext(int a, int b, int n) {
  if (a == b) return 2.0 * elementary(a, a, n);
  if (a > b) std::swap(a, b);
  return theta_matrix(a, b, n);
}

}  // namespace

std::string GeneratorLabel::str() const {
  const char* name = kind == GeneratorKind::theta ? "theta"
                     : kind == GeneratorKind::beta ? "beta"
                                                   : "eta";
  return std::string(name) + "^" + std::to_string(h) + "_" + std::to_string(j);
}

const Matrix& GeneratorSet::lambda(int index) const {
  if (index < 1 || index > count())
    throw std::invalid_argument("GeneratorSet::lambda: index out of range");
  return matrices[index - 1];
}

Matrix elementary(int h, int j, int n) {
  if (n < 1 || h < 1 || h > n || j < 1 || j > n)
    throw std::invalid_argument("elementary: index out of range");
  Matrix m = Matrix::Zero(n, n);
  m(h - 1, j - 1) = 1.0;
  return m;
}

GeneratorSet lambda_set(int n) {
  if (n < 2) throw std::invalid_argument("lambda_set: n must be >= 2");
  GeneratorSet set;
  set.n = n;
  set.matrices.reserve(n * n - 1);
  set.labels.reserve(n * n - 1);
  for (int j = 2; j <= n; ++j) {
    for (int h = 1; h < j; ++h) {
      set.matrices.push_back(theta_matrix(h, j, n));
      set.labels.push_back({GeneratorKind::theta, h, j});
      set.matrices.push_back(beta_matrix(h, j, n));
      set.labels.push_back({GeneratorKind::beta, h, j});
    }
    set.matrices.push_back(eta_matrix(j - 1, n));
    set.labels.push_back({GeneratorKind::eta, j - 1, j - 1});
  }
  return set;
}

Matrix primed_lambda(int n, int which) {
  if (which == 8) {
    if (n < 3) throw std::invalid_argument("primed_lambda: lambda_8' needs n >= 3");
    return (std::sqrt(3.0) * eta_matrix(2, n) - eta_matrix(1, n)) / 2.0;
  }
  if (which == 15) {
    if (n < 4) throw std::invalid_argument("primed_lambda: lambda_15' needs n >= 4");
    return (std::sqrt(6.0) * eta_matrix(3, n) - std::sqrt(3.0) * eta_matrix(2, n)) / 3.0;
  }
  throw std::invalid_argument("primed_lambda: which must be 8 or 15");
}

double verify_beta_theta_commutators(int n) {
  if (n < 2) throw std::invalid_argument("verify_beta_theta_commutators: n must be >= 2");
  double dev = 0.0;
  for (int h = 1; h <= n; ++h)
    for (int j = h + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int e = k + 1; e <= n; ++e) {
          Matrix b = beta_matrix(h, j, n);
          Matrix t = theta_matrix(k, e, n);
          Matrix lhs = b * t - t * b;
          Matrix rhs = Matrix::Zero(n, n);
          if (k == j) rhs -= kI * theta_ext(h, e, n);
          if (h == e) rhs += kI * theta_ext(k, j, n);
          if (k == h) rhs += kI * theta_ext(j, e, n);
          if (j == e) rhs -= kI * theta_ext(k, h, n);
          dev = std::max(dev, max_abs(Matrix(lhs - rhs)));
        }
  return dev;
}

Matrix herm_exp(const Matrix& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("herm_exp: matrix must be square");
  if (max_abs(Matrix(h - h.adjoint())) > 1e-10)
    throw std::invalid_argument("herm_exp: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases[k] = std::exp(kI * (t * w[k]));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace suncs

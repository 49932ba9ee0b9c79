#include "suncs/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suncs/generators.hpp"

namespace suncs {

namespace {

const Complex kI{0.0, 1.0};

void require_consistent(const AngleCoordinates& a) {
  if (a.phi.size() < 2 || a.xi.size() + 1 != a.phi.size())
    throw std::invalid_argument("AngleCoordinates: xi length must be phi length - 1 (n >= 2)");
}

Complex unit_phase(double t) { return std::exp(Complex(0.0, t)); }

}  // namespace

// ---------------------------------------------------------------------------
// DecompositionTree

DecompositionTree DecompositionTree::su2(double theta, double phi1, double phi2) {
  DecompositionTree t;
  t.n_ = 2;
  t.theta_ = theta;
  t.a_ = phi1;
  t.b_ = phi2;
  return t;
}

DecompositionTree DecompositionTree::node(double theta, double phi, DecompositionTree left,
                                          DecompositionTree right) {
  if (left.group_dim() != right.group_dim())
    throw std::invalid_argument("DecompositionTree::node: subtree sizes differ");
  DecompositionTree t;
  t.n_ = left.group_dim() + 1;
  t.theta_ = theta;
  t.a_ = phi;
  t.left_ = std::make_unique<DecompositionTree>(std::move(left));
  t.right_ = std::make_unique<DecompositionTree>(std::move(right));
  return t;
}

DecompositionTree DecompositionTree::identity(int n) {
  if (n < 2) throw std::invalid_argument("DecompositionTree::identity: n must be >= 2");
  if (n == 2) return su2(0.0, 0.0, 0.0);
  return node(0.0, 0.0, identity(n - 1), identity(n - 1));
}

DecompositionTree::DecompositionTree(const DecompositionTree& other)
    : n_(other.n_),
      theta_(other.theta_),
      a_(other.a_),
      b_(other.b_),
      left_(other.left_ ? std::make_unique<DecompositionTree>(*other.left_) : nullptr),
      right_(other.right_ ? std::make_unique<DecompositionTree>(*other.right_) : nullptr) {}

DecompositionTree& DecompositionTree::operator=(const DecompositionTree& other) {
  if (this != &other) *this = DecompositionTree(other);
  return *this;
}

double DecompositionTree::phi() const {
  if (is_leaf()) throw std::logic_error("DecompositionTree::phi: leaf has phi1/phi2");
  return a_;
}

double DecompositionTree::phi1() const {
  if (!is_leaf()) throw std::logic_error("DecompositionTree::phi1: not a leaf");
  return a_;
}

double DecompositionTree::phi2() const {
  if (!is_leaf()) throw std::logic_error("DecompositionTree::phi2: not a leaf");
  return b_;
}

const DecompositionTree& DecompositionTree::left() const {
  if (is_leaf()) throw std::logic_error("DecompositionTree::left: leaf has no subtrees");
  return *left_;
}

const DecompositionTree& DecompositionTree::right() const {
  if (is_leaf()) throw std::logic_error("DecompositionTree::right: leaf has no subtrees");
  return *right_;
}

// ---------------------------------------------------------------------------
// Group elements

Matrix su2_matrix(double theta, double phi1, double phi2) {
  const double c = std::cos(theta), s = std::sin(theta);
  Matrix g(2, 2);
  g(0, 0) = c * unit_phase(phi1);
  g(0, 1) = -s * unit_phase(-phi2);
  g(1, 0) = s * unit_phase(phi2);
  g(1, 1) = c * unit_phase(-phi1);
  return g;
}

Matrix middle_matrix(int n, double theta, double phi) {
  if (n < 2) throw std::invalid_argument("middle_matrix: n must be >= 2");
  const double c = std::cos(theta), s = std::sin(theta);
  Matrix m = Matrix::Identity(n, n);
  m(0, 0) = c * unit_phase(phi);
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c * unit_phase(-phi);
  return m;
}

Matrix build_group_element(const DecompositionTree& tree) {
  if (tree.is_leaf()) return su2_matrix(tree.theta(), tree.phi1(), tree.phi2());
  const int n = tree.group_dim();
  Matrix l = Matrix::Identity(n, n);
  l.bottomRightCorner(n - 1, n - 1) = build_group_element(tree.left());
  Matrix r = Matrix::Identity(n, n);
  r.bottomRightCorner(n - 1, n - 1) = build_group_element(tree.right());
  return l * middle_matrix(n, tree.theta(), tree.phi()) * r;
}

bool is_special_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() < 1) return false;
  const Eigen::Index n = u.rows();
  if (max_abs(Matrix(u.adjoint() * u - Matrix::Identity(n, n))) >= tol) return false;
  return std::abs(u.determinant() - Complex(1.0)) < tol;
}

namespace {

DecompositionTree decompose_recursive(const Matrix& u) {
  const int n = static_cast<int>(u.rows());
  if (n == 2) {
    const double theta = std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
    const double phi1 = wrap_two_pi(std::arg(u(0, 0)));
    const double phi2 = wrap_two_pi(std::arg(u(1, 0)));
    return DecompositionTree::su2(theta, phi1, phi2);
  }

  // Rotate the sub-column (u_21,...,u_n1) onto (r, 0, ..., 0) with a chain of
  // unit-determinant 2x2 eliminations working from the bottom row upward.
  Matrix v = Matrix::Identity(n - 1, n - 1);
  Vector col = u.col(0).tail(n - 1);
  for (int k = n - 2; k >= 1; --k) {
    const Complex a = col[k - 1], b = col[k];
    const double rho = std::sqrt(std::norm(a) + std::norm(b));
    if (rho == 0.0) continue;
    const Eigen::RowVectorXcd top = (std::conj(a) * v.row(k - 1) + std::conj(b) * v.row(k)) / rho;
    const Eigen::RowVectorXcd bot = (-b * v.row(k - 1) + a * v.row(k)) / rho;
    v.row(k - 1) = top;
    v.row(k) = bot;
    col[k - 1] = rho;
    col[k] = 0.0;
  }
  const double r = std::real(col[0]);

  const double theta = std::atan2(r, std::abs(u(0, 0)));
  const double phi = wrap_two_pi(std::arg(u(0, 0)));  // arg(0) = 0 at the pole

  Matrix w = u;
  w.bottomRows(n - 1) = v * u.bottomRows(n - 1);
  const Matrix t = middle_matrix(n, theta, phi).adjoint() * w;
  const Matrix y = t.bottomRightCorner(n - 1, n - 1);

  return DecompositionTree::node(theta, phi, decompose_recursive(v.adjoint()),
                                 decompose_recursive(y));
}

}  // namespace

DecompositionTree decompose(const Matrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() < 2)
    throw std::invalid_argument("decompose: need a square matrix of size >= 2");
  if (!is_special_unitary(u, tol))
    throw std::invalid_argument("decompose: input is not special unitary within tolerance");
  return decompose_recursive(u);
}

AngleCoordinates left_spine_angles(const DecompositionTree& tree) {
  AngleCoordinates a;
  const DecompositionTree* t = &tree;
  while (!t->is_leaf()) {
    a.xi.push_back(t->theta());
    a.phi.push_back(t->phi());
    t = &t->left();
  }
  a.xi.push_back(t->theta());
  a.phi.push_back(t->phi1());
  a.phi.push_back(t->phi2());
  return a;
}

// ---------------------------------------------------------------------------
// States, metric, measure

Vector coherent_state_fund(const AngleCoordinates& angles) {
  require_consistent(angles);
  const int n = angles.group_dim();
  Vector c(n);
  double sinprod = 1.0;
  for (int k = 0; k < n - 1; ++k) {
    c[k] = sinprod * std::cos(angles.xi[k]) * unit_phase(angles.phi[k]);
    sinprod *= std::sin(angles.xi[k]);
  }
  c[n - 1] = sinprod * unit_phase(angles.phi[n - 1]);
  return c;
}

PhaseFixedState phase_fixed_state(const AngleCoordinates& angles) {
  Vector c = coherent_state_fund(angles);
  int k = 0;
  while (k + 1 < c.size() && std::abs(c[k]) < 1e-12) ++k;
  const Complex phase = c[k] / std::abs(c[k]);
  return {c / phase, k};
}

std::vector<double> metric_diag(const AngleCoordinates& angles) {
  require_consistent(angles);
  const int n = angles.group_dim();
  std::vector<double> g;
  g.reserve(2 * n - 1);
  double sin2 = 1.0;
  for (int k = 0; k < n - 1; ++k) {
    g.push_back(sin2);
    const double c = std::cos(angles.xi[k]);
    g.push_back(sin2 * c * c);
    const double s = std::sin(angles.xi[k]);
    sin2 *= s * s;
  }
  g.push_back(sin2);
  return g;
}

double measure_density(const AngleCoordinates& angles) {
  require_consistent(angles);
  const int n = angles.group_dim();
  double d = 1.0;
  for (int k = 0; k <= n - 2; ++k)
    d *= std::cos(angles.xi[k]) * std::pow(std::sin(angles.xi[k]), 2 * (n - k) - 3);
  return d;
}

// ---------------------------------------------------------------------------
// Gauss decomposition

GaussParameters gauss_decomposition_su2(double theta, double phi1, double phi2) {
  if (!(theta >= 0.0 && theta < half_pi))
    throw std::domain_error("gauss_decomposition_su2: theta must lie in [0, pi/2)");
  return {std::tan(theta) * unit_phase(phi2 - phi1), std::log(std::cos(theta))};
}

Matrix gauss_product_su2(const GaussParameters& g, double phi1) {
  Matrix lower = Matrix::Identity(2, 2);
  lower(1, 0) = g.zeta;
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = std::exp(g.nu);
  diag(1, 1) = std::exp(-g.nu);
  Matrix upper = Matrix::Identity(2, 2);
  upper(0, 1) = -std::conj(g.zeta);
  Matrix phase = Matrix::Zero(2, 2);
  phase(0, 0) = unit_phase(phi1);
  phase(1, 1) = unit_phase(-phi1);
  return lower * diag * upper * phase;
}

// ---------------------------------------------------------------------------
// Lambda displacements

Matrix displacement_su3(double alpha, double beta, double gamma, double theta, double phi) {
  const GeneratorSet g = lambda_set(3);
  const Matrix l8p = primed_lambda(3, 8);
  return herm_exp(l8p, alpha) * herm_exp(g.lambda(7), beta) * herm_exp(l8p, gamma) *
         herm_exp(g.lambda(3), phi / 2) * herm_exp(g.lambda(2), -theta) *
         herm_exp(g.lambda(3), phi / 2);
}

Matrix displacement_su4(double alpha, double beta, double gamma, double xi1, double phi1,
                        double theta, double phi) {
  const GeneratorSet g = lambda_set(4);
  const Matrix l15p = primed_lambda(4, 15);
  const Matrix l8p = primed_lambda(4, 8);
  return herm_exp(l15p, alpha) * herm_exp(g.lambda(14), beta) * herm_exp(l15p, gamma) *
         herm_exp(l8p, phi1 / 2) * herm_exp(g.lambda(7), -xi1) * herm_exp(l8p, phi1 / 2) *
         herm_exp(g.lambda(3), phi / 2) * herm_exp(g.lambda(2), -theta) *
         herm_exp(g.lambda(3), phi / 2);
}

Matrix displacement_lambda(int n, const AngleCoordinates& angles) {
  require_consistent(angles);
  if (angles.group_dim() != n)
    throw std::invalid_argument("displacement_lambda: angle count does not match n");
  const double alpha = (angles.phi[n - 2] - angles.phi[n - 1]) / 2;
  const double gamma = (angles.phi[n - 2] + angles.phi[n - 1]) / 2;
  const double beta = -angles.xi[n - 2];
  if (n == 3) return displacement_su3(alpha, beta, gamma, angles.xi[0], angles.phi[0]);
  if (n == 4)
    return displacement_su4(alpha, beta, gamma, angles.xi[1], angles.phi[1], angles.xi[0],
                            angles.phi[0]);
  throw std::invalid_argument("displacement_lambda: only n = 3 and n = 4 are defined");
}

}  // namespace suncs

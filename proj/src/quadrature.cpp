#include "suncs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace suncs {

void gauss_legendre_01(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw std::invalid_argument("gauss_legendre_01: order must be >= 1");
  nodes.resize(order);
  weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Newton iteration on P_order over t in (-1, 1).
    double t = std::cos(pi * (i + 0.75) / (order + 0.5));
    double p1 = t, p0 = 1.0, dp = 1.0;
    for (int iter = 0; iter < 64; ++iter) {
      p0 = 1.0;
      p1 = t;
      for (int l = 2; l <= order; ++l) {
        const double p2 = ((2 * l - 1) * t * p1 - (l - 1) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p1 = t;
        p0 = 1.0;
      }
      dp = order * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    nodes[i] = 0.5 * (1.0 - t);
    weights[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

QuadratureGrid::QuadratureGrid(int n, int polar_order, int phase_order)
    : n_(n), polar_order_(polar_order), phase_order_(phase_order) {
  if (n < 2) throw std::invalid_argument("QuadratureGrid: n must be >= 2");
  if (polar_order < 1 || phase_order < 1)
    throw std::invalid_argument("QuadratureGrid: orders must be >= 1");
  std::vector<double> x, w;
  gauss_legendre_01(polar_order, x, w);
  xi_nodes_.resize(polar_order);
  for (int i = 0; i < polar_order; ++i) xi_nodes_[i] = std::acos(std::sqrt(x[i]));
  axis_weights_.assign(n - 1, std::vector<double>(polar_order));
  for (int axis = 0; axis < n - 1; ++axis) {
    // d mu factor cos(xi) sin^{2(n-axis)-3}(xi) d xi becomes
    // (1/2) (1-x)^{n-axis-2} dx under x = cos^2(xi).
    const int expo = n - axis - 2;
    for (int i = 0; i < polar_order; ++i)
      axis_weights_[axis][i] = 0.5 * w[i] * std::pow(1.0 - x[i], expo);
  }
}

std::size_t QuadratureGrid::size() const {
  std::size_t s = 1;
  for (int k = 0; k < n_ - 1; ++k) s *= static_cast<std::size_t>(polar_order_);
  for (int k = 0; k < n_; ++k) s *= static_cast<std::size_t>(phase_order_);
  return s;
}

QuadratureGrid::Point QuadratureGrid::point(std::size_t flat) const {
  Point p;
  p.angles.xi.resize(n_ - 1);
  p.angles.phi.resize(n_);
  double wgt = 1.0;
  std::size_t rem = flat;
  for (int k = n_ - 1; k >= 0; --k) {
    p.angles.phi[k] = phase_node(static_cast<int>(rem % phase_order_));
    rem /= phase_order_;
    wgt *= phase_weight();
  }
  for (int k = n_ - 2; k >= 0; --k) {
    const int i = static_cast<int>(rem % polar_order_);
    rem /= polar_order_;
    p.angles.xi[k] = xi_nodes_[i];
    wgt *= axis_weights_[k][i];
  }
  p.weight = wgt;
  return p;
}

double QuadratureGrid::weight(std::size_t flat) const {
  double wgt = 1.0;
  std::size_t rem = flat;
  for (int k = 0; k < n_; ++k) {
    rem /= phase_order_;
    wgt *= phase_weight();
  }
  for (int k = n_ - 2; k >= 0; --k) {
    const int i = static_cast<int>(rem % polar_order_);
    rem /= polar_order_;
    wgt *= axis_weights_[k][i];
  }
  return wgt;
}

GridSpec unity_thresholds(int n, int N) { return {N + n, 2 * N + 1}; }

GridSpec volume_defaults(int n) { return {n + 1, 1}; }

double coset_volume(int n, const QuadratureGrid& grid) {
  if (grid.group_dim() != n) throw std::invalid_argument("coset_volume: grid dimension mismatch");
  double total = 0.0;
  const std::size_t count = grid.size();
  for (std::size_t i = 0; i < count; ++i) total += grid.weight(i);
  return total;
}

double coset_volume_exact(int n) {
  return std::pow(two_pi, n) / (std::pow(2.0, n - 1) * factorial(n - 1));
}

UnityResult resolution_of_unity(int n, int N, const QuadratureGrid& grid) {
  if (grid.group_dim() != n)
    throw std::invalid_argument("resolution_of_unity: grid dimension mismatch");
  const OccupationBasis basis(n, N);
  const int dim = basis.dim();
  Matrix acc = Matrix::Zero(dim, dim);
  const std::size_t count = grid.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto [angles, w] = grid.point(i);
    const Vector s = coherent_state(basis, angles);
    acc.noalias() += w * (s * s.adjoint());
  }
  UnityResult r;
  r.prefactor = factorial(N + n - 1) / (2.0 * std::pow(pi, n) * factorial(N));
  r.matrix = r.prefactor * acc;
  r.max_abs_deviation = max_abs(Matrix(r.matrix - Matrix::Identity(dim, dim)));
  const GridSpec spec = unity_thresholds(n, N);
  r.grid_sufficient =
      grid.polar_order() >= spec.polar_order && grid.phase_order() >= spec.phase_order;
  return r;
}

double xi_moment_quadrature(int m, int k, int order) {
  if (k < 0 || k > m) throw std::invalid_argument("xi_moment_quadrature: need 0 <= k <= m");
  std::vector<double> x, w;
  gauss_legendre_01(order, x, w);
  double total = 0.0;
  for (int i = 0; i < order; ++i)
    total += 0.5 * w[i] * std::pow(x[i], m - k) * std::pow(1.0 - x[i], k);
  return total;
}

double xi_moment_exact(int m, int k) {
  return factorial(k) * factorial(m - k) / (2.0 * factorial(m + 1));
}

}  // namespace suncs

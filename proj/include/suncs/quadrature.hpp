#pragma once

#include <cstddef>
#include <vector>

#include "suncs/symrep.hpp"
#include "suncs/types.hpp"

namespace suncs {

/// Gauss-Legendre nodes and weights for integrating over [0, 1].
void gauss_legendre_01(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor-product quadrature over the coset sphere: n-1 polar axes and n
/// uniform phase axes of Q nodes (weight 2*pi/Q each).  The polar rule is
/// Gauss-Legendre in x = cos^2(xi), which turns every d mu-weighted moment
/// into a polynomial integral, so past the unity_thresholds orders the
/// quadrature is an identity up to roundoff rather than a convergent
/// approximation.  Each axis weight absorbs that axis's factor of the measure
/// density; the sum of all point weights is the coset volume.
class QuadratureGrid {
 public:
  QuadratureGrid(int n, int polar_order, int phase_order);

  int group_dim() const { return n_; }
  int polar_order() const { return polar_order_; }
  int phase_order() const { return phase_order_; }

  /// P^{n-1} * Q^n points; polar axes vary slowest in the flat index.
  std::size_t size() const;

  struct Point {
    AngleCoordinates angles;
    double weight;
  };
  Point point(std::size_t flat) const;

  /// Weight of a point without materializing its angles.
  double weight(std::size_t flat) const;

  double polar_node(int i) const { return xi_nodes_[i]; }
  double polar_weight(int axis, int i) const { return axis_weights_[axis][i]; }
  double phase_node(int i) const { return two_pi * i / phase_order_; }
  double phase_weight() const { return two_pi / phase_order_; }

 private:
  int n_, polar_order_, phase_order_;
  std::vector<double> xi_nodes_;                   // acos(sqrt(x)), shared by all axes
  std::vector<std::vector<double>> axis_weights_;  // density-absorbed, per polar axis
};

struct GridSpec {
  int polar_order;
  int phase_order;
};

/// Orders that make the resolution-of-unity integrand exact: P = N+n, Q = 2N+1.
GridSpec unity_thresholds(int n, int N);

/// Orders for plain volume integration (phase-independent integrand).
GridSpec volume_defaults(int n);

/// Sum of all grid weights, accumulated in flat-index order.
double coset_volume(int n, const QuadratureGrid& grid);

/// (2*pi)^n / (2^{n-1} (n-1)!).
double coset_volume_exact(int n);

struct UnityResult {
  Matrix matrix;             // prefactor * quadrature of |state><state|
  double max_abs_deviation;  // vs identity
  double prefactor;          // (N+n-1)! / (2 pi^n N!)
  bool grid_sufficient;      // orders at or above unity_thresholds
};

/// Quadrature of the coherent-state projector over the coset, times the
/// normalization prefactor; equals the identity on the occupation basis when
/// the grid meets the exactness thresholds.
UnityResult resolution_of_unity(int n, int N, const QuadratureGrid& grid);

/// Integral of cos^{2(m-k)+1}(xi) sin^{2k+1}(xi) over [0, pi/2] by the same
/// polar rule; closed form k!(m-k)!/(2(m+1)!).
double xi_moment_quadrature(int m, int k, int order);
double xi_moment_exact(int m, int k);

}  // namespace suncs

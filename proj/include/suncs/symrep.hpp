#pragma once

#include <map>
#include <vector>

#include "suncs/types.hpp"

namespace suncs {

/// Ordered enumeration of the occupation states |m_1,...,m_n> with sum N.
/// The order follows the nested chain indices j_1 >= j_2 >= ... >= j_{n-1}
/// (j_1 outermost, ascending), where the state at (j_1,...,j_{n-1}) is
/// (N - j_1, j_1 - j_2, ..., j_{n-1}); dimension C(N+n-1, n-1).
class OccupationBasis {
 public:
  OccupationBasis(int n, int N);

  int n() const { return n_; }
  int N() const { return total_; }
  int dim() const { return static_cast<int>(states_.size()); }
  const std::vector<std::vector<int>>& states() const { return states_; }
  const std::vector<int>& state(int index) const { return states_[index]; }

  /// Index of an occupation vector, or -1 when absent.
  int index_of(const std::vector<int>& m) const;

 private:
  int n_;
  int total_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, int> index_;
};

/// Coordinate-triplet sparse operator on an occupation basis; matrix-vector
/// products are the only kernel the toolkit needs.
struct SparseOperator {
  struct Entry {
    int row;
    int col;
    Complex value;
  };

  int dim = 0;
  std::vector<Entry> entries;

  Vector apply(const Vector& v) const;
  Matrix dense() const;
  SparseOperator adjoint() const;
};

/// J^h_j for h < j: sqrt((m_h+1) m_j) from m to m + d_h - d_j.
SparseOperator raising_op(const OccupationBasis& basis, int h, int j);

/// J^h_j for h > j: sqrt((m_h+1) m_j) from m to m + d_h - d_j, the adjoint of
/// raising_op(j, h).
SparseOperator lowering_op(const OccupationBasis& basis, int h, int j);

/// Diagonal J^h_h with eigenvalue sqrt(2/(h(h+1))) (sum_{k<=h} m_k - h m_{h+1}).
SparseOperator cartan_op(const OccupationBasis& basis, int h);

/// Symmetric-power lift of an arbitrary n x n matrix G, linear in G:
/// lift(e^h_j) sends m to m + d_h - d_j with amplitude sqrt((m_h+1) m_j),
/// and lift(e^h_h) is diagonal with eigenvalue m_h.
SparseOperator lift_generator(const OccupationBasis& basis, const Matrix& g);

/// e^{i j phiB} e^{i (N-j) phiA} sin^j(theta) cos^{N-j}(theta) sqrt(C(N, j)).
Complex eta_coeff(int N, int j, double phi_a, double phi_b, double theta);

/// Amplitude at chain (j_1,...,j_{n-1}) is the product of eta factors
/// eta^{j_k}_{j_{k+1}}(phi_k, 0, xi_k) with the last level carrying both
/// phases (phi_{n-2}, phi_{n-1}); unit norm.
Vector coherent_state(const OccupationBasis& basis, const AngleCoordinates& angles);

/// Independent oracle: amplitude at m is sqrt(N!/prod m_k!) prod_k c_k^{m_k}
/// with c = coherent_state_fund(angles).
Vector tensor_power_oracle(const OccupationBasis& basis, const AngleCoordinates& angles);

struct StereoCoordinates {
  double global_phase = 0.0;  // phi_0
  std::vector<Complex> zeta;  // zeta_k = e^{i(phi_{k+1}-phi_k)} tan(xi_k)
};

/// Throws std::domain_error when any xi_k reaches pi/2 (zeta pole).
StereoCoordinates angles_to_stereo(const AngleCoordinates& angles);

/// Nested stereographic expansion: global factor e^{i N phi_0}, per level k a
/// factor (1+|zeta_k|^2)^{-j_k/2} zeta_k^{j_{k+1}} sqrt(C(j_k, j_{k+1})) with
/// j_0 = N.  Equals coherent_state on its domain.
Vector stereographic_state(const OccupationBasis& basis, const StereoCoordinates& stereo);

/// Closed-form overlap <state(a)|state(b)> of two size-N coherent states:
/// (e^{i(phi_{n-1}-phi'_{n-1})} prod_k sin xi_k sin xi'_k
///  + sum_m e^{i(phi_m-phi'_m)} cos xi_m cos xi'_m prod_{k<m} sin xi_k sin xi'_k)^N,
/// primed = bra = a, empty products = 1.
Complex overlap_closed(const AngleCoordinates& a, const AngleCoordinates& b, int N);

}  // namespace suncs

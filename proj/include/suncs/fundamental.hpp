#pragma once

#include <memory>
#include <vector>

#include "suncs/types.hpp"

namespace suncs {

/// Recursive record of the L * M * R factorization of a special unitary.
/// A node of size n >= 3 holds the middle-block angles (theta, phi) and two
/// subtrees of size n-1 for the embedded left/right factors.  The base case
/// n = 2 is a leaf holding the full SU(2) angle triple (theta, phi1, phi2).
class DecompositionTree {
 public:
  DecompositionTree() = default;  // SU(2) identity leaf

  static DecompositionTree su2(double theta, double phi1, double phi2);
  static DecompositionTree node(double theta, double phi, DecompositionTree left,
                                DecompositionTree right);
  static DecompositionTree identity(int n);

  DecompositionTree(const DecompositionTree& other);
  DecompositionTree& operator=(const DecompositionTree& other);
  DecompositionTree(DecompositionTree&&) noexcept = default;
  DecompositionTree& operator=(DecompositionTree&&) noexcept = default;
  ~DecompositionTree() = default;

  int group_dim() const { return n_; }
  bool is_leaf() const { return n_ == 2; }

  double theta() const { return theta_; }
  double phi() const;   // node only
  double phi1() const;  // leaf only
  double phi2() const;  // leaf only
  const DecompositionTree& left() const;
  const DecompositionTree& right() const;

 private:
  int n_ = 2;
  double theta_ = 0.0;
  double a_ = 0.0;  // phi for nodes, phi1 for leaves
  double b_ = 0.0;  // phi2 for leaves
  std::unique_ptr<DecompositionTree> left_, right_;
};

/// [[e^{i phi1} cos t, -e^{-i phi2} sin t], [e^{i phi2} sin t, e^{-i phi1} cos t]].
Matrix su2_matrix(double theta, double phi1, double phi2);

/// M(theta, phi): the 2x2 block [[e^{i phi} cos t, -sin t], [sin t, e^{-i phi} cos t]]
/// in rows/columns 1-2 of an n x n identity.
Matrix middle_matrix(int n, double theta, double phi);

Matrix build_group_element(const DecompositionTree& tree);

bool is_special_unitary(const Matrix& u, double tol);

/// Inverts build_group_element: peels one L * M * R layer per recursion level
/// by rotating the first sub-column to (r, 0, ..., 0) with a bottom-up chain
/// of unit-determinant 2x2 eliminations.  Requires max|U^dag U - I| < tol and
/// |det U - 1| < tol.  Angles land in [0, pi/2] x [0, 2*pi).
DecompositionTree decompose(const Matrix& u, double tol = 1e-8);

/// Coset angles read off the left spine of a tree (theta, phi) per level plus
/// the leaf triple; the first column of build_group_element equals
/// coherent_state_fund of these angles whenever all right factors are trivial.
AngleCoordinates left_spine_angles(const DecompositionTree& tree);

/// (e^{i phi_0} cos xi_0, e^{i phi_1} sin xi_0 cos xi_1, ...,
///  e^{i phi_{n-1}} sin xi_0 ... sin xi_{n-2}); unit norm.
Vector coherent_state_fund(const AngleCoordinates& angles);

struct PhaseFixedState {
  Vector amplitudes;
  int fixed_component = 0;  // index whose phase was divided out; > 0 flags a pole
};

/// Divides out the phase of the first nonvanishing component, so that
/// component becomes real and nonnegative.  For n = 2 the result is
/// (cos(t'/2), e^{i(phi_1 - phi_0)} sin(t'/2)) with t' = 2*xi_0.
PhaseFixedState phase_fixed_state(const AngleCoordinates& angles);

/// Diagonal metric coefficients in coordinate order
/// (xi_0, phi_0, xi_1, phi_1, ..., xi_{n-2}, phi_{n-2}, phi_{n-1}), from
/// ds_n^2 = dxi_0^2 + cos^2 xi_0 dphi_0^2 + sin^2 xi_0 ds_{n-1}^2.
std::vector<double> metric_diag(const AngleCoordinates& angles);

/// prod_k cos(xi_k) sin^{2(n-k)-3}(xi_k); equals sqrt of the metric determinant.
double measure_density(const AngleCoordinates& angles);

struct GaussParameters {
  Complex zeta;
  double nu = 0.0;  // ln cos theta <= 0
};

/// zeta = e^{i(phi2-phi1)} tan(theta), nu = ln cos(theta).  Throws for
/// theta >= pi/2 where zeta diverges.
GaussParameters gauss_decomposition_su2(double theta, double phi1, double phi2);

/// exp(zeta e^2_1) exp(nu sigma_3) exp(-conj(zeta) e^1_2) exp(i phi1 sigma_3),
/// assembled from closed-form 2x2 factors; reproduces su2_matrix.
Matrix gauss_product_su2(const GaussParameters& g, double phi1);

/// e^{ia l8'} e^{ib l7} e^{ic l8'} e^{i phi/2 l3} e^{-i theta l2} e^{i phi/2 l3}.
Matrix displacement_su3(double alpha, double beta, double gamma, double theta, double phi);

/// e^{ia l15'} e^{ib l14} e^{ic l15'} e^{i phi1/2 l8'} e^{-i xi1 l7}
/// e^{i phi1/2 l8'} e^{i phi/2 l3} e^{-i theta l2} e^{i phi/2 l3}.
Matrix displacement_su4(double alpha, double beta, double gamma, double xi1, double phi1,
                        double theta, double phi);

/// Generator-exponential displacement for n in {3, 4} evaluated at coset
/// angles, using alpha = (phi_{n-2} - phi_{n-1})/2, gamma = (phi_{n-2} +
/// phi_{n-1})/2, beta = -xi_{n-2}.  Its first column is coherent_state_fund.
Matrix displacement_lambda(int n, const AngleCoordinates& angles);

}  // namespace suncs

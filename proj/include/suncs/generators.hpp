#pragma once

#include <string>
#include <vector>

#include "suncs/types.hpp"

namespace suncs {

enum class GeneratorKind { theta, beta, eta };

struct GeneratorLabel {
  GeneratorKind kind;
  int h = 0;
  int j = 0;

  std::string str() const;  // "theta^1_2", "beta^1_2", "eta^1_1"
  bool operator==(const GeneratorLabel&) const = default;
};

/// The n^2-1 Hermitian traceless lambda-matrices in blockwise order: for each
/// j = 2..n the pairs theta^h_j, beta^h_j (h = 1..j-1) followed by
/// eta^{j-1}_{j-1}.  For n = 2 these are the Pauli matrices; the ordering is
/// stable under embedding n -> n+1.
struct GeneratorSet {
  int n = 0;
  std::vector<Matrix> matrices;
  std::vector<GeneratorLabel> labels;

  int count() const { return static_cast<int>(matrices.size()); }
  /// 1-based lambda index (lambda_1 = theta^1_2, lambda_3 = eta^1_1, ...).
  const Matrix& lambda(int index) const;
};

/// Elementary matrix e^h_j: 1 at row h, column j (1-based), 0 elsewhere.
Matrix elementary(int h, int j, int n);

GeneratorSet lambda_set(int n);

/// Primed diagonal combinations: which = 8 gives (sqrt(3)*l8 - l3)/2 =
/// diag(0,1,-1,...) and needs n >= 3; which = 15 gives
/// (sqrt(6)*l15 - sqrt(3)*l8)/3 = diag(0,0,1,-1,...) and needs n >= 4.
Matrix primed_lambda(int n, int which);

/// Max entrywise deviation of [beta^h_j, theta^k_e] from
///   -i d^k_j theta^h_e + i d^h_e theta^k_j + i d^k_h theta^j_e - i d^j_e theta^k_h
/// over all h < j, k < e in 1..n.  Symbols theta^a_b with a > b read
/// theta^b_a, and theta^a_a reads 2 e^a_a.
double verify_beta_theta_commutators(int n);

/// exp(i*t*H) for Hermitian H, via eigendecomposition so the result is
/// unitary to roundoff.  Throws std::invalid_argument if max|H - H^dag|
/// exceeds 1e-10.
Matrix herm_exp(const Matrix& h, double t);

}  // namespace suncs

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace suncs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;

/// Folds an angle into [0, 2*pi).
inline double wrap_two_pi(double x) {
  double y = std::fmod(x, two_pi);
  if (y < 0.0) y += two_pi;
  return y < two_pi ? y : 0.0;  // tiny negatives can round up to exactly 2*pi
}

/// Spherical coordinates of a coset point for SU(n): n-1 polar angles
/// xi_0..xi_{n-2} in [0, pi/2] and n phases phi_0..phi_{n-1} in [0, 2*pi).
struct AngleCoordinates {
  std::vector<double> xi;
  std::vector<double> phi;

  int group_dim() const { return static_cast<int>(phi.size()); }

  /// Throws std::invalid_argument when sizes or ranges are off.
  void validate() const;
};

/// C(n, k) as a double; exact below 2^53.
double binomial(int n, int k);

double factorial(int n);

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace suncs

#include "suncs/types.hpp"

#include <stdexcept>
#include <string>

namespace suncs {

void AngleCoordinates::validate() const {
  if (phi.size() < 2)
    throw std::invalid_argument("AngleCoordinates: need at least two phases (n >= 2)");
  if (xi.size() + 1 != phi.size())
    throw std::invalid_argument("AngleCoordinates: xi length must be phi length - 1");
  for (double x : xi)
    if (!(x >= 0.0 && x <= half_pi))
      throw std::invalid_argument("AngleCoordinates: xi out of [0, pi/2]: " + std::to_string(x));
  for (double p : phi)
    if (!(p >= 0.0 && p < two_pi))
      throw std::invalid_argument("AngleCoordinates: phi out of [0, 2*pi): " + std::to_string(p));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

}  // namespace suncs

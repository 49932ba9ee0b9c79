#include "suncs/symrep.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "suncs/fundamental.hpp"

namespace suncs {

namespace {

void require_angles(const OccupationBasis& basis, const AngleCoordinates& angles) {
  if (angles.group_dim() != basis.n() || angles.xi.size() + 1 != angles.phi.size())
    throw std::invalid_argument("angle coordinates do not match the basis dimension");
}

// Chain indices j_k = m_{k+1} + ... + m_n (j_0 = N) for a basis state.
std::vector<int> chain_of(const std::vector<int>& m, int N) {
  std::vector<int> j(m.size());
  j[0] = N;
  for (std::size_t k = 1; k < m.size(); ++k) j[k] = j[k - 1] - m[k - 1];
  return j;  // j[k] for k >= 1 are the nested sums; j.back() == m.back()
}

Complex int_pow(Complex z, int p) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// OccupationBasis

OccupationBasis::OccupationBasis(int n, int N) : n_(n), total_(N) {
  if (n < 1 || N < 0) throw std::invalid_argument("OccupationBasis: need n >= 1, N >= 0");
  std::vector<int> j(std::max(n - 1, 0));
  std::function<void(int)> rec = [&](int level) {
    if (level == n - 1) {
      std::vector<int> m(n);
      int prev = N;
      for (int k = 0; k < n - 1; ++k) {
        m[k] = prev - j[k];
        prev = j[k];
      }
      m[n - 1] = prev;
      index_[m] = static_cast<int>(states_.size());
      states_.push_back(std::move(m));
      return;
    }
    const int upper = level == 0 ? N : j[level - 1];
    for (j[level] = 0; j[level] <= upper; ++j[level]) rec(level + 1);
  };
  rec(0);
}

int OccupationBasis::index_of(const std::vector<int>& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// SparseOperator

Vector SparseOperator::apply(const Vector& v) const {
  if (v.size() != dim) throw std::invalid_argument("SparseOperator::apply: size mismatch");
  Vector out = Vector::Zero(dim);
  for (const Entry& e : entries) out[e.row] += e.value * v[e.col];
  return out;
}

Matrix SparseOperator::dense() const {
  Matrix m = Matrix::Zero(dim, dim);
  for (const Entry& e : entries) m(e.row, e.col) += e.value;
  return m;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator a;
  a.dim = dim;
  a.entries.reserve(entries.size());
  for (const Entry& e : entries) a.entries.push_back({e.col, e.row, std::conj(e.value)});
  return a;
}

// ---------------------------------------------------------------------------
// Ladder and Cartan operators

SparseOperator raising_op(const OccupationBasis& basis, int h, int j) {
  if (h < 1 || j > basis.n() || h >= j)
    throw std::invalid_argument("raising_op: need 1 <= h < j <= n");
  SparseOperator op;
  op.dim = basis.dim();
  for (int col = 0; col < basis.dim(); ++col) {
    const auto& m = basis.state(col);
    if (m[j - 1] == 0) continue;
    std::vector<int> t = m;
    ++t[h - 1];
    --t[j - 1];
    op.entries.push_back({basis.index_of(t), col, std::sqrt((m[h - 1] + 1.0) * m[j - 1])});
  }
  return op;
}

SparseOperator lowering_op(const OccupationBasis& basis, int h, int j) {
  if (j < 1 || h > basis.n() || h <= j)
    throw std::invalid_argument("lowering_op: need 1 <= j < h <= n");
  SparseOperator op;
  op.dim = basis.dim();
  for (int col = 0; col < basis.dim(); ++col) {
    const auto& m = basis.state(col);
    if (m[j - 1] == 0) continue;
    std::vector<int> t = m;
    ++t[h - 1];
    --t[j - 1];
    op.entries.push_back({basis.index_of(t), col, std::sqrt((m[h - 1] + 1.0) * m[j - 1])});
  }
  return op;
}

SparseOperator cartan_op(const OccupationBasis& basis, int h) {
  if (h < 1 || h > basis.n() - 1)
    throw std::invalid_argument("cartan_op: need 1 <= h <= n-1");
  SparseOperator op;
  op.dim = basis.dim();
  const double norm = std::sqrt(2.0 / (h * (h + 1.0)));
  for (int col = 0; col < basis.dim(); ++col) {
    const auto& m = basis.state(col);
    int sum = 0;
    for (int k = 0; k < h; ++k) sum += m[k];
    op.entries.push_back({col, col, norm * (sum - h * static_cast<double>(m[h]))});
  }
  return op;
}

SparseOperator lift_generator(const OccupationBasis& basis, const Matrix& g) {
  const int n = basis.n();
  if (g.rows() != n || g.cols() != n)
    throw std::invalid_argument("lift_generator: matrix size must match basis n");
  std::map<std::pair<int, int>, Complex> acc;
  for (int col = 0; col < basis.dim(); ++col) {
    const auto& m = basis.state(col);
    for (int h = 1; h <= n; ++h)
      for (int j = 1; j <= n; ++j) {
        const Complex ghj = g(h - 1, j - 1);
        if (ghj == Complex(0.0)) continue;
        if (h == j) {
          acc[{col, col}] += ghj * static_cast<double>(m[h - 1]);
        } else if (m[j - 1] > 0) {
          std::vector<int> t = m;
          ++t[h - 1];
          --t[j - 1];
          acc[{basis.index_of(t), col}] += ghj * std::sqrt((m[h - 1] + 1.0) * m[j - 1]);
        }
      }
  }
  SparseOperator op;
  op.dim = basis.dim();
  for (const auto& [rc, value] : acc)
    if (value != Complex(0.0)) op.entries.push_back({rc.first, rc.second, value});
  return op;
}

// ---------------------------------------------------------------------------
// Coherent states

Complex eta_coeff(int N, int j, double phi_a, double phi_b, double theta) {
  if (j < 0 || j > N) throw std::invalid_argument("eta_coeff: need 0 <= j <= N");
  const double mag =
      std::sqrt(binomial(N, j)) * std::pow(std::sin(theta), j) * std::pow(std::cos(theta), N - j);
  return mag * std::exp(Complex(0.0, j * phi_b + (N - j) * phi_a));
}

Vector coherent_state(const OccupationBasis& basis, const AngleCoordinates& angles) {
  require_angles(basis, angles);
  const int n = basis.n();
  const int N = basis.N();
  Vector amps(basis.dim());
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const std::vector<int> j = chain_of(basis.state(idx), N);
    Complex a{1.0, 0.0};
    for (int k = 0; k <= n - 2; ++k) {
      const double phi_b = k == n - 2 ? angles.phi[n - 1] : 0.0;
      const int upper = k == 0 ? N : j[k];
      a *= eta_coeff(upper, j[k + 1], angles.phi[k], phi_b, angles.xi[k]);
    }
    amps[idx] = a;
  }
  return amps;
}

Vector tensor_power_oracle(const OccupationBasis& basis, const AngleCoordinates& angles) {
  require_angles(basis, angles);
  const Vector c = coherent_state_fund(angles);
  const int n = basis.n();
  const int N = basis.N();
  Vector amps(basis.dim());
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const auto& m = basis.state(idx);
    double multinomial = factorial(N);
    Complex prod{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
      multinomial /= factorial(m[k]);
      prod *= int_pow(c[k], m[k]);
    }
    amps[idx] = std::sqrt(multinomial) * prod;
  }
  return amps;
}

StereoCoordinates angles_to_stereo(const AngleCoordinates& angles) {
  if (angles.phi.size() < 2 || angles.xi.size() + 1 != angles.phi.size())
    throw std::invalid_argument("angles_to_stereo: inconsistent coordinate sizes");
  StereoCoordinates s;
  s.global_phase = angles.phi[0];
  s.zeta.reserve(angles.xi.size());
  for (std::size_t k = 0; k < angles.xi.size(); ++k) {
    if (!(angles.xi[k] < half_pi))
      throw std::domain_error("angles_to_stereo: xi_k = pi/2 is a pole of the chart");
    s.zeta.push_back(std::tan(angles.xi[k]) *
                     std::exp(Complex(0.0, angles.phi[k + 1] - angles.phi[k])));
  }
  return s;
}

Vector stereographic_state(const OccupationBasis& basis, const StereoCoordinates& stereo) {
  const int n = basis.n();
  const int N = basis.N();
  if (static_cast<int>(stereo.zeta.size()) != n - 1)
    throw std::invalid_argument("stereographic_state: need n-1 zeta coordinates");
  const Complex global = std::exp(Complex(0.0, N * stereo.global_phase));
  Vector amps(basis.dim());
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const std::vector<int> j = chain_of(basis.state(idx), N);
    Complex a = global;
    for (int k = 0; k <= n - 2; ++k) {
      const int incoming = k == 0 ? N : j[k];
      const int outgoing = j[k + 1];
      a *= std::pow(1.0 + std::norm(stereo.zeta[k]), -0.5 * incoming) *
           int_pow(stereo.zeta[k], outgoing) * std::sqrt(binomial(incoming, outgoing));
    }
    amps[idx] = a;
  }
  return amps;
}

Complex overlap_closed(const AngleCoordinates& a, const AngleCoordinates& b, int N) {
  if (a.group_dim() != b.group_dim())
    throw std::invalid_argument("overlap_closed: mismatched group dimensions");
  if (a.xi.size() + 1 != a.phi.size() || b.xi.size() + 1 != b.phi.size())
    throw std::invalid_argument("overlap_closed: inconsistent coordinate sizes");
  const int n = a.group_dim();
  Complex base{0.0, 0.0};
  double sinprod = 1.0;
  for (int m = 0; m <= n - 2; ++m) {
    base += std::exp(Complex(0.0, b.phi[m] - a.phi[m])) * std::cos(b.xi[m]) * std::cos(a.xi[m]) *
            sinprod;
    sinprod *= std::sin(b.xi[m]) * std::sin(a.xi[m]);
  }
  base += std::exp(Complex(0.0, b.phi[n - 1] - a.phi[n - 1])) * sinprod;
  return int_pow(base, N);
}

}  // namespace suncs

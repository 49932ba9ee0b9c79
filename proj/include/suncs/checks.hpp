#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suncs/types.hpp"

namespace suncs::checks {

/// Each check returns the maximum observed deviation from the identity it
/// probes; callers compare against their tolerance.

// generators
double generator_hermiticity_tracelessness(int n);
double generator_orthonormality(int n);  // tr(l_a l_b) - 2 d_ab
double beta_theta_commutators(int n);
double pauli_recovery();  // lambda_set(2) vs the Pauli matrices
double herm_exp_additivity(int max_n, int draws, std::uint64_t seed);

// fundamental
double fundamental_norm(int n, int draws, std::uint64_t seed);
double build_unitarity(int n, int draws, std::uint64_t seed);
double decompose_roundtrip(int n, int draws, std::uint64_t seed);
double left_spine_first_column(int n, int draws, std::uint64_t seed);
double right_factor_fixes_highest_weight(int n, int draws, std::uint64_t seed);
double metric_finite_difference(int n, int draws, std::uint64_t seed, double step);
double measure_vs_metric(int n, int draws, std::uint64_t seed);
double gauss_su2_sweep(int theta_steps, int phase_steps);
double displacement_su3_equivalence(int draws, std::uint64_t seed);
double displacement_su4_equivalence(int draws, std::uint64_t seed);

// symrep
double ladder_adjointness(int n, int N);
double highest_weight_annihilation(int n, int N);
double lift_ladder_consistency(int n, int N);
double lift_cartan_and_number(int n, int N);
double rep_commutators(int n, int N);
double oracle_equivalence(int n, int N, int draws, std::uint64_t seed);
double overlap_identity(int n, int N, int draws, std::uint64_t seed);
double lifted_displacement_su3(int N, int draws, std::uint64_t seed);

// quadrature
double phase_orthogonality(int N);
double xi_moments(int max_m);
double volume_error(int n);
double unity_residual(int n, int N);

struct CheckResult {
  std::string name;
  double deviation;
  double tolerance;
  bool pass;
};

/// The full invariant suite at one (n, N) configuration.  Deterministic for a
/// fixed seed.  tol_identity gates algebraic identities, tol_reconstruction
/// gates round trips and quadrature residuals.
std::vector<CheckResult> run_suite(int n, int N, std::uint64_t seed, double tol_identity,
                                   double tol_reconstruction);

}  // namespace suncs::checks

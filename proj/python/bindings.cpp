#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "suncs/checks.hpp"
#include "suncs/fundamental.hpp"
#include "suncs/generators.hpp"
#include "suncs/haar.hpp"
#include "suncs/json_io.hpp"
#include "suncs/quadrature.hpp"
#include "suncs/symrep.hpp"

namespace py = pybind11;

namespace {

suncs::AngleCoordinates make_angles(std::vector<double> xi, std::vector<double> phi) {
  suncs::AngleCoordinates a;
  a.xi = std::move(xi);
  a.phi = std::move(phi);
  if (a.phi.size() < 2 || a.xi.size() + 1 != a.phi.size())
    throw std::invalid_argument("need len(xi) == len(phi) - 1 with len(phi) >= 2");
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SU(n) coherent-state toolkit";

  // generators -------------------------------------------------------------
  m.def("elementary", &suncs::elementary, py::arg("h"), py::arg("j"), py::arg("n"));
  m.def(
      "lambda_set",
      [](int n) {
        const suncs::GeneratorSet set = suncs::lambda_set(n);
        std::vector<std::pair<std::string, suncs::Matrix>> out;
        out.reserve(set.count());
        for (int i = 0; i < set.count(); ++i) out.emplace_back(set.labels[i].str(), set.matrices[i]);
        return out;
      },
      py::arg("n"), "List of (label, matrix) in the blockwise numbering");
  m.def("primed_lambda", &suncs::primed_lambda, py::arg("n"), py::arg("which"));
  m.def("beta_theta_commutator_deviation", &suncs::verify_beta_theta_commutators, py::arg("n"));
  m.def("herm_exp", &suncs::herm_exp, py::arg("h"), py::arg("t"), "exp(i*t*H) for Hermitian H");

  // fundamental ------------------------------------------------------------
  m.def("su2_matrix", &suncs::su2_matrix, py::arg("theta"), py::arg("phi1"), py::arg("phi2"));
  m.def("middle_matrix", &suncs::middle_matrix, py::arg("n"), py::arg("theta"), py::arg("phi"));
  m.def(
      "coherent_state_fund",
      [](std::vector<double> xi, std::vector<double> phi) {
        return suncs::coherent_state_fund(make_angles(std::move(xi), std::move(phi)));
      },
      py::arg("xi"), py::arg("phi"));
  m.def(
      "phase_fixed_state",
      [](std::vector<double> xi, std::vector<double> phi) {
        const suncs::PhaseFixedState s =
            suncs::phase_fixed_state(make_angles(std::move(xi), std::move(phi)));
        return py::make_tuple(s.amplitudes, s.fixed_component);
      },
      py::arg("xi"), py::arg("phi"), "Returns (amplitudes, fixed_component)");
  m.def(
      "metric_diag",
      [](std::vector<double> xi, std::vector<double> phi) {
        return suncs::metric_diag(make_angles(std::move(xi), std::move(phi)));
      },
      py::arg("xi"), py::arg("phi"));
  m.def(
      "measure_density",
      [](std::vector<double> xi, std::vector<double> phi) {
        return suncs::measure_density(make_angles(std::move(xi), std::move(phi)));
      },
      py::arg("xi"), py::arg("phi"));
  m.def(
      "decompose_json",
      [](const suncs::Matrix& u, double tol) {
        return suncs::tree_to_json(suncs::decompose(u, tol)).dump();
      },
      py::arg("u"), py::arg("tol") = 1e-8,
      "L*M*R factorization as a JSON tree string");
  m.def(
      "build_group_element_json",
      [](const std::string& tree) {
        return suncs::build_group_element(suncs::tree_from_json(nlohmann::json::parse(tree)));
      },
      py::arg("tree_json"));
  m.def(
      "gauss_decomposition_su2",
      [](double theta, double phi1, double phi2) {
        const suncs::GaussParameters g = suncs::gauss_decomposition_su2(theta, phi1, phi2);
        return py::make_tuple(g.zeta, g.nu);
      },
      py::arg("theta"), py::arg("phi1"), py::arg("phi2"), "Returns (zeta, nu)");
  m.def(
      "gauss_product_su2",
      [](suncs::Complex zeta, double nu, double phi1) {
        return suncs::gauss_product_su2({zeta, nu}, phi1);
      },
      py::arg("zeta"), py::arg("nu"), py::arg("phi1"));
  m.def(
      "displacement_lambda",
      [](int n, std::vector<double> xi, std::vector<double> phi) {
        return suncs::displacement_lambda(n, make_angles(std::move(xi), std::move(phi)));
      },
      py::arg("n"), py::arg("xi"), py::arg("phi"));
  m.def(
      "haar_random_su",
      [](int n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return suncs::haar_random_su(n, rng);
      },
      py::arg("n"), py::arg("seed"));

  // symrep -------------------------------------------------------------
  py::class_<suncs::SparseOperator>(m, "SparseOperator")
      .def_readonly("dim", &suncs::SparseOperator::dim)
      .def("rows",
           [](const suncs::SparseOperator& op) {
             std::vector<int> r;
             r.reserve(op.entries.size());
             for (const auto& e : op.entries) r.push_back(e.row);
             return r;
           })
      .def("cols",
           [](const suncs::SparseOperator& op) {
             std::vector<int> c;
             c.reserve(op.entries.size());
             for (const auto& e : op.entries) c.push_back(e.col);
             return c;
           })
      .def("values",
           [](const suncs::SparseOperator& op) {
             std::vector<suncs::Complex> v;
             v.reserve(op.entries.size());
             for (const auto& e : op.entries) v.push_back(e.value);
             return v;
           })
      .def("todense", &suncs::SparseOperator::dense)
      .def("apply", &suncs::SparseOperator::apply, py::arg("vector"))
      .def("adjoint", &suncs::SparseOperator::adjoint);

  m.def(
      "basis_states",
      [](int n, int N) { return suncs::OccupationBasis(n, N).states(); },
      py::arg("n"), py::arg("N"),
      "Occupation vectors in the nested-chain order");
  m.def(
      "raising_op",
      [](int n, int N, int h, int j) { return suncs::raising_op(suncs::OccupationBasis(n, N), h, j); },
      py::arg("n"), py::arg("N"), py::arg("h"), py::arg("j"));
  m.def(
      "lowering_op",
      [](int n, int N, int h, int j) { return suncs::lowering_op(suncs::OccupationBasis(n, N), h, j); },
      py::arg("n"), py::arg("N"), py::arg("h"), py::arg("j"));
  m.def(
      "cartan_op",
      [](int n, int N, int h) { return suncs::cartan_op(suncs::OccupationBasis(n, N), h); },
      py::arg("n"), py::arg("N"), py::arg("h"));
  m.def(
      "lift_generator",
      [](int n, int N, const suncs::Matrix& g) {
        return suncs::lift_generator(suncs::OccupationBasis(n, N), g);
      },
      py::arg("n"), py::arg("N"), py::arg("matrix"));
  m.def("eta_coeff", &suncs::eta_coeff, py::arg("N"), py::arg("j"), py::arg("phi_a"),
        py::arg("phi_b"), py::arg("theta"));
  m.def(
      "coherent_state",
      [](int n, int N, std::vector<double> xi, std::vector<double> phi) {
        return suncs::coherent_state(suncs::OccupationBasis(n, N),
                                     make_angles(std::move(xi), std::move(phi)));
      },
      py::arg("n"), py::arg("N"), py::arg("xi"), py::arg("phi"));
  m.def(
      "tensor_power_oracle",
      [](int n, int N, std::vector<double> xi, std::vector<double> phi) {
        return suncs::tensor_power_oracle(suncs::OccupationBasis(n, N),
                                          make_angles(std::move(xi), std::move(phi)));
      },
      py::arg("n"), py::arg("N"), py::arg("xi"), py::arg("phi"));
  m.def(
      "angles_to_stereo",
      [](std::vector<double> xi, std::vector<double> phi) {
        const suncs::StereoCoordinates s =
            suncs::angles_to_stereo(make_angles(std::move(xi), std::move(phi)));
        return py::make_tuple(s.global_phase, s.zeta);
      },
      py::arg("xi"), py::arg("phi"), "Returns (global_phase, [zeta_k])");
  m.def(
      "stereographic_state",
      [](int n, int N, double global_phase, std::vector<suncs::Complex> zeta) {
        suncs::StereoCoordinates s;
        s.global_phase = global_phase;
        s.zeta = std::move(zeta);
        return suncs::stereographic_state(suncs::OccupationBasis(n, N), s);
      },
      py::arg("n"), py::arg("N"), py::arg("global_phase"), py::arg("zeta"));
  m.def(
      "overlap_closed",
      [](std::vector<double> xi_a, std::vector<double> phi_a, std::vector<double> xi_b,
         std::vector<double> phi_b, int N) {
        return suncs::overlap_closed(make_angles(std::move(xi_a), std::move(phi_a)),
                                     make_angles(std::move(xi_b), std::move(phi_b)), N);
      },
      py::arg("xi_a"), py::arg("phi_a"), py::arg("xi_b"), py::arg("phi_b"), py::arg("N"));

  // quadrature -----------------------------------------------------------
  m.def(
      "coset_volume",
      [](int n, int polar_order, int phase_order) {
        if (polar_order <= 0) polar_order = suncs::volume_defaults(n).polar_order;
        if (phase_order <= 0) phase_order = suncs::volume_defaults(n).phase_order;
        return suncs::coset_volume(n, suncs::QuadratureGrid(n, polar_order, phase_order));
      },
      py::arg("n"), py::arg("polar_order") = 0, py::arg("phase_order") = 0);
  m.def("coset_volume_exact", &suncs::coset_volume_exact, py::arg("n"));
  m.def(
      "resolution_of_unity",
      [](int n, int N, int polar_order, int phase_order) {
        const suncs::GridSpec spec = suncs::unity_thresholds(n, N);
        if (polar_order <= 0) polar_order = spec.polar_order;
        if (phase_order <= 0) phase_order = spec.phase_order;
        const suncs::UnityResult r =
            suncs::resolution_of_unity(n, N, suncs::QuadratureGrid(n, polar_order, phase_order));
        return py::make_tuple(r.matrix, r.max_abs_deviation, r.prefactor, r.grid_sufficient);
      },
      py::arg("n"), py::arg("N"), py::arg("polar_order") = 0, py::arg("phase_order") = 0,
      "Returns (matrix, max_abs_deviation, prefactor, grid_sufficient)");
  m.def("xi_moment_quadrature", &suncs::xi_moment_quadrature, py::arg("m"), py::arg("k"),
        py::arg("order"));
  m.def("xi_moment_exact", &suncs::xi_moment_exact, py::arg("m"), py::arg("k"));

  // invariant suite --------------------------------------------------------
  m.def(
      "run_checks",
      [](int n, int N, std::uint64_t seed, double tol_identity, double tol_reconstruction) {
        std::vector<std::tuple<std::string, double, double, bool>> out;
        for (const auto& r : suncs::checks::run_suite(n, N, seed, tol_identity, tol_reconstruction))
          out.emplace_back(r.name, r.deviation, r.tolerance, r.pass);
        return out;
      },
      py::arg("n") = 3, py::arg("N") = 2, py::arg("seed") = 1, py::arg("tol_identity") = 1e-12,
      py::arg("tol_reconstruction") = 1e-10,
      "List of (name, deviation, tolerance, pass)");
}

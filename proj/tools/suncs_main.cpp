#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iomanip>
#include <sstream>
#include <string>

#include "suncs/checks.hpp"
#include "suncs/fundamental.hpp"
#include "suncs/generators.hpp"
#include "suncs/json_io.hpp"
#include "suncs/quadrature.hpp"
#include "suncs/symrep.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

struct RunConfig {
  int n = 3;
  int N = 2;
  std::uint64_t seed = 1;
  int polar_order = 0;  // 0 = defaults for the command
  int phase_order = 0;
  double tol = 0.0;  // 0 = command default
  double tol_identity = 1e-12;
  double tol_reconstruction = 1e-10;
  std::string angles_arg, angles_b_arg, matrix_arg;
  std::string output;
  std::string format = "json";
  bool phase_fixed = false;
  int rep = -1;
};

// `-` reads stdin; a leading '{' or '[' is inline JSON; anything else is a path.
std::string read_payload(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Relative output paths resolve against SUNCS_OUTPUT_DIR when it is set.
void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("SUNCS_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write output file: " + path.string());
  out << text << "\n";
}

std::string csv_escape(const std::string& s) { return s; }  // labels are plain ASCII

int cmd_generators_dump(const RunConfig& cfg) {
  const suncs::GeneratorSet set = suncs::lambda_set(cfg.n);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << std::setprecision(17) << "label,row,col,re,im";
    for (int i = 0; i < set.count(); ++i)
      for (int r = 0; r < cfg.n; ++r)
        for (int c = 0; c < cfg.n; ++c) {
          const suncs::Complex z = set.matrices[i](r, c);
          out << "\n"
              << csv_escape(set.labels[i].str()) << "," << r << "," << c << "," << z.real() << ","
              << z.imag();
        }
    emit(out.str(), cfg.output);
    return kExitOk;
  }
  json arr = json::array();
  for (int i = 0; i < set.count(); ++i)
    arr.push_back({{"label", set.labels[i].str()}, {"matrix", suncs::matrix_to_json(set.matrices[i])}});
  emit(arr.dump(2), cfg.output);
  return kExitOk;
}

int cmd_state(const RunConfig& cfg) {
  suncs::AngleCoordinates angles = suncs::angles_from_json(parse_json(read_payload(cfg.angles_arg)));
  angles.validate();
  if (angles.group_dim() != cfg.n)
    throw std::invalid_argument("angle coordinates do not match --n");

  json out;
  out["n"] = cfg.n;
  if (cfg.rep >= 0) {
    if (cfg.phase_fixed)
      throw std::invalid_argument("--phase-fixed applies to the fundamental state only");
    const suncs::OccupationBasis basis(cfg.n, cfg.rep);
    const suncs::Vector amps = suncs::coherent_state(basis, angles);
    out["N"] = cfg.rep;
    out["basis"] = basis.states();
    out["amplitudes"] = suncs::vector_to_json(amps);
    out["norm"] = amps.norm();
  } else if (cfg.phase_fixed) {
    const suncs::PhaseFixedState st = suncs::phase_fixed_state(angles);
    out["amplitudes"] = suncs::vector_to_json(st.amplitudes);
    out["phase_fixed"] = true;
    out["fixed_component"] = st.fixed_component;
  } else {
    out["amplitudes"] = suncs::vector_to_json(suncs::coherent_state_fund(angles));
    out["phase_fixed"] = false;
  }
  emit(out.dump(2), cfg.output);
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg) {
  const suncs::Matrix u = suncs::matrix_from_json(parse_json(read_payload(cfg.matrix_arg)));
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
  const suncs::DecompositionTree tree = suncs::decompose(u, tol);
  emit(suncs::tree_to_json(tree).dump(2), cfg.output);
  return kExitOk;
}

int cmd_overlap(const RunConfig& cfg) {
  suncs::AngleCoordinates a = suncs::angles_from_json(parse_json(read_payload(cfg.angles_arg)));
  suncs::AngleCoordinates b = suncs::angles_from_json(parse_json(read_payload(cfg.angles_b_arg)));
  a.validate();
  b.validate();
  if (a.group_dim() != cfg.n || b.group_dim() != cfg.n)
    throw std::invalid_argument("angle coordinates do not match --n");
  const suncs::Complex closed = suncs::overlap_closed(a, b, cfg.N);
  const suncs::OccupationBasis basis(cfg.n, cfg.N);
  const suncs::Complex direct =
      suncs::coherent_state(basis, a).dot(suncs::coherent_state(basis, b));
  const double delta = std::abs(closed - direct);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << std::setprecision(17) << "n,N,closed_re,closed_im,direct_re,direct_im,delta\n"
        << cfg.n << "," << cfg.N << "," << closed.real() << "," << closed.imag() << ","
        << direct.real() << "," << direct.imag() << "," << delta;
    emit(out.str(), cfg.output);
    return kExitOk;
  }
  json out{{"n", cfg.n},
           {"N", cfg.N},
           {"closed_form", suncs::complex_to_json(closed)},
           {"direct", suncs::complex_to_json(direct)},
           {"delta", delta}};
  emit(out.dump(2), cfg.output);
  return kExitOk;
}

int cmd_volume(const RunConfig& cfg) {
  const suncs::GridSpec defaults = suncs::volume_defaults(cfg.n);
  const int p = cfg.polar_order > 0 ? cfg.polar_order : defaults.polar_order;
  const int q = cfg.phase_order > 0 ? cfg.phase_order : defaults.phase_order;
  const suncs::QuadratureGrid grid(cfg.n, p, q);
  const double volume = suncs::coset_volume(cfg.n, grid);
  const double exact = suncs::coset_volume_exact(cfg.n);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << std::setprecision(17) << "n,polar_order,phase_order,volume,exact,abs_error\n"
        << cfg.n << "," << p << "," << q << "," << volume << "," << exact << ","
        << std::abs(volume - exact);
    emit(out.str(), cfg.output);
    return kExitOk;
  }
  json out{{"n", cfg.n},           {"polar_order", p}, {"phase_order", q},
           {"volume", volume},     {"exact", exact},   {"abs_error", std::abs(volume - exact)}};
  emit(out.dump(2), cfg.output);
  return kExitOk;
}

int cmd_unity_check(const RunConfig& cfg) {
  const suncs::GridSpec thresholds = suncs::unity_thresholds(cfg.n, cfg.N);
  const int p = cfg.polar_order > 0 ? cfg.polar_order : thresholds.polar_order;
  const int q = cfg.phase_order > 0 ? cfg.phase_order : thresholds.phase_order;
  const suncs::QuadratureGrid grid(cfg.n, p, q);
  const suncs::UnityResult result = suncs::resolution_of_unity(cfg.n, cfg.N, grid);
  if (!result.grid_sufficient)
    std::cerr << "warning: grid below exactness thresholds (P >= " << thresholds.polar_order
              << ", Q >= " << thresholds.phase_order << "); residual reported as-is\n";
  const double tol = cfg.tol > 0.0 ? cfg.tol : cfg.tol_reconstruction;
  const bool pass = result.max_abs_deviation <= tol;
  json out{{"n", cfg.n},
           {"N", cfg.N},
           {"polar_order", p},
           {"phase_order", q},
           {"dim", result.matrix.rows()},
           {"prefactor", result.prefactor},
           {"max_abs_deviation", result.max_abs_deviation},
           {"grid_sufficient", result.grid_sufficient},
           {"tolerance", tol},
           {"pass", pass}};
  emit(out.dump(2), cfg.output);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg) {
  const auto results =
      suncs::checks::run_suite(cfg.n, cfg.N, cfg.seed, cfg.tol_identity, cfg.tol_reconstruction);
  bool all_pass = true;
  json checks = json::array();
  for (const auto& r : results) {
    checks.push_back(
        {{"name", r.name}, {"deviation", r.deviation}, {"tolerance", r.tolerance}, {"pass", r.pass}});
    all_pass = all_pass && r.pass;
  }
  json out{{"command", "verify"}, {"n", cfg.n},          {"N", cfg.N},
           {"seed", cfg.seed},    {"checks", checks},    {"pass", all_pass}};
  emit(out.dump(2), cfg.output);
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int run_main(int argc, char** argv) {
  CLI::App app{"SU(n) coherent-state toolkit: states, decompositions, overlaps, coset quadrature"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gens = app.add_subcommand("generators", "generator matrices");
  auto* dump = gens->add_subcommand("dump", "emit the lambda-matrix set");
  dump->add_option("--n", cfg.n, "group dimension")->required();
  dump->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  dump->add_option("--output", cfg.output, "output path (default stdout)");
  gens->require_subcommand(1);

  auto* state = app.add_subcommand("state", "coherent-state amplitudes at given angles");
  state->add_option("--n", cfg.n, "group dimension")->required();
  state->add_option("--angles", cfg.angles_arg, "angle JSON: file, inline, or -")->required();
  state->add_flag("--phase-fixed", cfg.phase_fixed, "divide out the first component's phase");
  state->add_option("--rep", cfg.rep, "emit the size-N representation state instead");
  state->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  state->add_option("--output", cfg.output, "output path (default stdout)");

  auto* dec = app.add_subcommand("decompose", "factor a special unitary into the angle tree");
  dec->add_option("--matrix", cfg.matrix_arg, "matrix JSON: file, inline, or -")->required();
  dec->add_option("--tol", cfg.tol, "unitarity tolerance (default 1e-8)");
  dec->add_option("--output", cfg.output, "output path (default stdout)");

  auto* ovl = app.add_subcommand("overlap", "closed-form vs direct overlap of two states");
  ovl->add_option("--n", cfg.n, "group dimension")->required();
  ovl->add_option("--N", cfg.N, "representation size")->required();
  ovl->add_option("--anglesA", cfg.angles_arg, "angle JSON: file, inline, or -")->required();
  ovl->add_option("--anglesB", cfg.angles_b_arg, "angle JSON: file, inline, or -")->required();
  ovl->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  ovl->add_option("--output", cfg.output, "output path (default stdout)");

  auto* vol = app.add_subcommand("volume", "coset volume by quadrature");
  vol->add_option("--n", cfg.n, "group dimension")->required();
  vol->add_option("--polar-order", cfg.polar_order, "Gauss-Legendre order per polar axis");
  vol->add_option("--phase-order", cfg.phase_order, "uniform nodes per phase axis");
  vol->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  vol->add_option("--output", cfg.output, "output path (default stdout)");

  auto* unity = app.add_subcommand("unity-check", "resolution-of-unity residual");
  unity->add_option("--n", cfg.n, "group dimension")->required();
  unity->add_option("--N", cfg.N, "representation size")->required();
  unity->add_option("--polar-order", cfg.polar_order, "Gauss-Legendre order per polar axis");
  unity->add_option("--phase-order", cfg.phase_order, "uniform nodes per phase axis");
  unity->add_option("--tol", cfg.tol, "pass/fail tolerance (default 1e-10)");
  unity->add_option("--output", cfg.output, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->add_option("--n", cfg.n, "group dimension (default 3)");
  verify->add_option("--N", cfg.N, "representation size (default 2)");
  verify->add_option("--seed", cfg.seed, "seed for randomized checks (default 1)");
  verify->add_option("--tol-identity", cfg.tol_identity, "algebraic identity tolerance");
  verify->add_option("--tol-reconstruction", cfg.tol_reconstruction,
                     "round-trip / quadrature tolerance");
  verify->add_option("--output", cfg.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (dump->parsed()) return cmd_generators_dump(cfg);
    if (state->parsed()) return cmd_state(cfg);
    if (dec->parsed()) return cmd_decompose(cfg);
    if (ovl->parsed()) return cmd_overlap(cfg);
    if (vol->parsed()) return cmd_volume(cfg);
    if (unity->parsed()) return cmd_unity_check(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

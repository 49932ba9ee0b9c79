#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "suncs/fundamental.hpp"
#include "suncs/haar.hpp"
#include "suncs/json_io.hpp"

using nlohmann::json;

namespace {

std::string g_cli;

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST_CASE("state at the highest weight") {
  RunResult r = run_cli("state --n 3 --angles '{\"xi\":[0,0],\"phi\":[0,0,0]}'");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["n"] == 3);
  CHECK(out["amplitudes"][0][0] == 1.0);
  CHECK(out["amplitudes"][1][0] == 0.0);
  CHECK(out["amplitudes"][2][0] == 0.0);
}

TEST_CASE("state with a representation size") {
  RunResult r = run_cli("state --n 2 --rep 2 --angles '{\"xi\":[0.7853981633974483],\"phi\":[0,0]}'");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["N"] == 2);
  CHECK(out["basis"].size() == 3);
  CHECK(std::abs(out["amplitudes"][1][0].get<double>() - std::sqrt(2.0) / 2.0) < 1e-12);
}

TEST_CASE("decompose round trips through JSON") {
  std::mt19937_64 rng(5);
  suncs::Matrix u = suncs::haar_random_su(4, rng);
  const std::string path = "cli_test_matrix.json";
  {
    std::ofstream f(path);
    f << suncs::matrix_to_json(u).dump();
  }
  RunResult r = run_cli("decompose --matrix " + path + " --tol 1e-8");
  REQUIRE(r.status == 0);
  suncs::DecompositionTree tree = suncs::tree_from_json(json::parse(r.out));
  CHECK(suncs::max_abs(suncs::Matrix(suncs::build_group_element(tree) - u)) < 1e-10);
  std::remove(path.c_str());
}

TEST_CASE("overlap reports closed vs direct") {
  RunResult r = run_cli(
      "overlap --n 3 --N 4 --anglesA '{\"xi\":[0.3,0.8],\"phi\":[0.1,1.2,2.3]}' "
      "--anglesB '{\"xi\":[1.1,0.4],\"phi\":[2.2,0.7,3.9]}'");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["delta"].get<double>() < 1e-12);
}

TEST_CASE("volume hits the closed form") {
  RunResult r = run_cli("volume --n 4");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(std::abs(out["volume"].get<double>() - std::pow(2 * suncs::pi, 4) / 48.0) < 1e-10);
}

TEST_CASE("unity-check passes at default thresholds") {
  RunResult r = run_cli("unity-check --n 2 --N 2");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["pass"] == true);
  CHECK(out["max_abs_deviation"].get<double>() <= 1e-10);
}

TEST_CASE("generators dump lists all labels") {
  RunResult r = run_cli("generators dump --n 3");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  REQUIRE(out.size() == 8);
  CHECK(out[0]["label"] == "theta^1_2");
  CHECK(out[7]["label"] == "eta^2_2");
  CHECK(out[7]["matrix"][2][2][0].get<double>() ==
        doctest::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-14));

  RunResult csv = run_cli("generators dump --n 2 --format csv");
  REQUIRE(csv.status == 0);
  CHECK(csv.out.rfind("label,row,col,re,im", 0) == 0);
}

TEST_CASE("verify runs the suite and is byte-stable") {
  RunResult a = run_cli("verify --n 3 --N 2 --seed 7");
  REQUIRE(a.status == 0);
  json out = json::parse(a.out);
  CHECK(out["pass"] == true);
  CHECK(out["checks"].size() >= 20);

  RunResult b = run_cli("verify --n 3 --N 2 --seed 7");
  CHECK(a.out == b.out);
}

TEST_CASE("stdin payloads and the output directory variable") {
  const std::string cmd = "echo '{\"xi\":[0],\"phi\":[0,0]}' | " + g_cli +
                          " state --n 2 --angles - 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) text.append(buf, got);
  REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(json::parse(text)["amplitudes"][0][0] == 1.0);

  const std::string dir = "cli_test_outdir";
  std::filesystem::create_directory(dir);
  const std::string vol_cmd =
      "SUNCS_OUTPUT_DIR=" + dir + " " + g_cli + " volume --n 2 --output vol.json 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(vol_cmd.c_str())) == 0);
  std::ifstream f(dir + "/vol.json");
  REQUIRE(f.good());
  json out;
  f >> out;
  CHECK(std::abs(out["volume"].get<double>() - 2 * suncs::pi * suncs::pi) < 1e-10);
  f.close();
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run_cli("state --n 3 --angles '{\"xi\":[0,0]}'").status == 2);
  CHECK(run_cli("state --n 3 --angles no_such_file.json").status == 2);
  CHECK(run_cli("decompose --matrix '[[[1,0],[0,0]],[[0,0],[2,0]]]'").status == 2);
  CHECK(run_cli("state --n 4 --angles '{\"xi\":[0,0],\"phi\":[0,0,0]}'").status == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-suncs-cli>\n");
    return 1;
  }
  g_cli = argv[1];
  doctest::Context context;
  return context.run();
}

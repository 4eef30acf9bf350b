#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "emberry/errors.hpp"
#include "emberry/scenario.hpp"

using namespace emberry;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("emberry_test_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

const char* kBandsConfig = R"({
  "command": "bands",
  "material": {"type": "plasma", "omega_p_thz": 10.0, "omega_c_thz": 0.0},
  "output": "bands.csv",
  "k_max_norm": 2.0,
  "n_k": 41
})";

}  // namespace

TEST_CASE("validate_scenario: diagnostics name the offending fields") {
  CHECK_THROWS_AS(validate_scenario("{not json"), ConfigError);

  try {
    validate_scenario(R"({"command": "bands", "output": "x.csv",
      "material": {"type": "plasma", "omega_p_thz": 10.0, "bogus": 1},
      "k_max_norm": 2.0, "n_k": 41})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }

  // resonance singularity is rejected up front
  try {
    validate_scenario(R"({"command": "qcheck", "output": "q.csv",
      "material": {"type": "plasma", "omega_p_thz": 9.0, "omega_c_thz": 1.73},
      "f_thz": 1.73})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("resonance") != std::string::npos);
  }

  // negative cutoff multiplier
  CHECK_THROWS_AS(validate_scenario(R"({"command": "chern", "output": "c.json",
      "material": {"type": "nonlocal_plasma", "omega_p_thz": 10.0,
                   "omega_c_thz": 2.0, "k_max_over_c": -5.0}})"),
                  ConfigError);

  // a valid band-sweep scenario passes
  const Scenario sc = validate_scenario(kBandsConfig);
  CHECK(sc.command == "bands");
  CHECK(sc.output == "bands.csv");
}

TEST_CASE("run_scenario exit codes") {
  const fs::path dir = temp_dir("codes");
  CHECK(run_scenario("{broken", dir).exit_code == 2);
  // chern on a local plasma is a config error, not a crash
  CHECK(run_scenario(R"({"command": "chern", "output": "c.json",
    "material": {"type": "plasma", "omega_p_thz": 10.0, "omega_c_thz": 2.0}})",
                     dir)
            .exit_code == 2);
  const RunResult ok = run_scenario(kBandsConfig, dir);
  CHECK(ok.exit_code == 0);
  REQUIRE(ok.written.size() == 2);
  CHECK(fs::exists(ok.written[0]));
  CHECK(fs::exists(ok.written[1]));  // metadata sidecar
}

TEST_CASE("bands output: header, unbiased degeneracy at k = 0") {
  const fs::path dir = temp_dir("bands");
  REQUIRE(run_scenario(kBandsConfig, dir).exit_code == 0);
  std::ifstream csv(dir / "bands.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "k_norm,f_thz,band,polarization");

  // first rows of both TM bands are at k = 0; they must meet at f = omega_p/2pi
  double f_lower = -1.0, f_upper = -1.0;
  std::string line;
  while (std::getline(csv, line)) {
    std::stringstream ss(line);
    std::string knorm, f, band, pol;
    std::getline(ss, knorm, ',');
    std::getline(ss, f, ',');
    std::getline(ss, band, ',');
    std::getline(ss, pol, ',');
    if (knorm == "0" && band == "lower") f_lower = std::stod(f);
    if (knorm == "0" && band == "upper") f_upper = std::stod(f);
  }
  CHECK(f_lower == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(f_upper == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("determinism: identical config gives byte-identical primary output") {
  const fs::path d1 = temp_dir("det1");
  const fs::path d2 = temp_dir("det2");
  const char* cfg = R"({
    "command": "qcheck",
    "material": {"type": "plasma", "omega_p_thz": 9.0, "omega_c_thz": -1.73},
    "output": "q.csv",
    "f_thz": 10.0,
    "delta_phi_deg": [1.0, 2.0]
  })";
  REQUIRE(run_scenario(cfg, d1).exit_code == 0);
  REQUIRE(run_scenario(cfg, d2).exit_code == 0);
  CHECK(slurp(d1 / "q.csv") == slurp(d2 / "q.csv"));
  CHECK(!slurp(d1 / "q.csv").empty());
}

TEST_CASE("chern scenario reports the integer pair") {
  const fs::path dir = temp_dir("chern");
  const char* cfg = R"({
    "command": "chern",
    "material": {"type": "nonlocal_plasma", "omega_p_thz": 10.0,
                 "omega_c_thz": 2.0, "k_max_over_c": 100.0},
    "output": "chern.json",
    "n_radial": 64,
    "n_angular": 64
  })";
  REQUIRE(run_scenario(cfg, dir).exit_code == 0);
  const std::string text = slurp(dir / "chern.json");
  CHECK(text.find("\"band\": \"upper\"") != std::string::npos);
  CHECK(text.find("\"nearest_integer\": 1") != std::string::npos);
  CHECK(text.find("\"nearest_integer\": -2") != std::string::npos);
}

TEST_CASE("geophase scenario") {
  const fs::path dir = temp_dir("geo");
  const char* cfg = R"({
    "command": "geophase",
    "output": "geo.json",
    "path": [[0,0,1],[1,0,0],[0,1,0],[0,0,1]]
  })";
  REQUIRE(run_scenario(cfg, dir).exit_code == 0);
  const std::string text = slurp(dir / "geo.json");
  CHECK(text.find("solid_angle") != std::string::npos);
}

TEST_CASE("remaining commands produce their artifacts") {
  const fs::path dir = temp_dir("smoke");

  CHECK(run_scenario(R"({
    "command": "spp",
    "material": {"type": "plasma", "omega_p_thz": 10.0, "omega_c_thz": -2.0},
    "output": "spp.csv",
    "eps_s": -1e9, "f_min_thz": 10.3, "f_max_thz": 10.9, "n_omega": 21})",
                     dir).exit_code == 0);
  CHECK(slurp(dir / "spp.csv").find("f_thz,k_spp_norm") != std::string::npos);

  CHECK(run_scenario(R"({
    "command": "confinement",
    "material": {"type": "plasma", "omega_p_thz": 9.0},
    "output": "conf.csv",
    "omega_min_over_omega_p": 1.0, "omega_max_over_omega_p": 1.5, "n_omega": 40,
    "omega_c_min_over_omega_p": 0.05, "omega_c_max_over_omega_p": 0.2, "n_omega_c": 3})",
                     dir).exit_code == 0);
  CHECK(slurp(dir / "conf.csv").find("omega_over_omega_p,omega_c_over_omega_p,alpha_p_norm") !=
        std::string::npos);

  CHECK(run_scenario(R"({
    "command": "berry-field",
    "material": {"type": "plasma", "omega_p_thz": 10.0, "omega_c_thz": 2.0},
    "output": "field.csv", "band": "upper", "k_max_norm": 1.5, "n": 9})",
                     dir).exit_code == 0);
  CHECK(slurp(dir / "field.csv").find("kx_norm,ky_norm,A_x,A_y,F_z") != std::string::npos);

  CHECK(run_scenario(R"({
    "command": "emitter", "output": "emitter.csv",
    "dphi0": 0.01, "phase_winding": 1.0})",
                     dir).exit_code == 0);
  CHECK(slurp(dir / "emitter.csv").find("f_offset_over_Omega") != std::string::npos);

  CHECK(run_scenario(R"({
    "command": "symmetry",
    "material": {"type": "plasma", "omega_p_thz": 9.0, "b_tesla": 100.0},
    "output": "sym.json", "f_thz": 10.0})",
                     dir).exit_code == 0);
  const std::string sym = slurp(dir / "sym.json");
  CHECK(sym.find("\"lossless\": true") != std::string::npos);
  CHECK(sym.find("\"reciprocal\": false") != std::string::npos);  // biased
}

TEST_CASE("berry-field at zero bias reports the degenerate cells as nan") {
  const fs::path dir = temp_dir("bf0");
  const char* cfg = R"({
    "command": "berry-field",
    "material": {"type": "plasma", "omega_p_thz": 10.0, "omega_c_thz": 0.0},
    "output": "field0.csv", "band": "upper", "k_max_norm": 1.5, "n": 9})";
  REQUIRE(run_scenario(cfg, dir).exit_code == 0);
  const std::string text = slurp(dir / "field0.csv");
  CHECK(text.find("nan") != std::string::npos);   // cells at the k = 0 crossing
  // every connection entry is zero for the reciprocal medium
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    std::stringstream row(line);
    std::string kx, ky, ax, ay, fz;
    std::getline(row, kx, ','); std::getline(row, ky, ',');
    std::getline(row, ax, ','); std::getline(row, ay, ',');
    CHECK(std::abs(std::stod(ax)) <= 1e-10);
    CHECK(std::abs(std::stod(ay)) <= 1e-10);
  }
}

TEST_CASE("berry-field runs on the nonlocal model") {
  const fs::path dir = temp_dir("bfnl");
  const char* cfg = R"({
    "command": "berry-field",
    "material": {"type": "nonlocal_plasma", "omega_p_thz": 10.0,
                 "omega_c_thz": 2.0, "k_max_over_c": 100.0},
    "output": "field_nl.csv", "band": "lower", "k_max_norm": 1.0, "n": 7})";
  REQUIRE(run_scenario(cfg, dir).exit_code == 0);
  const std::string text = slurp(dir / "field_nl.csv");
  CHECK(text.find("kx_norm") != std::string::npos);
  CHECK(text.find("nan") == std::string::npos);  // biased band is smooth here
}

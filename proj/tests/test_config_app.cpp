#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gmhd/app.hpp"
#include "gmhd/config.hpp"
#include "json.hpp"

using namespace gmhd;
namespace fs = std::filesystem;

namespace {

std::string data_path(const std::string& name) {
  return std::string(GMHD_TEST_DATA_DIR) + "/" + name;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("gmhd_app_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(int (*fn)(const app::Options&), const std::string& config,
              const fs::path& out_dir,
              std::optional<std::uint64_t> seed = {}) {
  std::ostringstream out, err;
  app::Options options;
  options.config_path = config;
  options.out_dir = out_dir.string();
  options.seed_override = seed;
  options.out = &out;
  options.err = &err;
  return {fn(options), out.str(), err.str()};
}

}  // namespace

TEST_CASE("config parser") {
  SUBCASE("sections, comments, types") {
    Config c = Config::parse_string("[a]\nx = 1.5  # trailing\n"
                                    "name = hello ; also\n[b]\nflag = true\n",
                                    "test.ini");
    CHECK(c.get_double("a", "x") == 1.5);
    CHECK(c.get_string("a", "name") == "hello");
    CHECK(c.get_bool("b", "flag"));
    CHECK(c.get_int("a", "absent", 7) == 7);
    CHECK(c.keys("a") == std::vector<std::string>{"x", "name"});
  }
  SUBCASE("errors carry line numbers") {
    try {
      Config::parse_string("[a]\nx = 1\nbroken line\n", "f.ini");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("f.ini:3:") != std::string::npos);
    }
    CHECK_THROWS_AS(Config::parse_string("x = 1\n", "f.ini"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[a]\nx = 1\nx = 2\n", "f.ini"),
                    ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[a\nx = 1\n", "f.ini"), ConfigError);
  }
  SUBCASE("missing key names the key and section") {
    Config c = Config::parse_string("[a]\nx = 1\n", "f.ini");
    try {
      c.get_double("a", "y");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("'y'") != std::string::npos);
      CHECK(std::string(e.what()).find("[a]") != std::string::npos);
    }
  }
  SUBCASE("type errors anchor the offending line") {
    Config c = Config::parse_string("[a]\nx = banana\n", "f.ini");
    try {
      c.get_double("a", "x");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("run_check") {
  SUBCASE("feasible reduced setting: exit 0 and the expected minima") {
    fs::path dir = fresh_dir("check_ok");
    RunResult result = run(app::run_check, data_path("thm11.ini"), dir);
    CHECK(result.code == app::kOk);
    CHECK(result.out.find("feasible") == 0);

    auto report = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(report["feasible"].get<bool>());
    CHECK(report["min_gamma1"].get<double>() ==
          doctest::Approx(5.0 + 1e-9).epsilon(1e-12));
    CHECK(report["min_gamma2"].get<double>() == doctest::Approx(2.0));
    CHECK(report["conditions"].size() > 10);
    for (const auto& cond : report["conditions"]) {
      CHECK(cond.contains("name"));
      CHECK(cond.contains("lhs"));
      CHECK(cond.contains("rhs"));
      CHECK(cond.contains("relation"));
      CHECK(cond.contains("satisfied"));
      CHECK(cond.contains("anchor"));
    }
  }
  SUBCASE("generic instance agrees with the reduced path") {
    fs::path dir = fresh_dir("check_generic");
    RunResult result = run(app::run_check, data_path("instance.ini"), dir);
    CHECK(result.code == app::kOk);
    auto report = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(report["min_gamma1"].get<double>() ==
          doctest::Approx(5.0 + 1e-9).epsilon(1e-12));
  }
  SUBCASE("infeasible instance: exit 1") {
    fs::path dir = fresh_dir("check_bad");
    CHECK(run(app::run_check, data_path("infeasible.ini"), dir).code ==
          app::kInfeasible);
  }
  SUBCASE("missing key: exit 2 with a message naming it") {
    fs::path dir = fresh_dir("check_missing");
    RunResult result = run(app::run_check, data_path("missing_p2.ini"), dir);
    CHECK(result.code == app::kConfigError);
    CHECK(result.err.find("'p2'") != std::string::npos);
  }
  SUBCASE("syntax error: exit 2 with a line anchor") {
    fs::path dir = fresh_dir("check_syntax");
    RunResult result = run(app::run_check, data_path("bad_syntax.ini"), dir);
    CHECK(result.code == app::kConfigError);
    CHECK(result.err.find(":3:") != std::string::npos);
  }
  SUBCASE("nonexistent config: exit 2") {
    fs::path dir = fresh_dir("check_absent");
    CHECK(run(app::run_check, "/nonexistent/gmhd.ini", dir).code ==
          app::kConfigError);
  }
}

TEST_CASE("run_sweep emits one report per value") {
  fs::path dir = fresh_dir("sweep");
  RunResult result = run(app::run_sweep, data_path("sweep.ini"), dir);
  // gamma3 = 0 violates the epsilon window, so not every report is feasible
  CHECK(result.code == app::kInfeasible);
  auto reports = nlohmann::json::parse(slurp(dir / "sweep.json"));
  REQUIRE(reports.is_array());
  CHECK(reports.size() == 11);
  int feasible_count = 0;
  for (const auto& entry : reports) {
    CHECK(entry.contains("swept_value"));
    if (entry["feasible"].get<bool>()) ++feasible_count;
  }
  CHECK(feasible_count == 10);
}

TEST_CASE("run_simulate") {
  SUBCASE("small converging run writes deterministic outputs") {
    fs::path dir1 = fresh_dir("sim1");
    RunResult r1 = run(app::run_simulate, data_path("simulate_small.ini"), dir1);
    CHECK(r1.code == app::kOk);
    CHECK(fs::exists(dir1 / "diagnostics.csv"));
    CHECK(fs::exists(dir1 / "picard.json"));
    CHECK(fs::exists(dir1 / "u_0000.gmhd"));
    CHECK(fs::exists(dir1 / "u_0004.gmhd"));
    CHECK(fs::exists(dir1 / "b_0004.gmhd"));

    std::string csv = slurp(dir1 / "diagnostics.csv");
    CHECK(csv.find("t,div_residual,E_kin,E_mag,E_filtered") == 0);

    // identical config + seed: byte-identical CSV
    fs::path dir2 = fresh_dir("sim2");
    RunResult r2 = run(app::run_simulate, data_path("simulate_small.ini"), dir2);
    CHECK(r2.code == app::kOk);
    CHECK(slurp(dir2 / "diagnostics.csv") == csv);
    CHECK(slurp(dir2 / "u_0004.gmhd") == slurp(dir1 / "u_0004.gmhd"));

    // a different seed changes the data
    fs::path dir3 = fresh_dir("sim3");
    RunResult r3 = run(app::run_simulate, data_path("simulate_small.ini"),
                       dir3, std::uint64_t{99});
    CHECK(r3.code == app::kOk);
    CHECK(slurp(dir3 / "diagnostics.csv") != csv);
  }
  SUBCASE("iteration budget exhaustion: exit 3") {
    fs::path dir = fresh_dir("sim_nc");
    CHECK(run(app::run_simulate, data_path("simulate_nonconv.ini"), dir).code ==
          app::kNonConvergence);
  }
  SUBCASE("escaping iterates: exit 4") {
    fs::path dir = fresh_dir("sim_blow");
    CHECK(run(app::run_simulate, data_path("simulate_blowup.ini"), dir).code ==
          app::kBlowup);
  }
}

TEST_CASE("run_verify") {
  SUBCASE("integral verifier passes and writes its CSV") {
    fs::path dir = fresh_dir("verify_ok");
    RunResult result =
        run(app::run_verify, data_path("verify_integral.ini"), dir);
    CHECK(result.code == app::kOk);
    CHECK(result.out.find("PASS") == 0);
    CHECK(fs::exists(dir / "integral_estimate.csv"));
  }
  SUBCASE("hypothesis violation: exit 2") {
    fs::path dir = fresh_dir("verify_bad");
    CHECK(run(app::run_verify, data_path("verify_integral_bad.ini"), dir).code ==
          app::kConfigError);
  }
  SUBCASE("unknown verifier: exit 2") {
    fs::path dir = fresh_dir("verify_unknown");
    CHECK(run(app::run_verify, data_path("verify_unknown.ini"), dir).code ==
          app::kConfigError);
  }
}

TEST_CASE("command-line binary") {
  fs::path dir = fresh_dir("cli");
  auto shell = [&](const std::string& args) {
    std::string cmd = std::string(GMHD_CLI_PATH) + " " + args +
                      " > " + (dir / "stdout.txt").string() + " 2> " +
                      (dir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  };

  CHECK(shell("check --config " + data_path("thm11.ini") + " --out " +
              (dir / "out").string()) == 0);
  CHECK(shell("check --config " + data_path("infeasible.ini") + " --out " +
              (dir / "out").string()) == 1);
  CHECK(shell("check --config " + data_path("missing_p2.ini") + " --out " +
              (dir / "out").string()) == 2);
  CHECK(shell("check --config /nonexistent.ini") == 2);
  CHECK(shell("--config x.ini") != 0);  // missing subcommand

  SUBCASE("json flag prints the machine report") {
    CHECK(shell("check --json --config " + data_path("thm11.ini") +
                " --out " + (dir / "out").string()) == 0);
    auto report = nlohmann::json::parse(slurp(dir / "stdout.txt"));
    CHECK(report["feasible"].get<bool>());
  }
}

TEST_CASE("shipped example configs run through the binary") {
  fs::path dir = fresh_dir("examples");
  std::string configs = GMHD_CONFIG_DIR;
  auto shell = [&](const std::string& args) {
    std::string cmd = std::string(GMHD_CLI_PATH) + " " + args + " > " +
                      (dir / "stdout.txt").string() + " 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };

  CHECK(shell("check --config " + configs + "/check_thm11.ini --out " +
              (dir / "a").string()) == 0);
  CHECK(shell("check --config " + configs + "/check_instance.ini --out " +
              (dir / "b").string()) == 0);

  SUBCASE("sweep emits eleven reports") {
    CHECK(shell("sweep --config " + configs + "/sweep_gamma3.ini --out " +
                (dir / "c").string()) == 1);  // the gamma3 = 0 entry
    auto reports = nlohmann::json::parse(slurp(dir / "c" / "sweep.json"));
    CHECK(reports.size() == 11);
  }
  SUBCASE("inverse verifier passes") {
    CHECK(shell("verify --config " + configs + "/verify_inverse.ini --out " +
                (dir / "d").string()) == 0);
    CHECK(slurp(dir / "stdout.txt").find("PASS") != std::string::npos);
    CHECK(fs::exists(dir / "d" / "inverse_estimate.csv"));
  }
  SUBCASE("sobolev and product verifiers pass") {
    CHECK(shell("verify --config " + configs + "/verify_sobolev.ini --out " +
                (dir / "e").string()) == 0);
    CHECK(shell("verify --config " + configs + "/verify_product.ini --out " +
                (dir / "f").string()) == 0);
  }
  SUBCASE("simulation outputs are independent of the thread cap") {
    std::string base = std::string(GMHD_CLI_PATH) + " simulate --config " +
                       configs + "/simulate_contraction.ini --out ";
    std::string one = (dir / "t1").string();
    std::string four = (dir / "t4").string();
    CHECK(WEXITSTATUS(std::system(
              ("GMHD_THREADS=1 " + base + one + " > /dev/null 2>&1").c_str())) ==
          0);
    CHECK(WEXITSTATUS(std::system(
              ("GMHD_THREADS=4 " + base + four + " > /dev/null 2>&1").c_str())) ==
          0);
    CHECK(slurp(dir / "t1" / "diagnostics.csv") ==
          slurp(dir / "t4" / "diagnostics.csv"));
    CHECK(slurp(dir / "t1" / "u_0016.gmhd") ==
          slurp(dir / "t4" / "u_0016.gmhd"));
  }
}

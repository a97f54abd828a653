#include "gmhd/app.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmhd/config.hpp"
#include "gmhd/estimates.hpp"
#include "gmhd/initial_data.hpp"
#include "gmhd/snapshot.hpp"
#include "gmhd/solver.hpp"
#include "gmhd/theorem.hpp"
#include "json.hpp"

namespace gmhd::app {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ensure_out_dir(const Options& options) {
  if (!options.out_dir.empty()) fs::create_directories(options.out_dir);
}

std::string out_path(const Options& options, const std::string& name) {
  return (fs::path(options.out_dir) / name).string();
}

// ---------------------------------------------------------------------------
// check / sweep
// ---------------------------------------------------------------------------

TheoremInstance parse_instance(const Config& config) {
  TheoremInstance inst;
  inst.n = int(config.get_int("instance", "n"));
  inst.r0 = config.get_double("instance", "r0");
  inst.r1 = config.get_double("instance", "r1");
  inst.r2 = config.get_double("instance", "r2");
  inst.p0 = config.get_double("instance", "p0");
  inst.p1 = config.get_double("instance", "p1");
  inst.p2 = config.get_double("instance", "p2");
  inst.gamma1 = config.get_double("instance", "gamma1");
  inst.gamma2 = config.get_double("instance", "gamma2");
  inst.gamma3 = config.get_double("instance", "gamma3");
  inst.epsilon = config.get_double("instance", "epsilon", 1e-9);
  if (inst.n < 2)
    throw ConfigError(config.path(), 0, "instance: n must be >= 2");
  if (!(inst.p0 > 1.0 && inst.p1 > 1.0 && inst.p2 > 1.0))
    throw ConfigError(config.path(), 0,
                      "instance: p0, p1, p2 must exceed 1");
  if (!(inst.r0 >= 0.0 && inst.r1 >= 0.0 && inst.r2 >= 0.0))
    throw ConfigError(config.path(), 0,
                      "instance: r0, r1, r2 must be >= 0");
  if (!(inst.gamma1 >= 0.0 && inst.gamma2 >= 0.0 && inst.gamma3 >= 0.0))
    throw ConfigError(config.path(), 0, "instance: gammas must be >= 0");
  if (!(inst.epsilon > 0.0))
    throw ConfigError(config.path(), 0, "instance: epsilon must be positive");
  return inst;
}

std::pair<SpecialCase, SpecialCaseParams> parse_special_case(
    const Config& config) {
  std::string kind_name = config.get_string("special_case", "kind");
  SpecialCase kind;
  if (kind_name == "thm_1_1")
    kind = SpecialCase::thm_1_1;
  else if (kind_name == "thm_1_2")
    kind = SpecialCase::thm_1_2;
  else
    throw ConfigError(config.path(), 0,
                      "special_case: kind must be thm_1_1 or thm_1_2");
  SpecialCaseParams params;
  params.n = int(config.get_int("special_case", "n"));
  params.p = config.get_double("special_case", "p");
  params.q = config.get_double("special_case", "q");
  params.gamma3 = config.get_double("special_case", "gamma3");
  params.epsilon = config.get_double("special_case", "epsilon", 1e-9);
  if (config.has("special_case", "gamma1"))
    params.gamma1 = config.get_double("special_case", "gamma1");
  if (config.has("special_case", "gamma2"))
    params.gamma2 = config.get_double("special_case", "gamma2");
  if (params.n < 2 || !(params.p > 1.0) || !(params.q > 1.0) ||
      !(params.gamma3 >= 0.0) || !(params.epsilon > 0.0))
    throw ConfigError(config.path(), 0, "special_case: malformed parameters");
  return {kind, params};
}

Json instance_to_json(const TheoremInstance& inst) {
  return Json{{"n", inst.n},          {"r0", inst.r0},
              {"r1", inst.r1},        {"r2", inst.r2},
              {"p0", inst.p0},        {"p1", inst.p1},
              {"p2", inst.p2},        {"gamma1", inst.gamma1},
              {"gamma2", inst.gamma2},{"gamma3", inst.gamma3},
              {"epsilon", inst.epsilon}};
}

Json report_to_json(const ConditionReport& report) {
  Json conditions = Json::array();
  for (const Condition& c : report.conditions) {
    Json row{{"name", c.name},
             {"lhs", c.lhs},
             {"rhs", c.rhs},
             {"relation", relation_symbol(c.relation)},
             {"satisfied", c.satisfied},
             {"anchor", c.anchor}};
    if (c.near_boundary) row["near_boundary"] = true;
    conditions.push_back(std::move(row));
  }
  Json out{{"instance", instance_to_json(report.instance)},
           {"conditions", std::move(conditions)},
           {"feasible", report.feasible},
           {"min_gamma1", report.min_gamma1},
           {"min_gamma2", report.min_gamma2}};
  if (report.specialized_min_gamma1)
    out["specialized_min_gamma1"] = *report.specialized_min_gamma1;
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  return out;
}

ConditionReport evaluate_config_report(const Config& config) {
  if (config.has_section("special_case")) {
    auto [kind, params] = parse_special_case(config);
    return check_special_cases(kind, params);
  }
  if (config.has_section("instance"))
    return check_hypotheses(parse_instance(config));
  throw ConfigError(config.path(), 0,
                    "config defines neither [instance] nor [special_case]");
}

void emit_json(const Options& options, const Json& value,
               const std::string& filename) {
  ensure_out_dir(options);
  std::ofstream file(out_path(options, filename));
  file << value.dump(2) << "\n";
  if (options.json_to_stdout) (*options.out) << value.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

MultiplierSpec parse_multiplier(const Config& config,
                                const std::string& section) {
  MultiplierSpec spec;
  spec.gamma = config.get_double(section, "gamma");
  spec.g = GFunction::parse(config.get_string(section, "g", "unit"));
  spec.epsilon = config.get_double(section, "epsilon", 1e-9);
  if (!(spec.gamma >= 0.0))
    throw ConfigError(config.path(), 0, section + ": gamma must be >= 0");
  if (!(spec.epsilon > 0.0))
    throw ConfigError(config.path(), 0, section + ": epsilon must be > 0");
  return spec;
}

std::array<int, 3> parse_mode(const Config& config, const std::string& section,
                              int dim) {
  std::istringstream in(config.get_string(section, "mode"));
  std::array<int, 3> k{0, 0, 0};
  for (int d = 0; d < dim; ++d) {
    if (!(in >> k[d]))
      throw ConfigError(config.path(), 0,
                        section + ": mode needs " + std::to_string(dim) +
                            " integers");
  }
  return k;
}

SpectralField parse_initial_field(const Config& config,
                                  const std::string& section, const Grid& grid,
                                  std::uint64_t seed) {
  std::string family = config.get_string(section, "family", "zero");
  double amplitude = config.get_double(section, "amplitude", 0.0);
  if (family == "zero") return SpectralField(grid);
  if (family == "single_mode")
    return single_mode_field(grid, parse_mode(config, section, grid.dim()),
                             amplitude);
  if (family == "taylor_green_like")
    return taylor_green_like_field(grid, amplitude);
  if (family == "random_band_limited") {
    int band = int(config.get_int(section, "band",
                                  grid.points_per_axis() / 3));
    return random_band_limited_field(grid, grid.dim(), amplitude, band, seed);
  }
  throw ConfigError(config.path(), 0,
                    section + ": unknown initial family '" + family + "'");
}

struct SimulationSetup {
  Grid grid;
  MultiplierSet specs;
  SolverConfig solver;
  SpectralField u0;
  SpectralField B0;
  bool write_snapshots = true;
};

SimulationSetup parse_simulation(const Config& config,
                                 const Options& options) {
  Grid grid(int(config.get_int("grid", "dim")),
            int(config.get_int("grid", "points_per_axis")));

  MultiplierSet specs{parse_multiplier(config, "multiplier1"),
                      parse_multiplier(config, "multiplier2"),
                      parse_multiplier(config, "multiplier3")};

  SolverConfig solver;
  solver.horizon = config.get_double("solver", "horizon");
  solver.nodes = int(config.get_int("solver", "nodes"));
  solver.picard_tol = config.get_double("solver", "picard_tol", 1e-10);
  solver.max_iters = int(config.get_int("solver", "max_iters", 50));
  solver.a1 = config.get_double("solver", "a1", 0.0);
  solver.alpha = config.get_double("solver", "alpha", 1.0);
  solver.nu1 = config.get_double("solver", "nu1", 1.0);
  solver.nu2 = config.get_double("solver", "nu2", 1.0);
  solver.norms.r0 = config.get_double("solver", "r0", 0.0);
  solver.norms.p0 = config.get_double("solver", "p0", 2.0);
  solver.norms.r1 = config.get_double("solver", "r1", 1.0);
  solver.norms.p1 = config.get_double("solver", "p1", 2.0);
  solver.norms.r2 = config.get_double("solver", "r2", 0.0);
  solver.norms.p2 = config.get_double("solver", "p2", 2.0);
  solver.nonlinear_enabled = config.get_bool("solver", "nonlinear", true);
  std::string rule = config.get_string("solver", "dealias", "two_thirds");
  if (rule == "two_thirds")
    solver.rule.mode = DealiasMode::two_thirds;
  else if (rule == "none")
    solver.rule.mode = DealiasMode::none;
  else
    throw ConfigError(config.path(), 0,
                      "solver: dealias must be two_thirds or none");
  try {
    solver.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(config.path(), 0, e.what());
  }

  std::uint64_t seed = options.seed_override.value_or(
      std::uint64_t(config.get_int("run", "seed", 12345)));

  SimulationSetup setup{grid, specs, solver,
                        parse_initial_field(config, "initial_u", grid, seed),
                        parse_initial_field(config, "initial_b", grid,
                                            seed + 1),
                        config.get_bool("output", "snapshots", true)};
  return setup;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<NodeDiagnostics>& rows) {
  std::ofstream out(path);
  out << "t,div_residual,E_kin,E_mag,E_filtered\n";
  for (const NodeDiagnostics& row : rows)
    out << fmt(row.t) << "," << fmt(row.div_residual) << ","
        << fmt(row.kinetic_energy) << "," << fmt(row.magnetic_energy) << ","
        << fmt(row.filtered_energy) << "\n";
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

constexpr const char* kProxyHeader =
    "# torus-grid proxy of the continuum estimate; constants are "
    "grid-dependent, exponents are not\n";

std::vector<int> parse_sizes(const Config& config, const std::string& section,
                             const std::string& fallback) {
  std::istringstream in(config.get_string(section, "sizes", fallback));
  std::vector<int> sizes;
  int n;
  while (in >> n) sizes.push_back(n);
  if (sizes.empty())
    throw ConfigError(config.path(), 0, section + ": no grid sizes");
  return sizes;
}

void write_ratio_csv(const std::string& path, const RatioReport& report) {
  std::ofstream out(path);
  out << kProxyHeader << "N,sup_ratio\n";
  for (const RefinementRow& row : report.rows)
    out << row.points_per_axis << "," << fmt(row.sup_ratio) << "\n";
}

int verify_dispatch(const Config& config, const Options& options,
                    std::uint64_t seed) {
  std::string name = config.get_string("verify", "name");
  std::ostream& out = *options.out;
  ensure_out_dir(options);

  if (name == "semigroup") {
    const std::string sec = "semigroup";
    MultiplierSpec spec = parse_multiplier(config, sec);
    Grid grid(int(config.get_int(sec, "dim", 2)),
              int(config.get_int(sec, "points_per_axis", 64)));
    auto report = verify_semigroup_estimate(
        spec, config.get_double(sec, "r1", 0.0),
        config.get_double(sec, "p1", 2.0), config.get_double(sec, "r2", 1.0),
        config.get_double(sec, "p2", 2.0), grid,
        config.get_double(sec, "t_min", 1e-3),
        config.get_double(sec, "t_max", 1e-1),
        int(config.get_int(sec, "t_count", 25)),
        int(config.get_int(sec, "trials", 20)), seed);
    std::ofstream csv(out_path(options, "semigroup_estimate.csv"));
    csv << kProxyHeader << "t,observed,mode_sup\n";
    for (size_t i = 0; i < report.times.size(); ++i) {
      csv << fmt(report.times[i]) << "," << fmt(report.observed[i]) << ",";
      if (!report.mode_sup.empty()) csv << fmt(report.mode_sup[i]);
      csv << "\n";
    }
    double tol = config.get_double(sec, "slope_tol", 0.10);
    bool pass = report.relative_error <= tol;
    out << (pass ? "PASS" : "FAIL") << " semigroup smoothing: fitted="
        << fmt(report.fitted_exponent)
        << " predicted=" << fmt(report.predicted_exponent)
        << " rel_error=" << fmt(report.relative_error) << "\n";
    return pass ? kOk : kInfeasible;
  }

  if (name == "inverse") {
    const std::string sec = "inverse";
    MultiplierSpec spec = parse_multiplier(config, sec);
    auto report = verify_inverse_estimate(
        spec, config.get_double(sec, "r", 1.0),
        config.get_double(sec, "p", 2.0), int(config.get_int(sec, "dim", 2)),
        parse_sizes(config, sec, "16 32 64"),
        int(config.get_int(sec, "trials", 20)), seed);
    write_ratio_csv(out_path(options, "inverse_estimate.csv"), report);
    out << (report.bounded ? "PASS" : "FAIL")
        << " inverse operator bound: max_growth=" << fmt(report.max_growth)
        << "\n";
    return report.bounded ? kOk : kInfeasible;
  }

  if (name == "integral") {
    const std::string sec = "integral";
    auto report = verify_integral_estimate(
        config.get_double(sec, "a"), config.get_double(sec, "b"),
        config.get_double(sec, "T", 1.0),
        int(config.get_int(sec, "quad_points", 2048)),
        int(config.get_int(sec, "t_samples", 16)));
    std::ofstream csv(out_path(options, "integral_estimate.csv"));
    csv << "a,b,T,sup_value,bound_form,rel_error,scaling_exponent\n"
        << fmt(config.get_double(sec, "a")) << ","
        << fmt(config.get_double(sec, "b")) << ","
        << fmt(config.get_double(sec, "T", 1.0)) << ","
        << fmt(report.sup_value) << "," << fmt(report.bound_form) << ","
        << fmt(report.relative_error) << "," << fmt(report.scaling_exponent)
        << "\n";
    double a = config.get_double(sec, "a"), b = config.get_double(sec, "b");
    bool pass = report.relative_error <=
                    config.get_double(sec, "value_tol", 1e-6) &&
                std::abs(report.scaling_exponent - (1.0 - a - b)) <=
                    config.get_double(sec, "scaling_tol", 1e-8);
    out << (pass ? "PASS" : "FAIL")
        << " singular integral bound: sup=" << fmt(report.sup_value)
        << " closed_form=" << fmt(report.bound_form)
        << " scaling=" << fmt(report.scaling_exponent) << "\n";
    return pass ? kOk : kInfeasible;
  }

  if (name == "sobolev") {
    const std::string sec = "sobolev";
    auto report = verify_sobolev_embedding(
        config.get_double(sec, "s"), config.get_double(sec, "r"),
        config.get_double(sec, "p"), int(config.get_int(sec, "dim", 2)),
        parse_sizes(config, sec, "16 32 64"),
        int(config.get_int(sec, "trials", 20)), seed);
    write_ratio_csv(out_path(options, "sobolev_embedding.csv"),
                    report.ratios);
    out << (report.ratios.bounded ? "PASS" : "FAIL")
        << " sobolev embedding: q=" << fmt(report.q)
        << " max_growth=" << fmt(report.ratios.max_growth) << "\n";
    return report.ratios.bounded ? kOk : kInfeasible;
  }

  if (name == "product") {
    const std::string sec = "product";
    HolderSplit split{config.get_double(sec, "p1"),
                      config.get_double(sec, "p2"),
                      config.get_double(sec, "q1"),
                      config.get_double(sec, "q2")};
    auto report = verify_product_estimate(
        config.get_double(sec, "r"), config.get_double(sec, "p"), split,
        int(config.get_int(sec, "dim", 2)),
        parse_sizes(config, sec, "16 32"),
        int(config.get_int(sec, "trials", 20)), seed);
    write_ratio_csv(out_path(options, "product_estimate.csv"), report);
    out << (report.bounded ? "PASS" : "FAIL")
        << " product estimate: max_growth=" << fmt(report.max_growth) << "\n";
    return report.bounded ? kOk : kInfeasible;
  }

  throw ConfigError(config.path(), 0, "unknown verifier '" + name + "'");
}

}  // namespace

int run_check(const Options& options) {
  try {
    Config config = Config::parse_file(options.config_path);
    ConditionReport report = evaluate_config_report(config);
    emit_json(options, report_to_json(report), "report.json");
    if (!options.json_to_stdout)
      (*options.out) << (report.feasible ? "feasible" : "infeasible")
                     << " min_gamma1=" << fmt(report.min_gamma1)
                     << " min_gamma2=" << fmt(report.min_gamma2) << "\n";
    return report.feasible ? kOk : kInfeasible;
  } catch (const ConfigError& e) {
    (*options.err) << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    (*options.err) << options.config_path << ": " << e.what() << "\n";
    return kConfigError;
  }
}

int run_sweep(const Options& options) {
  try {
    Config config = Config::parse_file(options.config_path);
    if (!config.has_section("sweep"))
      throw ConfigError(config.path(), 0, "sweep requires a [sweep] section");
    std::string parameter = config.get_string("sweep", "parameter");
    double from = config.get_double("sweep", "from");
    double to = config.get_double("sweep", "to");
    double step = config.get_double("sweep", "step");
    if (!(step > 0.0) || to < from)
      throw ConfigError(config.path(), 0,
                        "sweep requires step > 0 and to >= from");

    std::string target_section =
        config.has_section("special_case") ? "special_case" : "instance";
    int count = int(std::floor((to - from) / step + 0.5)) + 1;

    Json reports = Json::array();
    bool all_feasible = true;
    for (int i = 0; i < count; ++i) {
      double value = from + step * double(i);
      // Re-parse with the swept key substituted; untouched keys are shared.
      std::ostringstream patched;
      std::ifstream in(options.config_path);
      std::string line;
      // Rebuild the file with the swept key overridden inside its section.
      bool in_target = false, replaced = false;
      while (std::getline(in, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (!trimmed.empty() && trimmed.front() == '[') {
          trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
          in_target = trimmed == "[" + target_section + "]";
        }
        size_t eq = line.find('=');
        if (in_target && eq != std::string::npos) {
          std::string key = line.substr(0, eq);
          key.erase(0, key.find_first_not_of(" \t"));
          key.erase(key.find_last_not_of(" \t") + 1);
          if (key == parameter) {
            patched << parameter << " = " << fmt(value) << "\n";
            replaced = true;
            continue;
          }
        }
        patched << line << "\n";
      }
      if (!replaced)
        patched << "[" << target_section << "]\n"
                << parameter << " = " << fmt(value) << "\n";

      Config swept =
          Config::parse_string(patched.str(), options.config_path);
      Json entry;
      try {
        ConditionReport report = evaluate_config_report(swept);
        entry = report_to_json(report);
        all_feasible = all_feasible && report.feasible;
      } catch (const std::invalid_argument& e) {
        entry = Json{{"feasible", false}, {"error", e.what()}};
        all_feasible = false;
      }
      entry["swept_value"] = value;
      reports.push_back(std::move(entry));
    }
    emit_json(options, reports, "sweep.json");
    if (!options.json_to_stdout)
      (*options.out) << reports.size() << " reports, "
                     << (all_feasible ? "all feasible" : "not all feasible")
                     << "\n";
    return all_feasible ? kOk : kInfeasible;
  } catch (const ConfigError& e) {
    (*options.err) << e.what() << "\n";
    return kConfigError;
  }
}

int run_simulate(const Options& options) {
  try {
    Config config = Config::parse_file(options.config_path);
    SimulationSetup setup = parse_simulation(config, options);
    ensure_out_dir(options);

    auto [traj, diag] =
        picard_solve(setup.u0, setup.B0, setup.specs, setup.solver);

    write_diagnostics_csv(out_path(options, "diagnostics.csv"),
                          diagnostics(traj, setup.specs, setup.solver));

    if (setup.write_snapshots) {
      char name[32];
      write_snapshot(out_path(options, "u_0000.gmhd"), traj.initial_u, 0.0);
      write_snapshot(out_path(options, "b_0000.gmhd"), traj.initial_B, 0.0);
      for (int j = 0; j < traj.nodes(); ++j) {
        std::snprintf(name, sizeof name, "u_%04d.gmhd", j + 1);
        write_snapshot(out_path(options, name), traj.u[j], traj.times[j]);
        std::snprintf(name, sizeof name, "b_%04d.gmhd", j + 1);
        write_snapshot(out_path(options, name), traj.B[j], traj.times[j]);
      }
    }

    Json summary{{"converged", diag.converged},
                 {"iterations", diag.iterations},
                 {"residuals", diag.residuals},
                 {"x_deviation_sup", diag.x_deviation_sup},
                 {"x_weighted_sup", diag.x_weighted_sup},
                 {"y_deviation_sup", diag.y_deviation_sup}};
    if (diag.estimated_ratio)
      summary["estimated_ratio"] = *diag.estimated_ratio;
    emit_json(options, summary, "picard.json");
    if (!options.json_to_stdout)
      (*options.out) << "converged in " << diag.iterations << " iterations\n";
    return kOk;
  } catch (const ConfigError& e) {
    (*options.err) << e.what() << "\n";
    return kConfigError;
  } catch (const NonConvergenceError& e) {
    (*options.err) << e.what() << "\n";
    return kNonConvergence;
  } catch (const BlowupError& e) {
    (*options.err) << e.what() << "\n";
    return kBlowup;
  } catch (const std::invalid_argument& e) {
    (*options.err) << options.config_path << ": " << e.what() << "\n";
    return kConfigError;
  }
}

int run_verify(const Options& options) {
  try {
    Config config = Config::parse_file(options.config_path);
    std::uint64_t seed = options.seed_override.value_or(
        std::uint64_t(config.get_int("run", "seed", 12345)));
    return verify_dispatch(config, options, seed);
  } catch (const ConfigError& e) {
    (*options.err) << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    (*options.err) << options.config_path << ": " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace gmhd::app

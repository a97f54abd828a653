#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace gmhd::app {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,              // success / feasible
  kInfeasible = 1,      // ran fine, verdict negative
  kConfigError = 2,     // malformed configuration or parameters
  kNonConvergence = 3,  // Picard iteration exhausted its budget
  kBlowup = 4,          // iterate escaped the blowup guard
};

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  bool json_to_stdout = false;
  std::ostream* out = &std::cout;
  std::ostream* err = &std::cerr;
};

/// Evaluate the inequality system for the [instance] or [special_case] in
/// the config; writes report.json and returns kOk iff feasible.
int run_check(const Options& options);

/// run_check over a swept parameter ([sweep]: parameter/from/to/step);
/// writes sweep.json (one report per value). kOk iff every report feasible.
int run_sweep(const Options& options);

/// Integrate the system from the configured initial data; writes trajectory
/// snapshots and diagnostics.csv.
int run_simulate(const Options& options);

/// Run one operator-estimate verifier; writes its CSV report and prints one
/// PASS/FAIL summary line.
int run_verify(const Options& options);

}  // namespace gmhd::app

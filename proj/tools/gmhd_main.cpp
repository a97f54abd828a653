#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gmhd/app.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Pseudo-spectral lab for a generalized MHD-alpha system: "
               "parameter feasibility checks, mild-solution integration, and "
               "operator-estimate verification on the periodic torus"};
  cli.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  bool json_mode = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_flag("--json", json_mode, "print the machine report to stdout");
  };

  CLI::App* check =
      cli.add_subcommand("check", "evaluate the parameter inequality system");
  CLI::App* simulate =
      cli.add_subcommand("simulate", "integrate the system by fixed-point "
                                     "iteration of its integral form");
  CLI::App* verify =
      cli.add_subcommand("verify", "run one operator-estimate verifier");
  CLI::App* sweep =
      cli.add_subcommand("sweep", "run check across a parameter range");
  for (CLI::App* sub : {check, simulate, verify, sweep}) add_common(sub);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? 0 : gmhd::app::kConfigError;
  }

  gmhd::app::Options options;
  options.config_path = config_path;
  options.out_dir = out_dir;
  options.seed_override = seed;
  options.json_to_stdout = json_mode;

  if (check->parsed()) return gmhd::app::run_check(options);
  if (simulate->parsed()) return gmhd::app::run_simulate(options);
  if (verify->parsed()) return gmhd::app::run_verify(options);
  if (sweep->parsed()) return gmhd::app::run_sweep(options);
  return gmhd::app::kConfigError;
}

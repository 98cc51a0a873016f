// Command-line front end: ringcat <spectrum|catscan|effective|paths|loop> [flags]

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ringcat/commands.hpp"
#include "ringcat/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact diagonalization and two-level analysis of bosonic flow superpositions "
               "on a three-site ring"};
  app.fallthrough();
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands{
      {"spectrum", "lowest levels of the twisted ring vs applied phase (phi,level,energy)"},
      {"catscan", "cat-state amplitudes vs detuning from phi = pi, exact and two-level"},
      {"effective", "two-level model vs detuning (eps, |V01|, ratio, E-/E+)"},
      {"paths", "coupling paths between |N,0,0> and |0,N,0> by order"},
      {"loop", "continuum ring with a delta barrier (phi,level,energy_over_C)"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "flat key = value configuration file");

  // Flag values are kept as raw text and resolved by load_config so that file and
  // command line share one parser and one set of diagnostics.
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  const std::vector<Flag> flags{
      {"--n", "n", "number of bosons N"},
      {"--u", "u", "contact interaction U"},
      {"--u-over-j", "u_over_j", "contact interaction as U/J1"},
      {"--u0", "u0", "dipolar on-site interaction U0 (selects the dipolar model)"},
      {"--u1", "u1", "dipolar nearest-neighbour interaction U1 (selects the dipolar model)"},
      {"--j", "j", "tunnelling J or J1,J2,J3"},
      {"--phi", "phi", "phase grid start:stop:count or single value (suffix pi allowed)"},
      {"--dphi", "dphi", "detuning grid around pi, start:stop:count"},
      {"--levels", "levels", "number of levels to report"},
      {"--out", "out", "output CSV path (default: stdout)"},
      {"--threads", "threads", "worker threads"},
      {"--dump", "dump", "spectrum: write the site Hamiltonian at the first phase"},
      {"--max-order", "max_order", "paths: highest number of intermediate states"},
      {"--length", "length", "loop: circumference L"},
      {"--hbar", "hbar", "loop: reduced Planck constant"},
      {"--mass", "mass", "loop: particle mass"},
      {"--v", "v", "loop: delta interaction strength"},
      {"--barrier", "barrier", "loop: delta barrier strength b"},
      {"--barrier-pos", "barrier_pos", "loop: barrier position x0 (default L/2)"},
      {"--kmax", "kmax", "loop: plane-wave cutoff"},
  };
  std::vector<std::optional<std::string>> values(flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i) {
    auto* opt = app.add_option(flags[i].name, values[i], flags[i].help);
    opt->allow_extra_args(false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ringcat::kExitOk : ringcat::kExitConfig;
  }

  try {
    const auto command = ringcat::parse_command(app.get_subcommands().front()->get_name());
    ringcat::Overrides overrides;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (values[i]) overrides.emplace_back(flags[i].key, *values[i]);
    }
    const auto config = ringcat::load_config(command, config_path, overrides);
    return ringcat::run_command(config, std::cerr);
  } catch (const ringcat::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return ringcat::kExitConfig;
  }
}

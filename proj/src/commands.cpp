#include "ringcat/commands.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ringcat/cat_metrics.hpp"
#include "ringcat/effective.hpp"
#include "ringcat/loop_model.hpp"
#include "ringcat/parallel.hpp"
#include "ringcat/solver.hpp"
#include "ringcat/table_io.hpp"

namespace ringcat {

namespace {

void run_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto grid = cfg.phi.points();
  const auto table = spectrum_sweep(cfg.model, grid, cfg.levels, cfg.threads);
  write_spectrum_csv(out, table, cfg.describe());
  if (!cfg.dump.empty()) {
    std::ofstream dump(cfg.dump);
    if (!dump) throw Error("cannot open dump file '" + cfg.dump + "'");
    write_operator(dump, build_site_hamiltonian(cfg.model.with_phi(grid.front())));
  }
}

void run_catscan(const RunConfig& cfg, std::ostream& out) {
  const auto table = catscan(cfg.model, cfg.dphi.points(), cfg.threads);
  write_catscan_csv(out, table, cfg.describe());
}

void run_effective(const RunConfig& cfg, std::ostream& out) {
  const auto grid = cfg.dphi.points();
  const double e0 = degeneracy_energy(cfg.model);
  std::vector<EffectiveRow> rows(grid.size());
  parallel_for(grid.size(), cfg.threads, [&](std::size_t i) {
    rows[i] = {grid[i], predict_two_level(cfg.model, std::numbers::pi + grid[i], e0)};
  });
  write_effective_csv(out, rows, cfg.describe());
}

void run_paths(const RunConfig& cfg, std::ostream& out) {
  const double phi = cfg.phi.start;
  const auto h = flow_hamiltonian(cfg.model.with_phi(phi));
  const auto graph = build_coupling_graph(h);
  const int n = cfg.model.n;
  const auto t0 = graph.index({n, 0, 0});
  const auto t1 = graph.index({0, n, 0});
  const auto low = lowdin_coupling(h, t0, t1);

  std::vector<PathsRow> rows(static_cast<std::size_t>(cfg.max_order));
  parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
    const int order = static_cast<int>(i) + 1;
    rows[i] = {order, path_coupling(graph, t0, t1, low.lambda, order)};
  });

  std::ostringstream summary;
  summary << "connected=" << (graph.connected(t0, t1) ? "yes" : "no")
          << " edges=" << graph.edge_count() / 2 << " lowdin_v01_abs="
          << format_number(std::abs(low.v01)) << " lambda=" << format_number(low.lambda);
  write_paths_csv(out, rows, {cfg.describe(), summary.str()});
}

void run_loop(const RunConfig& cfg, std::ostream& out) {
  const auto grid = cfg.phi.points();
  const double c = cfg.loop.energy_scale();
  std::vector<RealVector> levels(grid.size());
  parallel_for(grid.size(), cfg.threads, [&](std::size_t i) {
    levels[i] = loop::loop_spectrum_with_barrier(grid[i], cfg.loop, cfg.k_max, cfg.levels);
  });
  std::vector<LoopRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (Eigen::Index l = 0; l < levels[i].size(); ++l) {
      rows.push_back({grid[i], static_cast<int>(l), levels[i][l] / c});
    }
  }
  write_loop_csv(out, rows, cfg.describe());
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::spectrum: return run_spectrum(config, out);
    case Command::catscan: return run_catscan(config, out);
    case Command::effective: return run_effective(config, out);
    case Command::paths: return run_paths(config, out);
    case Command::loop: return run_loop(config, out);
  }
}

int run_command(const RunConfig& config, std::ostream& err) {
  const std::string context = to_string(config.command);
  try {
    // Render fully before touching the destination so failures leave no partial file.
    std::ostringstream buffer;
    run(config, buffer);
    if (config.out.empty()) {
      std::cout << buffer.str();
      std::cout.flush();
    } else {
      std::ofstream file(config.out);
      if (!file) {
        err << context << ": cannot open output file '" << config.out << "'\n";
        return kExitFailure;
      }
      file << buffer.str();
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << context << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    err << context << ": invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnsupportedConfiguration& e) {
    err << context << ": unsupported configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalContractError& e) {
    err << context << ": numerical contract failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << context << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ringcat

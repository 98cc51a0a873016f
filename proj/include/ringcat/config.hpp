#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcat/errors.hpp"
#include "ringcat/hamiltonian.hpp"
#include "ringcat/loop_model.hpp"

namespace ringcat {

enum class Command { spectrum, catscan, effective, paths, loop };

std::string to_string(Command command);
/// Throws ConfigError for anything but the five command names.
Command parse_command(std::string_view name);

/// Diagnostic for a bad configuration entry. `line` is 0 for command-line flags.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, std::string key, int line);
  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

/// `start:stop:count`, inclusive, evenly spaced.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  std::vector<double> points() const;
};

struct RunConfig {
  Command command = Command::spectrum;
  ModelParams model;
  loop::LoopParams loop;
  GridSpec phi;
  GridSpec dphi;
  int levels = 4;
  int k_max = 16;
  int max_order = 6;
  std::string out;   // empty: standard output
  std::string dump;  // spectrum only: operator dump of the first grid point
  unsigned threads = 1;

  /// One-line `key=value` rendering of every resolved setting (written into CSV headers).
  /// The thread count is left out so outputs do not depend on it.
  std::string describe() const;
};

/// Ordered (key, raw value) pairs. Later entries override earlier ones.
using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Resolves defaults, then the flat `key = value` file text (`#` starts a comment), then
/// the overrides. Keys: n, j, u, u_over_j, u0, u1, phi, dphi, levels, out, dump, threads,
/// length, hbar, mass, v, barrier, barrier_pos, kmax, max_order ('-' and '_' are
/// interchangeable). Numbers accept a `pi` suffix ("pi", "-0.5pi", "2pi").
RunConfig load_config_text(Command command, std::string_view file_text,
                           const Overrides& overrides);

/// Same, reading the file at `path` when given.
RunConfig load_config(Command command, const std::optional<std::string>& path,
                      const Overrides& overrides);

}  // namespace ringcat

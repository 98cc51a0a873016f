#include "ringcat/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "ringcat/solver.hpp"
#include "ringcat/table_io.hpp"

namespace ringcat {

std::string to_string(Command command) {
  switch (command) {
    case Command::spectrum: return "spectrum";
    case Command::catscan: return "catscan";
    case Command::effective: return "effective";
    case Command::paths: return "paths";
    case Command::loop: return "loop";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::spectrum, Command::catscan, Command::effective, Command::paths,
                 Command::loop}) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("unknown command '" + std::string(name) + "'", "command", 0);
}

ConfigError::ConfigError(const std::string& message, std::string key, int line)
    : Error(line > 0 ? "config error at line " + std::to_string(line) + ", key '" + key +
                           "': " + message
                     : "config error, key '" + key + "': " + message),
      key_(std::move(key)),
      line_(line) {}

std::vector<double> GridSpec::points() const { return linear_grid(start, stop, count); }

namespace {

struct Entry {
  std::string value;
  int line;
};

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "n",     "j",     "u",    "u_over_j", "u0",      "u1",          "phi",
      "dphi",  "levels", "out", "dump",     "threads", "length",      "hbar",
      "mass",  "v",     "barrier", "barrier_pos", "kmax", "max_order"};
  return keys;
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& text, const std::string& key, int line) {
  std::string body = trim(text);
  double factor = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    body.resize(body.size() - 2);
    if (body.empty() || body == "+") body = "1";
    if (body == "-") body = "-1";
  }
  if (body.empty()) throw ConfigError("malformed number '" + text + "'", key, line);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(body.c_str(), &end);
  if (end != body.c_str() + body.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError("malformed number '" + text + "'", key, line);
  }
  return v * factor;
}

long parse_integer(const std::string& text, const std::string& key, int line) {
  const std::string body = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(body.c_str(), &end, 10);
  if (body.empty() || end != body.c_str() + body.size() || errno == ERANGE) {
    throw ConfigError("malformed integer '" + text + "'", key, line);
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

GridSpec parse_grid(const std::string& text, const std::string& key, int line) {
  const auto parts = split(trim(text), ':');
  GridSpec g;
  if (parts.size() == 1) {
    g.start = g.stop = parse_number(parts[0], key, line);
    g.count = 1;
  } else if (parts.size() == 3) {
    g.start = parse_number(parts[0], key, line);
    g.stop = parse_number(parts[1], key, line);
    const long count = parse_integer(parts[2], key, line);
    if (count < 1) throw ConfigError("grid count must be at least 1", key, line);
    g.count = static_cast<std::size_t>(count);
  } else {
    throw ConfigError("grid must be 'start:stop:count' or a single value, got '" + text + "'",
                      key, line);
  }
  if (g.start > g.stop) throw ConfigError("grid start exceeds stop", key, line);
  if (g.count > 1 && g.start == g.stop) {
    throw ConfigError("grid with several points needs start < stop", key, line);
  }
  return g;
}

void put(std::map<std::string, Entry>& merged, const std::string& key, Entry entry) {
  // u and u_over_j describe the same quantity; the later layer wins.
  if (key == "u") merged.erase("u_over_j");
  if (key == "u_over_j") merged.erase("u");
  merged[key] = std::move(entry);
}

void parse_file(std::string_view text, std::map<std::string, Entry>& merged) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(std::string_view(raw).substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", trim(content), line);
    }
    const std::string key = normalize_key(trim(std::string_view(content).substr(0, eq)));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw ConfigError("unknown key", key, line);
    }
    put(merged, key, {value, line});
  }
}

void apply_defaults(RunConfig& cfg) {
  using std::numbers::pi;
  cfg.model = ModelParams{};
  cfg.model.n = 3;
  cfg.model.tunnelling = {1.0, 1.0, 1.0};
  cfg.model.u = 0.1;
  cfg.model.phi = pi;
  cfg.phi = {0.0, 2.0 * pi, 121};
  cfg.dphi = {-0.4, 0.4, 81};
  if (cfg.command == Command::paths) cfg.phi = {pi, pi, 1};
  cfg.loop = loop::LoopParams{};
  cfg.loop.barrier = 0.5;
}

}  // namespace

RunConfig load_config_text(Command command, std::string_view file_text,
                           const Overrides& overrides) {
  std::map<std::string, Entry> merged;
  parse_file(file_text, merged);
  for (const auto& [raw_key, value] : overrides) {
    const std::string key = normalize_key(raw_key);
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw ConfigError("unknown key", key, 0);
    }
    put(merged, key, {value, 0});
  }

  RunConfig cfg;
  cfg.command = command;
  apply_defaults(cfg);

  auto get = [&](const std::string& key) -> const Entry* {
    const auto it = merged.find(key);
    return it == merged.end() ? nullptr : &it->second;
  };
  auto number = [&](const std::string& key, double& target) {
    if (const Entry* e = get(key)) target = parse_number(e->value, key, e->line);
  };
  auto integer = [&](const std::string& key, auto& target, long minimum) {
    if (const Entry* e = get(key)) {
      const long v = parse_integer(e->value, key, e->line);
      if (v < minimum) {
        throw ConfigError("must be at least " + std::to_string(minimum), key, e->line);
      }
      target = static_cast<std::remove_reference_t<decltype(target)>>(v);
    }
  };

  integer("n", cfg.model.n, 1);
  if (const Entry* e = get("j")) {
    const auto parts = split(e->value, ',');
    if (parts.size() == 1) {
      const double j = parse_number(parts[0], "j", e->line);
      cfg.model.tunnelling = {j, j, j};
    } else if (parts.size() == 3) {
      for (std::size_t i = 0; i < 3; ++i) cfg.model.tunnelling[i] = parse_number(parts[i], "j", e->line);
    } else {
      throw ConfigError("expected one value or J1,J2,J3", "j", e->line);
    }
  }
  number("u", cfg.model.u);
  if (const Entry* e = get("u_over_j")) {
    cfg.model.u = parse_number(e->value, "u_over_j", e->line) * cfg.model.tunnelling[0];
  }
  if (get("u0") || get("u1")) {
    cfg.model.interaction = Interaction::dipolar;
    cfg.model.u0 = cfg.model.u;
    number("u0", cfg.model.u0);
    number("u1", cfg.model.u1);
  }
  if (const Entry* e = get("phi")) cfg.phi = parse_grid(e->value, "phi", e->line);
  if (const Entry* e = get("dphi")) cfg.dphi = parse_grid(e->value, "dphi", e->line);
  cfg.model.phi = cfg.phi.start;
  integer("levels", cfg.levels, 1);
  integer("threads", cfg.threads, 1);
  integer("kmax", cfg.k_max, 1);
  integer("max_order", cfg.max_order, 1);
  if (const Entry* e = get("out")) cfg.out = e->value;
  if (const Entry* e = get("dump")) cfg.dump = e->value;

  number("length", cfg.loop.length);
  number("hbar", cfg.loop.hbar);
  number("mass", cfg.loop.mass);
  number("v", cfg.loop.interaction);
  number("barrier", cfg.loop.barrier);
  if (const Entry* e = get("barrier_pos")) {
    cfg.loop.barrier_pos = parse_number(e->value, "barrier_pos", e->line);
  }

  if (!(cfg.loop.length > 0.0)) {
    const Entry* e = get("length");
    throw ConfigError("loop circumference must be positive", "length", e ? e->line : 0);
  }
  if (!(cfg.loop.hbar > 0.0) || !(cfg.loop.mass > 0.0)) {
    throw ConfigError("hbar and mass must be positive", get("hbar") ? "hbar" : "mass", 0);
  }
  if (cfg.command == Command::loop && cfg.k_max < cfg.levels) {
    const Entry* e = get("kmax");
    throw ConfigError("kmax must be at least levels", "kmax", e ? e->line : 0);
  }
  return cfg;
}

RunConfig load_config(Command command, const std::optional<std::string>& path,
                      const Overrides& overrides) {
  std::string text;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot open config file '" + *path + "'", "config", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return load_config_text(command, text, overrides);
}

std::string RunConfig::describe() const {
  std::ostringstream s;
  const auto& m = model;
  s << "command=" << to_string(command);
  if (command == Command::loop) {
    s << " length=" << format_number(loop.length) << " hbar=" << format_number(loop.hbar)
      << " mass=" << format_number(loop.mass) << " barrier=" << format_number(loop.barrier)
      << " barrier_pos=" << format_number(loop.barrier_position()) << " kmax=" << k_max
      << " levels=" << levels << " phi=" << format_number(phi.start) << ':'
      << format_number(phi.stop) << ':' << phi.count;
    return s.str();
  }
  s << " n=" << m.n << " j=" << format_number(m.tunnelling[0]) << ','
    << format_number(m.tunnelling[1]) << ',' << format_number(m.tunnelling[2]);
  if (m.interaction == Interaction::contact) {
    s << " interaction=contact u=" << format_number(m.u);
  } else {
    s << " interaction=dipolar u0=" << format_number(m.u0) << " u1=" << format_number(m.u1);
  }
  switch (command) {
    case Command::spectrum:
      s << " phi=" << format_number(phi.start) << ':' << format_number(phi.stop) << ':'
        << phi.count << " levels=" << levels;
      break;
    case Command::catscan:
    case Command::effective:
      s << " dphi=" << format_number(dphi.start) << ':' << format_number(dphi.stop) << ':'
        << dphi.count;
      break;
    case Command::paths:
      s << " phi=" << format_number(phi.start) << " max_order=" << max_order;
      break;
    case Command::loop:
      break;
  }
  return s.str();
}

}  // namespace ringcat

// Copyright 2026 The scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "scramble/error.hpp"
#include "scramble/io.hpp"

namespace scramble {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(key + ": '" + text + "' is not a number");
  }
  return v;
}

long parse_integer(const std::string& key, const std::string& text) {
  long v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(key + ": '" + text + "' is not an integer");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const long v = parse_integer(key, text);
  if (v < -1000000 || v > 1000000) throw ConfigError(key + ": " + text + " is out of range");
  return static_cast<int>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string join_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + format_real(v[k]);
  return s;
}

}  // namespace

void apply_config_value(SimConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "n_sites") {
    cfg.n_sites = parse_int(key, value);
  } else if (key == "g") {
    cfg.g = parse_real(key, value);
  } else if (key == "h") {
    cfg.h = parse_real(key, value);
  } else if (key == "channel") {
    try {
      cfg.channel = channel_kind_from_string(value);
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "gamma") {
    cfg.gamma = parse_real(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_real(key, value);
  } else if (key == "t_max") {
    cfg.t_max = parse_real(key, value);
  } else if (key == "sample_every") {
    cfg.sample_every = parse_int(key, value);
  } else if (key == "b_site") {
    cfg.b_site = parse_int(key, value);
  } else if (key == "a_sites") {
    cfg.a_sites.clear();
    for (const auto& item : split_list(value)) cfg.a_sites.push_back(parse_int(key, item));
  } else if (key == "delta") {
    cfg.delta = parse_real(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_integer(key, value);
  } else if (key == "v_lr") {
    cfg.v_lr = parse_real(key, value);
  } else if (key == "gammas") {
    cfg.gammas.clear();
    for (const auto& item : split_list(value)) cfg.gammas.push_back(parse_real(key, item));
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void SimConfig::validate() const {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw ConfigError("n_sites out of range [1," + std::to_string(kMaxSites) + "]");
  }
  if (!std::isfinite(g) || !std::isfinite(h)) throw ConfigError("g and h must be finite");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be finite and >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be > 0");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ConfigError("t_max must be >= 0");
  if (sample_every < 1) throw ConfigError("sample_every must be >= 1");
  try {
    integrator().validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (b_site < 1 || b_site > n_sites) {
    throw ConfigError("b_site out of range [1," + std::to_string(n_sites) + "]");
  }
  for (int s : a_sites) {
    if (s < 1 || s > n_sites) {
      throw ConfigError("a_sites entry " + std::to_string(s) + " out of range [1," +
                        std::to_string(n_sites) + "]");
    }
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("delta must be > 0");
  if (!(v_lr > 0.0) || !std::isfinite(v_lr)) throw ConfigError("v_lr must be > 0");
  for (double gm : gammas) {
    if (!(gm > 0.0) || !std::isfinite(gm)) throw ConfigError("gammas entries must be > 0");
  }
}

ModelSpec SimConfig::model() const {
  ModelSpec m;
  m.n_sites = n_sites;
  m.g = g;
  m.h = h;
  m.channel = {channel, gamma};
  return m;
}

IntegratorConfig SimConfig::integrator() const {
  IntegratorConfig c;
  c.dt = dt;
  c.t_max = t_max;
  c.sample_every = sample_every;
  return c;
}

std::vector<int> SimConfig::resolved_a_sites() const {
  if (!a_sites.empty()) return a_sites;
  std::vector<int> all;
  for (int s = 1; s <= n_sites; ++s) all.push_back(s);
  return all;
}

ConfigSnapshot SimConfig::snapshot() const {
  return {
      {"n_sites", std::to_string(n_sites)},
      {"g", format_real(g)},
      {"h", format_real(h)},
      {"channel", std::string(to_string(channel))},
      {"gamma", format_real(gamma)},
      {"dt", format_real(dt)},
      {"t_max", format_real(t_max)},
      {"sample_every", std::to_string(sample_every)},
      {"b_site", std::to_string(b_site)},
      {"a_sites", join_ints(resolved_a_sites())},
      {"delta", format_real(delta)},
      {"seed", std::to_string(seed)},
      {"v_lr", format_real(v_lr)},
      {"gammas", join_reals(gammas)},
  };
}

SimConfig parse_config_text(const std::string& text, SimConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    try {
      apply_config_value(base, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

SimConfig parse_config(const std::optional<std::filesystem::path>& file,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
  SimConfig cfg;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw ConfigError("cannot read config file '" + file->string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_config_text(buf.str());
  }
  for (const auto& [k, v] : overrides) apply_config_value(cfg, k, v);
  cfg.validate();
  return cfg;
}

}  // namespace scramble

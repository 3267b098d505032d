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


#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scramble/evolution.hpp"
#include "scramble/model.hpp"
#include "scramble/series.hpp"

namespace scramble {

// ---------------------------------------------------------------- config

/// Everything one experiment needs. Defaults are the chain parameters
/// g = -1.05, h = 0.5 and a threshold of 0.1.
struct SimConfig {
  int n_sites = 8;
  double g = -1.05;
  double h = 0.5;
  ChannelKind channel = ChannelKind::kNone;
  double gamma = 0.0;
  double dt = kDefaultDt;
  double t_max = 10.0;
  int sample_every = 20;
  int b_site = 1;
  /// Empty means every site.
  std::vector<int> a_sites;
  double delta = 0.1;
  long seed = 42;
  /// Lieb-Robinson velocity used by the bound and quasi-locality reports.
  double v_lr = 1.7;
  /// Rates swept by `powerlaw` and `bound-check`.
  std::vector<double> gammas = {0.05, 0.08, 0.1, 0.13, 0.16};

  /// Throws ConfigError on any out-of-range field.
  void validate() const;

  ModelSpec model() const;
  IntegratorConfig integrator() const;
  std::vector<int> resolved_a_sites() const;

  /// Every key in a fixed order; the values parse back to this config.
  ConfigSnapshot snapshot() const;
};

/// Applies one key=value assignment. Throws ConfigError on an unknown key or
/// a malformed value.
void apply_config_value(SimConfig& cfg, const std::string& key, const std::string& value);

/// Reads `key=value` lines; `#` starts a comment. Errors name the line.
SimConfig parse_config_text(const std::string& text, SimConfig base = {});

/// File (optional) then overrides, then validation.
SimConfig parse_config(const std::optional<std::filesystem::path>& file,
                       const std::vector<std::pair<std::string, std::string>>& overrides);

// ---------------------------------------------------------------- csv

/// `%.12g`, `NA` for NaN, `inf` / `-inf` for infinities.
std::string format_real(double v);

/// Long format `t,site,value` sorted by (t, site) under a `# config:` line.
void write_grid_csv(const HeatmapSeries& series, const std::filesystem::path& path);

/// Two columns named after the series axes.
void write_series_csv(const Series1D& series, const std::filesystem::path& path);

/// Free-form table with a config comment line.
void write_table_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows, const ConfigSnapshot& config,
                     const std::filesystem::path& path);

/// Inverse of write_grid_csv at printed precision.
HeatmapSeries read_grid_csv(const std::filesystem::path& path);

/// Writes `text` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

// ---------------------------------------------------------------- svg

/// Cell grid with an 8-stop viridis ramp; NaN cells grey.
std::string heatmap_svg(const HeatmapSeries& series);
void render_heatmap_svg(const HeatmapSeries& series, const std::filesystem::path& path);

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  /// Markers only, no connecting line.
  std::vector<Series1D> points;
  /// Connected lines.
  std::vector<Series1D> lines;
};

std::string line_plot_svg(const LinePlot& plot);
void render_line_svg(const LinePlot& plot, const std::filesystem::path& path);

// ---------------------------------------------------------------- manifest

struct RunManifest {
  std::string subcommand;
  ConfigSnapshot config;
  std::string version;
  double wall_seconds = 0.0;
  /// (file name relative to the output directory, SHA-256 hex)
  std::vector<std::pair<std::string, std::string>> outputs;
  /// Extra key/value results, e.g. fitted exponents.
  std::vector<std::pair<std::string, std::string>> results;
  /// Number of failed checks (validate only).
  int failures = 0;
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);
std::string manifest_text(const RunManifest& m);
std::string library_version();

// ---------------------------------------------------------------- runner

inline const std::vector<std::string> kSubcommands = {
    "otoc-heatmap", "corrected-heatmap", "weights",    "lightcone-width", "powerlaw",
    "lr-norms",     "norm-decay",        "bound-check", "quasilocality",  "validate"};

struct RunOptions {
  std::string subcommand;
  SimConfig config;
  std::filesystem::path out_dir = ".";
  bool svg = false;
  int threads = 1;
};

/// Runs one pipeline, writes its files under out_dir plus `manifest.txt`,
/// and returns the manifest. Progress lines go to `log`.
RunManifest run_subcommand(const RunOptions& options, std::ostream& log);

// ---------------------------------------------------------------- validate

struct ValidationCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Invariant suite on random inputs drawn from `cfg.seed`, at cfg.n_sites.
std::vector<ValidationCheck> run_validation_suite(const SimConfig& cfg);

}  // namespace scramble

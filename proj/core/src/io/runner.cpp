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


#include <chrono>
#include <cmath>
#include <ostream>

#include "scramble/analysis.hpp"
#include "scramble/error.hpp"
#include "scramble/io.hpp"
#include "scramble/otoc.hpp"
#include "scramble/parallel.hpp"
#include "scramble/pauli.hpp"

namespace scramble {
namespace {

class Outputs {
 public:
  Outputs(const RunOptions& opt, RunManifest& manifest) : opt_(opt), manifest_(manifest) {}

  std::filesystem::path path(const std::string& name) const { return opt_.out_dir / name; }

  void record(const std::string& name) { manifest_.outputs.emplace_back(name, sha256_file(path(name))); }

  void grid(HeatmapSeries s, const std::string& stem) {
    s.config = opt_.config.snapshot();
    write_grid_csv(s, path(stem + ".csv"));
    record(stem + ".csv");
    if (opt_.svg) {
      render_heatmap_svg(s, path(stem + ".svg"));
      record(stem + ".svg");
    }
  }

  void series(Series1D s, const std::string& stem, LinePlot plot) {
    s.config = opt_.config.snapshot();
    write_series_csv(s, path(stem + ".csv"));
    record(stem + ".csv");
    if (opt_.svg) {
      render_line_svg(plot, path(stem + ".svg"));
      record(stem + ".svg");
    }
  }

  void table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
             const std::string& stem) {
    write_table_csv(header, rows, opt_.config.snapshot(), path(stem + ".csv"));
    record(stem + ".csv");
  }

  void line_svg(const LinePlot& plot, const std::string& stem) {
    if (!opt_.svg) return;
    render_line_svg(plot, path(stem + ".svg"));
    record(stem + ".svg");
  }

  void result(const std::string& key, const std::string& value) { manifest_.results.emplace_back(key, value); }

 private:
  const RunOptions& opt_;
  RunManifest& manifest_;
};

ModelSpec unitary(const SimConfig& cfg) { return cfg.model().with_channel({ChannelKind::kNone, 0.0}); }

void require_channel(const SimConfig& cfg, const std::string& what) {
  if (cfg.channel == ChannelKind::kNone) throw ConfigError(what + " needs channel other than none");
}

OtocHeatmaps heatmaps(const SimConfig& cfg, const ModelSpec& model) {
  return otoc_heatmap(model, cfg.b_site, cfg.resolved_a_sites(), cfg.integrator());
}

LightconeCalibration calibration(const SimConfig& cfg, std::ostream& log) {
  log << "calibrating light cone without dissipation\n";
  const ModelSpec m = unitary(cfg);
  return calibrate_lightcone(m, heatmaps(cfg, m).f, cfg.b_site);
}

void report_calibration(const LightconeCalibration& c, Outputs& out) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [d, t] : c.arrival_times) rows.push_back({std::to_string(d), format_real(t)});
  out.table({"distance", "arrival_time"}, rows, "lightcone_calibration");
  out.result("v_b", format_real(c.v_b));
  out.result("w", format_real(c.w));
  out.result("sharp_front", c.sharp_front ? "true" : "false");
  out.result("fit_residual", format_real(c.fit_residual));
}

void run_otoc(const RunOptions& opt, Outputs& out, bool corrected_only) {
  const OtocHeatmaps h = heatmaps(opt.config, opt.config.model());
  if (!corrected_only) out.grid(h.f, "otoc");
  out.grid(h.f_identity, "otoc_identity");
  out.grid(h.f_corrected, "otoc_corrected");
}

void run_weights(const RunOptions& opt, Outputs& out) {
  const SimConfig& cfg = opt.config;
  const auto profile = weight_profile(cfg.model(), pauli_on_site(PauliLetter::Z, cfg.b_site, cfg.n_sites),
                                      cfg.integrator());
  std::vector<std::vector<std::string>> rows;
  Series1D one{"t", "weight", {}, {}, "one-body", {}};
  Series1D two{"t", "weight", {}, {}, "nearest-neighbour two-body", {}};
  Series1D sum{"t", "weight", {}, {}, "sum", {}};
  for (const auto& w : profile) {
    rows.push_back({format_real(w.t), format_real(w.one_body), format_real(w.nn_two_body),
                    format_real(w.few_body_sum), format_real(w.identity)});
    for (auto* s : {&one, &two, &sum}) s->x.push_back(w.t);
    one.y.push_back(w.one_body);
    two.y.push_back(w.nn_two_body);
    sum.y.push_back(w.few_body_sum);
  }
  out.table({"t", "one_body", "nn_two_body", "few_body_sum", "identity"}, rows, "weights");
  out.line_svg({"Pauli weights", "t", "weight", false, false, {}, {one, two, sum}}, "weights");
  out.result("few_body_sum_final", format_real(profile.back().few_body_sum));
}

void report_width(const LightconeWidth& w, Outputs& out, const std::string& stem) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [d, c] : w.contrast) rows.push_back({std::to_string(d), format_real(c)});
  out.table({"distance", "contrast"}, rows, stem);
}

void run_lightcone_width(const RunOptions& opt, Outputs& out, std::ostream& log) {
  const SimConfig& cfg = opt.config;
  const LightconeCalibration calib = calibration(cfg, log);
  report_calibration(calib, out);
  const OtocHeatmaps h = heatmaps(cfg, cfg.model());
  const LightconeWidth w = lightcone_width(h.f_corrected, calib, cfg.delta, cfg.b_site);
  report_width(w, out, "lightcone_contrast");
  out.grid(h.f_corrected, "otoc_corrected");
  out.result("width", format_real(w.width));
  out.result("exceeds_system", w.exceeds_system ? "true" : "false");
}

void run_powerlaw(const RunOptions& opt, Outputs& out, std::ostream& log) {
  const SimConfig& cfg = opt.config;
  require_channel(cfg, "powerlaw");
  const LightconeCalibration calib = calibration(cfg, log);
  report_calibration(calib, out);
  std::vector<LightconeWidth> widths(cfg.gammas.size());
  log << "sweeping " << cfg.gammas.size() << " rates on " << opt.threads << " thread(s)\n";
  parallel_for(cfg.gammas.size(), opt.threads, [&](std::size_t k) {
    const ModelSpec m = cfg.model().with_channel({cfg.channel, cfg.gammas[k]});
    widths[k] = lightcone_width(heatmaps(cfg, m).f_corrected, calib, cfg.delta, cfg.b_site);
  });
  Series1D data{"gamma", "width", {}, {}, "width", {}};
  std::map<double, double> finite;
  for (std::size_t k = 0; k < widths.size(); ++k) {
    data.x.push_back(cfg.gammas[k]);
    data.y.push_back(widths[k].width);
    if (std::isfinite(widths[k].width)) finite[cfg.gammas[k]] = widths[k].width;
  }
  LinePlot plot{"light-cone width", "gamma", "width", true, true, {data}, {}};
  if (finite.size() >= 3) {
    const PowerLawFit fit = powerlaw_fit(finite);
    out.result("alpha", format_real(fit.alpha));
    out.result("c", format_real(fit.c));
    out.result("r_squared", format_real(fit.r_squared));
    Series1D line{"gamma", "width", {}, {}, "fit", {}};
    for (const auto& [g, d] : finite) {
      line.x.push_back(g);
      line.y.push_back(fit.c * std::pow(g, -fit.alpha));
    }
    plot.lines.push_back(line);
  } else {
    out.result("alpha", "NA");
    out.result("fit", "fewer than 3 finite widths");
  }
  out.series(data, "powerlaw", plot);
}

void run_lr_norms(const RunOptions& opt, Outputs& out) {
  const SimConfig& cfg = opt.config;
  const LrSeries lr = lr_commutator_series(cfg.model(), pauli_on_site(PauliLetter::Z, cfg.b_site, cfg.n_sites),
                                           cfg.resolved_a_sites(), cfg.integrator());
  out.grid(lr.commutator, "lr_commutator");
  out.grid(lr.corrected, "lr_corrected");
  out.series(lr.norm, "operator_norm", {"operator norm", "t", "norm", false, false, {}, {lr.norm}});
}

void run_norm_decay(const RunOptions& opt, Outputs& out) {
  const SimConfig& cfg = opt.config;
  const Series1D s = norm_decay_series(cfg.model(), pauli_on_site(PauliLetter::Z, cfg.b_site, cfg.n_sites),
                                       cfg.integrator());
  out.series(s, "norm_decay", {"operator norm", "t", "norm", false, false, {}, {s}});
  out.result("norm_final", format_real(s.y.back()));
}

void run_bound_check(const RunOptions& opt, Outputs& out) {
  const SimConfig& cfg = opt.config;
  const std::vector<double> times = {0.5 * cfg.t_max, cfg.t_max};
  const auto rep = propagator_difference_check(
      cfg.model(), pauli_on_site(PauliLetter::Z, cfg.b_site, cfg.n_sites), cfg.gammas, times, cfg.integrator());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t ti = 0; ti < rep.times.size(); ++ti) {
    for (std::size_t gi = 0; gi < rep.gammas.size(); ++gi) {
      rows.push_back({format_real(rep.times[ti]), format_real(rep.gammas[gi]), format_real(rep.delta[ti][gi]),
                      format_real(rep.integral_bound[ti][gi])});
    }
  }
  out.table({"t", "gamma", "difference", "integral_bound"}, rows, "propagator_difference");
  rows.clear();
  for (const auto& [key, r] : rep.linearity_ratio) {
    rows.push_back({"linearity", format_real(key.first), format_real(key.second), format_real(r)});
  }
  for (const auto& [key, r] : rep.early_time_ratio) {
    rows.push_back({"early_time", format_real(key.first), format_real(key.second), format_real(r)});
  }
  out.table({"ratio", "t", "gamma", "value"}, rows, "propagator_ratios");
  rows.clear();
  for (double g : cfg.gammas) {
    rows.push_back({format_real(g), format_real(proposition_bound(cfg.delta, cfg.v_lr, g))});
  }
  out.table({"gamma", "width_lower_bound"}, rows, "width_bound");
}

void run_quasilocality(const RunOptions& opt, Outputs& out) {
  const SimConfig& cfg = opt.config;
  if (cfg.b_site != 1) throw ConfigError("quasilocality needs b_site=1");
  std::vector<int> radii;
  for (int r = 1; r <= cfg.n_sites; ++r) radii.push_back(r);
  const auto rep = quasilocality_check(cfg.model(), pauli_on_site(PauliLetter::Z, 1, cfg.n_sites), cfg.t_max,
                                       radii, cfg.integrator(), cfg.v_lr);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < rep.radii.size(); ++k) {
    rows.push_back({std::to_string(rep.radii[k]), format_real(rep.epsilon[k])});
  }
  out.table({"radius", "epsilon"}, rows, "quasilocality");
  out.result("non_increasing", rep.non_increasing ? "true" : "false");
  out.result("cone_radius", std::to_string(rep.cone_radius));
  out.result("small_outside_cone", rep.small_outside_cone ? "true" : "false");
}

int run_validate(const RunOptions& opt, Outputs& out, std::ostream& log) {
  const auto checks = run_validation_suite(opt.config);
  std::vector<std::vector<std::string>> rows;
  int failures = 0;
  for (const auto& c : checks) {
    rows.push_back({c.name, format_real(c.value), format_real(c.tolerance), c.pass ? "pass" : "FAIL"});
    log << (c.pass ? "pass " : "FAIL ") << c.name << " value=" << format_real(c.value)
        << " tol=" << format_real(c.tolerance) << "\n";
    failures += c.pass ? 0 : 1;
  }
  out.table({"check", "value", "tolerance", "status"}, rows, "validate");
  out.result("checks", std::to_string(checks.size()));
  return failures;
}

}  // namespace

RunManifest run_subcommand(const RunOptions& options, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  options.config.validate();
  if (std::find(kSubcommands.begin(), kSubcommands.end(), options.subcommand) == kSubcommands.end()) {
    throw ConfigError("unknown subcommand '" + options.subcommand + "'");
  }
  std::filesystem::create_directories(options.out_dir);
  RunManifest manifest;
  manifest.subcommand = options.subcommand;
  manifest.config = options.config.snapshot();
  manifest.version = library_version();
  Outputs out(options, manifest);

  const std::string& name = options.subcommand;
  log << name << ": n_sites=" << options.config.n_sites << " channel=" << to_string(options.config.channel)
      << " gamma=" << format_real(options.config.gamma) << "\n";
  if (name == "otoc-heatmap") {
    run_otoc(options, out, false);
  } else if (name == "corrected-heatmap") {
    run_otoc(options, out, true);
  } else if (name == "weights") {
    run_weights(options, out);
  } else if (name == "lightcone-width") {
    run_lightcone_width(options, out, log);
  } else if (name == "powerlaw") {
    run_powerlaw(options, out, log);
  } else if (name == "lr-norms") {
    run_lr_norms(options, out);
  } else if (name == "norm-decay") {
    run_norm_decay(options, out);
  } else if (name == "bound-check") {
    run_bound_check(options, out);
  } else if (name == "quasilocality") {
    run_quasilocality(options, out);
  } else if (name == "validate") {
    manifest.failures = run_validate(options, out, log);
  }
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_file_atomic(options.out_dir / "manifest.txt", manifest_text(manifest));
  return manifest;
}

}  // namespace scramble

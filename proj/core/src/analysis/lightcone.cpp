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


#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "scramble/analysis.hpp"
#include "scramble/error.hpp"

namespace scramble {
namespace {

struct Crossing {
  double t = kInvalidValue;
  // Index of the sample at or after the crossing; -1 if none.
  long sample = -1;
};

Crossing find_crossing(const std::vector<double>& times, const std::vector<double>& values,
                       double level) {
  if (times.size() != values.size()) throw InvalidArgument("first_crossing: length mismatch");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] <= level)) continue;
    Crossing c;
    c.sample = static_cast<long>(k);
    if (k == 0 || std::isnan(values[k - 1])) {
      c.t = times[k];
    } else {
      const double v0 = values[k - 1], v1 = values[k];
      c.t = times[k - 1] + (v0 - level) / (v0 - v1) * (times[k] - times[k - 1]);
    }
    return c;
  }
  return {};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

double first_crossing(const std::vector<double>& times, const std::vector<double>& values,
                      double level) {
  return find_crossing(times, values, level).t;
}

LightconeCalibration calibrate_lightcone(const ModelSpec& model_no_dissipation,
                                         const HeatmapSeries& heatmap, int b_site) {
  heatmap.validate();
  const int n = model_no_dissipation.n_sites;
  LightconeCalibration out;

  std::map<int, int> site_at;  // distance -> site
  for (int s : heatmap.sites) {
    const int d = std::abs(s - b_site);
    if (d >= 1 && !site_at.count(d)) site_at[d] = s;
  }

  std::vector<double> xs, ys;
  for (const auto& [d, s] : site_at) {
    const double t = first_crossing(heatmap.times, heatmap.column(s), 0.5);
    if (std::isnan(t)) {
      out.no_crossing.push_back(d);
      continue;
    }
    out.arrival_times[d] = t;
    if (d >= 2 && d <= n - 2) {
      out.fit_distances.push_back(d);
      xs.push_back(d);
      ys.push_back(t);
    }
  }
  if (xs.size() < 3) {
    throw NumericalError("calibrate_lightcone: only " + std::to_string(xs.size()) +
                         " distances with a 0.5 crossing in the fit range, need 3");
  }

  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  const double slope = sxy / sxx;
  if (!(slope > 0.0) || !std::isfinite(slope)) {
    throw NumericalError("calibrate_lightcone: arrival times do not grow with distance");
  }
  out.v_b = 1.0 / slope;
  double ss = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = ys[k] - (my + slope * (xs[k] - mx));
    ss += r * r;
  }
  out.fit_residual = std::sqrt(ss / static_cast<double>(xs.size()));

  std::vector<double> widths;
  for (int d : out.fit_distances) {
    const std::vector<double> col = heatmap.column(site_at[d]);
    const Crossing early = find_crossing(heatmap.times, col, 0.8);
    const Crossing late = find_crossing(heatmap.times, col, 0.2);
    if (early.sample < 0 || late.sample < 0) continue;
    // A front that passes within one sample interval is unresolved: width 0.
    widths.push_back(early.sample == late.sample ? 0.0 : out.v_b * (late.t - early.t));
  }
  out.w = widths.empty() ? 0.0 : median(widths);
  out.sharp_front = out.w == 0.0;
  return out;
}

LightconeWidth lightcone_width(const HeatmapSeries& corrected, const LightconeCalibration& calib,
                               double delta, int b_site) {
  if (!(delta > 0.0)) throw InvalidArgument("lightcone_width: delta must be > 0");
  if (!(calib.v_b > 0.0) || !std::isfinite(calib.v_b)) {
    throw InvalidArgument("lightcone_width: calibration has no valid velocity");
  }
  corrected.validate();
  std::map<int, int> site_at;
  for (int s : corrected.sites) {
    const int d = std::abs(s - b_site);
    if (d >= 1 && !site_at.count(d)) site_at[d] = s;
  }
  LightconeWidth out;
  for (const auto& [d, s] : site_at) {
    const double t1 = std::max(corrected.times.front(), (d - 0.5 * calib.w) / calib.v_b);
    const double t2 = (d + 0.5 * calib.w) / calib.v_b;
    const double f1 = corrected.interpolate(s, t1);
    const double f2 = corrected.interpolate(s, t2);
    if (std::isnan(f1) || std::isnan(f2)) {
      out.unresolvable.push_back(d);
      continue;
    }
    const double c = f1 - f2;
    out.contrast[d] = c;
    if (out.exceeds_system && c < delta) {
      out.width = d;
      out.exceeds_system = false;
    }
  }
  return out;
}

PowerLawFit powerlaw_fit(const std::map<double, double>& widths) {
  if (widths.size() < 3) {
    throw InvalidArgument("powerlaw_fit: need at least 3 points, got " +
                          std::to_string(widths.size()));
  }
  std::vector<double> xs, ys;
  for (const auto& [gamma, d] : widths) {
    if (!std::isfinite(gamma) || !std::isfinite(d) || !(gamma > 0.0) || !(d > 0.0)) {
      throw InvalidArgument("powerlaw_fit: widths and rates must be finite and positive");
    }
    xs.push_back(std::log(gamma));
    ys.push_back(std::log(d));
  }
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
    syy += (ys[k] - my) * (ys[k] - my);
  }
  const double slope = sxy / sxx;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = ys[k] - (my + slope * (xs[k] - mx));
    ss_res += r * r;
  }
  PowerLawFit fit;
  fit.alpha = -slope;
  fit.c = std::exp(my - slope * mx);
  fit.gamma_lo = widths.begin()->first;
  fit.gamma_hi = widths.rbegin()->first;
  fit.r_squared = syy <= 1e-24 * std::max(1.0, my * my) ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

}  // namespace scramble

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

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "scramble/evolution.hpp"
#include "scramble/linalg.hpp"
#include "scramble/model.hpp"
#include "scramble/pauli.hpp"
#include "scramble/series.hpp"

namespace scramble {

// ---------------------------------------------------------------- weights

struct WeightProfile {
  double t = 0.0;
  double one_body = 0.0;
  /// Two-body strings whose letters sit on neighbouring sites.
  double nn_two_body = 0.0;
  double few_body_sum = 0.0;
  /// Weight of the all-identity string.
  double identity = 0.0;
  /// Sum of all weights; 1 up to rounding.
  double total = 0.0;
  /// Word -> weight, filled only on request.
  std::map<std::string, double> per_string;
};

/// Normalized Pauli weights |b_S|^2 / sum |b_S'|^2 of one operator.
WeightProfile weight_profile_of(const DenseOperator& op, double t, bool keep_strings = false);

/// Weights of V_b^+(t) B^+ at every sample time.
std::vector<WeightProfile> weight_profile(const ModelSpec& model, const DenseOperator& b,
                                          const IntegratorConfig& cfg, bool keep_strings = false);

// ---------------------------------------------------------------- light cone

struct LightconeCalibration {
  double v_b = 0.0;
  double w = 0.0;
  /// Set when every front was sharper than the sampling grid (w = 0).
  bool sharp_front = false;
  /// Distance -> first time f <= 0.5.
  std::map<int, double> arrival_times;
  /// Distances with no 0.5 crossing before t_max.
  std::vector<int> no_crossing;
  /// Distances used in the velocity fit.
  std::vector<int> fit_distances;
  /// RMS residual of the arrival-time fit.
  double fit_residual = 0.0;
};

/// Arrival times, butterfly velocity and front width from a dissipation-free
/// OTOC grid. Distances are |site - b_site|; the fit uses 2 <= d <= N - 2.
LightconeCalibration calibrate_lightcone(const ModelSpec& model_no_dissipation,
                                         const HeatmapSeries& heatmap, int b_site = 1);

/// First time the column falls to `level`, interpolated linearly between
/// samples. NaN when it never does.
double first_crossing(const std::vector<double>& times, const std::vector<double>& values,
                      double level);

struct LightconeWidth {
  /// Smallest distance with contrast < delta, or +infinity.
  double width = std::numeric_limits<double>::infinity();
  bool exceeds_system = true;
  std::map<int, double> contrast;
  /// Distances whose later probe time lies past the grid, or whose cells are invalid.
  std::vector<int> unresolvable;
};

/// Contrast f(t1, d) - f(t2, d) with t1,2 = (d -+ w/2) / v_b on a corrected
/// OTOC grid.
LightconeWidth lightcone_width(const HeatmapSeries& corrected, const LightconeCalibration& calib,
                               double delta, int b_site = 1);

struct PowerLawFit {
  double c = 0.0;
  double alpha = 0.0;
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
  double r_squared = 0.0;
};

/// Least squares of ln d against ln gamma: d = c / gamma^alpha.
PowerLawFit powerlaw_fit(const std::map<double, double>& widths);

// ---------------------------------------------------------------- norms

struct LrSeries {
  /// ||[V_b^+(t) B, A_i]||
  HeatmapSeries commutator;
  /// ||[V_b^+(t) B, A_i]|| / (||A_i|| ||V_b^+(t) B||)
  HeatmapSeries corrected;
  /// ||V_b^+(t) B|| against t.
  Series1D norm;
};

/// Commutator norms against `letter` on each of `a_sites`.
LrSeries lr_commutator_series(const ModelSpec& model, const DenseOperator& b,
                              const std::vector<int>& a_sites, const IntegratorConfig& cfg,
                              PauliLetter letter = PauliLetter::Z);

/// Operator norm of V_b^+(t) B at every sample.
Series1D norm_decay_series(const ModelSpec& model, const DenseOperator& b,
                           const IntegratorConfig& cfg);

// ---------------------------------------------------------------- bounds

struct PropagatorDifferenceReport {
  std::vector<double> times;
  std::vector<double> gammas;
  /// delta[ti][gi] = ||V_gamma^+(t) B - V_0^+(t) B||
  std::vector<std::vector<double>> delta;
  /// (t, gamma) -> delta(t, 2 gamma) / delta(t, gamma), where 2 gamma is in the list.
  std::map<std::pair<double, double>, double> linearity_ratio;
  /// (t, gamma) -> delta(2t, gamma) / delta(t, gamma), where 2t is in the list.
  std::map<std::pair<double, double>, double> early_time_ratio;
  /// delta[ti][gi] bound gamma * t * (number of dissipating sites).
  std::vector<std::vector<double>> integral_bound;
};

/// Difference between dissipative and unitary backward adjoint evolution of
/// B. Each time must be a whole number of steps.
PropagatorDifferenceReport propagator_difference_check(const ModelSpec& model,
                                                       const DenseOperator& b,
                                                       const std::vector<double>& gammas,
                                                       const std::vector<double>& times,
                                                       const IntegratorConfig& cfg);

struct QuasilocalityReport {
  double t = 0.0;
  double v_lr = 0.0;
  std::vector<int> radii;
  std::vector<double> epsilon;
  bool non_increasing = true;
  /// Radius beyond which epsilon must be small: ceil(v_lr t) + 2.
  int cone_radius = 0;
  /// epsilon < 0.05 ||B|| for every radius above cone_radius (vacuous if none).
  bool small_outside_cone = true;
};

/// epsilon(r) = ||full(t) - truncated_[1,r](t)|| for B supported on site 1.
QuasilocalityReport quasilocality_check(const ModelSpec& model, const DenseOperator& b, double t,
                                        const std::vector<int>& radii, const IntegratorConfig& cfg,
                                        double v_lr);

/// sqrt(epsilon v_lr / gamma) with unit lattice spacing.
double proposition_bound(double epsilon, double v_lr, double gamma);

}  // namespace scramble

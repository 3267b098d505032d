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
#include <set>

#include "scramble/analysis.hpp"
#include "scramble/error.hpp"

namespace scramble {
namespace {

constexpr double kMatchTol = 1e-9;

bool same_value(double a, double b) { return std::abs(a - b) <= kMatchTol * std::max(1.0, std::abs(b)); }

long step_of(double t, double dt) {
  const double s = t / dt;
  if (!(t >= 0.0) || std::abs(s - std::round(s)) > 1e-9 * std::max(1.0, s)) {
    throw InvalidArgument("time " + std::to_string(t) + " is not a whole number of steps of " +
                          std::to_string(dt));
  }
  return std::lround(s);
}

// Backward adjoint evolution of b, keeping the states at the requested steps.
std::map<long, DenseOperator> snapshots(const ModelSpec& model, const DenseOperator& b,
                                        const std::set<long>& steps, double dt) {
  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.t_max = static_cast<double>(*steps.rbegin()) * dt;
  cfg.sample_every = 1;
  std::map<long, DenseOperator> out;
  long k = 0;
  evolve_general_observed({model, Direction::kBackward, Picture::kAdjoint}, b, cfg,
                          [&](double, const DenseOperator& x) {
                            if (steps.count(k)) out.emplace(k, x);
                            ++k;
                          });
  return out;
}

DenseOperator final_state(const ModelSpec& model, const DenseOperator& b, double t, double dt,
                          std::optional<SiteInterval> region) {
  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.t_max = t;
  cfg.sample_every = static_cast<int>(std::max<long>(1, step_of(t, dt)));
  const GeneratorSpec gen{model, Direction::kBackward, Picture::kAdjoint};
  const Trajectory traj = region ? evolve_truncated(gen, b, *region, cfg) : evolve(gen, b, cfg);
  return traj.back().x;
}

}  // namespace

PropagatorDifferenceReport propagator_difference_check(const ModelSpec& model,
                                                       const DenseOperator& b,
                                                       const std::vector<double>& gammas,
                                                       const std::vector<double>& times,
                                                       const IntegratorConfig& cfg) {
  model.validate();
  cfg.validate();
  if (model.channel.kind != ChannelKind::kPhase && model.channel.kind != ChannelKind::kDepolarizing) {
    throw InvalidArgument("propagator_difference_check: channel must be phase or depolarizing");
  }
  if (b.n_sites() != model.n_sites) throw InvalidArgument("propagator_difference_check: size mismatch");
  if (gammas.empty() || times.empty()) throw InvalidArgument("propagator_difference_check: empty grid");
  std::set<long> steps;
  for (double t : times) steps.insert(step_of(t, cfg.dt));

  PropagatorDifferenceReport out;
  out.times = times;
  out.gammas = gammas;
  out.delta.assign(times.size(), std::vector<double>(gammas.size(), 0.0));
  out.integral_bound = out.delta;

  int dissipating = 0;
  for (int s = 1; s <= model.n_sites; ++s) dissipating += model.site_active(s) ? 1 : 0;

  const ModelSpec unitary = model.with_channel({ChannelKind::kNone, 0.0});
  const auto reference = snapshots(unitary, b, steps, cfg.dt);
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    const double gamma = gammas[gi];
    if (!(gamma >= 0.0)) throw InvalidArgument("propagator_difference_check: negative gamma");
    std::map<long, DenseOperator> run;
    if (gamma > 0.0) run = snapshots(model.with_channel({model.channel.kind, gamma}), b, steps, cfg.dt);
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      const long k = step_of(times[ti], cfg.dt);
      out.delta[ti][gi] = gamma > 0.0 ? operator_norm(run.at(k) - reference.at(k)) : 0.0;
      out.integral_bound[ti][gi] = gamma * times[ti] * dissipating;
    }
  }
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
      const double base = out.delta[ti][gi];
      if (!(base > 0.0)) continue;
      for (std::size_t gj = 0; gj < gammas.size(); ++gj) {
        if (same_value(gammas[gj], 2.0 * gammas[gi])) {
          out.linearity_ratio[{times[ti], gammas[gi]}] = out.delta[ti][gj] / base;
        }
      }
      for (std::size_t tj = 0; tj < times.size(); ++tj) {
        if (same_value(times[tj], 2.0 * times[ti])) {
          out.early_time_ratio[{times[ti], gammas[gi]}] = out.delta[tj][gi] / base;
        }
      }
    }
  }
  return out;
}

QuasilocalityReport quasilocality_check(const ModelSpec& model, const DenseOperator& b, double t,
                                        const std::vector<int>& radii, const IntegratorConfig& cfg,
                                        double v_lr) {
  model.validate();
  if (radii.empty()) throw InvalidArgument("quasilocality_check: no radii");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k] < 1 || radii[k] > model.n_sites) {
      throw InvalidArgument("quasilocality_check: radius " + std::to_string(radii[k]) + " out of range");
    }
    if (k > 0 && radii[k] <= radii[k - 1]) {
      throw InvalidArgument("quasilocality_check: radii must be increasing");
    }
  }
  if (!(v_lr > 0.0)) throw InvalidArgument("quasilocality_check: v_lr must be > 0");
  const ModelSpec full_model = model.with_region(std::nullopt);
  QuasilocalityReport out;
  out.t = t;
  out.v_lr = v_lr;
  out.radii = radii;
  out.cone_radius = static_cast<int>(std::ceil(v_lr * t)) + 2;
  const DenseOperator full = final_state(full_model, b, t, cfg.dt, std::nullopt);
  const double b_norm = operator_norm(b);
  for (int r : radii) {
    const DenseOperator trunc = final_state(full_model, b, t, cfg.dt, SiteInterval{1, r});
    const double eps = operator_norm(full - trunc);
    if (!out.epsilon.empty() && eps > out.epsilon.back() + 1e-12) out.non_increasing = false;
    if (r > out.cone_radius && !(eps < 0.05 * b_norm)) out.small_outside_cone = false;
    out.epsilon.push_back(eps);
  }
  return out;
}

double proposition_bound(double epsilon, double v_lr, double gamma) {
  if (!(epsilon > 0.0) || !(v_lr > 0.0) || !(gamma > 0.0)) {
    throw InvalidArgument("proposition_bound: inputs must be positive");
  }
  return std::sqrt(epsilon * v_lr / gamma);
}

}  // namespace scramble

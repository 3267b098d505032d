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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "scramble/analysis.hpp"
#include "scramble/error.hpp"
#include "scramble/pauli.hpp"

using namespace scramble;

namespace {

ModelSpec chain(int n, ChannelKind kind = ChannelKind::kNone, double gamma = 0.0) {
  ModelSpec m;
  m.n_sites = n;
  m.channel = {kind, gamma};
  return m;
}

IntegratorConfig grid(double t_max, int every, double dt = kDefaultDt) {
  IntegratorConfig c;
  c.dt = dt;
  c.t_max = t_max;
  c.sample_every = every;
  return c;
}

// Ten sites, B on site 1, samples k * step for k in [0, count).
HeatmapSeries synthetic(int count, double step, const std::function<double(long k, int d)>& value) {
  std::vector<double> t;
  for (int k = 0; k < count; ++k) t.push_back(k * step);
  HeatmapSeries s(t, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, "synthetic");
  for (std::size_t ti = 0; ti < s.rows(); ++ti) {
    for (std::size_t si = 0; si < s.cols(); ++si) s.at(ti, si) = value(static_cast<long>(ti), static_cast<int>(si));
  }
  return s;
}

}  // namespace

TEST_CASE("first crossing interpolates between samples") {
  CHECK(first_crossing({0, 1, 2}, {1.0, 0.6, 0.2}, 0.5) == doctest::Approx(1.25));
  CHECK(first_crossing({0, 1, 2}, {0.4, 0.6, 0.2}, 0.5) == 0.0);
  CHECK(std::isnan(first_crossing({0, 1, 2}, {1.0, 0.9, 0.8}, 0.5)));
  CHECK_THROWS_AS(first_crossing({0, 1}, {1.0}, 0.5), InvalidArgument);
}

TEST_CASE("a step front gives the exact velocity and an unresolved width") {
  // f drops from 1 to 0 at sample 5 d, i.e. t = d / 2.
  const HeatmapSeries h = synthetic(121, 0.1, [](long k, int d) { return k >= 5L * d ? 0.0 : 1.0; });
  const LightconeCalibration c = calibrate_lightcone(chain(10), h);
  CHECK(c.v_b == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c.w == 0.0);
  CHECK(c.sharp_front);
  CHECK(c.fit_distances == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
  CHECK(c.fit_residual < 1e-9);
}

TEST_CASE("a logistic front recovers velocity and width") {
  const double tau = 0.3;
  const HeatmapSeries h =
      synthetic(1201, 0.01, [&](long k, int d) { return 1.0 / (1.0 + std::exp((k * 0.01 - d) / tau)); });
  const LightconeCalibration c = calibrate_lightcone(chain(10), h);
  CHECK(c.v_b == doctest::Approx(1.0).epsilon(0.05));
  const double expected = 2.0 * tau * std::log(4.0);
  CHECK(std::abs(c.w - expected) < 0.1 * expected);
  CHECK_FALSE(c.sharp_front);
}

TEST_CASE("calibration needs three crossings in the fit range") {
  const HeatmapSeries h = synthetic(11, 1.0, [](long k, int d) { return d <= 2 && k > 3 ? 0.0 : 1.0; });
  CHECK_THROWS_AS(calibrate_lightcone(chain(10), h), NumericalError);
}

TEST_CASE("width is the first distance whose contrast falls below delta") {
  // Contrast at distance d is exactly exp(-d / 3) for v_b = 1, w = 1.
  const HeatmapSeries h = synthetic(241, 0.05, [](long k, int d) {
    const double ramp = std::clamp(k * 0.05 - (d - 0.5), 0.0, 1.0);
    return 1.0 - std::exp(-d / 3.0) * ramp;
  });
  LightconeCalibration c;
  c.v_b = 1.0;
  c.w = 1.0;
  const LightconeWidth w = lightcone_width(h, c, 0.1);
  CHECK(w.width == 7.0);
  CHECK_FALSE(w.exceeds_system);
  CHECK(w.contrast.at(3) == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));

  const LightconeWidth wide = lightcone_width(h, c, 1e-3);
  CHECK(std::isinf(wide.width));
  CHECK(wide.exceeds_system);

  const HeatmapSeries shortened = synthetic(101, 0.05, [](long, int) { return 1.0; });
  const LightconeWidth cut = lightcone_width(shortened, c, 0.1);
  CHECK(cut.unresolvable == std::vector<int>{5, 6, 7, 8, 9});

  c.v_b = 0.0;
  CHECK_THROWS_AS(lightcone_width(h, c, 0.1), InvalidArgument);
}

TEST_CASE("power-law fit") {
  std::map<double, double> exact;
  for (double g : {0.05, 0.08, 0.1, 0.13, 0.16}) exact[g] = 4.0 / std::sqrt(g);
  const PowerLawFit fit = powerlaw_fit(exact);
  CHECK(fit.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.c == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.gamma_lo == 0.05);
  CHECK(fit.gamma_hi == 0.16);

  const PowerLawFit flat = powerlaw_fit({{0.05, 3.0}, {0.1, 3.0}, {0.2, 3.0}});
  CHECK(std::abs(flat.alpha) < 1e-12);
  CHECK(flat.r_squared == 1.0);

  CHECK_THROWS_AS(powerlaw_fit({{0.1, 2.0}, {0.2, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(powerlaw_fit({{0.1, 2.0}, {0.2, 1.0}, {0.3, std::numeric_limits<double>::infinity()}}),
                  InvalidArgument);
}

TEST_CASE("weights of simple strings") {
  const WeightProfile one = weight_profile_of(pauli_on_site(PauliLetter::Z, 1, 4), 0.0, true);
  CHECK(one.one_body == doctest::Approx(1.0));
  CHECK(one.few_body_sum == doctest::Approx(1.0));
  CHECK(one.per_string.at("ZIII") == doctest::Approx(1.0));

  const WeightProfile pair = weight_profile_of(PauliString::from_string("IXYI").to_operator(), 0.0);
  CHECK(pair.nn_two_body == doctest::Approx(1.0));
  CHECK(pair.one_body == 0.0);

  const WeightProfile apart = weight_profile_of(PauliString::from_string("ZIZI").to_operator(), 0.0);
  CHECK(apart.few_body_sum == 0.0);
  CHECK(apart.total == doctest::Approx(1.0));

  const DenseOperator mix = Complex(0.6) * PauliString::from_string("XI").to_operator() +
                            Complex(0.8) * PauliString::from_string("XX").to_operator();
  const WeightProfile m = weight_profile_of(mix, 0.0);
  CHECK(m.one_body == doctest::Approx(0.36));
  CHECK(m.nn_two_body == doctest::Approx(0.64));
}

TEST_CASE("closed evolution spreads weight away from few-body strings") {
  const auto profile = weight_profile(chain(6), pauli_on_site(PauliLetter::Z, 1, 6), grid(5.0, 500));
  REQUIRE(profile.size() == 3);
  CHECK(profile.front().few_body_sum == doctest::Approx(1.0));
  CHECK(profile.back().few_body_sum < 0.5);
  for (const auto& p : profile) CHECK(p.total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("operator-norm series") {
  const ModelSpec m = chain(4, ChannelKind::kPhase, 0.2);
  const DenseOperator b = pauli_on_site(PauliLetter::Z, 1, 4);
  const LrSeries lr = lr_commutator_series(m, b, {1, 2, 3, 4}, grid(2.0, 100));
  REQUIRE(lr.commutator.rows() == 5);
  CHECK(lr.commutator.at(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(lr.commutator.at(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(lr.norm.y.front() == doctest::Approx(1.0));
  for (std::size_t ti = 0; ti < lr.corrected.rows(); ++ti) {
    for (std::size_t si = 0; si < lr.corrected.cols(); ++si) CHECK(lr.corrected.at(ti, si) <= 2.0 + 1e-9);
  }
  const Series1D decay = norm_decay_series(m, b, grid(2.0, 100));
  for (std::size_t k = 1; k < decay.y.size(); ++k) CHECK(decay.y[k] <= decay.y[k - 1] + 1e-7);
  CHECK(decay.y == lr.norm.y);
}

TEST_CASE("propagator difference scaling") {
  const PropagatorDifferenceReport r = propagator_difference_check(
      chain(4, ChannelKind::kPhase), pauli_on_site(PauliLetter::Z, 1, 4), {0.01, 0.02}, {0.1, 0.2}, grid(0.2, 1));
  const double lin = r.linearity_ratio.at({0.1, 0.01});
  const double early = r.early_time_ratio.at({0.1, 0.01});
  CHECK(lin > 1.8);
  CHECK(lin < 2.2);
  CHECK(early > 3.0);
  CHECK(early < 4.5);
  for (std::size_t ti = 0; ti < r.times.size(); ++ti) {
    for (std::size_t gi = 0; gi < r.gammas.size(); ++gi) CHECK(r.delta[ti][gi] <= r.integral_bound[ti][gi]);
  }
  CHECK_THROWS_AS(propagator_difference_check(chain(4, ChannelKind::kAmplitude), pauli_on_site(PauliLetter::Z, 1, 4),
                                              {0.01}, {0.1}, grid(0.2, 1)),
                  InvalidArgument);
}

TEST_CASE("truncation error shrinks to zero at the full chain") {
  const QuasilocalityReport q = quasilocality_check(chain(5, ChannelKind::kPhase, 0.1),
                                                    pauli_on_site(PauliLetter::Z, 1, 5), 1.0, {1, 2, 3, 4, 5},
                                                    grid(1.0, 1), 1.7);
  CHECK(q.non_increasing);
  CHECK(q.epsilon.back() <= 1e-12);
  CHECK(q.cone_radius == 4);
}

TEST_CASE("width lower bound") {
  CHECK(std::abs(proposition_bound(0.1, 1.7, 0.01) - std::sqrt(17.0)) < 1e-12);
  CHECK(proposition_bound(0.1, 1.7, 0.1) == doctest::Approx(1.304).epsilon(1e-3));
  CHECK(proposition_bound(0.1, 1.7, 0.2) < proposition_bound(0.1, 1.7, 0.1));
  CHECK(proposition_bound(0.1, 2.0, 0.1) > proposition_bound(0.1, 1.7, 0.1));
  CHECK_THROWS_AS(proposition_bound(0.0, 1.7, 0.1), InvalidArgument);
}

TEST_CASE("truncation error falls off outside the cone at eight sites") {
  const DenseOperator b = pauli_on_site(PauliLetter::Z, 1, 8);
  const std::vector<int> radii = {2, 3, 4, 5, 6, 7};
  const QuasilocalityReport closed = quasilocality_check(chain(8), b, 1.0, radii, grid(1.0, 1), 1.7);
  for (std::size_t k = 1; k < closed.epsilon.size(); ++k) CHECK(closed.epsilon[k] < closed.epsilon[k - 1]);
  const QuasilocalityReport damped =
      quasilocality_check(chain(8, ChannelKind::kPhase, 0.1), b, 1.0, radii, grid(1.0, 1), 1.7);
  CHECK(damped.epsilon[4] < damped.epsilon[1] / 5.0);
  CHECK(damped.small_outside_cone);
}

TEST_CASE("no dissipation means no propagator difference") {
  const PropagatorDifferenceReport r =
      propagator_difference_check(chain(4, ChannelKind::kPhase), pauli_on_site(PauliLetter::X, 2, 4), {0.0, 0.1},
                                  {0.5, 1.0}, grid(1.0, 1));
  CHECK(r.delta[0][0] == 0.0);
  CHECK(r.delta[1][0] == 0.0);
  CHECK(r.delta[1][1] > 0.0);
}

TEST_CASE("identity share is tracked separately") {
  const DenseOperator op = Complex(0.6) * DenseOperator::identity(3) +
                           Complex(0.8) * pauli_on_site(PauliLetter::Y, 2, 3);
  const WeightProfile w = weight_profile_of(op, 0.0);
  CHECK(w.identity == doctest::Approx(0.36));
  CHECK(w.one_body == doctest::Approx(0.64));
  CHECK(w.few_body_sum == doctest::Approx(0.64));
}

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

#include <cmath>

#include "frozen.hpp"
#include "oracles.hpp"
#include "scramble/error.hpp"
#include "scramble/evolution.hpp"
#include "scramble/otoc.hpp"
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

struct Case {
  ChannelKind kind;
  const frozen::OtocRow* row;
};

const Case kCases[] = {{ChannelKind::kNone, &frozen::kOtocNone},
                       {ChannelKind::kAmplitude, &frozen::kOtocAmplitude},
                       {ChannelKind::kPhase, &frozen::kOtocPhase},
                       {ChannelKind::kDepolarizing, &frozen::kOtocDepolarizing}};

const double kProbeTimes[] = {0.5, 1.0, 2.0};

}  // namespace

TEST_CASE("corrected ratio floor") {
  CHECK(corrected_ratio(0.5, 1.0) == 0.5);
  CHECK(std::isnan(corrected_ratio(0.5, 1e-12)));
  CHECK(std::isnan(corrected_ratio(0.5, -1e-10)));
}

TEST_CASE("values at t = 0") {
  const DenseOperator z1 = pauli_on_site(PauliLetter::Z, 1, 3);
  for (const Case& c : kCases) {
    const ModelSpec m = chain(3, c.kind, 0.1);
    for (int a = 1; a <= 3; ++a) {
      const OtocPoint p = otoc_closed_form(m, pauli_on_site(PauliLetter::X, a, 3), z1, 0.0, grid(1.0, 1));
      CHECK(p.f_identity == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(p.f == doctest::Approx(a == 1 ? -1.0 : 1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("closed form against frozen superoperator values") {
  const DenseOperator a = pauli_on_site(PauliLetter::Z, 3, 3);
  const DenseOperator b = pauli_on_site(PauliLetter::Z, 1, 3);
  for (const Case& c : kCases) {
    for (int k = 0; k < 3; ++k) {
      const OtocPoint p = otoc_closed_form(chain(3, c.kind, 0.1), a, b, kProbeTimes[k], grid(1.0, 1));
      CHECK(std::abs(p.f - c.row->f[k]) < 1e-7);
      CHECK(std::abs(p.f_identity - c.row->f_identity[k]) < 1e-7);
    }
  }
}

TEST_CASE("control-qubit protocol agrees with the closed form") {
  const DenseOperator a = pauli_on_site(PauliLetter::X, 2, 3);
  const DenseOperator b = pauli_on_site(PauliLetter::Z, 1, 3);
  for (ChannelKind kind : {ChannelKind::kAmplitude, ChannelKind::kPhase, ChannelKind::kDepolarizing}) {
    for (double t : {0.5, 1.0}) {
      const ModelSpec m = chain(3, kind, 0.1);
      const OtocPoint direct = otoc_closed_form(m, a, b, t, grid(1.0, 1));
      const OtocPoint circuit = otoc_protocol(m, a, b, t, grid(1.0, 1));
      CHECK(std::abs(direct.f - circuit.f) < 1e-6);
      CHECK(std::abs(direct.f_identity - circuit.f_identity) < 1e-6);
    }
  }
  CHECK_THROWS_AS(otoc_closed_form(chain(3), a, Complex(2.0) * b, 1.0, grid(1.0, 1)), InvalidArgument);
}

TEST_CASE("heatmap reuses trajectories without changing values") {
  const IntegratorConfig cfg = grid(2.0, 100);
  for (const Case& c : kCases) {
    const ModelSpec m = chain(3, c.kind, 0.1);
    const OtocHeatmaps maps = otoc_heatmap(m, 1, {1, 2, 3}, cfg);
    REQUIRE(maps.f.rows() == 5);
    REQUIRE(maps.f.cols() == 3);
    CHECK(maps.f.label == "otoc");
    CHECK(maps.f_identity.label == "otoc_identity");
    CHECK(maps.f_corrected.label == "otoc_corrected");
    for (int k = 0; k < 3; ++k) {
      const std::size_t ti = static_cast<std::size_t>(std::lround(kProbeTimes[k] / 0.5));
      CHECK(std::abs(maps.f.at(ti, 2) - c.row->f[k]) < 1e-7);
      CHECK(std::abs(maps.f_identity.at(ti, 2) - c.row->f_identity[k]) < 1e-7);
      CHECK(maps.f_corrected.at(ti, 2) ==
            doctest::Approx(c.row->f[k] / c.row->f_identity[k]).epsilon(1e-6));
    }
    // Identity channel column is A-independent.
    for (std::size_t ti = 0; ti < maps.f.rows(); ++ti) {
      CHECK(maps.f_identity.at(ti, 0) == maps.f_identity.at(ti, 1));
      if (c.kind == ChannelKind::kNone) CHECK(std::abs(maps.f_identity.at(ti, 0) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("self-adjoint shortcut applies to Hermitian jump operators only") {
  CHECK(backward_adjoint_is_forward_state(chain(3)));
  CHECK(backward_adjoint_is_forward_state(chain(3, ChannelKind::kPhase, 0.1)));
  CHECK(backward_adjoint_is_forward_state(chain(3, ChannelKind::kDepolarizing, 0.1)));
  CHECK_FALSE(backward_adjoint_is_forward_state(chain(3, ChannelKind::kAmplitude, 0.1)));
}

TEST_CASE("sandwich trace against dense products") {
  const oracle::M x = oracle::random_matrix(80, 8);
  const oracle::M y = oracle::random_matrix(81, 8);
  for (const char* w : {"III", "XYZ", "ZIY", "YYX", "IXI"}) {
    const PauliString p = PauliString::from_string(w);
    const oracle::M pm = oracle::word(w);
    const Complex ref = (x * pm * y * pm.adjoint()).trace();
    CHECK(std::abs(pauli_sandwich_trace(x, p, y) - ref) < 1e-12);
  }
}

TEST_CASE("corrected value and the normalized Frobenius commutator") {
  const int n = 4;
  const ModelSpec m = chain(n, ChannelKind::kPhase, 0.1);
  const IntegratorConfig cfg = grid(2.0, 200);
  const OtocHeatmaps maps = otoc_heatmap(m, 1, {2, 3}, cfg);
  const Trajectory traj =
      evolve({m, Direction::kBackward, Picture::kAdjoint}, pauli_on_site(PauliLetter::Z, 1, n), cfg);
  for (std::size_t ti = 1; ti < traj.size(); ++ti) {
    for (int a : {2, 3}) {
      const DenseOperator op_a = pauli_on_site(PauliLetter::Z, a, n);
      const double ratio = std::pow(commutator(traj[ti].x, op_a).matrix().norm(), 2) /
                           std::pow(traj[ti].x.matrix().norm(), 2);
      CHECK(std::abs(2.0 * (1.0 - maps.f_corrected.at(ti, maps.f.site_index(a))) - ratio) < 1e-6);
    }
  }
}

TEST_CASE("six-site closed chain against frozen exponentials") {
  const OtocHeatmaps maps = otoc_heatmap(chain(6), 1, {4}, grid(6.0, 100));
  for (int k = 0; k < 3; ++k) {
    const double t = (k == 0 ? 0.5 : k == 1 ? 1.0 : 6.0);
    CHECK(std::abs(maps.f.interpolate(4, t) - frozen::kOtocSixSite[k]) < 1e-6);
  }
}

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

#include "frozen.hpp"
#include "oracles.hpp"
#include "scramble/error.hpp"
#include "scramble/model.hpp"
#include "scramble/pauli.hpp"

using namespace scramble;

namespace {

ModelSpec chain(int n, ChannelKind kind = ChannelKind::kNone, double gamma = 0.0) {
  ModelSpec m;
  m.n_sites = n;
  m.channel = {kind, gamma};
  return m;
}

}  // namespace

TEST_CASE("single-site Hamiltonian by hand") {
  const DenseOperator h = build_hamiltonian(chain(1));
  CHECK(h(0, 0).real() == doctest::Approx(-0.5));
  CHECK(h(0, 1).real() == doctest::Approx(1.05));
  CHECK(h(1, 0).real() == doctest::Approx(1.05));
  CHECK(h(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("pure bond") {
  ModelSpec m = chain(2);
  m.g = 0.0;
  m.h = 0.0;
  const DenseOperator h = build_hamiltonian(m);
  const double expect[] = {-1, 1, 1, -1};
  for (int i = 0; i < 4; ++i) CHECK(h(i, i).real() == expect[i]);
  CHECK(h.matrix().cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("three-site Hamiltonian against the hand-assembled matrix") {
  const DenseOperator h = build_hamiltonian(chain(3));
  const oracle::M ref = oracle::hamiltonian(3);
  CHECK((h.matrix() - ref).cwiseAbs().maxCoeff() < 1e-14);
  const double e0 = hermitian_eigenvalues(h)(0);
  Eigen::SelfAdjointEigenSolver<oracle::M> es(ref);
  CHECK(std::abs(e0 - es.eigenvalues()(0)) < 1e-8);
  // Frozen from an independent scipy diagonalization.
  CHECK(std::abs(e0 - frozen::kGroundEnergyN3) < 1e-8);
}

TEST_CASE("Hamiltonian is Hermitian for every size") {
  for (int n = 1; n <= 8; ++n) CHECK(build_hamiltonian(chain(n)).hermiticity_error() <= 1e-12);
}

TEST_CASE("Lindblad operator counts and shapes") {
  CHECK(build_lindblad_ops(chain(2, ChannelKind::kPhase, 0.1)).size() == 2);
  CHECK(build_lindblad_ops(chain(2, ChannelKind::kAmplitude, 0.1)).size() == 2);
  CHECK(build_lindblad_ops(chain(2, ChannelKind::kDepolarizing, 0.1)).size() == 6);
  CHECK(build_lindblad_ops(chain(5, ChannelKind::kNone, 0.7)).empty());

  const auto amp = build_lindblad_ops(chain(1, ChannelKind::kAmplitude, 0.1));
  REQUIRE(amp.size() == 1);
  oracle::M expect = oracle::M::Zero(2, 2);
  expect(1, 0) = std::sqrt(2.0);
  CHECK((amp[0].matrix() - expect).cwiseAbs().maxCoeff() < 1e-15);
  const oracle::M k = amp[0].matrix().adjoint() * amp[0].matrix();
  CHECK(std::abs(k.trace() - oracle::C(2.0)) < 1e-15);
  CHECK(std::abs(k(0, 0) - oracle::C(2.0)) < 1e-15);

  for (ChannelKind kind : {ChannelKind::kPhase, ChannelKind::kDepolarizing}) {
    for (const auto& l : build_lindblad_ops(chain(3, kind, 0.2))) CHECK(l.is_hermitian(0.0));
  }
}

TEST_CASE("regions restrict bonds, fields and dissipators") {
  const ModelSpec full = chain(4, ChannelKind::kDepolarizing, 0.1);
  const ModelSpec all = full.with_region(SiteInterval{1, 4});
  CHECK(build_hamiltonian(all).matrix() == build_hamiltonian(full).matrix());
  CHECK(build_lindblad_ops(all).size() == build_lindblad_ops(full).size());

  const ModelSpec part = full.with_region(SiteInterval{2, 3});
  CHECK(build_lindblad_ops(part).size() == 6);
  // Only the bond 2-3 and the fields on 2, 3 remain.
  const oracle::M z = oracle::pauli('Z'), x = oracle::pauli('X');
  const oracle::M ref = -oracle::on_site(z, 2, 4) * oracle::on_site(z, 3, 4) -
                        (-1.05) * (oracle::on_site(x, 2, 4) + oracle::on_site(x, 3, 4)) -
                        0.5 * (oracle::on_site(z, 2, 4) + oracle::on_site(z, 3, 4));
  CHECK((build_hamiltonian(part).matrix() - ref).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(chain(0).validate(), InvalidArgument);
  CHECK_THROWS_AS(chain(13).validate(), InvalidArgument);
  CHECK_THROWS_AS(chain(3, ChannelKind::kPhase, -0.1).validate(), InvalidArgument);
  CHECK_THROWS_AS(chain(3).with_region(SiteInterval{2, 4}).validate(), InvalidArgument);
  CHECK_THROWS_AS(chain(3).with_region(SiteInterval{3, 2}).validate(), InvalidArgument);
  CHECK(channel_kind_from_string("depolarizing") == ChannelKind::kDepolarizing);
  CHECK_THROWS_AS(channel_kind_from_string("thermal"), InvalidArgument);
}

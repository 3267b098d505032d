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
#include <random>

#include "scramble/analysis.hpp"
#include "scramble/io.hpp"
#include "scramble/otoc.hpp"
#include "scramble/pauli.hpp"

namespace scramble {
namespace {

class Suite {
 public:
  void add(std::string name, double value, double tol) {
    checks_.push_back({std::move(name), value, tol, std::isfinite(value) && value <= tol});
  }
  std::vector<ValidationCheck> take() { return std::move(checks_); }

 private:
  std::vector<ValidationCheck> checks_;
};

Matrix random_matrix(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

DenseOperator random_hermitian(std::mt19937_64& rng, int n) {
  const Matrix g = random_matrix(rng, Eigen::Index{1} << n);
  return DenseOperator(n, 0.5 * (g + g.adjoint()));
}

DenseOperator random_density(std::mt19937_64& rng, int n) {
  const Matrix g = random_matrix(rng, Eigen::Index{1} << n);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  DenseOperator out(n, rho);
  out.hermitize();
  return out;
}

// Whole number of steps, at most one time unit.
IntegratorConfig short_run(const SimConfig& cfg) {
  IntegratorConfig c;
  c.dt = cfg.dt;
  const long steps = std::max<long>(1, std::lround(std::min(1.0, cfg.t_max) / cfg.dt));
  c.t_max = static_cast<double>(steps) * cfg.dt;
  c.sample_every = static_cast<int>(std::max<long>(1, steps / 4));
  return c;
}

void channel_checks(Suite& suite, const SimConfig& cfg, ChannelKind kind, std::mt19937_64& rng) {
  const int n = cfg.n_sites;
  const double gamma = kind == ChannelKind::kNone ? 0.0 : (cfg.gamma > 0.0 ? cfg.gamma : 0.1);
  const ModelSpec model = cfg.model().with_channel({kind, gamma});
  const std::string tag = "/" + std::string(to_string(kind));
  const IntegratorConfig run = short_run(cfg);

  const DenseOperator rho = random_density(rng, n);
  const DenseOperator obs = random_hermitian(rng, n);
  const GeneratorSpec state{model, Direction::kForward, Picture::kState};
  const GeneratorSpec adjoint{model, Direction::kForward, Picture::kAdjoint};
  const Trajectory rho_t = evolve(state, rho, run);
  const Trajectory obs_t = evolve(adjoint, obs, run);

  double trace_err = 0.0, herm_err = 0.0, negativity = 0.0, duality = 0.0, norm_growth = 0.0;
  const Complex tr0 = trace(rho);
  for (std::size_t k = 0; k < rho_t.size(); ++k) {
    trace_err = std::max(trace_err, std::abs(trace(rho_t[k].x) - tr0));
    herm_err = std::max({herm_err, rho_t[k].x.hermiticity_error(), obs_t[k].x.hermiticity_error()});
    negativity = std::max(negativity, -hermitian_eigenvalues(rho_t[k].x).minCoeff());
    duality = std::max(duality, std::abs(trace_product(obs, rho_t[k].x) - trace_product(obs_t[k].x, rho)));
    if (k > 0) norm_growth = std::max(norm_growth, operator_norm(obs_t[k].x) - operator_norm(obs_t[k - 1].x));
  }
  suite.add("trace_preservation" + tag, trace_err, 1e-9);
  suite.add("hermiticity" + tag, herm_err, 1e-10);
  suite.add("positivity" + tag, std::max(0.0, negativity), 1e-7);
  suite.add("duality" + tag, duality, 1e-7);
  suite.add("adjoint_norm_non_increase" + tag, std::max(0.0, norm_growth), 1e-7);

  double fixed = 0.0;
  for (Direction dir : {Direction::kForward, Direction::kBackward}) {
    const DenseOperator r = adjoint_rhs({model, dir, Picture::kAdjoint}, DenseOperator::identity(n));
    fixed = std::max(fixed, r.matrix().cwiseAbs().maxCoeff());
  }
  suite.add("identity_fixed_point" + tag, fixed, 1e-12);

  const OtocHeatmaps h = otoc_heatmap(model, cfg.b_site, cfg.resolved_a_sites(), run);
  double excess = 0.0;
  for (double f : h.f.values) excess = std::max(excess, std::abs(f) - 1.0);
  suite.add("otoc_range" + tag, std::max(0.0, excess), 1e-6);

  if (n <= 4) {
    const DenseOperator a = pauli_on_site(PauliLetter::X, n, n);
    const DenseOperator b = pauli_on_site(PauliLetter::Z, 1, n);
    const OtocPoint pc = otoc_closed_form(model, a, b, run.t_max, run);
    const OtocPoint pp = otoc_protocol(model, a, b, run.t_max, run);
    suite.add("protocol_vs_closed_form" + tag, std::abs(pc.f - pp.f) + std::abs(pc.f_identity - pp.f_identity),
              1e-6);
  }
}

}  // namespace

std::vector<ValidationCheck> run_validation_suite(const SimConfig& cfg) {
  cfg.validate();
  Suite suite;
  std::mt19937_64 rng(static_cast<std::uint64_t>(cfg.seed));
  const int n = cfg.n_sites;
  const ModelSpec base = cfg.model();

  const DenseOperator op = random_hermitian(rng, n);
  const auto strings = pauli_decompose(op);
  suite.add("pauli_round_trip", max_abs_diff(pauli_reconstruct(strings, n), op), 1e-10);
  double parseval = 0.0;
  for (const auto& s : strings) parseval += std::norm(s.coefficient());
  const double frob = frobenius_norm_normalized(op);
  suite.add("parseval", std::abs(frob * frob - parseval), 1e-9);
  suite.add("norm_ordering", std::max(0.0, frob - operator_norm(op)), 1e-9);
  suite.add("hamiltonian_hermitian", build_hamiltonian(base).hermiticity_error(), 1e-12);

  for (ChannelKind kind : {ChannelKind::kNone, ChannelKind::kAmplitude, ChannelKind::kPhase,
                           ChannelKind::kDepolarizing}) {
    channel_checks(suite, cfg, kind, rng);
  }

  const IntegratorConfig run = short_run(cfg);
  const ModelSpec closed = base.with_channel({ChannelKind::kNone, 0.0});
  const OtocHeatmaps hu = otoc_heatmap(closed, cfg.b_site, cfg.resolved_a_sites(), run);
  double id_err = 0.0;
  for (double v : hu.f_identity.values) id_err = std::max(id_err, std::abs(v - 1.0));
  suite.add("unitary_identity_pairing", id_err, 1e-8);
  if (n >= 2) {
    const int a_site = cfg.b_site == n ? 1 : n;
    const OtocPoint p = otoc_closed_form(base, pauli_on_site(PauliLetter::Z, a_site, n),
                                         pauli_on_site(PauliLetter::Z, cfg.b_site, n), 0.0, run);
    suite.add("otoc_initial_value", std::abs(p.f - 1.0), 1e-9);

    // Frobenius identity for a channel with Hermitian jump operators.
    const ModelSpec phase = base.with_channel({ChannelKind::kPhase, cfg.gamma > 0.0 ? cfg.gamma : 0.1});
    const DenseOperator b = pauli_on_site(PauliLetter::Z, cfg.b_site, n);
    DenseOperator x;
    const OtocHeatmaps hp = otoc_heatmap(phase, cfg.b_site, {a_site}, run,
                                         [&x](double, const DenseOperator& v) { x = v; });
    std::string word(static_cast<std::size_t>(n), 'I');
    word[static_cast<std::size_t>(a_site - 1)] = 'Z';
    const double comm = frobenius_norm_normalized(commutator_with_pauli(x, PauliString::from_string(word)));
    const double xf = frobenius_norm_normalized(x);
    const double lhs = 2.0 * (1.0 - hp.f_corrected.values.back());
    suite.add("frobenius_identity", std::abs(lhs - comm * comm / (xf * xf)), 1e-6);
  }

  const GeneratorSpec gen{base, Direction::kBackward, Picture::kAdjoint};
  const DenseOperator start = pauli_on_site(PauliLetter::Z, 1, n);
  const Trajectory full = evolve(gen, start, run);
  const Trajectory trunc = evolve_truncated(gen, start, {1, n}, run);
  double trunc_err = 0.0;
  for (std::size_t k = 0; k < full.size(); ++k) trunc_err = std::max(trunc_err, max_abs_diff(full[k].x, trunc[k].x));
  suite.add("full_region_truncation", trunc_err, 1e-12);

  const WeightProfile w = weight_profile_of(full.back().x, full.back().t);
  suite.add("weight_normalization", std::abs(w.total - 1.0), 1e-9);

  const double b1 = proposition_bound(cfg.delta, cfg.v_lr, 0.01);
  const double b2 = proposition_bound(cfg.delta, cfg.v_lr, 0.04);
  const double b3 = proposition_bound(cfg.delta, 2.0 * cfg.v_lr, 0.01);
  suite.add("bound_monotonicity", (b2 < b1 && b3 > b1) ? std::abs(b1 / b2 - 2.0) : 1.0, 1e-12);
  return suite.take();
}

}  // namespace scramble

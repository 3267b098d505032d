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

#include "scramble/evolution.hpp"

#include <cmath>
#include <sstream>

#include "scramble/error.hpp"

namespace scramble {
namespace {

constexpr double kHermitianInputTol = 1e-10;

void require_hermitian(const DenseOperator& x, const char* what) {
  const double scale = std::max(1.0, x.matrix().cwiseAbs().maxCoeff());
  if (x.hermiticity_error() > kHermitianInputTol * scale) {
    throw InvalidArgument(std::string(what) + ": initial operator is not Hermitian");
  }
}

// True when x acts as the identity on `site`: it commutes with Z_s (no
// entries between different bit values) and with X_s (invariant under
// flipping the bit on both sides).
bool acts_trivially_on(const DenseOperator& x, int site, double tol) {
  const auto m = static_cast<Eigen::Index>(site_mask(site, x.n_sites()));
  const Matrix& a = x.matrix();
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (((i ^ j) & m) != 0) {
        if (std::abs(a(i, j)) > tol) return false;
      } else if (std::abs(a(i, j) - a(i ^ m, j ^ m)) > tol) {
        return false;
      }
    }
  }
  return true;
}

RhsFunction liouvillian_rhs(std::shared_ptr<const Liouvillian> gen) {
  return [gen = std::move(gen)](const Matrix& x, Matrix& out) { gen->apply_hermitian(x, out); };
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be > 0");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw InvalidArgument("t_max must be >= 0");
  if (sample_every < 1) throw InvalidArgument("sample_every must be >= 1");
  const double ratio = t_max / dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio)) {
    std::ostringstream os;
    os << "t_max/dt = " << ratio << " is not an integer step count";
    throw InvalidArgument(os.str());
  }
}

long IntegratorConfig::step_count() const {
  validate();
  return std::lround(t_max / dt);
}

std::vector<double> IntegratorConfig::sample_times() const {
  const long steps = step_count();
  std::vector<double> out;
  for (long s = 0; s <= steps; s += sample_every) out.push_back(static_cast<double>(s) * dt);
  if (steps % sample_every != 0) out.push_back(static_cast<double>(steps) * dt);
  return out;
}

ConfigSnapshot describe_run(const ModelSpec& model, const IntegratorConfig& cfg) {
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  };
  ConfigSnapshot out = {
      {"n_sites", std::to_string(model.n_sites)},
      {"g", num(model.g)},
      {"h", num(model.h)},
      {"channel", std::string(to_string(model.channel.kind))},
      {"gamma", num(model.channel.gamma)},
      {"dt", num(cfg.dt)},
      {"t_max", num(cfg.t_max)},
      {"sample_every", std::to_string(cfg.sample_every)},
  };
  if (model.region) {
    out.emplace_back("region", std::to_string(model.region->lo) + "-" + std::to_string(model.region->hi));
  }
  return out;
}

Rk4Stepper::Rk4Stepper(int n_sites, RhsFunction rhs, DenseOperator x0, double dt)
    : rhs_(std::move(rhs)), x_(std::move(x0)), dt_(dt) {
  if (x_.n_sites() != n_sites) {
    throw InvalidArgument("initial operator has " + std::to_string(x_.n_sites()) +
                          " sites, generator has " + std::to_string(n_sites));
  }
  x_.hermitize();
}

void Rk4Stepper::advance(long n) {
  Matrix& x = x_.matrix();
  const double h = dt_;
  const Eigen::Index size = x.size();
  acc_.resize(x.rows(), x.cols());
  stage_.resize(x.rows(), x.cols());
  // One pass per stage: acc += w k, stage = x + a k.
  auto update = [&](double w, double a, bool first) {
    Complex* acc = acc_.data();
    Complex* stage = stage_.data();
    const Complex* xs = x.data();
    const Complex* k = k_.data();
    for (Eigen::Index i = 0; i < size; ++i) {
      acc[i] = (first ? xs[i] : acc[i]) + w * k[i];
      stage[i] = xs[i] + a * k[i];
    }
  };
  for (long s = 0; s < n; ++s) {
    rhs_(x, k_);
    update(h / 6.0, h / 2.0, true);
    rhs_(stage_, k_);
    update(h / 3.0, h / 2.0, false);
    rhs_(stage_, k_);
    update(h / 3.0, h, false);
    rhs_(stage_, k_);
    acc_.noalias() += (h / 6.0) * k_;
    x.swap(acc_);
    x_.hermitize();
    ++steps_;
  }
  time_ = t0_ + static_cast<double>(steps_) * dt_;
  if (!x.allFinite()) {
    std::ostringstream os;
    os << "non-finite values by t = " << time_ << " (dt = " << dt_ << " too large?)";
    throw NumericalError(os.str());
  }
}

void evolve_observed(const GeneratorSpec& gen, const DenseOperator& x0,
                     const IntegratorConfig& cfg, const SampleObserver& observer) {
  cfg.validate();
  require_hermitian(x0, "evolve");
  auto liouvillian = std::make_shared<const Liouvillian>(gen);
  if (x0.n_sites() != liouvillian->n_sites()) {
    throw InvalidArgument("evolve: dimension mismatch (" + std::to_string(x0.n_sites()) +
                          " vs " + std::to_string(liouvillian->n_sites()) + " sites)");
  }
  Rk4Stepper stepper(x0.n_sites(), liouvillian_rhs(liouvillian), x0, cfg.dt);
  const long total = cfg.step_count();
  observer(0.0, stepper.state());
  while (stepper.steps_taken() < total) {
    const long n = std::min<long>(cfg.sample_every, total - stepper.steps_taken());
    stepper.advance(n);
    observer(stepper.time(), stepper.state());
  }
}

void evolve_pair_observed(const GeneratorSpec& gen_a, const DenseOperator& a0,
                          const GeneratorSpec& gen_b, const DenseOperator& b0,
                          const IntegratorConfig& cfg, const PairObserver& observer) {
  cfg.validate();
  require_hermitian(a0, "evolve_pair");
  require_hermitian(b0, "evolve_pair");
  auto la = std::make_shared<const Liouvillian>(gen_a);
  auto lb = std::make_shared<const Liouvillian>(gen_b);
  Rk4Stepper sa(la->n_sites(), liouvillian_rhs(la), a0, cfg.dt);
  Rk4Stepper sb(lb->n_sites(), liouvillian_rhs(lb), b0, cfg.dt);
  const long total = cfg.step_count();
  observer(0.0, sa.state(), sb.state());
  while (sa.steps_taken() < total) {
    const long n = std::min<long>(cfg.sample_every, total - sa.steps_taken());
    sa.advance(n);
    sb.advance(n);
    observer(sa.time(), sa.state(), sb.state());
  }
}

Trajectory evolve(const GeneratorSpec& gen, const DenseOperator& x0, const IntegratorConfig& cfg) {
  Trajectory out;
  evolve_observed(gen, x0, cfg,
                  [&out](double t, const DenseOperator& x) { out.push_back(Sample{t, x}); });
  return out;
}

Trajectory evolve_truncated(const GeneratorSpec& gen, const DenseOperator& x0,
                            SiteInterval region, const IntegratorConfig& cfg) {
  GeneratorSpec truncated = gen;
  truncated.model.region = region;
  truncated.model.validate();
  for (int s = 1; s <= x0.n_sites(); ++s) {
    if (!region.contains(s) && !acts_trivially_on(x0, s, 1e-12)) {
      throw InvalidArgument("evolve_truncated: initial operator acts on site " +
                            std::to_string(s) + " outside the region");
    }
  }
  return evolve(truncated, x0, cfg);
}

void evolve_general_observed(const GeneratorSpec& gen, const DenseOperator& x0,
                             const IntegratorConfig& cfg, const SampleObserver& observer) {
  const double scale = std::max(1.0, x0.matrix().cwiseAbs().maxCoeff());
  if (x0.hermiticity_error() <= kHermitianInputTol * scale) {
    evolve_observed(gen, x0, cfg, observer);
    return;
  }
  // x0 = P + iQ with P, Q Hermitian.
  const DenseOperator p(x0.n_sites(), 0.5 * (x0.matrix() + x0.matrix().adjoint()));
  const DenseOperator q(x0.n_sites(),
                        Complex(0.0, -0.5) * (x0.matrix() - x0.matrix().adjoint()));
  cfg.validate();
  auto liouvillian = std::make_shared<const Liouvillian>(gen);
  Rk4Stepper sp(x0.n_sites(), liouvillian_rhs(liouvillian), p, cfg.dt);
  Rk4Stepper sq(x0.n_sites(), liouvillian_rhs(liouvillian), q, cfg.dt);
  const long total = cfg.step_count();
  auto emit = [&] {
    DenseOperator x(x0.n_sites(), sp.state().matrix() + Complex(0.0, 1.0) * sq.state().matrix());
    observer(sp.time(), x);
  };
  emit();
  while (sp.steps_taken() < total) {
    const long n = std::min<long>(cfg.sample_every, total - sp.steps_taken());
    sp.advance(n);
    sq.advance(n);
    emit();
  }
}

DenseOperator lindblad_rhs(const GeneratorSpec& gen, const DenseOperator& rho) {
  if (gen.picture != Picture::kState) {
    throw InvalidArgument("lindblad_rhs needs a state-picture generator");
  }
  return Liouvillian(gen)(rho);
}

DenseOperator adjoint_rhs(const GeneratorSpec& gen, const DenseOperator& op) {
  if (gen.picture != Picture::kAdjoint) {
    throw InvalidArgument("adjoint_rhs needs an adjoint-picture generator");
  }
  return Liouvillian(gen)(op);
}

DenseLindbladian::DenseLindbladian(Matrix hamiltonian, std::vector<Matrix> lindblad_ops,
                                   double gamma, Picture picture)
    : h_(std::move(hamiltonian)), ops_(std::move(lindblad_ops)), gamma_(gamma), picture_(picture) {
  k_ = Matrix::Zero(h_.rows(), h_.cols());
  for (const auto& l : ops_) {
    if (l.rows() != h_.rows() || l.cols() != h_.cols()) {
      throw InvalidArgument("DenseLindbladian: Lindblad operator dimension mismatch");
    }
    ops_adj_.push_back(l.adjoint());
    k_.noalias() += ops_adj_.back() * l;
  }
}

void DenseLindbladian::apply(const Matrix& x, Matrix& out) const {
  const Complex coef = picture_ == Picture::kState ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
  out.noalias() = coef * (h_ * x);
  out.noalias() -= coef * (x * h_);
  if (gamma_ == 0.0) return;
  out.noalias() -= (0.5 * gamma_) * (k_ * x);
  out.noalias() -= (0.5 * gamma_) * (x * k_);
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const Matrix& l = picture_ == Picture::kState ? ops_[k] : ops_adj_[k];
    const Matrix& ld = picture_ == Picture::kState ? ops_adj_[k] : ops_[k];
    out.noalias() += gamma_ * (l * x * ld);
  }
}

}  // namespace scramble

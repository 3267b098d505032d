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

#include <functional>
#include <memory>
#include <vector>

#include "scramble/linalg.hpp"
#include "scramble/liouvillian.hpp"
#include "scramble/model.hpp"
#include "scramble/series.hpp"

namespace scramble {

inline constexpr double kDefaultDt = 0.005;

struct IntegratorConfig {
  double dt = kDefaultDt;
  double t_max = 0.0;
  /// Record every k-th step. t = 0 and t = t_max are always recorded.
  int sample_every = 1;

  /// Throws InvalidArgument if dt <= 0, t_max < 0, sample_every < 1, or
  /// t_max / dt is not an integer within 1e-9 relative error.
  void validate() const;

  long step_count() const;

  /// Times at which samples are recorded, in order.
  std::vector<double> sample_times() const;
};

/// Model and integrator parameters as key/value pairs for output headers.
ConfigSnapshot describe_run(const ModelSpec& model, const IntegratorConfig& cfg);

/// Generator-agnostic right-hand side: out = f(x). Implementations must not
/// alias out and x.
using RhsFunction = std::function<void(const Matrix& x, Matrix& out)>;

/// Classical fixed-step RK4 with Hermitian re-symmetrization after every
/// step. Owns its work buffers; one stepper per trajectory.
class Rk4Stepper {
 public:
  Rk4Stepper(int n_sites, RhsFunction rhs, DenseOperator x0, double dt);

  double time() const { return time_; }
  long steps_taken() const { return steps_; }
  const DenseOperator& state() const { return x_; }

  /// Advances `n` steps. Throws NumericalError on non-finite entries.
  void advance(long n);

 private:
  RhsFunction rhs_;
  DenseOperator x_;
  double dt_;
  double t0_ = 0.0;
  double time_ = 0.0;
  long steps_ = 0;
  Matrix k_, acc_, stage_;
};

struct Sample {
  double t = 0.0;
  DenseOperator x;
};
using Trajectory = std::vector<Sample>;

/// Called once per recorded sample, in time order.
using SampleObserver = std::function<void(double t, const DenseOperator& x)>;

/// Steps a Hermitian operator through the generator selected by `gen`,
/// handing each recorded sample to `observer` instead of storing it.
void evolve_observed(const GeneratorSpec& gen, const DenseOperator& x0,
                     const IntegratorConfig& cfg, const SampleObserver& observer);

/// Two Hermitian trajectories advanced in lockstep on the same time grid.
using PairObserver = std::function<void(double t, const DenseOperator& a, const DenseOperator& b)>;
void evolve_pair_observed(const GeneratorSpec& gen_a, const DenseOperator& a0,
                          const GeneratorSpec& gen_b, const DenseOperator& b0,
                          const IntegratorConfig& cfg, const PairObserver& observer);

/// Full sampled trajectory including t = 0 and t = t_max.
Trajectory evolve(const GeneratorSpec& gen, const DenseOperator& x0, const IntegratorConfig& cfg);

/// `evolve` with the generator restricted to `region` (bonds, fields and
/// dissipators outside it dropped). Operators keep full dimension.
Trajectory evolve_truncated(const GeneratorSpec& gen, const DenseOperator& x0,
                            SiteInterval region, const IntegratorConfig& cfg);

/// Non-Hermitian x0 is split into Hermitian and anti-Hermitian parts that
/// evolve separately; both generators preserve Hermiticity so the parts
/// recombine exactly.
void evolve_general_observed(const GeneratorSpec& gen, const DenseOperator& x0,
                             const IntegratorConfig& cfg, const SampleObserver& observer);

/// -i[+-H, rho] + sum_k (gamma/2)(2 L rho L^+ - rho L^+L - L^+L rho).
DenseOperator lindblad_rhs(const GeneratorSpec& gen, const DenseOperator& rho);

/// +i[+-H, O] + sum_k (gamma/2)(2 L^+ O L - O L^+L - L^+L O).
DenseOperator adjoint_rhs(const GeneratorSpec& gen, const DenseOperator& op);

/// Lindblad generator built from explicit full-size matrices with dense
/// products. Used where the register is not a plain chain, e.g. system plus
/// a control qubit that does not dissipate.
class DenseLindbladian {
 public:
  DenseLindbladian(Matrix hamiltonian, std::vector<Matrix> lindblad_ops, double gamma,
                   Picture picture);

  void apply(const Matrix& x, Matrix& out) const;

 private:
  Matrix h_;
  std::vector<Matrix> ops_;
  std::vector<Matrix> ops_adj_;
  Matrix k_;  // sum L^+ L
  double gamma_;
  Picture picture_;
};

}  // namespace scramble

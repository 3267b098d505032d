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

#include <vector>

#include "scramble/evolution.hpp"
#include "scramble/linalg.hpp"
#include "scramble/model.hpp"
#include "scramble/pauli.hpp"
#include "scramble/series.hpp"

namespace scramble {

/// Below this |f_identity| the corrected OTOC is reported invalid.
inline constexpr double kCorrectedFloor = 1e-9;

struct OtocPoint {
  double t = 0.0;
  int a_site = 0;  // 0 when A is not a single-site operator
  int b_site = 0;
  double f = 0.0;
  double f_identity = 0.0;
  double f_corrected = kInvalidValue;
  bool corrected_valid = false;
};

/// f / f_identity, or NaN when the denominator is under the floor.
double corrected_ratio(double f, double f_identity);

/// Re tr((V_b^+(t) B^+) A (V_f(t) B rho0) A^+) with rho0 = I / 2^N, from one
/// backward adjoint and one forward state trajectory. `cfg.t_max` is
/// replaced by `t`; t must be a whole number of steps.
OtocPoint otoc_closed_form(const ModelSpec& model, const DenseOperator& a, const DenseOperator& b,
                           double t, const IntegratorConfig& cfg);

/// The same quantity measured through a control qubit: controlled-B,
/// forward map, A, backward map, anti-controlled-B, then tr(sigma^x_c rho).
/// Dissipation acts on the system spins only.
OtocPoint otoc_protocol(const ModelSpec& model, const DenseOperator& a, const DenseOperator& b,
                        double t, const IntegratorConfig& cfg);

struct OtocHeatmaps {
  HeatmapSeries f;
  HeatmapSeries f_identity;
  HeatmapSeries f_corrected;
};

/// B = Z on `b_site`, A = Z on each of `a_sites`. Both trajectories are
/// computed once and reused for every site and sample. `on_backward`, when
/// set, also sees each sample of V_b^+(t) B^+.
OtocHeatmaps otoc_heatmap(const ModelSpec& model, int b_site, const std::vector<int>& a_sites,
                          const IntegratorConfig& cfg, const SampleObserver& on_backward = {});

/// True when the backward adjoint generator equals the forward state
/// generator, which holds whenever every Lindblad operator is Hermitian.
bool backward_adjoint_is_forward_state(const ModelSpec& model);

/// tr(x P y P^+) for a Pauli string P in O(dim^2).
Complex pauli_sandwich_trace(const Matrix& x, const PauliString& p, const Matrix& y);

}  // namespace scramble

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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scramble/linalg.hpp"

namespace scramble {

enum class ChannelKind { kNone, kAmplitude, kPhase, kDepolarizing };

std::string_view to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(std::string_view name);

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kNone;
  double gamma = 0.0;

  /// True when the channel contributes no Lindblad operators at all.
  bool is_trivial() const { return kind == ChannelKind::kNone; }
};

/// Closed interval of sites [lo, hi], 1-based.
struct SiteInterval {
  int lo = 1;
  int hi = 1;

  bool contains(int site) const { return lo <= site && site <= hi; }
  friend bool operator==(const SiteInterval&, const SiteInterval&) = default;
};

/// The chaotic Ising chain with open boundaries and a per-site channel.
struct ModelSpec {
  int n_sites = 1;
  double g = -1.05;
  double h = 0.5;
  ChannelSpec channel;

  /// When set, only bonds and fields (and dissipators) inside the interval
  /// are kept.
  std::optional<SiteInterval> region;

  void validate() const;

  bool site_active(int site) const { return !region || region->contains(site); }

  ModelSpec with_channel(ChannelSpec c) const;
  ModelSpec with_region(std::optional<SiteInterval> r) const;
};

/// A 2x2 operator attached to one site.
struct LocalOperator {
  int site = 1;
  Matrix op;  // 2x2
};

/// H = -sum_i Z_i Z_{i+1} - sum_i (g X_i + h Z_i), restricted to `region`.
DenseOperator build_hamiltonian(const ModelSpec& spec);

/// Diagonal part of H (bonds and longitudinal field) in the computational
/// basis. The off-diagonal part is -g X_k on every active site.
Eigen::VectorXd hamiltonian_diagonal(const ModelSpec& spec);

/// Per-site Lindblad operators without the rate:
///   amplitude     sqrt(1/2)(X_k - i Y_k)
///   phase         sqrt(1/2) Z_k
///   depolarizing  X_k / 2, Y_k / 2, Z_k / 2
std::vector<LocalOperator> local_lindblad_ops(const ModelSpec& spec);

/// The same operators embedded on the full chain.
std::vector<DenseOperator> build_lindblad_ops(const ModelSpec& spec);

}  // namespace scramble

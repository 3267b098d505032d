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

#include "scramble/model.hpp"

#include <cmath>

#include "scramble/error.hpp"
#include "scramble/pauli.hpp"

namespace scramble {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kNone:
      return "none";
    case ChannelKind::kAmplitude:
      return "amplitude";
    case ChannelKind::kPhase:
      return "phase";
    case ChannelKind::kDepolarizing:
      return "depolarizing";
  }
  return "none";
}

ChannelKind channel_kind_from_string(std::string_view name) {
  if (name == "none") return ChannelKind::kNone;
  if (name == "amplitude") return ChannelKind::kAmplitude;
  if (name == "phase") return ChannelKind::kPhase;
  if (name == "depolarizing") return ChannelKind::kDepolarizing;
  throw InvalidArgument("unknown channel '" + std::string(name) +
                        "' (expected none|amplitude|phase|depolarizing)");
}

void ModelSpec::validate() const {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw InvalidArgument("n_sites out of range [1," + std::to_string(kMaxSites) + "]");
  }
  if (!std::isfinite(g) || !std::isfinite(h)) throw InvalidArgument("g and h must be finite");
  if (!(channel.gamma >= 0.0) || !std::isfinite(channel.gamma)) {
    throw InvalidArgument("gamma must be finite and >= 0");
  }
  if (region && !(1 <= region->lo && region->lo <= region->hi && region->hi <= n_sites)) {
    throw InvalidArgument("region [" + std::to_string(region->lo) + "," +
                          std::to_string(region->hi) + "] is not inside [1," +
                          std::to_string(n_sites) + "]");
  }
}

ModelSpec ModelSpec::with_channel(ChannelSpec c) const {
  ModelSpec out = *this;
  out.channel = c;
  return out;
}

ModelSpec ModelSpec::with_region(std::optional<SiteInterval> r) const {
  ModelSpec out = *this;
  out.region = r;
  return out;
}

Eigen::VectorXd hamiltonian_diagonal(const ModelSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  const auto d = Eigen::Index{1} << n;
  Eigen::VectorXd diag(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double e = 0.0;
    for (int s = 1; s <= n; ++s) {
      const double zs = (i & static_cast<Eigen::Index>(site_mask(s, n))) ? -1.0 : 1.0;
      if (s < n && spec.site_active(s) && spec.site_active(s + 1)) {
        const double zn = (i & static_cast<Eigen::Index>(site_mask(s + 1, n))) ? -1.0 : 1.0;
        e -= zs * zn;
      }
      if (spec.site_active(s)) e -= spec.h * zs;
    }
    diag(i) = e;
  }
  return diag;
}

DenseOperator build_hamiltonian(const ModelSpec& spec) {
  const Eigen::VectorXd diag = hamiltonian_diagonal(spec);
  const int n = spec.n_sites;
  const auto d = diag.size();
  Matrix h = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) h(i, i) = diag(i);
  // Transverse field flips one bit.
  for (int s = 1; s <= n; ++s) {
    if (!spec.site_active(s)) continue;
    const auto m = static_cast<Eigen::Index>(site_mask(s, n));
    for (Eigen::Index i = 0; i < d; ++i) h(i ^ m, i) -= spec.g;
  }
  return DenseOperator(n, std::move(h));
}

std::vector<LocalOperator> local_lindblad_ops(const ModelSpec& spec) {
  spec.validate();
  std::vector<LocalOperator> out;
  if (spec.channel.kind == ChannelKind::kNone) return out;

  const Matrix x = pauli_matrix(PauliLetter::X).matrix();
  const Matrix y = pauli_matrix(PauliLetter::Y).matrix();
  const Matrix z = pauli_matrix(PauliLetter::Z).matrix();
  const double r = std::sqrt(0.5);

  for (int k = 1; k <= spec.n_sites; ++k) {
    if (!spec.site_active(k)) continue;
    switch (spec.channel.kind) {
      case ChannelKind::kAmplitude:
        out.push_back({k, r * (x - Complex(0.0, 1.0) * y)});
        break;
      case ChannelKind::kPhase:
        out.push_back({k, r * z});
        break;
      case ChannelKind::kDepolarizing:
        out.push_back({k, 0.5 * x});
        out.push_back({k, 0.5 * y});
        out.push_back({k, 0.5 * z});
        break;
      case ChannelKind::kNone:
        break;
    }
  }
  return out;
}

std::vector<DenseOperator> build_lindblad_ops(const ModelSpec& spec) {
  std::vector<DenseOperator> out;
  for (const auto& l : local_lindblad_ops(spec)) {
    out.push_back(embed_site_operator(DenseOperator(1, l.op), l.site, spec.n_sites));
  }
  return out;
}

}  // namespace scramble

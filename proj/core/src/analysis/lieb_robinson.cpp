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


#include "scramble/analysis.hpp"
#include "scramble/error.hpp"

namespace scramble {
namespace {

PauliString single_site(PauliLetter letter, int site, int n) {
  std::vector<PauliLetter> word(static_cast<std::size_t>(n), PauliLetter::I);
  word[static_cast<std::size_t>(site - 1)] = letter;
  return PauliString(std::move(word), 1.0);
}

}  // namespace

LrSeries lr_commutator_series(const ModelSpec& model, const DenseOperator& b,
                              const std::vector<int>& a_sites, const IntegratorConfig& cfg,
                              PauliLetter letter) {
  const int n = model.n_sites;
  if (b.n_sites() != n) throw InvalidArgument("lr_commutator_series: operator size mismatch");
  if (letter == PauliLetter::I) throw InvalidArgument("lr_commutator_series: A must not be I");
  std::vector<PauliString> as;
  for (int s : a_sites) {
    if (s < 1 || s > n) throw InvalidArgument("a_site " + std::to_string(s) + " out of range");
    as.push_back(single_site(letter, s, n));
  }
  const std::vector<double> times = cfg.sample_times();
  LrSeries out{HeatmapSeries(times, a_sites, "commutator_norm"),
               HeatmapSeries(times, a_sites, "commutator_norm_corrected"),
               Series1D{"t", "norm", {}, {}, "operator_norm", {}}};
  out.commutator.config = out.corrected.config = out.norm.config = describe_run(model, cfg);

  std::size_t ti = 0;
  evolve_general_observed({model, Direction::kBackward, Picture::kAdjoint}, b, cfg,
                          [&](double t, const DenseOperator& x) {
                            const double xn = operator_norm(x);
                            out.norm.x.push_back(t);
                            out.norm.y.push_back(xn);
                            for (std::size_t si = 0; si < as.size(); ++si) {
                              const double cn = operator_norm(commutator_with_pauli(x, as[si]));
                              out.commutator.at(ti, si) = cn;
                              // Pauli A has unit norm.
                              out.corrected.at(ti, si) = xn > 0.0 ? cn / xn : kInvalidValue;
                            }
                            ++ti;
                          });
  return out;
}

Series1D norm_decay_series(const ModelSpec& model, const DenseOperator& b,
                           const IntegratorConfig& cfg) {
  if (b.n_sites() != model.n_sites) throw InvalidArgument("norm_decay_series: operator size mismatch");
  Series1D out{"t", "norm", {}, {}, "operator_norm", describe_run(model, cfg)};
  evolve_general_observed({model, Direction::kBackward, Picture::kAdjoint}, b, cfg,
                          [&](double t, const DenseOperator& x) {
                            out.x.push_back(t);
                            out.y.push_back(operator_norm(x));
                          });
  return out;
}

}  // namespace scramble

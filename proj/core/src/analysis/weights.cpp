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


#include <bit>
#include <cstdint>

#include "scramble/analysis.hpp"
#include "scramble/error.hpp"

namespace scramble {

WeightProfile weight_profile_of(const DenseOperator& op, double t, bool keep_strings) {
  const int n = op.n_sites();
  const std::vector<Complex> coeffs = pauli_coefficients(op);
  double total = 0.0;
  for (const Complex& c : coeffs) total += std::norm(c);
  if (!(total > 0.0)) throw NumericalError("weight_profile: operator is zero");

  // One bit per base-4 digit marks a non-identity letter.
  std::uint64_t digit_bits = 0;
  for (int s = 0; s < n; ++s) digit_bits |= std::uint64_t{1} << (2 * s);

  WeightProfile out;
  out.t = t;
  for (std::uint64_t idx = 0; idx < coeffs.size(); ++idx) {
    const double w = std::norm(coeffs[idx]) / total;
    out.total += w;
    const std::uint64_t nz = (idx | (idx >> 1)) & digit_bits;
    const int body = std::popcount(nz);
    if (body == 0) {
      out.identity += w;
    } else if (body == 1) {
      out.one_body += w;
    } else if (body == 2) {
      const int lo = std::countr_zero(nz);
      if ((nz >> lo) == 0b101) out.nn_two_body += w;
    }
    if (keep_strings && w > 0.0) {
      out.per_string[PauliString::from_index(idx, n, 1.0).str()] = w;
    }
  }
  out.few_body_sum = out.one_body + out.nn_two_body;
  return out;
}

std::vector<WeightProfile> weight_profile(const ModelSpec& model, const DenseOperator& b,
                                          const IntegratorConfig& cfg, bool keep_strings) {
  if (b.n_sites() != model.n_sites) throw InvalidArgument("weight_profile: operator size mismatch");
  std::vector<WeightProfile> out;
  evolve_general_observed({model, Direction::kBackward, Picture::kAdjoint}, b.adjoint(), cfg,
                          [&](double t, const DenseOperator& x) {
                            out.push_back(weight_profile_of(x, t, keep_strings));
                          });
  return out;
}

}  // namespace scramble

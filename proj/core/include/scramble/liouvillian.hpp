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

#include <array>
#include <vector>

#include "scramble/linalg.hpp"
#include "scramble/model.hpp"

namespace scramble {

enum class Direction { kForward, kBackward };
enum class Picture { kState, kAdjoint };

/// Which generator to build: the state-picture Liouvillian or its adjoint,
/// with the system Hamiltonian reversed for backward evolution. Lindblad
/// operators are the same in both directions.
struct GeneratorSpec {
  ModelSpec model;
  Direction direction = Direction::kForward;
  Picture picture = Picture::kState;
};

/// Matrix-free Lindblad generator for nearest-neighbour chains with on-site
/// dissipators.
///
/// Every term is either diagonal in the computational basis or flips one
/// site's bit on the row index, the column index, or both. The constructor
/// folds all diagonal pieces into one dim x dim coefficient array and keeps a
/// small table of flip coefficients per site, so `apply` is a handful of
/// strided axpys per column.
///
///   state:   L(X)  = -i[H', X] + gamma sum_k (L_k X L_k^+ - {L_k^+ L_k, X}/2)
///   adjoint: L+(X) = +i[H', X] + gamma sum_k (L_k^+ X L_k - {L_k^+ L_k, X}/2)
///
/// with H' = H (forward) or -H (backward).
class Liouvillian {
 public:
  explicit Liouvillian(const GeneratorSpec& spec);

  const GeneratorSpec& spec() const { return spec_; }
  int n_sites() const { return spec_.model.n_sites; }
  Eigen::Index dim() const { return dim_; }

  /// out = generator applied to x. `out` must not alias `x`.
  void apply(const Matrix& x, Matrix& out) const;

  /// Same as `apply` for Hermitian x: fills the upper triangle and mirrors it.
  void apply_hermitian(const Matrix& x, Matrix& out) const;

  DenseOperator operator()(const DenseOperator& x) const;

 private:
  struct SiteFlips {
    Eigen::Index mask = 0;
    // Indexed [row bit][column bit].
    std::array<std::array<Complex, 2>, 2> row{};
    std::array<std::array<Complex, 2>, 2> col{};
    std::array<std::array<Complex, 2>, 2> both{};
    bool has_row = false;
    bool has_col = false;
    bool has_both = false;
  };

  void apply_columns(const Matrix& x, Matrix& out, bool upper_only) const;

  GeneratorSpec spec_;
  Eigen::Index dim_ = 0;
  Matrix diagonal_;
  std::vector<SiteFlips> sites_;
};

}  // namespace scramble

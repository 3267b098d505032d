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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scramble/linalg.hpp"

namespace scramble {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter p);
PauliLetter pauli_letter_from_char(char c);

/// 2x2 Pauli matrix. X=[[0,1],[1,0]], Y=[[0,-i],[i,0]], Z=[[1,0],[0,-1]].
DenseOperator pauli_matrix(PauliLetter letter);

/// I x ... x op1 x ... x I with op1 at `site` (1-based, site 1 leftmost).
DenseOperator embed_site_operator(const DenseOperator& op1, int site, int n_sites);

/// Shorthand for embed_site_operator(pauli_matrix(letter), site, n_sites).
DenseOperator pauli_on_site(PauliLetter letter, int site, int n_sites);

/// A word over {I,X,Y,Z} with a complex coefficient.
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::vector<PauliLetter> word, Complex coefficient);

  /// Parses e.g. "ZII"; coefficient defaults to 1.
  static PauliString from_string(std::string_view word, Complex coefficient = 1.0);

  /// Word encoded base 4 with site 1 as the most significant digit.
  static PauliString from_index(std::uint64_t index, int n_sites, Complex coefficient);

  const std::vector<PauliLetter>& word() const { return word_; }
  Complex coefficient() const { return coefficient_; }
  int n_sites() const { return static_cast<int>(word_.size()); }

  /// Number of non-identity letters.
  int body_size() const;

  std::string str() const;
  std::uint64_t index() const;

  /// coefficient * S as a dense matrix.
  DenseOperator to_operator() const;

 private:
  std::vector<PauliLetter> word_;
  Complex coefficient_{1.0, 0.0};
};

/// Action of a string on basis states: S|l> = phase[l] |l ^ flip>, with the
/// coefficient left out.
struct PauliAction {
  std::uint64_t flip = 0;
  std::vector<Complex> phase;
};
PauliAction pauli_action(const PauliString& p);

/// [x, S] using the permutation structure of S, in O(4^N).
DenseOperator commutator_with_pauli(const DenseOperator& x, const PauliString& p);

/// All coefficients b_S = tr(S^dagger op) / 2^N, indexed by PauliString::index().
///
/// Runs a per-site 2x2 transform over the matrix in O(N 4^N) instead of 4^N
/// trace evaluations.
std::vector<Complex> pauli_coefficients(const DenseOperator& op);

/// Strings with |b_S| > threshold, in increasing index order.
std::vector<PauliString> pauli_decompose(const DenseOperator& op, double threshold = 1e-12);

/// sum_S b_S S.
DenseOperator pauli_reconstruct(std::span<const PauliString> strings, int n_sites);

}  // namespace scramble

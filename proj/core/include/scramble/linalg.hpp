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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace scramble {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxSites = 12;

/// A 2^n x 2^n complex matrix on n spin-1/2 sites.
///
/// Basis index bits are ordered with site 1 as the most significant bit, and
/// bit value 0 is the sigma^z = +1 state. Everything in the library that maps
/// between sites and basis indices goes through `site_mask`.
class DenseOperator {
 public:
  DenseOperator() = default;

  /// Zero operator on `n_sites` sites.
  explicit DenseOperator(int n_sites);

  /// Wraps `m`; throws InvalidArgument unless m is 2^n_sites square.
  DenseOperator(int n_sites, Matrix m);

  static DenseOperator identity(int n_sites);

  /// Deduces n_sites from a square power-of-two matrix.
  static DenseOperator from_matrix(Matrix m);

  int n_sites() const { return n_sites_; }
  Eigen::Index dim() const { return m_.rows(); }

  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  Complex& operator()(Eigen::Index i, Eigen::Index j) { return m_(i, j); }

  DenseOperator adjoint() const;

  /// max |A - A^dagger| over entries.
  double hermiticity_error() const;
  bool is_hermitian(double tol = 1e-10) const { return hermiticity_error() <= tol; }

  /// In-place (A + A^dagger) / 2.
  void hermitize();

  bool all_finite() const { return m_.allFinite(); }

  DenseOperator& operator+=(const DenseOperator& o);
  DenseOperator& operator-=(const DenseOperator& o);
  DenseOperator& operator*=(Complex s);

  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(DenseOperator a, Complex s) { return a *= s; }
  friend DenseOperator operator*(Complex s, DenseOperator a) { return a *= s; }
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

 private:
  int n_sites_ = 0;
  Matrix m_;
};

/// Bit of the basis index that carries `site` (1-based, site 1 leftmost).
inline std::uint64_t site_mask(int site, int n_sites) {
  return std::uint64_t{1} << (n_sites - site);
}

/// Throws InvalidArgument unless both operators live on the same sites.
void require_same_shape(const DenseOperator& a, const DenseOperator& b, const char* what);

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

Complex trace(const DenseOperator& a);

/// tr(a b) without forming the product.
Complex trace_product(const DenseOperator& a, const DenseOperator& b);

/// Elementwise max |a - b|.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

struct NormReport {
  double operator_norm = 0.0;
  double frobenius_normalized = 0.0;
};

/// Largest singular value. Hermitian and anti-Hermitian inputs go through a
/// values-only Hermitian eigensolver; anything else through a full SVD.
double operator_norm(const DenseOperator& op);

/// sqrt(tr(op op^dagger) / 2^N).
double frobenius_norm_normalized(const DenseOperator& op);

NormReport norms(const DenseOperator& op);

/// Eigenvalues of a Hermitian operator in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const DenseOperator& op);

}  // namespace scramble

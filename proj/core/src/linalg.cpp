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

#include "scramble/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scramble/error.hpp"

namespace scramble {
namespace {

Eigen::Index dim_for(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites + 1) {
    throw InvalidArgument("n_sites must be positive and small enough for a dense matrix, got " +
                          std::to_string(n_sites));
  }
  return Eigen::Index{1} << n_sites;
}

constexpr double kHermitianTol = 1e-10;

}  // namespace

DenseOperator::DenseOperator(int n_sites)
    : n_sites_(n_sites), m_(Matrix::Zero(dim_for(n_sites), dim_for(n_sites))) {}

DenseOperator::DenseOperator(int n_sites, Matrix m) : n_sites_(n_sites), m_(std::move(m)) {
  const auto d = dim_for(n_sites);
  if (m_.rows() != d || m_.cols() != d) {
    throw InvalidArgument("matrix is " + std::to_string(m_.rows()) + "x" +
                          std::to_string(m_.cols()) + ", expected " + std::to_string(d) +
                          " square for " + std::to_string(n_sites) + " sites");
  }
}

DenseOperator DenseOperator::identity(int n_sites) {
  const auto d = dim_for(n_sites);
  return DenseOperator(n_sites, Matrix::Identity(d, d));
}

DenseOperator DenseOperator::from_matrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw InvalidArgument("operator matrix must be square with dimension >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < m.rows()) ++n;
  if ((Eigen::Index{1} << n) != m.rows()) {
    throw InvalidArgument("operator dimension " + std::to_string(m.rows()) +
                          " is not a power of two");
  }
  return DenseOperator(n, std::move(m));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(n_sites_, m_.adjoint()); }

double DenseOperator::hermiticity_error() const {
  double err = 0.0;
  const auto d = dim();
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      err = std::max(err, std::abs(m_(i, j) - std::conj(m_(j, i))));
    }
  }
  return err;
}

void DenseOperator::hermitize() {
  constexpr Eigen::Index kTile = 16;
  const auto d = dim();
  for (Eigen::Index jb = 0; jb < d; jb += kTile) {
    const Eigen::Index jend = std::min(d, jb + kTile);
    for (Eigen::Index ib = 0; ib <= jb; ib += kTile) {
      const Eigen::Index iend = std::min(d, ib + kTile);
      for (Eigen::Index j = jb; j < jend; ++j) {
        for (Eigen::Index i = ib; i < std::min(iend, j); ++i) {
          const Complex avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
          m_(i, j) = avg;
          m_(j, i) = std::conj(avg);
        }
      }
    }
  }
  for (Eigen::Index j = 0; j < d; ++j) m_(j, j) = Complex(m_(j, j).real(), 0.0);
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
  require_same_shape(*this, o, "operator+");
  m_ += o.m_;
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
  require_same_shape(*this, o, "operator-");
  m_ -= o.m_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "operator*");
  return DenseOperator(a.n_sites(), a.matrix() * b.matrix());
}

void require_same_shape(const DenseOperator& a, const DenseOperator& b, const char* what) {
  if (a.n_sites() != b.n_sites()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.n_sites()) + " vs " + std::to_string(b.n_sites()) +
                          " sites)");
  }
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "commutator");
  Matrix c = a.matrix() * b.matrix();
  c.noalias() -= b.matrix() * a.matrix();
  return DenseOperator(a.n_sites(), std::move(c));
}

Complex trace(const DenseOperator& a) { return a.matrix().trace(); }

Complex trace_product(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "trace_product");
  // tr(ab) = sum_ij a_ij b_ji
  return (a.matrix().array() * b.matrix().transpose().array()).sum();
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "max_abs_diff");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const DenseOperator& op) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double operator_norm(const DenseOperator& op) {
  const Matrix& m = op.matrix();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm <= kHermitianTol * scale) {
    return hermitian_eigenvalues(op).cwiseAbs().maxCoeff();
  }
  const double anti = (m + m.adjoint()).cwiseAbs().maxCoeff();
  if (anti <= kHermitianTol * scale) {
    DenseOperator h(op.n_sites(), Complex(0.0, 1.0) * m);
    h.hermitize();
    return hermitian_eigenvalues(h).cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double frobenius_norm_normalized(const DenseOperator& op) {
  return std::sqrt(op.matrix().squaredNorm() / static_cast<double>(op.dim()));
}

NormReport norms(const DenseOperator& op) {
  return NormReport{operator_norm(op), frobenius_norm_normalized(op)};
}

}  // namespace scramble

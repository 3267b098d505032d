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

#include "scramble/liouvillian.hpp"

#include <algorithm>

#include "scramble/error.hpp"

namespace scramble {
namespace {

using Table = std::array<std::array<Complex, 2>, 2>;

bool any_nonzero(const Table& t) {
  for (const auto& row : t) {
    for (const auto& v : row) {
      if (v != Complex(0.0, 0.0)) return true;
    }
  }
  return false;
}

// y[i] += c[bit(i)] * src[flip ? i ^ m : i] for 0 <= i < end.
//
// Plain double arithmetic so the loops vectorize without the NaN-recovery
// branch of std::complex multiplication.
inline void masked_axpy(double* __restrict y, const double* __restrict src, Eigen::Index end,
                        Eigen::Index m, bool flip, Complex c0, Complex c1) {
  const double a0 = c0.real(), b0 = c0.imag();
  const double a1 = c1.real(), b1 = c1.imag();
  const Eigen::Index shift = flip ? m : 0;
  for (Eigen::Index base = 0; base < end; base += 2 * m) {
    const Eigen::Index n0 = std::min(m, end - base);
    {
      double* yy = y + 2 * base;
      const double* ss = src + 2 * (base + shift);
      for (Eigen::Index t = 0; t < n0; ++t) {
        const double sr = ss[2 * t], si = ss[2 * t + 1];
        yy[2 * t] += a0 * sr - b0 * si;
        yy[2 * t + 1] += a0 * si + b0 * sr;
      }
    }
    if (base + m >= end) break;
    const Eigen::Index n1 = std::min(m, end - base - m);
    double* yy = y + 2 * (base + m);
    const double* ss = src + 2 * (base + m - shift);
    for (Eigen::Index t = 0; t < n1; ++t) {
      const double sr = ss[2 * t], si = ss[2 * t + 1];
      yy[2 * t] += a1 * sr - b1 * si;
      yy[2 * t + 1] += a1 * si + b1 * sr;
    }
  }
}

// Copies conj(upper) into the strict lower triangle, tile by tile.
void mirror_upper(Matrix& out) {
  constexpr Eigen::Index kTile = 16;
  const Eigen::Index d = out.rows();
  for (Eigen::Index jb = 0; jb < d; jb += kTile) {
    for (Eigen::Index ib = 0; ib <= jb; ib += kTile) {
      const Eigen::Index jend = std::min(d, jb + kTile);
      const Eigen::Index iend = std::min(d, ib + kTile);
      for (Eigen::Index j = jb; j < jend; ++j) {
        for (Eigen::Index i = ib; i < std::min(iend, j); ++i) {
          out(j, i) = std::conj(out(i, j));
        }
      }
    }
  }
}

}  // namespace

Liouvillian::Liouvillian(const GeneratorSpec& spec) : spec_(spec) {
  const ModelSpec& model = spec_.model;
  model.validate();
  const int n = model.n_sites;
  dim_ = Eigen::Index{1} << n;

  // Y = i*sigma*(H'X - XH') - (gamma/2)(KX + XK) + gamma sum M X M^+
  // sigma = -1 (state) or +1 (adjoint), M = L (state) or L^+ (adjoint).
  const double sigma = spec_.picture == Picture::kState ? -1.0 : 1.0;
  const double hsign = spec_.direction == Direction::kForward ? 1.0 : -1.0;
  const Complex i_sigma(0.0, sigma);
  const double gamma = model.channel.gamma;

  const auto lindblad = local_lindblad_ops(model);

  std::vector<Table> elementwise(static_cast<std::size_t>(n));
  sites_.resize(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) {
    auto& flips = sites_[static_cast<std::size_t>(s - 1)];
    flips.mask = static_cast<Eigen::Index>(site_mask(s, n));

    Matrix left = Matrix::Zero(2, 2);
    Matrix right = Matrix::Zero(2, 2);
    if (model.site_active(s)) {
      const double c = -hsign * model.g;  // coefficient of X_s in H'
      left(0, 1) += i_sigma * c;
      left(1, 0) += i_sigma * c;
      right(0, 1) -= i_sigma * c;
      right(1, 0) -= i_sigma * c;
    }
    Table elem{};
    for (const auto& l : lindblad) {
      if (l.site != s) continue;
      const Matrix k = l.op.adjoint() * l.op;
      left -= 0.5 * gamma * k;
      right -= 0.5 * gamma * k;
      const Matrix m = spec_.picture == Picture::kState ? l.op : Matrix(l.op.adjoint());
      for (int bi = 0; bi < 2; ++bi) {
        for (int bj = 0; bj < 2; ++bj) {
          elem[bi][bj] += gamma * m(bi, bi) * std::conj(m(bj, bj));
          flips.row[bi][bj] += gamma * m(bi, 1 - bi) * std::conj(m(bj, bj));
          flips.col[bi][bj] += gamma * m(bi, bi) * std::conj(m(bj, 1 - bj));
          flips.both[bi][bj] += gamma * m(bi, 1 - bi) * std::conj(m(bj, 1 - bj));
        }
      }
    }
    for (int bi = 0; bi < 2; ++bi) {
      for (int bj = 0; bj < 2; ++bj) {
        elem[bi][bj] += left(bi, bi) + right(bj, bj);
        flips.row[bi][bj] += left(bi, 1 - bi);
        flips.col[bi][bj] += right(1 - bj, bj);
      }
    }
    elementwise[static_cast<std::size_t>(s - 1)] = elem;
    flips.has_row = any_nonzero(flips.row);
    flips.has_col = any_nonzero(flips.col);
    flips.has_both = any_nonzero(flips.both);
  }

  const Eigen::VectorXd hdiag = hamiltonian_diagonal(model);
  diagonal_.resize(dim_, dim_);
  for (Eigen::Index j = 0; j < dim_; ++j) {
    for (Eigen::Index i = 0; i < dim_; ++i) {
      Complex e = i_sigma * hsign * (hdiag(i) - hdiag(j));
      for (int s = 0; s < n; ++s) {
        const Eigen::Index m = sites_[static_cast<std::size_t>(s)].mask;
        e += elementwise[static_cast<std::size_t>(s)][(i & m) ? 1 : 0][(j & m) ? 1 : 0];
      }
      diagonal_(i, j) = e;
    }
  }
  // Drop sites that contribute nothing off-diagonal.
  std::erase_if(sites_, [](const SiteFlips& f) { return !f.has_row && !f.has_col && !f.has_both; });
}

void Liouvillian::apply_columns(const Matrix& x, Matrix& out, bool upper_only) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw InvalidArgument("Liouvillian: operand is " + std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()) + ", expected " + std::to_string(dim_) +
                          " square");
  }
  out.resize(dim_, dim_);
  const auto* xd = reinterpret_cast<const double*>(x.data());
  auto* yd = reinterpret_cast<double*>(out.data());
  for (Eigen::Index j = 0; j < dim_; ++j) {
    const Eigen::Index end = upper_only ? j + 1 : dim_;
    double* ycol = yd + 2 * j * dim_;
    const double* xcol = xd + 2 * j * dim_;
    const double* ecol = reinterpret_cast<const double*>(diagonal_.data()) + 2 * j * dim_;
    for (Eigen::Index i = 0; i < end; ++i) {
      const double er = ecol[2 * i], ei = ecol[2 * i + 1];
      const double xr = xcol[2 * i], xi = xcol[2 * i + 1];
      ycol[2 * i] = er * xr - ei * xi;
      ycol[2 * i + 1] = er * xi + ei * xr;
    }
    for (const auto& f : sites_) {
      const int bj = (j & f.mask) ? 1 : 0;
      const double* xflip = xd + 2 * (j ^ f.mask) * dim_;
      if (f.has_row) masked_axpy(ycol, xcol, end, f.mask, true, f.row[0][bj], f.row[1][bj]);
      if (f.has_col) masked_axpy(ycol, xflip, end, f.mask, false, f.col[0][bj], f.col[1][bj]);
      if (f.has_both) masked_axpy(ycol, xflip, end, f.mask, true, f.both[0][bj], f.both[1][bj]);
    }
  }
}

void Liouvillian::apply(const Matrix& x, Matrix& out) const { apply_columns(x, out, false); }

void Liouvillian::apply_hermitian(const Matrix& x, Matrix& out) const {
  apply_columns(x, out, true);
  mirror_upper(out);
}

DenseOperator Liouvillian::operator()(const DenseOperator& x) const {
  if (x.n_sites() != n_sites()) {
    throw InvalidArgument("Liouvillian: dimension mismatch (" + std::to_string(x.n_sites()) +
                          " vs " + std::to_string(n_sites()) + " sites)");
  }
  Matrix out;
  apply(x.matrix(), out);
  return DenseOperator(n_sites(), std::move(out));
}

}  // namespace scramble

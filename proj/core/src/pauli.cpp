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

#include "scramble/pauli.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "scramble/error.hpp"

namespace scramble {
namespace {

constexpr Complex kI{0.0, 1.0};

// Pauli letter at one site is stored as (row bit, column bit) = (letter >> 1,
// letter & 1) in the transformed matrix, so the full string index is the bit
// interleave of (row, column) with row bits in the odd positions.
std::uint64_t interleave(std::uint64_t row, std::uint64_t col, int n_sites) {
  std::uint64_t out = 0;
  for (int b = 0; b < n_sites; ++b) {
    out |= ((col >> b) & 1u) << (2 * b);
    out |= ((row >> b) & 1u) << (2 * b + 1);
  }
  return out;
}

void deinterleave(std::uint64_t idx, int n_sites, std::uint64_t& row, std::uint64_t& col) {
  row = 0;
  col = 0;
  for (int b = 0; b < n_sites; ++b) {
    col |= ((idx >> (2 * b)) & 1u) << b;
    row |= ((idx >> (2 * b + 1)) & 1u) << b;
  }
}

// In place: 2x2 blocks on every site become (I, X; Y, Z) coefficients.
void forward_transform(Matrix& m, int n_sites) {
  const Eigen::Index d = m.rows();
  for (int site = 1; site <= n_sites; ++site) {
    const auto mask = static_cast<Eigen::Index>(site_mask(site, n_sites));
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c & mask) continue;
      for (Eigen::Index r = 0; r < d; ++r) {
        if (r & mask) continue;
        const Complex a00 = m(r, c);
        const Complex a01 = m(r, c | mask);
        const Complex a10 = m(r | mask, c);
        const Complex a11 = m(r | mask, c | mask);
        m(r, c) = 0.5 * (a00 + a11);
        m(r, c | mask) = 0.5 * (a01 + a10);
        m(r | mask, c) = 0.5 * kI * (a01 - a10);
        m(r | mask, c | mask) = 0.5 * (a00 - a11);
      }
    }
  }
}

void inverse_transform(Matrix& m, int n_sites) {
  const Eigen::Index d = m.rows();
  for (int site = 1; site <= n_sites; ++site) {
    const auto mask = static_cast<Eigen::Index>(site_mask(site, n_sites));
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c & mask) continue;
      for (Eigen::Index r = 0; r < d; ++r) {
        if (r & mask) continue;
        const Complex bi = m(r, c);
        const Complex bx = m(r, c | mask);
        const Complex by = m(r | mask, c);
        const Complex bz = m(r | mask, c | mask);
        m(r, c) = bi + bz;
        m(r, c | mask) = bx - kI * by;
        m(r | mask, c) = bx + kI * by;
        m(r | mask, c | mask) = bi - bz;
      }
    }
  }
}

}  // namespace

char to_char(PauliLetter p) { return "IXYZ"[static_cast<int>(p)]; }

PauliLetter pauli_letter_from_char(char c) {
  switch (c) {
    case 'I':
    case 'i':
    case '_':
      return PauliLetter::I;
    case 'X':
    case 'x':
      return PauliLetter::X;
    case 'Y':
    case 'y':
      return PauliLetter::Y;
    case 'Z':
    case 'z':
      return PauliLetter::Z;
    default:
      throw InvalidArgument(std::string("not a Pauli letter: '") + c + "'");
  }
}

DenseOperator pauli_matrix(PauliLetter letter) {
  Matrix m(2, 2);
  switch (letter) {
    case PauliLetter::I:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case PauliLetter::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliLetter::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case PauliLetter::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return DenseOperator(1, std::move(m));
}

DenseOperator embed_site_operator(const DenseOperator& op1, int site, int n_sites) {
  if (op1.n_sites() != 1) {
    throw InvalidArgument("embed_site_operator expects a single-site (2x2) operator");
  }
  if (n_sites < 1 || n_sites > kMaxSites + 1) {
    throw InvalidArgument("n_sites out of range: " + std::to_string(n_sites));
  }
  if (site < 1 || site > n_sites) {
    throw InvalidArgument("site " + std::to_string(site) + " out of range [1," +
                          std::to_string(n_sites) + "]");
  }
  const auto left = Eigen::Index{1} << (site - 1);
  const auto right = Eigen::Index{1} << (n_sites - site);
  Matrix tmp = Eigen::kroneckerProduct(Matrix::Identity(left, left), op1.matrix()).eval();
  Matrix out = Eigen::kroneckerProduct(tmp, Matrix::Identity(right, right)).eval();
  return DenseOperator(n_sites, std::move(out));
}

DenseOperator pauli_on_site(PauliLetter letter, int site, int n_sites) {
  return embed_site_operator(pauli_matrix(letter), site, n_sites);
}

PauliString::PauliString(std::vector<PauliLetter> word, Complex coefficient)
    : word_(std::move(word)), coefficient_(coefficient) {
  if (word_.empty()) throw InvalidArgument("Pauli word must be non-empty");
}

PauliString PauliString::from_string(std::string_view word, Complex coefficient) {
  std::vector<PauliLetter> letters;
  letters.reserve(word.size());
  for (char c : word) letters.push_back(pauli_letter_from_char(c));
  return PauliString(std::move(letters), coefficient);
}

PauliString PauliString::from_index(std::uint64_t index, int n_sites, Complex coefficient) {
  std::vector<PauliLetter> letters(static_cast<std::size_t>(n_sites));
  for (int k = n_sites - 1; k >= 0; --k) {
    letters[static_cast<std::size_t>(k)] = static_cast<PauliLetter>(index & 3u);
    index >>= 2;
  }
  return PauliString(std::move(letters), coefficient);
}

int PauliString::body_size() const {
  return static_cast<int>(
      std::count_if(word_.begin(), word_.end(), [](PauliLetter p) { return p != PauliLetter::I; }));
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(word_.size());
  for (auto p : word_) s.push_back(to_char(p));
  return s;
}

std::uint64_t PauliString::index() const {
  std::uint64_t idx = 0;
  for (auto p : word_) idx = (idx << 2) | static_cast<std::uint64_t>(p);
  return idx;
}

DenseOperator PauliString::to_operator() const {
  Matrix out = Matrix::Constant(1, 1, coefficient_);
  for (auto p : word_) out = Eigen::kroneckerProduct(out, pauli_matrix(p).matrix()).eval();
  return DenseOperator(n_sites(), std::move(out));
}

std::vector<Complex> pauli_coefficients(const DenseOperator& op) {
  const int n = op.n_sites();
  Matrix m = op.matrix();
  forward_transform(m, n);
  const auto d = static_cast<std::uint64_t>(op.dim());
  std::vector<Complex> out(d * d);
  for (std::uint64_t c = 0; c < d; ++c) {
    for (std::uint64_t r = 0; r < d; ++r) {
      out[interleave(r, c, n)] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

std::vector<PauliString> pauli_decompose(const DenseOperator& op, double threshold) {
  const auto coeffs = pauli_coefficients(op);
  std::vector<PauliString> out;
  for (std::uint64_t idx = 0; idx < coeffs.size(); ++idx) {
    if (std::abs(coeffs[idx]) > threshold) {
      out.push_back(PauliString::from_index(idx, op.n_sites(), coeffs[idx]));
    }
  }
  return out;
}

DenseOperator pauli_reconstruct(std::span<const PauliString> strings, int n_sites) {
  DenseOperator out(n_sites);
  Matrix& m = out.matrix();
  for (const auto& s : strings) {
    if (s.n_sites() != n_sites) {
      throw InvalidArgument("Pauli string " + s.str() + " does not have " +
                            std::to_string(n_sites) + " sites");
    }
    std::uint64_t r = 0;
    std::uint64_t c = 0;
    deinterleave(s.index(), n_sites, r, c);
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += s.coefficient();
  }
  inverse_transform(m, n_sites);
  return out;
}

PauliAction pauli_action(const PauliString& p) {
  const int n = p.n_sites();
  const std::size_t dim = std::size_t{1} << n;
  PauliAction out;
  for (int s = 1; s <= n; ++s) {
    const PauliLetter l = p.word()[static_cast<std::size_t>(s - 1)];
    if (l == PauliLetter::X || l == PauliLetter::Y) out.flip |= site_mask(s, n);
  }
  out.phase.assign(dim, Complex(1.0, 0.0));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Complex ph(1.0, 0.0);
    for (int s = 1; s <= n; ++s) {
      const bool one = (idx & site_mask(s, n)) != 0;
      const PauliLetter l = p.word()[static_cast<std::size_t>(s - 1)];
      if (l == PauliLetter::Y) ph *= one ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
      if (l == PauliLetter::Z && one) ph = -ph;
    }
    out.phase[idx] = ph;
  }
  return out;
}

DenseOperator commutator_with_pauli(const DenseOperator& x, const PauliString& p) {
  if (x.n_sites() != p.n_sites()) {
    throw InvalidArgument("commutator_with_pauli: operator has " + std::to_string(x.n_sites()) +
                          " sites, string has " + std::to_string(p.n_sites()));
  }
  const PauliAction act = pauli_action(p);
  const auto f = static_cast<Eigen::Index>(act.flip);
  const Matrix& a = x.matrix();
  const Eigen::Index d = a.rows();
  Matrix out(d, d);
  // (xS)_{kl} = x_{k, l^f} phase(l);  (Sx)_{kl} = phase(k ^ f) x_{k^f, l}.
  for (Eigen::Index l = 0; l < d; ++l) {
    const Complex pl = act.phase[static_cast<std::size_t>(l)];
    for (Eigen::Index k = 0; k < d; ++k) {
      out(k, l) = a(k, l ^ f) * pl - act.phase[static_cast<std::size_t>(k ^ f)] * a(k ^ f, l);
    }
  }
  out *= p.coefficient();
  return DenseOperator(x.n_sites(), std::move(out));
}

}  // namespace scramble

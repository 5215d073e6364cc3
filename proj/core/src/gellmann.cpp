// Copyright 2026 The ewcones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ewcones/gellmann.hpp"

#include <cmath>
#include <string>

#include "ewcones/error.hpp"

namespace ewcones {
namespace {

std::size_t pair_count(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

// Lexicographic rank of (k,l), 1 <= k < l <= n.
std::size_t pair_rank(int n, int k, int l) {
  std::size_t rank = 0;
  for (int kk = 1; kk < k; ++kk) rank += static_cast<std::size_t>(n - kk);
  return rank + static_cast<std::size_t>(l - k - 1);
}

}  // namespace

GellMannBasis::GellMannBasis(int n) : n_(n) {
  if (n < 2) throw DomainError("Gell-Mann basis needs n >= 2, got " + std::to_string(n));
  const auto dim = static_cast<std::size_t>(n);
  elements_.reserve(dim * dim);

  elements_.push_back(Matrix::identity(dim) * Complex{1.0 / std::sqrt(double(n))});

  for (int l = 1; l < n; ++l) {
    Matrix d(dim, dim);
    const double scale = 1.0 / std::sqrt(double(l) * double(l + 1));
    for (int k = 1; k <= l; ++k) d(storage_index(k), storage_index(k)) = scale;
    d(storage_index(l + 1), storage_index(l + 1)) = -double(l) * scale;
    elements_.push_back(std::move(d));
  }

  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      Matrix u(dim, dim);
      u(storage_index(k), storage_index(l)) = r;
      u(storage_index(l), storage_index(k)) = r;
      elements_.push_back(std::move(u));
    }
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      Matrix v(dim, dim);
      v(storage_index(k), storage_index(l)) = Complex{0.0, -r};
      v(storage_index(l), storage_index(k)) = Complex{0.0, r};
      elements_.push_back(std::move(v));
    }
}

BasisLabel GellMannBasis::label(std::size_t alpha) const {
  if (alpha >= size()) throw DomainError("basis position out of range");
  if (alpha == 0) return {ElementKind::identity, 0, 0};
  const auto diag_end = static_cast<std::size_t>(n_);
  if (alpha < diag_end) return {ElementKind::diagonal, 0, static_cast<int>(alpha)};
  std::size_t rank = alpha - diag_end;
  ElementKind kind = ElementKind::symmetric;
  if (rank >= pair_count(n_)) {
    rank -= pair_count(n_);
    kind = ElementKind::antisymmetric;
  }
  for (int k = 1; k <= n_; ++k)
    for (int l = k + 1; l <= n_; ++l)
      if (pair_rank(n_, k, l) == rank) return {kind, k, l};
  throw DomainError("basis position out of range");
}

std::size_t GellMannBasis::position(BasisLabel label) const {
  switch (label.kind) {
    case ElementKind::identity:
      return 0;
    case ElementKind::diagonal:
      if (label.l < 1 || label.l >= n_) break;
      return static_cast<std::size_t>(label.l);
    case ElementKind::symmetric:
    case ElementKind::antisymmetric: {
      if (label.k < 1 || label.l <= label.k || label.l > n_) break;
      std::size_t pos = static_cast<std::size_t>(n_) + pair_rank(n_, label.k, label.l);
      if (label.kind == ElementKind::antisymmetric) pos += pair_count(n_);
      return pos;
    }
  }
  throw DomainError("label does not name an element of the basis");
}

double GellMannBasis::diagonal_entry(int l, int ket) const {
  if (l < 1 || l >= n_ || ket < 1 || ket > n_) {
    throw DomainError("diagonal_entry: index out of range");
  }
  return elements_[static_cast<std::size_t>(l)](storage_index(ket), storage_index(ket)).real();
}

std::vector<Complex> GellMannBasis::expand(const Matrix& x) const {
  const auto dim = static_cast<std::size_t>(n_);
  if (x.rows() != dim || x.cols() != dim) {
    throw ShapeError("expand: expected a " + std::to_string(n_) + "x" +
                     std::to_string(n_) + " matrix");
  }
  std::vector<Complex> c;
  c.reserve(size());
  // f_alpha is Hermitian, so Tr(f_alpha X) = Tr(f_alpha^dagger X).
  for (const Matrix& f : elements_) c.push_back(hilbert_schmidt(f, x));
  return c;
}

Matrix GellMannBasis::reconstruct(std::span<const Complex> coefficients) const {
  if (coefficients.size() != size()) throw ShapeError("reconstruct: wrong coefficient count");
  const auto dim = static_cast<std::size_t>(n_);
  Matrix out(dim, dim);
  for (std::size_t a = 0; a < size(); ++a) out += elements_[a] * coefficients[a];
  return out;
}

GellMannBasis build_basis(int n) { return GellMannBasis(n); }

std::vector<Complex> expand(const Matrix& x, const GellMannBasis& basis) {
  return basis.expand(x);
}

}  // namespace ewcones

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

#include "ewcones/kossakowski.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ewcones/error.hpp"
#include "ewcones/linalg.hpp"
#include "format.hpp"

namespace ewcones {
namespace {

constexpr double kOrthogonalityTol = 1e-12;

void require_orthogonal(const RealMatrix& m, const char* what) {
  if (!m.is_square()) throw ShapeError(std::string(what) + ": matrix is not square");
  const double defect = orthogonality_defect(m);
  if (defect > kOrthogonalityTol) {
    throw DomainError(std::string(what) + ": matrix is not orthogonal (defect " +
                      detail::format_number(defect) + ")");
  }
}

}  // namespace

RealMatrix euler_rotation(const EulerAngles& angles) {
  const double ca = std::cos(angles.alpha), sa = std::sin(angles.alpha);
  const double cb = std::cos(angles.beta), sb = std::sin(angles.beta);
  const double cg = std::cos(angles.gamma), sg = std::sin(angles.gamma);
  return RealMatrix{
      {ca * cg - cb * sa * sg, cg * sa + ca * cb * sg, sb * sg},
      {-cb * cg * sa - ca * sg, ca * cb * cg - sa * sg, cg * sb},
      {sa * sb, -ca * sb, cb},
  };
}

RealMatrix so2_rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return RealMatrix{{c, -s}, {s, c}};
}

OrthogonalEmbedding::OrthogonalEmbedding(RealMatrix block)
    : n_(static_cast<int>(block.rows()) + 1), block_(std::move(block)) {
  require_orthogonal(block_, "OrthogonalEmbedding");
  parity_ = determinant(block_) > 0.0 ? Parity::proper : Parity::improper;
}

OrthogonalEmbedding OrthogonalEmbedding::from_rotation(const RealMatrix& rotation,
                                                       Parity parity) {
  return OrthogonalEmbedding(parity == Parity::proper ? rotation : -rotation);
}

OrthogonalEmbedding OrthogonalEmbedding::from_euler(const EulerAngles& angles,
                                                    Parity parity) {
  return from_rotation(euler_rotation(angles), parity);
}

RealMatrix OrthogonalEmbedding::full_rotation() const {
  const auto m = static_cast<std::size_t>(n_ * n_ - 1);
  const std::size_t b = block_.rows();
  RealMatrix r(m, m);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) r(i, j) = block_(i, j);
  for (std::size_t i = b; i < m; ++i) r(i, i) = -1.0;
  return r;
}

KossakowskiMap::KossakowskiMap(int n, RealMatrix rotation)
    : rotation_(std::move(rotation)), basis_(n) {
  const auto m = static_cast<std::size_t>(n * n - 1);
  if (rotation_.rows() != m || rotation_.cols() != m) {
    throw ShapeError("KossakowskiMap: rotation must be " + std::to_string(m) + "x" +
                     std::to_string(m));
  }
  require_orthogonal(rotation_, "KossakowskiMap");
}

KossakowskiMap::KossakowskiMap(const OrthogonalEmbedding& embedding)
    : KossakowskiMap(embedding.n(), embedding.full_rotation()) {}

Matrix KossakowskiMap::apply_with(const Matrix& x, bool transposed) const {
  const std::vector<Complex> c = basis_.expand(x);
  const auto dim = static_cast<std::size_t>(n());
  Matrix out = Matrix::identity(dim) * (x.trace() / double(n()));
  const double scale = 1.0 / double(n() - 1);
  // Basis position alpha >= 1 is rotation index alpha - 1.
  for (std::size_t a = 1; a < basis_.size(); ++a) {
    Complex weight{};
    for (std::size_t b = 1; b < basis_.size(); ++b) {
      const double r = transposed ? rotation_(b - 1, a - 1) : rotation_(a - 1, b - 1);
      weight += r * c[b];
    }
    if (weight != Complex{}) out += basis_[a] * (scale * weight);
  }
  return out;
}

Matrix KossakowskiMap::apply(const Matrix& x) const { return apply_with(x, false); }
Matrix KossakowskiMap::apply_dual(const Matrix& y) const { return apply_with(y, true); }

Matrix apply_map(const KossakowskiMap& map, const Matrix& x) { return map.apply(x); }

StochasticMatrix::StochasticMatrix(RealMatrix values) : values_(std::move(values)) {
  if (!values_.is_square()) throw ShapeError("StochasticMatrix must be square");
  const std::size_t n = values_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (values_(i, j) < -1e-12) {
        throw ValidationError("StochasticMatrix: negative entry " +
                              detail::format_number(values_(i, j)));
      }
      row += values_(i, j);
      col += values_(j, i);
    }
    if (std::abs(row - 1.0) > 1e-10 || std::abs(col - 1.0) > 1e-10) {
      throw ValidationError("StochasticMatrix: row/column " + std::to_string(i) +
                            " does not sum to 1");
    }
  }
}

StochasticMatrix phi_matrix(const OrthogonalEmbedding& embedding) {
  const int n = embedding.n();
  const GellMannBasis basis(n);
  const RealMatrix& r = embedding.block();
  const auto dim = static_cast<std::size_t>(n);
  RealMatrix phi(dim, dim);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      double sum = 0.0;
      for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l)
          sum += basis.diagonal_entry(l, j) * r(storage_index(k), storage_index(l)) *
                 basis.diagonal_entry(k, i);
      phi(storage_index(i), storage_index(j)) = 1.0 / n + sum / (n - 1);
    }
  return StochasticMatrix(std::move(phi));
}

Witness::Witness(Matrix op, int n, double tol) : op_(std::move(op)), n_(n) {
  const auto dim = static_cast<std::size_t>(n);
  if (n < 2 || op_.rows() != dim * dim || !op_.is_square()) {
    throw ShapeError("Witness: operator must be n^2 x n^2");
  }
  if (!is_hermitian(op_, tol)) throw ValidationError("Witness: operator is not Hermitian");
  const BipartiteShape shape{dim, dim};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          const Complex v = op_(shape.index(i, k), shape.index(j, l));
          Complex expected{};
          bool pinned = true;
          if (i != j) {
            expected = (k == i && l == j) ? Complex{-1.0} : Complex{};
          } else if (k != l) {
            expected = 0.0;
          } else {
            pinned = false;
          }
          if (pinned && std::abs(v - expected) > tol) {
            throw ValidationError("Witness: block structure violated at block (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
}

RealMatrix Witness::stochastic_part() const {
  const auto dim = static_cast<std::size_t>(n_);
  const BipartiteShape shape{dim, dim};
  RealMatrix phi(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      phi(i, j) = op_(shape.index(i, j), shape.index(i, j)).real() / double(n_ - 1);
  return phi;
}

Witness witness_from_stochastic(const StochasticMatrix& phi) {
  const std::size_t dim = phi.n();
  const BipartiteShape shape{dim, dim};
  Matrix w(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) {
        for (std::size_t k = 0; k < dim; ++k)
          w(shape.index(i, k), shape.index(i, k)) = double(dim - 1) * phi(i, k);
      } else {
        w(shape.index(i, i), shape.index(j, j)) = -1.0;
      }
    }
  return Witness(std::move(w), static_cast<int>(dim));
}

Witness build_witness(const OrthogonalEmbedding& embedding) {
  return witness_from_stochastic(phi_matrix(embedding));
}

std::vector<Complex> maximally_entangled_vector(std::size_t n) {
  std::vector<Complex> v(n * n);
  const double amp = 1.0 / std::sqrt(double(n));
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = amp;
  return v;
}

Matrix choi_operator(const KossakowskiMap& map) {
  const int n = map.n();
  const auto dim = static_cast<std::size_t>(n);
  // P+ = (1/n) sum_ij |i><j| (x) |i><j|, so (id (x) Phi) P+ =
  // (1/n) sum_ij |i><j| (x) Phi(|i><j|).
  Matrix out(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Matrix unit(dim, dim);
      unit(i, j) = 1.0;
      const Matrix image = map.apply(unit);
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
          out(i * dim + k, j * dim + l) = image(k, l) * double(n - 1);
    }
  return out;
}

Witness build_witness_via_map(const OrthogonalEmbedding& embedding) {
  // phi_matrix pairs the row index of r with the input ket, which is the
  // dual map Phi_R^# = Phi_{R^T}.
  const KossakowskiMap dual(embedding.n(), embedding.full_rotation().transpose());
  return Witness(choi_operator(dual), embedding.n());
}

WeylSet::WeylSet(int n) : n_(n) {
  if (n < 2) throw DomainError("WeylSet needs n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  const std::vector<Complex> omega_plus = maximally_entangled_vector(dim);
  const Matrix identity = Matrix::identity(dim);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Matrix u(dim, dim);
      for (int m = 1; m <= n; ++m) {
        const int shifted = (m - 1 + l) % n + 1;
        const double angle = 2.0 * std::numbers::pi * double(k) * double(m) / double(n);
        u(storage_index(m), storage_index(shifted)) = std::polar(1.0, angle);
      }
      const Matrix lifted = kron(identity, u);
      std::vector<Complex> v(dim * dim);
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) v[r] += lifted(r, c) * omega_plus[c];
      projectors_.push_back(outer(v, v));
      unitaries_.push_back(std::move(u));
    }
}

std::size_t WeylSet::slot(int k, int l) const {
  if (k < 0 || k >= n_ || l < 0 || l >= n_) throw DomainError("Weyl index out of range");
  return static_cast<std::size_t>(k * n_ + l);
}

const Matrix& WeylSet::unitary(int k, int l) const { return unitaries_[slot(k, l)]; }
const Matrix& WeylSet::projector(int k, int l) const { return projectors_[slot(k, l)]; }

WeylSet build_weyl_set(int n) { return WeylSet(n); }

Matrix twirl_operator(const Matrix& op, const WeylSet& weyl) {
  const auto dim = static_cast<std::size_t>(weyl.n() * weyl.n());
  if (op.rows() != dim || op.cols() != dim) {
    throw ShapeError("twirl: operator dimension does not match the Weyl set");
  }
  Matrix out(dim, dim);
  for (const Matrix& p : weyl.projectors()) {
    // P is Hermitian: Tr(W P) = Tr(P^dagger W).
    out += p * hilbert_schmidt(p, op);
  }
  return out;
}

Witness twirl(const Witness& w, const WeylSet& weyl) {
  if (w.n() != weyl.n()) throw ShapeError("twirl: witness and Weyl set disagree on n");
  return Witness(twirl_operator(w.op(), weyl), w.n());
}

}  // namespace ewcones

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

#ifndef EWCONES_GELLMANN_HPP_
#define EWCONES_GELLMANN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ewcones/matrix.hpp"

namespace ewcones {

/// Storage index of the ket |ket>, kets being numbered 1..n as in the
/// mathematical literature. Every 1-based -> 0-based conversion goes
/// through here.
constexpr std::size_t storage_index(int ket) noexcept {
  return static_cast<std::size_t>(ket - 1);
}

enum class ElementKind {
  identity,       // f_0 = I/sqrt(n)
  diagonal,       // d_l, l = 1..n-1
  symmetric,      // u_kl, k < l
  antisymmetric,  // v_kl, k < l
};

/// Label of a basis element. Kets k, l are 1-based; for `diagonal` only
/// `l` is meaningful, for `identity` neither.
struct BasisLabel {
  ElementKind kind = ElementKind::identity;
  int k = 0;
  int l = 0;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Generalized Gell-Mann basis of M_n(C), orthonormal in Tr(A^dagger B).
///
/// Ordering (frozen): f_0, d_1..d_{n-1}, u_kl for k<l lexicographic,
/// v_kl for k<l lexicographic. Hence positions 1..n-1 are exactly the
/// diagonal sector addressed by block rotations R = r (+) (-I).
class GellMannBasis {
 public:
  /// Throws DomainError for n < 2.
  explicit GellMannBasis(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Matrix& operator[](std::size_t alpha) const { return elements_[alpha]; }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }

  BasisLabel label(std::size_t alpha) const;
  /// Inverse of label(); throws DomainError for labels outside the basis.
  std::size_t position(BasisLabel label) const;

  /// <ket|d_l|ket>, both 1-based.
  double diagonal_entry(int l, int ket) const;

  /// c_alpha = Tr(f_alpha X). ShapeError unless X is n x n.
  std::vector<Complex> expand(const Matrix& x) const;
  /// sum_alpha c_alpha f_alpha.
  Matrix reconstruct(std::span<const Complex> coefficients) const;

 private:
  int n_;
  std::vector<Matrix> elements_;
};

GellMannBasis build_basis(int n);
std::vector<Complex> expand(const Matrix& x, const GellMannBasis& basis);

}  // namespace ewcones

#endif  // EWCONES_GELLMANN_HPP_

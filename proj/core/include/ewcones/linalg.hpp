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

#ifndef EWCONES_LINALG_HPP_
#define EWCONES_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "ewcones/matrix.hpp"

namespace ewcones {

/// Local dimensions of a bipartite space C^dA (x) C^dB.
struct BipartiteShape {
  std::size_t d_a = 0;
  std::size_t d_b = 0;

  std::size_t dimension() const noexcept { return d_a * d_b; }
  /// Row/column index of the product ket |i>|j> (0-based).
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * d_b + j; }
  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

/// Square shape d (x) d inferred from an operator of dimension d^2.
/// Throws ShapeError when the dimension is not a perfect square.
BipartiteShape square_shape_of(const Matrix& m);

/// Kronecker product; (A (x) B)(i*rB + k, j*cB + l) = A(i,j) B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);
std::vector<Complex> kron(std::span<const Complex> u, std::span<const Complex> v);

/// Transpose on the second tensor factor: each dB x dB block is transposed
/// in place. No complex conjugation.
Matrix partial_transpose(const Matrix& m, BipartiteShape shape);

struct EigenResult {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column k is the eigenvector of eigenvalues[k]; columns are orthonormal.
  Matrix eigenvectors;
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius mass drops
/// below 1e-13 ||M||_F, at most 100 sweeps.
/// Throws ValidationError if M is not Hermitian within `hermitian_tol`.
EigenResult hermitian_eig(const Matrix& m, double hermitian_tol = kReconstructionTol);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const Matrix& m,
                                          double hermitian_tol = kReconstructionTol);

double min_eigenvalue(const Matrix& m, double hermitian_tol = kReconstructionTol);

/// min eigenvalue >= -tol. Throws ValidationError for non-Hermitian input.
bool is_psd(const Matrix& m, double tol = kDecisionTol);

}  // namespace ewcones

#endif  // EWCONES_LINALG_HPP_

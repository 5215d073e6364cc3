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

#ifndef EWCONES_KOSSAKOWSKI_HPP_
#define EWCONES_KOSSAKOWSKI_HPP_

#include <cstddef>
#include <vector>

#include "ewcones/gellmann.hpp"
#include "ewcones/matrix.hpp"

namespace ewcones {

/// Z-X-Z Euler angles in radians.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

/// The SO(3) matrix of the given Euler angles, with rows
///   [ ca cg - cb sa sg,   cg sa + ca cb sg,  sb sg ]
///   [ -cb cg sa - ca sg,  ca cb cg - sa sg,  cg sb ]
///   [ sa sb,             -ca sb,             cb    ]
RealMatrix euler_rotation(const EulerAngles& angles);

/// [[cos a, -sin a], [sin a, cos a]].
RealMatrix so2_rotation(double angle);

enum class Parity { proper, improper };

/// A rotation R = r (+) (-I_{n(n-1)}) of R^{n^2-1}, where r acts on the
/// diagonal Gell-Mann sector d_1..d_{n-1}.
class OrthogonalEmbedding {
 public:
  /// `block` must be (n-1)x(n-1) orthogonal within 1e-12 (DomainError
  /// otherwise). Parity is read off det(block).
  explicit OrthogonalEmbedding(RealMatrix block);

  /// Uses r itself for `proper` and -r for `improper`. r is expected to lie
  /// in SO(n-1); for odd n-1 the improper block then has det -1.
  static OrthogonalEmbedding from_rotation(const RealMatrix& rotation, Parity parity);
  static OrthogonalEmbedding from_euler(const EulerAngles& angles, Parity parity);

  int n() const noexcept { return n_; }
  const RealMatrix& block() const noexcept { return block_; }
  Parity parity() const noexcept { return parity_; }

  /// The full (n^2-1)x(n^2-1) rotation in Gell-Mann order.
  RealMatrix full_rotation() const;

 private:
  int n_;
  RealMatrix block_;
  Parity parity_;
};

/// Phi_R(X) = I Tr X / n + 1/(n-1) sum_{a,b>=1} f_a R_ab Tr(f_b X).
class KossakowskiMap {
 public:
  /// `rotation` must be (n^2-1)x(n^2-1) orthogonal within 1e-12.
  KossakowskiMap(int n, RealMatrix rotation);
  explicit KossakowskiMap(const OrthogonalEmbedding& embedding);

  int n() const noexcept { return basis_.n(); }
  const RealMatrix& rotation() const noexcept { return rotation_; }
  const GellMannBasis& basis() const noexcept { return basis_; }

  Matrix apply(const Matrix& x) const;
  /// The dual map: R_ab replaced by R_ba.
  Matrix apply_dual(const Matrix& y) const;

 private:
  Matrix apply_with(const Matrix& x, bool transposed) const;

  RealMatrix rotation_;
  GellMannBasis basis_;
};

Matrix apply_map(const KossakowskiMap& map, const Matrix& x);

/// Doubly stochastic n x n matrix.
class StochasticMatrix {
 public:
  /// Validates: entries >= -1e-12, row and column sums 1 within 1e-10.
  explicit StochasticMatrix(RealMatrix values);

  std::size_t n() const noexcept { return values_.rows(); }
  const RealMatrix& values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

 private:
  RealMatrix values_;
};

/// Phi_ij = 1/n + 1/(n-1) sum_{k,l} <i|d_k|i> r_kl <j|d_l|j>.
/// This is the reference definition; closed forms are checked against it.
StochasticMatrix phi_matrix(const OrthogonalEmbedding& embedding);

/// Operator on C^n (x) C^n of the form
///   W = sum_ij |i><j| (x) W_ij,  W_ij = -|i><j| (i != j),
///   W_ii = (n-1) sum_j Phi_ij |j><j|.
class Witness {
 public:
  /// Validates Hermiticity and the block pattern above within `tol`.
  Witness(Matrix op, int n, double tol = kReconstructionTol);

  const Matrix& op() const noexcept { return op_; }
  int n() const noexcept { return n_; }

  /// Recovers Phi_ij = W[(i,j),(i,j)] / (n-1).
  RealMatrix stochastic_part() const;

 private:
  Matrix op_;
  int n_;
};

Witness witness_from_stochastic(const StochasticMatrix& phi);

/// Block assembly from phi_matrix().
Witness build_witness(const OrthogonalEmbedding& embedding);

/// n(n-1) (id (x) Phi) P+_n, for any orthogonal R.
Matrix choi_operator(const KossakowskiMap& map);

/// build_witness() through the map itself, n(n-1)(id (x) Phi_R^#)P+_n.
/// phi_matrix() reads r with its row index on the input ket, so the block
/// formula coincides with the Choi operator of the dual map.
Witness build_witness_via_map(const OrthogonalEmbedding& embedding);

/// The unit vector (1/sqrt n) sum_i |ii>.
std::vector<Complex> maximally_entangled_vector(std::size_t n);

/// Weyl unitaries U_kl = sum_m w^{km} |m><m (+) l| with w = exp(2 pi i/n),
/// kets m = 1..n and (+) addition mod n. Index k*n + l, k,l in 0..n-1.
class WeylSet {
 public:
  explicit WeylSet(int n);

  int n() const noexcept { return n_; }
  const Matrix& unitary(int k, int l) const;
  /// (I (x) U_kl) P+_n (I (x) U_kl)^dagger.
  const Matrix& projector(int k, int l) const;
  const std::vector<Matrix>& projectors() const noexcept { return projectors_; }

 private:
  std::size_t slot(int k, int l) const;

  int n_;
  std::vector<Matrix> unitaries_;
  std::vector<Matrix> projectors_;
};

WeylSet build_weyl_set(int n);

/// sum_kl Tr(W P_kl) P_kl for an arbitrary operator.
Matrix twirl_operator(const Matrix& op, const WeylSet& weyl);
Witness twirl(const Witness& w, const WeylSet& weyl);

}  // namespace ewcones

#endif  // EWCONES_KOSSAKOWSKI_HPP_

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

#ifndef EWCONES_MATRIX_HPP_
#define EWCONES_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ewcones {

using Complex = std::complex<double>;

/// Default slack for yes/no predicates (PSD, membership, verdicts).
inline constexpr double kDecisionTol = 1e-9;
/// Default slack for structural identities (Hermiticity, reconstruction).
inline constexpr double kReconstructionTol = 1e-12;

/// Dense row-major matrix. Value type; all operations return new matrices.
template <typename Scalar>
class BasicMatrix {
 public:
  using value_type = Scalar;

  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar{}) {}
  BasicMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);
  /// Row-wise literal, e.g. `RealMatrix{{1, 0}, {0, 1}}`.
  BasicMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static BasicMatrix identity(std::size_t n);
  static BasicMatrix zeros(std::size_t rows, std::size_t cols) {
    return BasicMatrix(rows, cols);
  }
  static BasicMatrix diagonal(std::span<const Scalar> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Scalar> data() const noexcept { return data_; }
  std::span<Scalar> data() noexcept { return data_; }

  BasicMatrix transpose() const;
  /// Conjugate transpose; equals transpose() for real scalars.
  BasicMatrix adjoint() const;
  Scalar trace() const;
  double frobenius_norm() const;
  /// Largest |M(r,c)|.
  double max_abs() const;

  BasicMatrix& operator+=(const BasicMatrix& other);
  BasicMatrix& operator-=(const BasicMatrix& other);
  BasicMatrix& operator*=(Scalar s);

  friend BasicMatrix operator+(BasicMatrix lhs, const BasicMatrix& rhs) {
    return lhs += rhs;
  }
  friend BasicMatrix operator-(BasicMatrix lhs, const BasicMatrix& rhs) {
    return lhs -= rhs;
  }
  friend BasicMatrix operator*(BasicMatrix m, Scalar s) { return m *= s; }
  friend BasicMatrix operator*(Scalar s, BasicMatrix m) { return m *= s; }
  friend BasicMatrix operator-(BasicMatrix m) { return m *= Scalar{-1}; }
  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using Matrix = BasicMatrix<Complex>;
using RealMatrix = BasicMatrix<double>;

extern template class BasicMatrix<double>;
extern template class BasicMatrix<Complex>;

/// Matrix product; throws ShapeError on inner-dimension mismatch.
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
RealMatrix operator*(const RealMatrix& lhs, const RealMatrix& rhs);

Matrix to_complex(const RealMatrix& m);
RealMatrix real_part(const Matrix& m);

/// Tr(A^dagger B).
Complex hilbert_schmidt(const Matrix& a, const Matrix& b);

/// Frobenius norm of a - b; ShapeError on mismatch.
double distance(const Matrix& a, const Matrix& b);
double distance(const RealMatrix& a, const RealMatrix& b);

bool is_hermitian(const Matrix& m, double tol = kReconstructionTol);

/// Outer product |u><v|.
Matrix outer(std::span<const Complex> u, std::span<const Complex> v);

/// Standard basis vector |index> of dimension dim.
std::vector<Complex> basis_ket(std::size_t dim, std::size_t index);

double determinant(const RealMatrix& m);
/// max |M^T M - I|; ShapeError unless square.
double orthogonality_defect(const RealMatrix& m);

}  // namespace ewcones

#endif  // EWCONES_MATRIX_HPP_

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

#include "ewcones/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "ewcones/error.hpp"

namespace ewcones {
namespace {

template <typename Scalar>
Scalar conjugate(Scalar s) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return std::conj(s);
  } else {
    return s;
  }
}

template <typename Scalar>
void require_same_shape(const BasicMatrix<Scalar>& a, const BasicMatrix<Scalar>& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

template <typename Scalar>
BasicMatrix<Scalar> multiply(const BasicMatrix<Scalar>& a,
                             const BasicMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: inner dimensions " +
                     std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " differ");
  }
  BasicMatrix<Scalar> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == Scalar{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

}  // namespace

template <typename Scalar>
BasicMatrix<Scalar>::BasicMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("matrix: " + std::to_string(data_.size()) +
                     " entries supplied for a " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " matrix");
  }
}

template <typename Scalar>
BasicMatrix<Scalar>::BasicMatrix(
    std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("matrix literal: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

template <typename Scalar>
BasicMatrix<Scalar> BasicMatrix<Scalar>::identity(std::size_t n) {
  BasicMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
  return m;
}

template <typename Scalar>
BasicMatrix<Scalar> BasicMatrix<Scalar>::diagonal(std::span<const Scalar> values) {
  BasicMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

template <typename Scalar>
BasicMatrix<Scalar> BasicMatrix<Scalar>::transpose() const {
  BasicMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

template <typename Scalar>
BasicMatrix<Scalar> BasicMatrix<Scalar>::adjoint() const {
  BasicMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conjugate((*this)(r, c));
  return out;
}

template <typename Scalar>
Scalar BasicMatrix<Scalar>::trace() const {
  if (!is_square()) throw ShapeError("trace of a non-square matrix");
  Scalar t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

template <typename Scalar>
double BasicMatrix<Scalar>::frobenius_norm() const {
  double acc = 0.0;
  for (const Scalar& x : data_) acc += std::norm(x);
  return std::sqrt(acc);
}

template <typename Scalar>
double BasicMatrix<Scalar>::max_abs() const {
  double m = 0.0;
  for (const Scalar& x : data_) m = std::max(m, static_cast<double>(std::abs(x)));
  return m;
}

template <typename Scalar>
BasicMatrix<Scalar>& BasicMatrix<Scalar>::operator+=(const BasicMatrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

template <typename Scalar>
BasicMatrix<Scalar>& BasicMatrix<Scalar>::operator-=(const BasicMatrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

template <typename Scalar>
BasicMatrix<Scalar>& BasicMatrix<Scalar>::operator*=(Scalar s) {
  for (Scalar& x : data_) x *= s;
  return *this;
}

template class BasicMatrix<double>;
template class BasicMatrix<Complex>;

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return multiply(lhs, rhs); }
RealMatrix operator*(const RealMatrix& lhs, const RealMatrix& rhs) {
  return multiply(lhs, rhs);
}

Matrix to_complex(const RealMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

RealMatrix real_part(const Matrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).real();
  return out;
}

Complex hilbert_schmidt(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hilbert_schmidt");
  Complex acc{};
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) acc += std::conj(da[i]) * db[i];
  return acc;
}

double distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }
double distance(const RealMatrix& a, const RealMatrix& b) {
  return (a - b).frobenius_norm();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

Matrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  Matrix out(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out(r, c) = u[r] * std::conj(v[c]);
  return out;
}

std::vector<Complex> basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("basis_ket: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return v;
}

double determinant(const RealMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  // Gaussian elimination with partial pivoting on a copy.
  RealMatrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

double orthogonality_defect(const RealMatrix& m) {
  if (!m.is_square()) throw ShapeError("orthogonality check of a non-square matrix");
  return (m.transpose() * m - RealMatrix::identity(m.rows())).max_abs();
}

}  // namespace ewcones

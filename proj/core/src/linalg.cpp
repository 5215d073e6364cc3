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

#include "ewcones/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ewcones/error.hpp"
#include "format.hpp"

namespace ewcones {
namespace {

constexpr double kJacobiRelativeTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) acc += std::norm(a(r, c));
  return std::sqrt(acc);
}

// Zeroes a(p,q) with the unitary J acting on columns p,q:
//   J(p,p) = c, J(p,q) = s e^{i phi}, J(q,p) = -s e^{-i phi}, J(q,q) = c,
// where e^{i phi} is the phase of a(p,q). Updates a <- J^dagger a J, v <- v J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;
  const Complex phase = apq / magnitude;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex jpq = s * phase;
  const Complex jqp = -s * std::conj(phase);
  const std::size_t n = a.rows();

  // a <- a J (columns p, q).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  // a <- J^dagger a (rows p, q).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

}  // namespace

BipartiteShape square_shape_of(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("bipartite operator must be square");
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(m.rows()))));
  if (d * d != m.rows()) {
    throw ShapeError("operator dimension " + std::to_string(m.rows()) +
                     " is not a perfect square");
  }
  return {d, d};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

std::vector<Complex> kron(std::span<const Complex> u, std::span<const Complex> v) {
  std::vector<Complex> out;
  out.reserve(u.size() * v.size());
  for (const Complex& x : u)
    for (const Complex& y : v) out.push_back(x * y);
  return out;
}

Matrix partial_transpose(const Matrix& m, BipartiteShape shape) {
  if (!m.is_square() || m.rows() != shape.dimension()) {
    throw ShapeError("partial_transpose: operator of dimension " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " does not match shape " + std::to_string(shape.d_a) + "x" +
                     std::to_string(shape.d_b));
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < shape.d_a; ++i)
    for (std::size_t j = 0; j < shape.d_a; ++j)
      for (std::size_t k = 0; k < shape.d_b; ++k)
        for (std::size_t l = 0; l < shape.d_b; ++l)
          out(shape.index(i, k), shape.index(j, l)) = m(shape.index(i, l), shape.index(j, k));
  return out;
}

EigenResult hermitian_eig(const Matrix& m, double hermitian_tol) {
  if (!m.is_square()) throw ShapeError("hermitian_eig: matrix is not square");
  if (!is_hermitian(m, hermitian_tol)) {
    throw ValidationError("hermitian_eig: matrix is not Hermitian within " +
                          detail::format_number(hermitian_tol));
  }
  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part so rounding asymmetry does not leak in.
  Matrix a = (m + m.adjoint()) * Complex{0.5};
  Matrix v = Matrix::identity(n);
  const double threshold = kJacobiRelativeTol * a.frobenius_norm();

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenResult result;
  result.eigenvalues.reserve(n);
  result.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues.push_back(a(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r) result.eigenvectors(r, k) = v(r, order[k]);
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m, double hermitian_tol) {
  return hermitian_eig(m, hermitian_tol).eigenvalues;
}

double min_eigenvalue(const Matrix& m, double hermitian_tol) {
  const auto values = hermitian_eigenvalues(m, hermitian_tol);
  if (values.empty()) throw ShapeError("min_eigenvalue of an empty matrix");
  return values.front();
}

bool is_psd(const Matrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

}  // namespace ewcones

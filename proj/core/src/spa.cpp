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

#include "ewcones/spa.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ewcones/error.hpp"
#include "ewcones/linalg.hpp"
#include "format.hpp"

namespace ewcones {
namespace {

constexpr std::size_t kN = 4;
constexpr BipartiteShape kShape{kN, kN};
constexpr double kSpaTol = 1e-10;

std::size_t ket(int i, int j) { return kShape.index(storage_index(i), storage_index(j)); }

// 1-based ket shifted cyclically by k.
int shifted(int i, int k) { return (i - 1 + k) % 4 + 1; }

}  // namespace

Matrix spa_mix(const Matrix& w, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("spa_mix: p must lie in [0,1], got " + detail::format_number(p));
  }
  if (!w.is_square()) throw ShapeError("spa_mix: operator is not square");
  const double trace = w.trace().real();
  if (!(trace > 0.0)) throw ValidationError("spa_mix: Tr W must be positive");
  const auto dim = static_cast<double>(w.rows());
  return w * Complex{(1.0 - p) / trace} + Matrix::identity(w.rows()) * Complex{p / dim};
}

Matrix spa_mix(const Witness& w, double p) { return spa_mix(w.op(), p); }

double critical_p(const Matrix& w) {
  const double trace = w.trace().real();
  if (!(trace > 0.0)) throw ValidationError("critical_p: Tr W must be positive");
  const double lowest = min_eigenvalue(w) / trace;
  if (lowest >= 0.0) return 0.0;
  return -lowest / (1.0 / double(w.rows()) - lowest);
}

double critical_p(const Witness& w) { return critical_p(w.op()); }

double critical_p_bisection(const Matrix& w, int iterations) {
  double lo = 0.0, hi = 1.0;
  if (min_eigenvalue(spa_mix(w, 0.0)) >= 0.0) return 0.0;
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (min_eigenvalue(spa_mix(w, mid)) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double critical_p_closed_form(double a) { return 4.0 * (3.0 - a) / (15.0 - 4.0 * a); }

double printed_critical_p(double a) { return 4.0 * (a - 3.0) / (3.0 + 4.0 * (a - 3.0)); }

std::vector<Erratum> spa_errata() {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {
      Erratum{"spa.critical_p", "critical mixing parameter p* (values at a = 1)",
              "4(a-3)/(3+4(a-3))", "4(3-a)/(3+4(3-a)) = 4(3-a)/(15-4a)",
              printed_critical_p(1.0), critical_p_closed_form(1.0),
              "lowest eigenvalue of W[a,b,c,d]/12 is (a-3)/12; the printed form "
              "gives p* = " + detail::format_number(printed_critical_p(1.0)) + " > 1 at a = 1"},
      Erratum{"spa.normalization", "prefactor of the separable decomposition of W(p*)",
              "1/(4[3+4(a-3)])", "1/(4[3+4(3-a)]) = 1/(4(15-4a))", nan, nan,
              "W + (3-a) I = sum_{i<j} sigma_ij + sigma_d entrywise, and "
              "W(p*) = (1-p*)/12 (W + (3-a) I)"},
  };
}

std::array<double, 3> spa3_check(const WitnessParams& p) {
  return {2 * p.b + p.c + p.d - 1.0, 2 * p.c + p.b + p.d - 1.0, 2 * p.d + p.b + p.c - 1.0};
}

Matrix sigma_pair(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
    throw DomainError("sigma_pair: need distinct kets in 1..4");
  }
  Matrix s(kN * kN, kN * kN);
  s(ket(i, j), ket(i, j)) = 1.0;
  s(ket(j, i), ket(j, i)) = 1.0;
  s(ket(i, i), ket(i, i)) = 1.0;
  s(ket(j, j), ket(j, j)) = 1.0;
  s(ket(i, i), ket(j, j)) = -1.0;
  s(ket(j, j), ket(i, i)) = -1.0;
  return s;
}

Matrix sigma_diag(const WitnessParams& p) {
  const auto slack = spa3_check(p);
  Matrix s(kN * kN, kN * kN);
  for (int i = 1; i <= 4; ++i)
    for (int k = 1; k <= 3; ++k) {
      const std::size_t idx = ket(i, shifted(i, k));
      s(idx, idx) = slack[static_cast<std::size_t>(k - 1)];
    }
  return s;
}

Matrix restrict_to_pair(const Matrix& op, int i, int j) {
  if (op.rows() != kN * kN || op.cols() != kN * kN) {
    throw ShapeError("restrict_to_pair: expected a 16x16 operator");
  }
  const std::array<int, 2> kets{i, j};
  Matrix out(4, 4);
  for (std::size_t r1 = 0; r1 < 2; ++r1)
    for (std::size_t r2 = 0; r2 < 2; ++r2)
      for (std::size_t c1 = 0; c1 < 2; ++c1)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          out(r1 * 2 + r2, c1 * 2 + c2) =
              op(ket(kets[r1], kets[r2]), ket(kets[c1], kets[c2]));
  return out;
}

SpaResult spa_decompose(const WitnessParams& p) {
  const Witness w = witness_from_params(p);
  SpaResult r;
  r.p_star = critical_p(w);
  r.mixed_operator = spa_mix(w, r.p_star);
  r.mixed_min_eigenvalue = min_eigenvalue(r.mixed_operator);
  r.normalization = 1.0 / (4.0 * (15.0 - 4.0 * p.a));
  r.slacks = spa3_check(p);
  r.spa3_satisfied = true;
  for (double s : r.slacks) r.spa3_satisfied = r.spa3_satisfied && s >= -kSpaTol;

  Matrix total(kN * kN, kN * kN);
  bool pairs_ok = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      SigmaPair sp{i, j, sigma_pair(i, j), false};
      const Matrix block = restrict_to_pair(sp.op, i, j);
      const bool contained =
          std::abs(block.frobenius_norm() - sp.op.frobenius_norm()) <= kSpaTol;
      sp.separable = contained && min_eigenvalue(block) >= -kSpaTol &&
                     min_eigenvalue(partial_transpose(block, {2, 2})) >= -kSpaTol;
      pairs_ok = pairs_ok && sp.separable;
      total += sp.op;
      r.sigma_pairs.push_back(std::move(sp));
    }
  r.sigma_diag = sigma_diag(p);
  total += r.sigma_diag;
  r.reconstruction_residual = distance(total * Complex{r.normalization}, r.mixed_operator);
  r.separable = r.spa3_satisfied && pairs_ok && r.reconstruction_residual <= kSpaTol;
  return r;
}

}  // namespace ewcones

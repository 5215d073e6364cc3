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

#ifndef EWCONES_SPA_HPP_
#define EWCONES_SPA_HPP_

#include <array>
#include <utility>
#include <vector>

#include "ewcones/errata.hpp"
#include "ewcones/kossakowski.hpp"
#include "ewcones/matrix.hpp"
#include "ewcones/so3_family.hpp"

namespace ewcones {

/// (1-p) W / Tr W + (p / D) I_D. Throws DomainError for p outside [0,1]
/// and ValidationError when Tr W is not positive.
Matrix spa_mix(const Matrix& w, double p);
Matrix spa_mix(const Witness& w, double p);

/// Smallest p with spa_mix(W, p) >= 0, from the lowest eigenvalue l of
/// W / Tr W: p* = -l / (1/D - l), or 0 when W >= 0.
double critical_p(const Matrix& w);
double critical_p(const Witness& w);

/// Independent route: bisection on the sign of the lowest eigenvalue of
/// spa_mix(W, p).
double critical_p_bisection(const Matrix& w, int iterations = 80);

/// 4(3-a) / (15-4a), the family closed form.
double critical_p_closed_form(double a);
/// The formula as typeset, 4(a-3) / (3+4(a-3)); exceeds 1 for a < 9/4.
double printed_critical_p(double a);

/// The two corrected SPA formulas, for the errata ledger.
std::vector<Erratum> spa_errata();

/// (2b+c+d-1, 2c+b+d-1, 2d+b+c-1).
std::array<double, 3> spa3_check(const WitnessParams& p);

/// sigma_ij = |ij><ij| + |ji><ji| + |ii><ii| + |jj><jj| - |ii><jj| - |jj><ii|
/// with 1-based kets i != j.
Matrix sigma_pair(int i, int j);
/// sum_i s1 |i,i+1><i,i+1| + s2 |i,i+2><i,i+2| + s3 |i,i+3><i,i+3| with
/// (s1,s2,s3) = spa3_check(p).
Matrix sigma_diag(const WitnessParams& p);

/// The 4x4 block of a 16x16 operator on span{|i>,|j>} (x) span{|i>,|j>}.
Matrix restrict_to_pair(const Matrix& op, int i, int j);

struct SigmaPair {
  int i = 1;
  int j = 2;
  Matrix op;
  /// PSD and PPT as a 2 (x) 2 operator, and no weight outside that block.
  bool separable = false;
};

struct SpaResult {
  double p_star = 0.0;
  Matrix mixed_operator;
  std::vector<SigmaPair> sigma_pairs;  // (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
  Matrix sigma_diag;
  /// 1 / (4 (15 - 4a)).
  double normalization = 0.0;
  std::array<double, 3> slacks{};
  bool spa3_satisfied = false;
  /// ||normalization (sum sigma_ij + sigma_d) - mixed_operator||_F.
  double reconstruction_residual = 0.0;
  double mixed_min_eigenvalue = 0.0;
  /// spa3_satisfied, every pair separable, reconstruction within 1e-10.
  bool separable = false;
};

/// SPA of W[a,b,c,d] at p* with its separable decomposition. A violated
/// spa-3 condition is reported through the flags, never thrown.
SpaResult spa_decompose(const WitnessParams& p);

}  // namespace ewcones

#endif  // EWCONES_SPA_HPP_

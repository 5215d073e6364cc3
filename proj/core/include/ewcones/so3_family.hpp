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

#ifndef EWCONES_SO3_FAMILY_HPP_
#define EWCONES_SO3_FAMILY_HPP_

#include <array>
#include <optional>

#include "ewcones/kossakowski.hpp"
#include "ewcones/matrix.hpp"

namespace ewcones {

/// Where a parameter tuple came from.
struct Provenance {
  EulerAngles angles;
  Parity parity = Parity::proper;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// (a,b,c,d) naming the circulant witness W[a,b,c,d]; a+b+c+d = 3.
///
/// Row i of 3*Phi holds a on the diagonal and b, c, d at cyclic column
/// offsets +1, +2, +3.
struct WitnessParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  std::optional<Provenance> provenance;

  double sum() const noexcept { return a + b + c + d; }
  /// Value at cyclic offset k = 0..3.
  double at_offset(int k) const;
  std::array<double, 4> values() const noexcept { return {a, b, c, d}; }
};

/// Throws ValidationError if |a+b+c+d-3| > tol (message names the residual)
/// and DomainError if any parameter is below -tol.
void validate(const WitnessParams& p, double tol = kDecisionTol);

/// Validating factory.
WitnessParams make_params(double a, double b, double c, double d,
                          double tol = kDecisionTol);

/// Closed-form trigonometric parameters of the twirled witness. The
/// improper branch corresponds to the embedding of -r(angles).
WitnessParams abcd_from_euler(const EulerAngles& angles, Parity parity);

/// Averages (n-1) Phi_{i,i+k} over i for a 4x4-family witness; exact for
/// twirled witnesses, a projection otherwise.
WitnessParams circulant_params(const Witness& w);

/// circulant(a,b,c,d) / 3.
StochasticMatrix circulant_stochastic(const WitnessParams& p);

/// W[a,b,c,d]; validates the parameters first.
Witness witness_from_params(const WitnessParams& p, double tol = kDecisionTol);

/// The 16 entries a_1..d_4 of the un-twirled 3*Phi:
///   row i: a_i at column i, b_i at i+1, c_i at i+2, d_i at i+3 (cyclic).
struct AppendixEntries {
  std::array<double, 4> a{};
  std::array<double, 4> b{};
  std::array<double, 4> c{};
  std::array<double, 4> d{};

  /// The 4x4 matrix 3*Phi in the layout above.
  RealMatrix assembled() const;
  /// (1/4) sum of each letter.
  WitnessParams averaged() const;
};

/// n = 3 family: a = 2(1+cos)/3, b,c = 2(1 - cos/2 -+ sqrt(3) sin/2)/3.
struct N3Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double angle = 0.0;
};

N3Params n3_abc(double angle);

}  // namespace ewcones

#endif  // EWCONES_SO3_FAMILY_HPP_

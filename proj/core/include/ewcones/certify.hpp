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

#ifndef EWCONES_CERTIFY_HPP_
#define EWCONES_CERTIFY_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ewcones/kossakowski.hpp"
#include "ewcones/matrix.hpp"
#include "ewcones/random.hpp"
#include "ewcones/so3_family.hpp"

namespace ewcones {

/// Unnormalized PPT state on C^4 (x) C^4:
///   rho_eps = sum_i [ |ii><ii| + eps |i,i+1><i,i+1| + |i,i+2><i,i+2|
///                     + eps^-1 |i,i+3><i,i+3| ] + sum_{i != j} |ii><jj|
struct PptProbe {
  double epsilon = 1.0;
  Matrix state;
};

/// Builds rho_eps and verifies PSD and PPT within 1e-10 (ValidationError
/// if either fails). DomainError for epsilon <= 0 or non-finite.
PptProbe probe_state(double epsilon);

/// Tr(W rho_eps).
double pairing(const Witness& w, const PptProbe& probe);

/// 4 [d/eps + b eps - (b+d)], the value of pairing() on W[a,b,c,d].
double pairing_closed_form(const WitnessParams& p, double epsilon);

enum class Verdict { decomposable, indecomposable };

struct IndecomposabilityEvidence {
  double epsilon = 0.0;
  double pairing_value = 0.0;
  /// Open interval of eps with negative pairing; upper end is +inf when b = 0.
  double epsilon_minus = 0.0;
  double epsilon_plus = 0.0;
  /// "geometric-mean", "interval-midpoint" or "power-of-two-scan".
  std::string epsilon_rule;
  double probe_min_eigenvalue = 0.0;
  double probe_pt_min_eigenvalue = 0.0;
};

/// W = P + Q^Gamma with P, Q >= 0.
struct DecomposabilityEvidence {
  Matrix p;
  Matrix q;
  /// Numerical spectrum of the circulant A, ascending.
  std::array<double, 4> a_eigenvalues{};
  /// {0, 4(1-b), 2(2-b-c), 2(2-b-c)}, ascending.
  std::array<double, 4> a_eigenvalues_expected{};
  double p_min_eigenvalue = 0.0;
  double q_min_eigenvalue = 0.0;
  /// ||W - P - Q^Gamma||_F.
  double reconstruction_residual = 0.0;
};

struct Certificate {
  Verdict verdict = Verdict::decomposable;
  WitnessParams params;
  double tolerance = kDecisionTol;
  /// False when the parameters lie on neither cone; the certificate is
  /// still issued and a warning recorded.
  bool on_cone = true;
  std::vector<std::string> warnings;
  std::variant<IndecomposabilityEvidence, DecomposabilityEvidence> evidence;
};

/// Decides decomposability of W[a,b,c,d] and attaches evidence.
///   |b-d| > tol: indecomposable, probe at eps = sqrt(d/b) when b,d > 0,
///                the interval midpoint when d = 0, a power-of-two scan
///                when b = 0.
///   otherwise:   decomposable with P and Q built at b = d = (b+d)/2.
Certificate certify_decomposability(const WitnessParams& p, double tol = kDecisionTol);

/// Re-checks a certificate from scratch. Returns the failed checks; empty
/// means valid.
std::vector<std::string> check_certificate(const Certificate& cert);

/// Circulant 4x4 A = circ(a, b-1, c-1, b-1); P restricted to span{|ii>}.
RealMatrix circulant_a(const WitnessParams& p);
/// P[a,b,c,b] and Q[a,b,c,b] of the decomposition (uses p.b throughout).
Matrix decomposition_p(const WitnessParams& p);
Matrix decomposition_q(const WitnessParams& p);

struct SeesawOptions {
  int max_iterations = 500;
  double improvement_tol = 1e-12;
};

/// Numerical lower-envelope probe of min <psi (x) phi|W|psi (x) phi> over
/// unit product vectors, by alternating minimization from `restarts`
/// seeded starting points. This is numerical evidence, not a proof.
/// Restart r uses SplitMix64::stream(seed, r), so adding restarts never
/// increases the result.
double block_positivity_min(const Matrix& w, int restarts, std::uint64_t seed,
                            SeesawOptions options = {});
double block_positivity_min(const Witness& w, int restarts, std::uint64_t seed,
                            SeesawOptions options = {});

/// Tr(W rho). Throws ValidationError (naming the eigenvalue) unless rho is
/// Hermitian and PSD within `tol`.
double detect(const Matrix& w, const Matrix& rho, double tol = kDecisionTol);
double detect(const Witness& w, const Matrix& rho, double tol = kDecisionTol);

}  // namespace ewcones

#endif  // EWCONES_CERTIFY_HPP_

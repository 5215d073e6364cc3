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

#include "ewcones/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ewcones/cone_geometry.hpp"
#include "ewcones/error.hpp"
#include "ewcones/linalg.hpp"
#include "format.hpp"

namespace ewcones {
namespace {

constexpr std::size_t kN = 4;
constexpr double kProbeTol = 1e-10;
constexpr double kCertificateTol = 1e-10;
constexpr int kScanMinExponent = -20;
constexpr int kScanMaxExponent = 20;

constexpr BipartiteShape kShape{kN, kN};

// |i, i+k> for 0-based i, cyclic k.
std::size_t ket(std::size_t i, std::size_t k) { return kShape.index(i, (i + k) % kN); }

bool in_scan_range(double eps) {
  return eps >= std::ldexp(1.0, kScanMinExponent) && eps <= std::ldexp(1.0, kScanMaxExponent);
}

std::vector<Complex> random_unit_vector(std::size_t dim, SplitMix64& rng) {
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (Complex& x : v) {
    x = Complex{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
    norm += std::norm(x);
  }
  if (norm == 0.0) v[0] = 1.0, norm = 1.0;
  for (Complex& x : v) x /= std::sqrt(norm);
  return v;
}

// <x| (x) I . W . |x> (x) I  (first factor contracted) or the mirror.
Matrix contract(const Matrix& w, BipartiteShape shape, std::span<const Complex> x,
                bool first_factor) {
  const std::size_t out_dim = first_factor ? shape.d_b : shape.d_a;
  const std::size_t in_dim = first_factor ? shape.d_a : shape.d_b;
  Matrix m(out_dim, out_dim);
  for (std::size_t r = 0; r < out_dim; ++r)
    for (std::size_t c = 0; c < out_dim; ++c) {
      Complex acc{};
      for (std::size_t i = 0; i < in_dim; ++i)
        for (std::size_t j = 0; j < in_dim; ++j) {
          const Complex wv = first_factor ? w(shape.index(i, r), shape.index(j, c))
                                          : w(shape.index(r, i), shape.index(c, j));
          acc += std::conj(x[i]) * wv * x[j];
        }
      m(r, c) = acc;
    }
  // Clean the rounding asymmetry so the eigensolver's check passes.
  return (m + m.adjoint()) * Complex{0.5};
}

struct BottomPair {
  double value;
  std::vector<Complex> vector;
};

BottomPair bottom_eigenpair(const Matrix& m) {
  const EigenResult eig = hermitian_eig(m);
  BottomPair out{eig.eigenvalues.front(), std::vector<Complex>(m.rows())};
  for (std::size_t r = 0; r < m.rows(); ++r) out.vector[r] = eig.eigenvectors(r, 0);
  return out;
}

double seesaw_restart(const Matrix& w, BipartiteShape shape, SplitMix64 rng,
                      const SeesawOptions& options) {
  std::vector<Complex> psi = random_unit_vector(shape.d_a, rng);
  double best = std::numeric_limits<double>::infinity();
  double previous = best;
  for (int it = 0; it < options.max_iterations; ++it) {
    const BottomPair phi = bottom_eigenpair(contract(w, shape, psi, true));
    const BottomPair next = bottom_eigenpair(contract(w, shape, phi.vector, false));
    psi = next.vector;
    best = std::min({best, phi.value, next.value});
    if (previous - next.value < options.improvement_tol) break;
    previous = next.value;
  }
  return best;
}

std::array<double, 4> sorted4(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PptProbe probe_state(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("probe_state: epsilon must be positive and finite");
  }
  Matrix rho(kN * kN, kN * kN);
  for (std::size_t i = 0; i < kN; ++i) {
    rho(ket(i, 1), ket(i, 1)) = epsilon;
    rho(ket(i, 2), ket(i, 2)) = 1.0;
    rho(ket(i, 3), ket(i, 3)) = 1.0 / epsilon;
    // |ii><ii| and |ii><jj| together: the all-ones block on span{|ii>}.
    for (std::size_t j = 0; j < kN; ++j) rho(ket(i, 0), ket(j, 0)) = 1.0;
  }
  if (min_eigenvalue(rho) < -kProbeTol) throw ValidationError("probe state is not PSD");
  if (min_eigenvalue(partial_transpose(rho, kShape)) < -kProbeTol) {
    throw ValidationError("probe state is not PPT");
  }
  return PptProbe{epsilon, std::move(rho)};
}

double pairing(const Witness& w, const PptProbe& probe) {
  // W is Hermitian, so Tr(W rho) = Tr(W^dagger rho).
  return hilbert_schmidt(w.op(), probe.state).real();
}

double pairing_closed_form(const WitnessParams& p, double epsilon) {
  return 4.0 * (p.d / epsilon + p.b * epsilon - (p.b + p.d));
}

RealMatrix circulant_a(const WitnessParams& p) {
  const std::array<double, 4> row{p.a, p.b - 1.0, p.c - 1.0, p.b - 1.0};
  RealMatrix a(kN, kN);
  for (std::size_t i = 0; i < kN; ++i)
    for (std::size_t k = 0; k < kN; ++k) a(i, (i + k) % kN) = row[k];
  return a;
}

Matrix decomposition_p(const WitnessParams& p) {
  const RealMatrix a = circulant_a(p);
  Matrix out(kN * kN, kN * kN);
  for (std::size_t i = 0; i < kN; ++i)
    for (std::size_t j = 0; j < kN; ++j) out(ket(i, 0), ket(j, 0)) = a(i, j);
  return out;
}

Matrix decomposition_q(const WitnessParams& p) {
  Matrix out(kN * kN, kN * kN);
  for (std::size_t i = 0; i < kN; ++i) {
    const std::size_t j1 = (i + 1) % kN, j2 = (i + 2) % kN, j3 = (i + 3) % kN;
    out(ket(i, 1), ket(i, 1)) += p.b;
    out(ket(i, 2), ket(i, 2)) += p.c;
    out(ket(i, 3), ket(i, 3)) += p.b;
    out(kShape.index(i, j1), kShape.index(j1, i)) -= p.b;
    out(kShape.index(i, j3), kShape.index(j3, i)) -= p.b;
    out(kShape.index(i, j2), kShape.index(j2, i)) -= p.c;
  }
  return out;
}

Certificate certify_decomposability(const WitnessParams& p, double tol) {
  validate(p, tol);
  Certificate cert;
  cert.params = p;
  cert.tolerance = tol;
  const ConeReport cones = cone_residuals(p, tol);
  cert.on_cone = cones.on_cone_i || cones.on_cone_ii;
  if (!cert.on_cone) {
    cert.warnings.push_back("parameters lie on neither cone (residuals " +
                            detail::format_number(cones.residual_i) + ", " +
                            detail::format_number(cones.residual_ii) + ")");
  }

  if (std::abs(p.b - p.d) > tol) {
    IndecomposabilityEvidence ev;
    if (p.b > 0.0) {
      const double spread = std::abs(p.b - p.d);
      ev.epsilon_minus = (p.b + p.d - spread) / (2.0 * p.b);
      ev.epsilon_plus = (p.b + p.d + spread) / (2.0 * p.b);
    } else {
      ev.epsilon_minus = 1.0;
      ev.epsilon_plus = std::numeric_limits<double>::infinity();
    }
    const double midpoint = 0.5 * (ev.epsilon_minus + ev.epsilon_plus);
    if (p.b > 0.0 && p.d > 0.0 && in_scan_range(std::sqrt(p.d / p.b))) {
      ev.epsilon = std::sqrt(p.d / p.b);
      ev.epsilon_rule = "geometric-mean";
    } else if (p.b > 0.0 && in_scan_range(midpoint)) {
      ev.epsilon = midpoint;
      ev.epsilon_rule = "interval-midpoint";
    } else {
      // Smallest power of two reaching half the best scanned pairing; the
      // extreme exponents would give a badly conditioned probe.
      double best = std::numeric_limits<double>::infinity();
      for (int k = kScanMinExponent; k <= kScanMaxExponent; ++k)
        best = std::min(best, pairing_closed_form(p, std::ldexp(1.0, k)));
      for (int k = kScanMinExponent; k <= kScanMaxExponent; ++k) {
        const double eps = std::ldexp(1.0, k);
        if (pairing_closed_form(p, eps) <= 0.5 * best) {
          ev.epsilon = eps;
          break;
        }
      }
      ev.epsilon_rule = "power-of-two-scan";
    }
    const PptProbe probe = probe_state(ev.epsilon);
    ev.pairing_value = pairing(witness_from_params(p, tol), probe);
    ev.probe_min_eigenvalue = min_eigenvalue(probe.state);
    ev.probe_pt_min_eigenvalue = min_eigenvalue(partial_transpose(probe.state, kShape));
    cert.verdict = Verdict::indecomposable;
    cert.evidence = std::move(ev);
    return cert;
  }

  WitnessParams symmetric = p;
  symmetric.b = symmetric.d = 0.5 * (p.b + p.d);
  DecomposabilityEvidence ev;
  ev.p = decomposition_p(symmetric);
  ev.q = decomposition_q(symmetric);
  const auto a_eigs = hermitian_eigenvalues(to_complex(circulant_a(symmetric)));
  std::copy(a_eigs.begin(), a_eigs.end(), ev.a_eigenvalues.begin());
  const double b = symmetric.b, c = symmetric.c;
  ev.a_eigenvalues_expected =
      sorted4({0.0, 4.0 * (1.0 - b), 2.0 * (2.0 - b - c), 2.0 * (2.0 - b - c)});
  ev.p_min_eigenvalue = min_eigenvalue(ev.p);
  ev.q_min_eigenvalue = min_eigenvalue(ev.q);
  const Matrix w = witness_from_params(p, tol).op();
  ev.reconstruction_residual = distance(w, ev.p + partial_transpose(ev.q, kShape));
  cert.verdict = Verdict::decomposable;
  cert.evidence = std::move(ev);
  return cert;
}

std::vector<std::string> check_certificate(const Certificate& cert) {
  std::vector<std::string> failures;
  const Witness w = witness_from_params(cert.params, cert.tolerance);
  const bool split = std::abs(cert.params.b - cert.params.d) > cert.tolerance;

  if (const auto* ev = std::get_if<IndecomposabilityEvidence>(&cert.evidence)) {
    if (cert.verdict != Verdict::indecomposable) failures.push_back("verdict/evidence mismatch");
    if (!split) failures.push_back("indecomposable verdict with b = d");
    PptProbe probe;
    try {
      probe = probe_state(ev->epsilon);
    } catch (const Error& e) {
      failures.push_back(std::string("probe rejected: ") + e.what());
      return failures;
    }
    const double value = pairing(w, probe);
    if (!(value < -kCertificateTol)) failures.push_back("pairing is not negative");
    if (std::abs(value - ev->pairing_value) > kCertificateTol) {
      failures.push_back("recorded pairing differs from recomputed value");
    }
  } else {
    const auto& dv = std::get<DecomposabilityEvidence>(cert.evidence);
    if (cert.verdict != Verdict::decomposable) failures.push_back("verdict/evidence mismatch");
    if (split) failures.push_back("decomposable verdict with b != d");
    if (min_eigenvalue(dv.p) < -kCertificateTol) failures.push_back("P is not PSD");
    if (min_eigenvalue(dv.q) < -kCertificateTol) failures.push_back("Q is not PSD");
    if (distance(w.op(), dv.p + partial_transpose(dv.q, kShape)) > kCertificateTol) {
      failures.push_back("W != P + Q^Gamma");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (std::abs(dv.a_eigenvalues[k] - dv.a_eigenvalues_expected[k]) > kCertificateTol) {
        failures.push_back("A spectrum differs from closed form");
        break;
      }
    }
  }
  return failures;
}

double block_positivity_min(const Matrix& w, int restarts, std::uint64_t seed,
                            SeesawOptions options) {
  if (restarts < 1) throw DomainError("block_positivity_min: restarts must be >= 1");
  const BipartiteShape shape = square_shape_of(w);
  if (!is_hermitian(w)) throw ValidationError("block_positivity_min: W is not Hermitian");
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    best = std::min(best, seesaw_restart(w, shape,
                                         SplitMix64::stream(seed, static_cast<std::uint64_t>(r)),
                                         options));
  }
  return best;
}

double block_positivity_min(const Witness& w, int restarts, std::uint64_t seed,
                            SeesawOptions options) {
  return block_positivity_min(w.op(), restarts, seed, options);
}

double detect(const Matrix& w, const Matrix& rho, double tol) {
  if (w.rows() != rho.rows() || w.cols() != rho.cols()) {
    throw ShapeError("detect: witness and state dimensions differ");
  }
  if (!is_hermitian(rho, tol)) throw ValidationError("detect: state is not Hermitian");
  const double lowest = min_eigenvalue(rho, tol);
  if (lowest < -tol) {
    throw ValidationError("detect: state is not PSD (eigenvalue " +
                          detail::format_number(lowest) + ")");
  }
  return hilbert_schmidt(w, rho).real();
}

double detect(const Witness& w, const Matrix& rho, double tol) {
  return detect(w.op(), rho, tol);
}

}  // namespace ewcones

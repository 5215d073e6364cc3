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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "catch_amalgamated.hpp"
#include "ewcones/certify.hpp"
#include "ewcones/cone_geometry.hpp"
#include "ewcones/error.hpp"
#include "ewcones/linalg.hpp"
#include "ewcones/random.hpp"
#include "ewcones/so3_family.hpp"
#include "test_support.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using namespace ewcones;

namespace {

const BipartiteShape kShape{4, 4};

const IndecomposabilityEvidence& indecomposable(const Certificate& c) {
  REQUIRE(c.verdict == Verdict::indecomposable);
  return std::get<IndecomposabilityEvidence>(c.evidence);
}

const DecomposabilityEvidence& decomposable(const Certificate& c) {
  REQUIRE(c.verdict == Verdict::decomposable);
  return std::get<DecomposabilityEvidence>(c.evidence);
}

// Uniform point on either cone surface via the generator parameterization.
WitnessParams random_cone_point(SplitMix64& rng) {
  const ConeId cone = rng.uniform() < 0.5 ? ConeId::I : ConeId::II;
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  const double s = rng.uniform();
  const Point3 v = cone_vertex(cone);
  const Point3 e = base_ellipse_point(cone, theta);
  const Point3 x{v[0] + s * (e[0] - v[0]), v[1] + s * (e[1] - v[1]), v[2] + s * (e[2] - v[2])};
  return WitnessParams{3.0 - x[0] - x[1] - x[2], x[0], x[1], x[2], {}};
}

}  // namespace

TEST_CASE("probe diagonal weights", "[probe]") {
  const PptProbe probe = probe_state(0.5);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(probe.state(kShape.index(i, i), kShape.index(i, i)) == Complex(1.0));
    CHECK(probe.state(kShape.index(i, (i + 1) % 4), kShape.index(i, (i + 1) % 4)) == Complex(0.5));
    CHECK(probe.state(kShape.index(i, (i + 2) % 4), kShape.index(i, (i + 2) % 4)) == Complex(1.0));
    CHECK(probe.state(kShape.index(i, (i + 3) % 4), kShape.index(i, (i + 3) % 4)) == Complex(2.0));
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) CHECK(probe.state(kShape.index(i, i), kShape.index(j, j)) == Complex(1.0));
  }
  CHECK(probe.epsilon == 0.5);
}

TEST_CASE("probes are PSD and PPT across scales", "[probe]") {
  for (double eps : {1.0, 0.5, 1e-3, 1e3, std::ldexp(1.0, -20), std::ldexp(1.0, 20)}) {
    const PptProbe probe = probe_state(eps);
    CHECK(min_eigenvalue(probe.state) >= -1e-10);
    CHECK(min_eigenvalue(partial_transpose(probe.state, kShape)) >= -1e-10);
  }
  CHECK_THROWS_AS(probe_state(0.0), DomainError);
  CHECK_THROWS_AS(probe_state(-1.0), DomainError);
  CHECK_THROWS_AS(probe_state(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(probe_state(std::nan("")), DomainError);
}

TEST_CASE("pairing values", "[pairing]") {
  const Witness choi = witness_from_params(make_params(1, 1, 1, 0));
  CHECK_THAT(pairing(choi, probe_state(0.5)), WithinAbs(-2.0, 1e-12));
  CHECK_THAT(pairing(choi, probe_state(1.0)), WithinAbs(0.0, 1e-12));
  const Witness reduction = witness_from_params(make_params(0, 1, 1, 1));
  CHECK_THAT(pairing(reduction, probe_state(2.0)), WithinAbs(2.0, 1e-12));
  CHECK_THAT(pairing_closed_form(make_params(1, 1, 1, 0), 0.5), WithinAbs(-2.0, 1e-15));
}

TEST_CASE("pairing matches its closed form", "[pairing][property]") {
  SplitMix64 rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    const WitnessParams p = random_cone_point(rng);
    const double eps = std::exp(4.0 * rng.uniform() - 2.0);
    const double direct = pairing(witness_from_params(p), probe_state(eps));
    CHECK_THAT(direct, WithinAbs(pairing_closed_form(p, eps), 1e-10));
    // Discriminant of the quadratic in eps.
    CHECK_THAT((p.b + p.d) * (p.b + p.d) - 4 * p.b * p.d,
               WithinAbs((p.b - p.d) * (p.b - p.d), 1e-14));
  }
}

TEST_CASE("point (i) is indecomposable on (0, 1)", "[certify]") {
  const Certificate cert = certify_decomposability(make_params(1, 1, 1, 0));
  const auto& ev = indecomposable(cert);
  CHECK(ev.epsilon_minus == 0.0);
  CHECK(ev.epsilon_plus == 1.0);
  CHECK(ev.epsilon == 0.5);
  CHECK(ev.epsilon_rule == "interval-midpoint");
  CHECK_THAT(ev.pairing_value, WithinAbs(-2.0, 1e-12));
  CHECK(ev.probe_min_eigenvalue >= -1e-10);
  CHECK(ev.probe_pt_min_eigenvalue >= -1e-10);
  CHECK(cert.on_cone);
  CHECK(cert.warnings.empty());
  CHECK(check_certificate(cert).empty());
}

TEST_CASE("b = 0 falls back to the power-of-two scan", "[certify]") {
  const Certificate cert = certify_decomposability(make_params(1, 0, 1, 1));
  const auto& ev = indecomposable(cert);
  CHECK(ev.epsilon_rule == "power-of-two-scan");
  CHECK(ev.epsilon_minus == 1.0);
  CHECK(std::isinf(ev.epsilon_plus));
  CHECK(ev.epsilon == 2.0);
  CHECK_THAT(ev.pairing_value, WithinAbs(-2.0, 1e-12));
  CHECK(check_certificate(cert).empty());
}

TEST_CASE("generic b != d uses the geometric mean", "[certify]") {
  const WitnessParams p = abcd_from_euler({0.3, 1.1, 2.0}, Parity::proper);
  REQUIRE(std::abs(p.b - p.d) > 1e-3);
  const Certificate cert = certify_decomposability(p);
  const auto& ev = indecomposable(cert);
  CHECK(ev.epsilon_rule == "geometric-mean");
  CHECK_THAT(ev.epsilon, WithinAbs(std::sqrt(p.d / p.b), 1e-15));
  const double root_gap = std::sqrt(p.b) - std::sqrt(p.d);
  CHECK_THAT(ev.pairing_value, WithinAbs(-4.0 * root_gap * root_gap, 1e-10));
  CHECK(ev.epsilon > ev.epsilon_minus);
  CHECK(ev.epsilon < ev.epsilon_plus);
}

TEST_CASE("identity rotation point is decomposable", "[certify]") {
  const Certificate cert = certify_decomposability(make_params(1.5, 0.5, 0.5, 0.5));
  const auto& ev = decomposable(cert);
  const std::array<double, 4> expected{0.0, 2.0, 2.0, 2.0};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK_THAT(ev.a_eigenvalues[k], WithinAbs(expected[k], 1e-12));
    CHECK(ev.a_eigenvalues_expected[k] == expected[k]);
  }
  CHECK(ev.reconstruction_residual < 1e-14);
  CHECK(ev.p_min_eigenvalue >= -1e-12);
  CHECK(ev.q_min_eigenvalue >= -1e-12);
  CHECK(check_certificate(cert).empty());
}

TEST_CASE("reduction point has a vanishing A", "[certify]") {
  const WitnessParams p = make_params(0, 1, 1, 1);
  CHECK(circulant_a(p).max_abs() == 0.0);
  const auto& ev = decomposable(certify_decomposability(p));
  for (double l : ev.a_eigenvalues) CHECK_THAT(l, WithinAbs(0.0, 1e-14));
  CHECK(ev.reconstruction_residual < 1e-14);
}

TEST_CASE("off-cone parameters get a warning", "[certify]") {
  const Certificate cert = certify_decomposability(make_params(2, 1, 0, 0));
  CHECK_FALSE(cert.on_cone);
  REQUIRE(cert.warnings.size() == 1);
  CHECK_THAT(cert.warnings[0], ContainsSubstring("neither cone"));
  CHECK(cert.verdict == Verdict::indecomposable);
}

TEST_CASE("tampered certificates fail the re-check", "[certify]") {
  Certificate cert = certify_decomposability(make_params(1, 1, 1, 0));
  std::get<IndecomposabilityEvidence>(cert.evidence).epsilon = 1.0;
  CHECK_FALSE(check_certificate(cert).empty());

  Certificate dec = certify_decomposability(make_params(1.5, 0.5, 0.5, 0.5));
  std::get<DecomposabilityEvidence>(dec.evidence).q(0, 0) += 1.0;
  CHECK_FALSE(check_certificate(dec).empty());

  Certificate flipped = certify_decomposability(make_params(1.5, 0.5, 0.5, 0.5));
  flipped.verdict = Verdict::indecomposable;
  CHECK_FALSE(check_certificate(flipped).empty());
}

TEST_CASE("verdict follows b = d on sampled cone points", "[certify][property]") {
  SplitMix64 rng(409);
  int indecomposable_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const WitnessParams p = random_cone_point(rng);
    const Certificate cert = certify_decomposability(p);
    const bool split = std::abs(p.b - p.d) > kDecisionTol;
    CHECK((cert.verdict == Verdict::indecomposable) == split);
    CHECK(check_certificate(cert).empty());
    indecomposable_count += split;
  }
  CHECK(indecomposable_count > 250);
  for (ConeId cone : {ConeId::I, ConeId::II})
    for (const CloudPoint& c : decomposable_curve(cone, 11)) {
      const WitnessParams p{3.0 - c.bcd[0] - c.bcd[1] - c.bcd[2], c.bcd[0], c.bcd[1], c.bcd[2], {}};
      const Certificate cert = certify_decomposability(p);
      CHECK(cert.verdict == Verdict::decomposable);
      CHECK(check_certificate(cert).empty());
    }
}

TEST_CASE("near ties are certified at the averaged point", "[certify]") {
  const WitnessParams p = make_params(1.5 - 1e-10, 0.5 + 1e-10, 0.5, 0.5);
  const auto& ev = decomposable(certify_decomposability(p));
  CHECK(ev.reconstruction_residual < 1e-9);
}

TEST_CASE("block positivity of simple operators", "[seesaw]") {
  CHECK_THAT(block_positivity_min(Matrix::identity(16), 4, kDefaultSeed), WithinAbs(1.0, 1e-12));
  const Witness reduction = witness_from_params(make_params(0, 1, 1, 1));
  CHECK_THAT(block_positivity_min(reduction, 16, kDefaultSeed), WithinAbs(0.0, 1e-9));
  // A PSD-violating product direction is found.
  Matrix bad = Matrix::identity(16);
  bad(0, 0) = -1.0;
  CHECK_THAT(block_positivity_min(bad, 8, kDefaultSeed), WithinAbs(-1.0, 1e-9));
  CHECK_THROWS_AS(block_positivity_min(Matrix::identity(16), 0, 1), DomainError);
}

TEST_CASE("block positivity of family members", "[seesaw][property]") {
  std::mt19937_64 rng(419);
  for (int trial = 0; trial < 6; ++trial) {
    for (Parity parity : {Parity::proper, Parity::improper}) {
      const Witness w = witness_from_params(abcd_from_euler(ewcones::testing::random_euler(rng), parity));
      CHECK(block_positivity_min(w, 8, kDefaultSeed + trial) >= -1e-9);
    }
  }
}

TEST_CASE("more restarts never raise the minimum", "[seesaw][property]") {
  const Witness w = witness_from_params(make_params(1, 1, 1, 0));
  double previous = std::numeric_limits<double>::infinity();
  for (int restarts : {1, 2, 4, 8}) {
    const double m = block_positivity_min(w, restarts, 99);
    CHECK(m <= previous);
    previous = m;
  }
  CHECK(block_positivity_min(w, 4, 99) == block_positivity_min(w, 4, 99));
}

TEST_CASE("seed streams are reproducible and distinct", "[random]") {
  SplitMix64 a = SplitMix64::stream(kDefaultSeed, 3);
  SplitMix64 b = SplitMix64::stream(kDefaultSeed, 3);
  SplitMix64 c = SplitMix64::stream(kDefaultSeed, 4);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  for (int k = 0; k < 1000; ++k) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("detection values", "[detect]") {
  const Witness reduction = witness_from_params(make_params(0, 1, 1, 1));
  CHECK_THAT(detect(reduction, Matrix::identity(16) * Complex{1.0 / 16}), WithinAbs(0.75, 1e-14));

  const auto phi_plus = maximally_entangled_vector(4);
  CHECK_THAT(detect(reduction, outer(phi_plus, phi_plus)), WithinAbs(-3.0, 1e-12));

  const Witness choi = witness_from_params(make_params(1, 1, 1, 0));
  const PptProbe probe = probe_state(0.5);
  const double norm = probe.state.trace().real();
  CHECK_THAT(norm, WithinAbs(4.0 * (1 + 0.5 + 1 + 2), 1e-14));
  CHECK_THAT(detect(choi, probe.state * Complex{1.0 / norm}), WithinAbs(-2.0 / norm, 1e-12));
}

TEST_CASE("detection rejects non-states", "[detect]") {
  const Witness reduction = witness_from_params(make_params(0, 1, 1, 1));
  Matrix rho = Matrix::identity(16) * Complex{1.0 / 16};
  rho(0, 0) = -0.01;
  CHECK_THROWS_WITH(detect(reduction, rho), ContainsSubstring("eigenvalue -0.01"));
  CHECK_THROWS_AS(detect(reduction, Matrix::identity(9)), ShapeError);
}

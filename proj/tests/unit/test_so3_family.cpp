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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "catch_amalgamated.hpp"
#include "ewcones/appendix.hpp"
#include "ewcones/cone_geometry.hpp"
#include "ewcones/error.hpp"
#include "ewcones/kossakowski.hpp"
#include "ewcones/linalg.hpp"
#include "ewcones/so3_family.hpp"
#include "test_support.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using namespace ewcones;
using ewcones::testing::random_euler;

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const WitnessParams& p, double a, double b, double c, double d,
                  double tol = 1e-14) {
  CHECK_THAT(p.a, WithinAbs(a, tol));
  CHECK_THAT(p.b, WithinAbs(b, tol));
  CHECK_THAT(p.c, WithinAbs(c, tol));
  CHECK_THAT(p.d, WithinAbs(d, tol));
}

}  // namespace

TEST_CASE("closed forms at the origin", "[closed-form]") {
  check_params(abcd_from_euler({0, 0, 0}, Parity::proper), 1.5, 0.5, 0.5, 0.5);
  check_params(abcd_from_euler({0, 0, 0}, Parity::improper), 0.0, 1.0, 1.0, 1.0);
  const WitnessParams p = abcd_from_euler({0, 0, 0}, Parity::improper);
  REQUIRE(p.provenance.has_value());
  CHECK(p.provenance->parity == Parity::improper);
}

TEST_CASE("closed forms at beta = pi land on the intersection ellipse", "[closed-form]") {
  const WitnessParams p = abcd_from_euler({0, kPi, 0}, Parity::proper);
  check_params(p, 0.5, 0.75, 1.0, 0.75);
  const ConeReport r = cone_residuals(p);
  CHECK(r.on_intersection);
}

TEST_CASE("closed forms sum to three and stay nonnegative", "[closed-form][property]") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 10000; ++trial) {
    const EulerAngles e = random_euler(rng);
    for (Parity parity : {Parity::proper, Parity::improper}) {
      const WitnessParams p = abcd_from_euler(e, parity);
      CHECK_THAT(p.sum(), WithinAbs(3.0, 1e-10));
      CHECK(std::min({p.a, p.b, p.c, p.d}) >= -1e-10);
      CHECK(std::max({p.a, p.b, p.c, p.d}) <= 3.0);
    }
  }
}

TEST_CASE("improper closed form is the proper one reflected", "[closed-form][property]") {
  std::mt19937_64 rng(223);
  const WeylSet weyl(4);
  for (int trial = 0; trial < 30; ++trial) {
    const EulerAngles e = random_euler(rng);
    const WitnessParams improper = abcd_from_euler(e, Parity::improper);
    const WitnessParams proper = abcd_from_euler(e, Parity::proper);
    check_params(improper, 1.5 - proper.a, 1.5 - proper.b, 1.5 - proper.c, 1.5 - proper.d,
                 1e-14);
    const auto minus_r = OrthogonalEmbedding(-euler_rotation(e));
    const WitnessParams piped = circulant_params(twirl(build_witness(minus_r), weyl));
    check_params(piped, improper.a, improper.b, improper.c, improper.d, 1e-10);
  }
}

TEST_CASE("parameter validation", "[params]") {
  CHECK_NOTHROW(make_params(1, 1, 1, 0));
  CHECK_THROWS_WITH(make_params(1, 1, 1, 1), ContainsSubstring("residual"));
  CHECK_THROWS_AS(make_params(1, 1, 1, 1), ValidationError);
  CHECK_THROWS_AS(make_params(-0.5, 1.5, 1, 1), DomainError);
  CHECK_NOTHROW(make_params(-1e-11, 1, 1, 1 + 1e-11));
  const WitnessParams p = make_params(0.25, 0.5, 1.0, 1.25);
  CHECK(p.at_offset(0) == 0.25);
  CHECK(p.at_offset(3) == 1.25);
  CHECK(p.values() == std::array<double, 4>{0.25, 0.5, 1.0, 1.25});
}

TEST_CASE("circulant witnesses", "[params]") {
  const Witness reduction = witness_from_params(make_params(0, 1, 1, 1));
  CHECK_FALSE(is_psd(reduction.op()));
  CHECK_THAT(min_eigenvalue(reduction.op()), WithinAbs(-3.0, 1e-12));

  const Witness uniform = witness_from_params(make_params(0.75, 0.75, 0.75, 0.75));
  CHECK_THAT(uniform.op().trace().real(), WithinAbs(12.0, 1e-14));
  CHECK(is_hermitian(uniform.op(), 0.0));
  const BipartiteShape s{4, 4};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK_THAT(uniform.op()(s.index(i, j), s.index(i, j)).real(), WithinAbs(0.75, 1e-15));

  // Row i of 3 Phi starts at column i with (a, b, c, d).
  const WitnessParams choi = make_params(1, 1, 1, 0);
  const RealMatrix phi = circulant_stochastic(choi).values();
  CHECK(3.0 * phi(2, 2) == 1.0);
  CHECK(3.0 * phi(2, 1) == 0.0);
  CHECK(3.0 * phi(3, 2) == 0.0);
  check_params(circulant_params(witness_from_params(choi)), 1, 1, 1, 0);

  CHECK_THROWS_AS(witness_from_params(WitnessParams{1, 1, 1, 1, {}}), ValidationError);
}

TEST_CASE("appendix entries at the identity rotation", "[appendix]") {
  const AppendixEntries e = appendix_entries(RealMatrix::identity(3));
  CHECK_THAT(e.a[3], WithinAbs(1.5, 1e-15));
  CHECK_THAT(e.d[3], WithinAbs(0.5, 1e-15));
}

TEST_CASE("appendix audit finds exactly the a2 misprint", "[appendix]") {
  const auto errata = audit_appendix();
  REQUIRE(errata.size() == 1);
  const Erratum& e = errata.front();
  CHECK(e.id == "appendix.a2.R23");
  CHECK(e.printed == "1/(6*sqrt(3))");
  CHECK(e.corrected == "1/(6*sqrt(2))");
  CHECK_THAT(e.printed_value, WithinAbs(1.0 / (6.0 * std::sqrt(3.0)), 1e-15));
  CHECK_THAT(e.corrected_value, WithinAbs(1.0 / (6.0 * std::sqrt(2.0)), 1e-15));
  CHECK(corrected_appendix().at(1).coefficient(2, 3).radicand == 2);
  CHECK(printed_appendix().at(1).coefficient(2, 3).radicand == 3);
}

TEST_CASE("derived coefficients in exact form", "[appendix]") {
  // 3 Phi_44 picks up <4|d_3|4>^2 = 9/12 on R33 and nothing else.
  CHECK(derived_coefficient(4, 4, 3, 3).value() == Catch::Approx(0.75).margin(1e-15));
  CHECK(derived_coefficient(4, 4, 1, 1).value() == 0.0);
  CHECK(derived_coefficient(1, 1, 1, 1).to_string() == "1/2");
  CHECK(Surd{-1, 2, 2}.to_string() == "-1/(2*sqrt(2))");
  CHECK(Surd{1, 1, 3}.to_string() == "1/sqrt(3)");
}

TEST_CASE("appendix entries reproduce the stochastic matrix", "[appendix][property]") {
  std::mt19937_64 rng(227);
  double printed_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const RealMatrix r = euler_rotation(random_euler(rng));
    for (const RealMatrix& block : {r, RealMatrix(-r)}) {
      const AppendixEntries e = appendix_entries(block);
      const RealMatrix three_phi = phi_matrix(OrthogonalEmbedding(block)).values() * 3.0;
      CHECK(distance(e.assembled(), three_phi) < 1e-10);
      const RealMatrix m = e.assembled();
      for (std::size_t i = 0; i < 4; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < 4; ++j) row += m(i, j);
        CHECK_THAT(row, WithinAbs(3.0, 1e-10));
      }
      printed_gap = std::max(printed_gap, distance(appendix_entries_as_printed(block).assembled(),
                                                   three_phi));
    }
  }
  CHECK(printed_gap > 1e-3);
}

TEST_CASE("appendix averages equal the closed forms", "[appendix][property]") {
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 100; ++trial) {
    const EulerAngles e = random_euler(rng);
    const WitnessParams avg = appendix_entries(euler_rotation(e)).averaged();
    const WitnessParams closed = abcd_from_euler(e, Parity::proper);
    check_params(avg, closed.a, closed.b, closed.c, closed.d, 1e-10);
  }
}

TEST_CASE("n = 3 family values", "[n3]") {
  const N3Params zero = n3_abc(0.0);
  CHECK_THAT(zero.a, WithinAbs(4.0 / 3.0, 1e-15));
  CHECK_THAT(zero.b, WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(zero.c, WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(zero.b * zero.c, WithinAbs(1.0 / 9.0, 1e-15));

  const N3Params pi = n3_abc(kPi);
  CHECK_THAT(pi.a, WithinAbs(0.0, 1e-15));
  CHECK_THAT(pi.b, WithinAbs(1.0, 1e-15));
  CHECK_THAT(pi.c, WithinAbs(1.0, 1e-15));

  const N3Params third = n3_abc(2.0 * kPi / 3.0);
  CHECK_THAT(third.a, WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(third.b, WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(third.c, WithinAbs(4.0 / 3.0, 1e-15));
}

TEST_CASE("n = 3 family matches the embedded SO(2) rotation", "[n3]") {
  for (int k = 0; k < 64; ++k) {
    const double angle = 2.0 * kPi * k / 64.0;
    const N3Params p = n3_abc(angle);
    const RealMatrix phi =
        phi_matrix(OrthogonalEmbedding::from_rotation(so2_rotation(angle), Parity::proper)).values();
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK_THAT(2.0 * phi(i, i), WithinAbs(p.a, 1e-12));
      CHECK_THAT(2.0 * phi(i, (i + 1) % 3), WithinAbs(p.b, 1e-12));
      CHECK_THAT(2.0 * phi(i, (i + 2) % 3), WithinAbs(p.c, 1e-12));
    }
  }
}

TEST_CASE("n = 3 family traces the boundary ellipse", "[n3][property]") {
  for (int k = 0; k < 1000; ++k) {
    const N3Params p = n3_abc(2.0 * kPi * k / 1000.0);
    CHECK_THAT(p.a + p.b + p.c, WithinAbs(2.0, 1e-12));
    CHECK_THAT(p.b * p.c, WithinAbs((1.0 - p.a) * (1.0 - p.a), 1e-12));
    CHECK(p.a >= 0.0);
    CHECK(p.a < 2.0);
    if (p.a <= 1.0) CHECK(p.b * p.c >= (1.0 - p.a) * (1.0 - p.a) - 1e-12);
  }
}

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
#include <numbers>
#include <random>

#include "catch_amalgamated.hpp"
#include "ewcones/error.hpp"
#include "ewcones/kossakowski.hpp"
#include "ewcones/linalg.hpp"
#include "ewcones/so3_family.hpp"
#include "test_support.hpp"

using Catch::Matchers::WithinAbs;
using namespace ewcones;
using ewcones::testing::random_embedding;
using ewcones::testing::random_euler;
using ewcones::testing::random_orthogonal;

namespace {

constexpr double kPi = std::numbers::pi;

OrthogonalEmbedding random_n3(std::mt19937_64& rng) {
  return OrthogonalEmbedding(random_orthogonal(rng, 2));
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

// Tr_B of an operator on C^d (x) C^d.
Matrix trace_out_second(const Matrix& m, std::size_t d) {
  Matrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out(i, j) += m(i * d + k, j * d + k);
  return out;
}

}  // namespace

TEST_CASE("Euler rotation at the origin and at beta = pi", "[euler]") {
  CHECK(distance(euler_rotation({0, 0, 0}), RealMatrix::identity(3)) < 1e-15);
  const RealMatrix flip{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  CHECK(distance(euler_rotation({0, kPi, 0}), flip) < 1e-15);
}

TEST_CASE("Euler rotations lie in SO(3)", "[euler]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const RealMatrix r = euler_rotation(random_euler(rng));
    CHECK(orthogonality_defect(r) < 1e-12);
    CHECK_THAT(determinant(r), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("Euler rotation matches the entry table", "[euler]") {
  const EulerAngles e{0.4, 1.3, -2.2};
  const double ca = std::cos(e.alpha), sa = std::sin(e.alpha);
  const double cb = std::cos(e.beta), sb = std::sin(e.beta);
  const double cg = std::cos(e.gamma), sg = std::sin(e.gamma);
  const RealMatrix expected{{ca * cg - cb * sa * sg, cg * sa + ca * cb * sg, sb * sg},
                            {-cb * cg * sa - ca * sg, ca * cb * cg - sa * sg, cg * sb},
                            {sa * sb, -ca * sb, cb}};
  CHECK(distance(euler_rotation(e), expected) < 1e-15);
}

TEST_CASE("embedding parity and full rotation", "[embedding]") {
  std::mt19937_64 rng(103);
  const auto proper = random_embedding(rng, Parity::proper);
  const auto improper = OrthogonalEmbedding::from_rotation(proper.block(), Parity::improper);
  CHECK(proper.parity() == Parity::proper);
  CHECK(improper.parity() == Parity::improper);
  CHECK(distance(improper.block(), -proper.block()) == 0.0);

  const RealMatrix full = proper.full_rotation();
  REQUIRE(full.rows() == 15);
  CHECK(orthogonality_defect(full) < 1e-12);
  for (std::size_t i = 3; i < 15; ++i) CHECK(full(i, i) == -1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(full(i, j) == proper.block()(i, j));

  CHECK_THROWS_AS(OrthogonalEmbedding(RealMatrix{{1, 0.1}, {0, 1}}), DomainError);
}

TEST_CASE("maps are unital, dual-unital and trace preserving", "[map][property]") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    for (const auto& e : {random_embedding(rng, Parity::proper),
                          random_embedding(rng, Parity::improper), random_n3(rng)}) {
      const KossakowskiMap map(e);
      const auto n = static_cast<std::size_t>(e.n());
      CHECK(distance(map.apply(Matrix::identity(n)), Matrix::identity(n)) < 1e-12);
      CHECK(distance(map.apply_dual(Matrix::identity(n)), Matrix::identity(n)) < 1e-12);
      const Matrix x = ewcones::testing::random_matrix(rng, n, n);
      CHECK(std::abs(map.apply(x).trace() - x.trace()) < 1e-12);
    }
  }
}

TEST_CASE("the full reflection gives the reduction map", "[map]") {
  std::mt19937_64 rng(109);
  for (int n : {2, 3, 4}) {
    const std::size_t m = n * n - 1;
    const KossakowskiMap map(n, -RealMatrix::identity(m));
    const Matrix x = ewcones::testing::random_matrix(rng, n, n);
    const Matrix expected = (Matrix::identity(n) * x.trace() - x) * Complex{1.0 / (n - 1)};
    CHECK(distance(map.apply(x), expected) < 1e-12);
  }
}

TEST_CASE("off-diagonal matrix units are scaled by -1/(n-1)", "[map]") {
  std::mt19937_64 rng(113);
  const KossakowskiMap map(random_embedding(rng, Parity::proper));
  const Matrix x = unit(4, 0, 1);
  CHECK(distance(map.apply(x), x * Complex{-1.0 / 3.0}) < 1e-12);
  CHECK(distance(apply_map(map, unit(4, 3, 2)), unit(4, 3, 2) * Complex{-1.0 / 3.0}) < 1e-12);
}

TEST_CASE("dual map preserves diagonals with the stochastic matrix", "[map][property]") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    for (const auto& e : {random_embedding(rng, Parity::proper),
                          random_embedding(rng, Parity::improper), random_n3(rng)}) {
      const KossakowskiMap map(e);
      const StochasticMatrix phi = phi_matrix(e);
      const auto n = phi.n();
      for (std::size_t i = 0; i < n; ++i) {
        Matrix expected(n, n);
        for (std::size_t j = 0; j < n; ++j) expected(j, j) = phi(i, j);
        CHECK(distance(map.apply_dual(unit(n, i, i)), expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("map rejects mismatched inputs", "[map]") {
  const KossakowskiMap map(OrthogonalEmbedding::from_euler({0, 0, 0}, Parity::proper));
  CHECK_THROWS_AS(map.apply(Matrix::identity(3)), ShapeError);
  CHECK_THROWS_AS(KossakowskiMap(4, RealMatrix::identity(8)), ShapeError);
}

TEST_CASE("stochastic matrices of the extreme rotations", "[phi]") {
  const auto reduction = phi_matrix(OrthogonalEmbedding::from_euler({0, 0, 0}, Parity::improper));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK_THAT(3.0 * reduction(i, j), WithinAbs(i == j ? 0.0 : 1.0, 1e-14));

  const WeylSet weyl(4);
  const auto identity = OrthogonalEmbedding::from_euler({0, 0, 0}, Parity::proper);
  const WitnessParams p = circulant_params(twirl(build_witness(identity), weyl));
  CHECK_THAT(p.a, WithinAbs(1.5, 1e-12));
  CHECK_THAT(p.b, WithinAbs(0.5, 1e-12));
  CHECK_THAT(p.c, WithinAbs(0.5, 1e-12));
  CHECK_THAT(p.d, WithinAbs(0.5, 1e-12));
}

TEST_CASE("stochastic matrices are doubly stochastic", "[phi][property]") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 100; ++trial) {
    const RealMatrix phi = phi_matrix(random_embedding(rng, Parity::proper)).values();
    for (std::size_t i = 0; i < 4; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < 4; ++j) {
        row += phi(i, j);
        col += phi(j, i);
        CHECK(phi(i, j) >= -1e-12);
      }
      CHECK_THAT(row, WithinAbs(1.0, 1e-10));
      CHECK_THAT(col, WithinAbs(1.0, 1e-10));
    }
  }
  CHECK_THROWS_AS(StochasticMatrix(RealMatrix{{0.5, 0.6}, {0.5, 0.4}}), ValidationError);
  CHECK_THROWS_AS(StochasticMatrix(RealMatrix{{1.5, -0.5}, {-0.5, 1.5}}), ValidationError);
}

TEST_CASE("reduction witness has the expected entries", "[witness]") {
  const Witness w = build_witness(OrthogonalEmbedding::from_euler({0, 0, 0}, Parity::improper));
  const BipartiteShape s{4, 4};
  Matrix expected(16, 16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      expected(s.index(i, j), s.index(i, j)) = 1.0;
      expected(s.index(i, i), s.index(j, j)) = -1.0;
    }
  CHECK(distance(w.op(), expected) < 1e-14);
}

TEST_CASE("witness trace and the two construction routes", "[witness][property]") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 50; ++trial) {
    for (Parity parity : {Parity::proper, Parity::improper}) {
      const auto e = random_embedding(rng, parity);
      const Witness direct = build_witness(e);
      CHECK_THAT(direct.op().trace().real(), WithinAbs(12.0, 1e-12));
      CHECK(distance(direct.op(), build_witness_via_map(e).op()) < 1e-12);
      CHECK(distance(direct.stochastic_part(), phi_matrix(e).values()) < 1e-14);
    }
    const auto e3 = random_n3(rng);
    CHECK(distance(build_witness(e3).op(), build_witness_via_map(e3).op()) < 1e-12);
  }
}

TEST_CASE("witness validation", "[witness]") {
  CHECK_THROWS_AS(Witness(Matrix::identity(16), 4), ValidationError);
  CHECK_THROWS_AS(Witness(Matrix::identity(15), 4), ShapeError);
  const Witness w = build_witness(OrthogonalEmbedding::from_euler({0, 0, 0}, Parity::proper));
  Matrix bad = w.op();
  bad(0, 5) += Complex{0, 1e-6};
  CHECK_THROWS_AS(Witness(bad, 4), ValidationError);
}

TEST_CASE("Weyl unitaries", "[weyl]") {
  const WeylSet weyl(4);
  CHECK(distance(weyl.unitary(0, 0), Matrix::identity(4)) < 1e-15);
  Matrix shift(4, 4);
  for (int m = 1; m <= 4; ++m) shift(storage_index(m), storage_index(m % 4 + 1)) = 1.0;
  CHECK(distance(weyl.unitary(0, 1), shift) < 1e-15);
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      const Matrix& u = weyl.unitary(k, l);
      CHECK(distance(u * u.adjoint(), Matrix::identity(4)) < 1e-12);
    }
  CHECK_THROWS_AS(weyl.unitary(4, 0), DomainError);
  CHECK_THROWS_AS(WeylSet(1), DomainError);
}

TEST_CASE("Weyl projectors resolve the identity", "[weyl]") {
  for (int n : {2, 3, 4}) {
    const WeylSet weyl(n);
    const auto dim = static_cast<std::size_t>(n * n);
    Matrix sum(dim, dim);
    for (const Matrix& p : weyl.projectors()) {
      sum += p;
      CHECK(distance(p * p, p) < 1e-12);
      CHECK(distance(trace_out_second(p, n), Matrix::identity(n) * Complex{1.0 / n}) < 1e-12);
    }
    CHECK(distance(sum, Matrix::identity(dim)) < 1e-10);
  }
  const WeylSet two(2);
  const auto phi_plus = maximally_entangled_vector(2);
  CHECK(distance(two.projector(0, 0), outer(phi_plus, phi_plus)) < 1e-15);
}

TEST_CASE("twirl fixes circulant witnesses and keeps the trace", "[twirl]") {
  const WeylSet weyl(4);
  const Witness circ = witness_from_params(make_params(1.0, 1.0, 1.0, 0.0));
  CHECK(distance(twirl(circ, weyl).op(), circ.op()) < 1e-12);

  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 20; ++trial) {
    const Witness w = build_witness(random_embedding(rng, Parity::proper));
    const Witness t = twirl(w, weyl);
    CHECK(std::abs(t.op().trace() - w.op().trace()) < 1e-12);
    CHECK(distance(twirl(t, weyl).op(), t.op()) < 1e-12);
  }
  CHECK_THROWS_AS(twirl(circ, WeylSet(3)), ShapeError);
}

TEST_CASE("twirled witnesses follow the trigonometric closed forms", "[twirl][property]") {
  const WeylSet weyl(4);
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 50; ++trial) {
    const EulerAngles angles = random_euler(rng);
    for (Parity parity : {Parity::proper, Parity::improper}) {
      const Witness t = twirl(build_witness(OrthogonalEmbedding::from_euler(angles, parity)), weyl);
      const WitnessParams numeric = circulant_params(t);
      const WitnessParams closed = abcd_from_euler(angles, parity);
      CHECK_THAT(numeric.a, WithinAbs(closed.a, 1e-10));
      CHECK_THAT(numeric.b, WithinAbs(closed.b, 1e-10));
      CHECK_THAT(numeric.c, WithinAbs(closed.c, 1e-10));
      CHECK_THAT(numeric.d, WithinAbs(closed.d, 1e-10));
      CHECK(distance(t.op(), witness_from_params(closed).op()) < 1e-10);
    }
  }
}

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

#include "ewcones/so3_family.hpp"

#include <cmath>
#include <string>

#include "ewcones/error.hpp"
#include "ewcones/linalg.hpp"
#include "format.hpp"

namespace ewcones {
namespace {

constexpr int kFamilyN = 4;

// The bracketed deviations X in a = (3 + X_a)/4, ..., for a proper rotation.
// The improper family flips the sign of every X.
struct Deviations {
  double a, b, c, d;
};

Deviations deviations(const EulerAngles& e) {
  const double ca = std::cos(e.alpha), sa = std::sin(e.alpha);
  const double cb = std::cos(e.beta), sb = std::sin(e.beta);
  const double cg = std::cos(e.gamma), sg = std::sin(e.gamma);
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);

  const double common =
      (sa * sg - ca * cb * cg - 3 * ca * cg + 3 * cb * sa * sg - 2 * cb) / 6.0;

  Deviations x{};
  x.a = std::cos(e.alpha + e.gamma) * (1 + cb) + cb;
  x.b = common +
        (3 * cg * sa + 3 * ca * cb * sg + cb * cg * sa + ca * sg) / (2 * s3) +
        2.0 / (3 * s2) * sb * (2 * cg + ca) - 2.0 / s6 * sa * sb;
  x.c = -(2 * ca * cb * cg - 2 * sa * sg + cb) / 3.0 -
        2.0 / (3 * s2) * sb * (cg - ca) + 2.0 / s6 * sb * (sg + sa) -
        (cg * sa + ca * cb * sg - cb * cg * sa - ca * sg) / s3;
  x.d = common -
        (3 * cb * cg * sa + 3 * ca * sg + cg * sa + ca * cb * sg) / (2 * s3) -
        2.0 / (3 * s2) * sb * (cg + 2 * ca) - 2.0 / s6 * sg * sb;
  return x;
}

}  // namespace

double WitnessParams::at_offset(int k) const {
  switch (((k % 4) + 4) % 4) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    default: return d;
  }
}

void validate(const WitnessParams& p, double tol) {
  const double residual = p.sum() - 3.0;
  if (std::abs(residual) > tol) {
    throw ValidationError("parameters must satisfy a+b+c+d = 3; residual " +
                          detail::format_number(residual));
  }
  for (double v : p.values()) {
    if (v < -tol) {
      throw DomainError("parameter " + detail::format_number(v) + " is negative");
    }
  }
}

WitnessParams make_params(double a, double b, double c, double d, double tol) {
  WitnessParams p{a, b, c, d, std::nullopt};
  validate(p, tol);
  return p;
}

WitnessParams abcd_from_euler(const EulerAngles& angles, Parity parity) {
  const Deviations x = deviations(angles);
  const double sign = parity == Parity::proper ? 1.0 : -1.0;
  WitnessParams p;
  p.a = (3.0 + sign * x.a) / 4.0;
  p.b = (3.0 + sign * x.b) / 4.0;
  p.c = (3.0 + sign * x.c) / 4.0;
  p.d = (3.0 + sign * x.d) / 4.0;
  p.provenance = Provenance{angles, parity};
  return p;
}

WitnessParams circulant_params(const Witness& w) {
  if (w.n() != kFamilyN) throw ShapeError("circulant_params: only defined for n = 4");
  const RealMatrix phi = w.stochastic_part();
  std::array<double, 4> v{};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i) v[k] += 3.0 * phi(i, (i + k) % 4);
    v[k] /= 4.0;
  }
  return WitnessParams{v[0], v[1], v[2], v[3], std::nullopt};
}

StochasticMatrix circulant_stochastic(const WitnessParams& p) {
  RealMatrix phi(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) phi(i, (i + k) % 4) = p.at_offset(int(k)) / 3.0;
  return StochasticMatrix(std::move(phi));
}

Witness witness_from_params(const WitnessParams& p, double tol) {
  validate(p, tol);
  return witness_from_stochastic(circulant_stochastic(p));
}

RealMatrix AppendixEntries::assembled() const {
  RealMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = a[i];
    m(i, (i + 1) % 4) = b[i];
    m(i, (i + 2) % 4) = c[i];
    m(i, (i + 3) % 4) = d[i];
  }
  return m;
}

WitnessParams AppendixEntries::averaged() const {
  auto mean = [](const std::array<double, 4>& v) {
    return (v[0] + v[1] + v[2] + v[3]) / 4.0;
  };
  return WitnessParams{mean(a), mean(b), mean(c), mean(d), std::nullopt};
}

N3Params n3_abc(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const double h = std::sqrt(3.0) / 2.0;
  return N3Params{2.0 / 3.0 * (1 + c), 2.0 / 3.0 * (1 - 0.5 * c - h * s),
                  2.0 / 3.0 * (1 - 0.5 * c + h * s), angle};
}

}  // namespace ewcones

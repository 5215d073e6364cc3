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

#include "ewcones/cone_geometry.hpp"

#include <cmath>
#include <numbers>

#include "ewcones/error.hpp"
#include "format.hpp"

namespace ewcones {
namespace {

double quadric(double b, double c, double d, double shift) {
  return (b - shift) * (b - shift) + (2 * c - 3) * (2 * c - 3) + (d - shift) * (d - shift) +
         4 * b * c + 4 * c * d - 2 * b * d;
}

Point3 along(const Point3& from, const Point3& to, double s) {
  return {from[0] + s * (to[0] - from[0]), from[1] + s * (to[1] - from[1]),
          from[2] + s * (to[2] - from[2])};
}

void sample_generator(std::vector<CloudPoint>& out, ConeId cone, int generator, double theta,
                      int steps) {
  const Point3 vertex = cone_vertex(cone);
  const Point3 base = base_ellipse_point(cone, theta);
  for (int j = 1; j < steps; ++j) {
    const double s = double(j) / double(steps - 1);
    out.push_back(CloudPoint{j == steps - 1 ? base : along(vertex, base, s), cone, generator, s});
  }
}

}  // namespace

std::string_view to_string(ConeId cone) { return cone == ConeId::I ? "I" : "II"; }

double cone_residual(ConeId cone, const Point3& p) {
  return cone == ConeId::I ? quadric(p[0], p[1], p[2], 2.0) - 9.0
                           : quadric(p[0], p[1], p[2], 1.0) - 6.0;
}

ConeReport cone_residuals(const WitnessParams& p, double tol) {
  ConeReport r;
  r.tolerance = tol;
  r.residual_i = cone_residual(ConeId::I, {p.b, p.c, p.d});
  r.residual_ii = cone_residual(ConeId::II, {p.b, p.c, p.d});
  r.plane_coordinate = p.b + p.d;
  const bool in_slab = r.plane_coordinate >= 1.0 - tol && r.plane_coordinate <= 2.0 + tol;
  r.on_cone_i = in_slab && std::abs(r.residual_i) <= tol;
  r.on_cone_ii = in_slab && std::abs(r.residual_ii) <= tol;
  r.on_intersection =
      r.on_cone_i && r.on_cone_ii && std::abs(r.plane_coordinate - 1.5) <= tol;
  r.on_ellipse_i = r.on_cone_i && std::abs(r.plane_coordinate - 2.0) <= tol;
  r.on_ellipse_ii = r.on_cone_ii && std::abs(r.plane_coordinate - 1.0) <= tol;
  return r;
}

WitnessParams ellipse_point(ConeId cone, double t, Branch branch) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("ellipse_point: t must lie in [0,1], got " + detail::format_number(t));
  }
  const double root = std::sqrt(t * (1.0 - t));
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  if (cone == ConeId::I) {
    return WitnessParams{1.0 - t, 1.0 + sign * root, t, 1.0 - sign * root, std::nullopt};
  }
  return WitnessParams{1.0 + sign * root, 1.0 - t, 1.0 - sign * root, t, std::nullopt};
}

ProductResiduals product_relations(const WitnessParams& p) {
  return {p.b * p.d - (1.0 - p.a) * (1.0 - p.a), p.a * p.c - (1.0 - p.b) * (1.0 - p.b)};
}

std::vector<SpecialPoint> special_points() {
  return {
      {WitnessParams{0, 1, 1, 1, std::nullopt}, "(iii)", "reduction map", ConeId::I},
      {WitnessParams{1, 1, 1, 0, std::nullopt}, "(i)", "generalized Choi map", ConeId::II},
      {WitnessParams{1, 0, 1, 1, std::nullopt}, "(ii)", "generalized Choi map", ConeId::II},
      {WitnessParams{1, 1, 0, 1, std::nullopt}, "(iv)", "generalized Choi map", ConeId::I},
  };
}

Point3 cone_vertex(ConeId cone) {
  return cone == ConeId::I ? Point3{0.5, 1.0, 0.5} : Point3{1.0, 0.5, 1.0};
}

double base_plane(ConeId cone) { return cone == ConeId::I ? 2.0 : 1.0; }

Point3 base_ellipse_point(ConeId cone, double theta) {
  const double cs = 0.5 * std::cos(theta), sn = 0.5 * std::sin(theta);
  if (cone == ConeId::I) {
    // (d-1)^2 + (c-1/2)^2 = 1/4 on b+d = 2.
    const double d = 1.0 + cs;
    return {2.0 - d, 0.5 + sn, d};
  }
  // (c-1)^2 + (d-1/2)^2 = 1/4 on b+d = 1.
  const double d = 0.5 + sn;
  return {1.0 - d, 1.0 + cs, d};
}

Point3 axis_origin() { return {0.5, 1.0, 0.5}; }
Point3 axis_direction() { return {1.0, -1.0, 1.0}; }

double distance_to_axis(const Point3& p) {
  const Point3 o = axis_origin();
  const Point3 u = axis_direction();
  const Point3 v{p[0] - o[0], p[1] - o[1], p[2] - o[2]};
  const double t = (v[0] * u[0] + v[1] * u[1] + v[2] * u[2]) / 3.0;
  const Point3 r{v[0] - t * u[0], v[1] - t * u[1], v[2] - t * u[2]};
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

std::vector<CloudPoint> sample_cloud(ConeSelection selection, int resolution) {
  if (resolution < 2) throw DomainError("sample_cloud: resolution must be >= 2");
  std::vector<CloudPoint> out;
  for (ConeId cone : {ConeId::I, ConeId::II}) {
    if (selection == ConeSelection::I && cone != ConeId::I) continue;
    if (selection == ConeSelection::II && cone != ConeId::II) continue;
    out.push_back(CloudPoint{cone_vertex(cone), cone, -1, 0.0});
    for (int k = 0; k < resolution; ++k) {
      const double theta = 2.0 * std::numbers::pi * double(k) / double(resolution);
      sample_generator(out, cone, k, theta, resolution);
    }
  }
  return out;
}

std::vector<CloudPoint> decomposable_curve(ConeId cone, int samples) {
  if (samples < 2) throw DomainError("decomposable_curve: samples must be >= 2");
  // b = d on the base ellipse: d = 1 (cone I) or d = 1/2 (cone II).
  const std::array<Point3, 2> ends =
      cone == ConeId::I ? std::array<Point3, 2>{Point3{1.0, 1.0, 1.0}, Point3{1.0, 0.0, 1.0}}
                        : std::array<Point3, 2>{Point3{0.5, 1.5, 0.5}, Point3{0.5, 0.5, 0.5}};
  const Point3 vertex = cone_vertex(cone);
  std::vector<CloudPoint> out;
  out.push_back(CloudPoint{vertex, cone, -1, 0.0});
  for (int g = 0; g < 2; ++g) {
    for (int j = 1; j < samples; ++j) {
      const double s = double(j) / double(samples - 1);
      out.push_back(CloudPoint{along(vertex, ends[static_cast<std::size_t>(g)], s), cone, g, s});
    }
  }
  return out;
}

}  // namespace ewcones

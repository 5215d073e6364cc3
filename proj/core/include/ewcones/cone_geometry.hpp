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

#ifndef EWCONES_CONE_GEOMETRY_HPP_
#define EWCONES_CONE_GEOMETRY_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ewcones/matrix.hpp"
#include "ewcones/so3_family.hpp"

namespace ewcones {

// Geometry in (b,c,d) coordinates; a = 3 - b - c - d is implied.
//
// Cone I:  (b-2)^2 + (2c-3)^2 + (d-2)^2 + 4bc + 4cd - 2bd = 9,
//          vertex (1/2, 1, 1/2), base ellipse I in the plane b+d = 2.
// Cone II: (b-1)^2 + (2c-3)^2 + (d-1)^2 + 4bc + 4cd - 2bd = 6,
//          vertex (1, 1/2, 1), base ellipse II in the plane b+d = 1.
// Both are truncated to 1 <= b+d <= 2, share the axis
// (1/2, 1, 1/2) + t (1, -1, 1) and meet along an ellipse in b+d = 3/2.
// Ellipses are named by their plane only.

enum class ConeId { I, II };
enum class ConeSelection { I, II, both };
/// `plus` takes the upper sign of a +- pair.
enum class Branch { plus, minus };

std::string_view to_string(ConeId cone);

using Point3 = std::array<double, 3>;  // (b, c, d)

struct ConeReport {
  double residual_i = 0.0;
  double residual_ii = 0.0;
  /// b + d.
  double plane_coordinate = 0.0;
  bool on_cone_i = false;
  bool on_cone_ii = false;
  bool on_intersection = false;
  /// On cone I and in b+d = 2.
  bool on_ellipse_i = false;
  /// On cone II and in b+d = 1.
  bool on_ellipse_ii = false;
  double tolerance = kDecisionTol;
};

/// LHS - RHS of the cone quadric.
double cone_residual(ConeId cone, const Point3& bcd);

ConeReport cone_residuals(const WitnessParams& p, double tol = kDecisionTol);

/// Boundary-ellipse parameterization, t in [0,1]:
///   I:  a = 1-t, b = 1 +- sqrt(t(1-t)), c = t, d = 1 -+ sqrt(t(1-t))
///   II: a = 1 +- sqrt(t(1-t)), b = 1-t, c = 1 -+ sqrt(t(1-t)), d = t
/// Throws DomainError for t outside [0,1].
WitnessParams ellipse_point(ConeId cone, double t, Branch branch);

struct ProductResiduals {
  double bd = 0.0;  // bd - (1-a)^2, vanishes on ellipse II
  double ac = 0.0;  // ac - (1-b)^2, vanishes on ellipse I
};

ProductResiduals product_relations(const WitnessParams& p);

struct SpecialPoint {
  WitnessParams params;
  std::string label;        // "(i)" .. "(iv)"
  std::string description;  // e.g. "reduction map"
  ConeId ellipse = ConeId::I;
};

/// Phi[0,1,1,1] (iii), Phi[1,1,1,0] (i), Phi[1,0,1,1] (ii), Phi[1,1,0,1] (iv).
std::vector<SpecialPoint> special_points();

Point3 cone_vertex(ConeId cone);
/// Level of the base plane b + d.
double base_plane(ConeId cone);
/// Point of the base ellipse at angle theta.
Point3 base_ellipse_point(ConeId cone, double theta);
/// Point (1/2, 1, 1/2) and direction (1, -1, 1) of the common axis.
Point3 axis_origin();
Point3 axis_direction();
double distance_to_axis(const Point3& p);

struct CloudPoint {
  Point3 bcd{};
  ConeId cone = ConeId::I;
  /// Index of the generator (vertex -> base ellipse) or -1 for the vertex.
  int generator = -1;
  /// Position along the generator, 0 at the vertex, 1 on the base ellipse.
  double s = 0.0;
};

/// Surface samples: `resolution` generators at equally spaced ellipse
/// angles, each sampled at `resolution` equally spaced positions including
/// both ends; the shared vertex is emitted once. Throws DomainError for
/// resolution < 2.
std::vector<CloudPoint> sample_cloud(ConeSelection selection, int resolution);

/// Samples of the intersection of a cone with the plane b = d (two
/// generators per cone), `samples` >= 2 points per generator.
std::vector<CloudPoint> decomposable_curve(ConeId cone, int samples);

}  // namespace ewcones

#endif  // EWCONES_CONE_GEOMETRY_HPP_

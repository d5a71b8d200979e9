#include "pcd/partitions.hpp"

#include <cmath>

namespace pcd {

namespace {

bool is_interior(const TriangleFrame& f, const Point2& m, double tol = kBoundaryTol) {
  Eigen::Vector3d l = f.barycentric(m);
  return l[0] > tol && l[1] > tol && l[2] > tol;
}

// Foot parameter of the perpendicular from m onto segment a-b, in [0,1] when
// the foot lies on the segment.
double foot_param(const Point2& m, const Point2& a, const Point2& b) {
  Point2 d = b - a;
  return (m - a).dot(d) / d.squaredNorm();
}

// Signed side of p relative to the line through `through` with direction
// `dir`, matched against the side of `ref`; >= -tol means "same closed side".
double side_match(const Point2& p, const Point2& through, const Point2& dir, const Point2& ref) {
  double sp = cross2(dir, p - through);
  double sr = cross2(dir, ref - through);
  return sr >= 0.0 ? sp : -sp;
}

void require_in_triangle(const TriangleFrame& f, const Point2& x) {
  if (!f.contains_basic(x)) fail(Errc::outside_triangle, "point outside the triangle");
}

}  // namespace

Point2 resolve_center(const TriangleFrame& f, const CenterSpec& m) {
  switch (m.kind) {
    case CenterSpec::Kind::cc: return triangle_center(f, TriangleCenter::cc);
    case CenterSpec::Kind::ic: return triangle_center(f, TriangleCenter::ic);
    case CenterSpec::Kind::cm: return triangle_center(f, TriangleCenter::cm);
    case CenterSpec::Kind::oc: return triangle_center(f, TriangleCenter::oc);
    case CenterSpec::Kind::custom: return m.custom_point;
  }
  fail(Errc::invalid_param, "unknown center kind");
}

void validate_vertex_scheme(const TriangleFrame& f, const CenterSpec& m, SchemeMethod method) {
  if (m.kind == CenterSpec::Kind::oc && f.shape_class() != ShapeClass::acute)
    fail(Errc::center_outside_triangle, "OC-based regions are defined for acute triangles only");
  Point2 mc = resolve_center(f, m);
  if (method == SchemeMethod::lines) {
    if (!is_interior(f, mc))
      fail(Errc::center_outside_triangle, "vertex regions by lines need M in the open interior");
    return;
  }
  // Orthogonal projections: every foot must land on its edge.
  for (int i = 0; i < 3; ++i) {
    Point2 a = f.basic_vertex((i + 1) % 3), b = f.basic_vertex((i + 2) % 3);
    double t = foot_param(mc, a, b);
    if (t < -kBoundaryTol || t > 1.0 + kBoundaryTol)
      fail(Errc::projection_off_edge, "orthogonal projection of M leaves an edge");
  }
}

void validate_edge_scheme(const TriangleFrame& f, const CenterSpec& m) {
  if (m.kind == CenterSpec::Kind::oc && f.shape_class() != ShapeClass::acute)
    fail(Errc::center_outside_triangle, "OC-based regions are defined for acute triangles only");
  if (!is_interior(f, resolve_center(f, m)))
    fail(Errc::center_outside_triangle, "edge regions need M in the open interior");
}

int vertex_region_resolved(const Point2& x, const TriangleFrame& f, const Point2& mc,
                           SchemeMethod method) {
  for (int i = 0; i < 3; ++i) {
    Point2 yi = f.basic_vertex(i);
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) {
      if (j == i) continue;
      Point2 dir;
      if (method == SchemeMethod::lines) {
        // Boundary along the extension of the segment joining vertex j to M.
        dir = f.basic_vertex(j) - mc;
      } else {
        // Boundary orthogonal to the edge incident to vertex i opposite j.
        Point2 a = f.basic_vertex((j + 1) % 3), b = f.basic_vertex((j + 2) % 3);
        Point2 e = b - a;
        dir = Point2(-e.y(), e.x());
      }
      ok = side_match(x, mc, dir, yi) >= -kBoundaryTol;
    }
    if (ok) return i;
  }
  fail(Errc::invalid_param, "internal: vertex regions do not cover the point");
}

int edge_region_resolved(const Point2& x, const TriangleFrame& f, const Point2& mc) {
  for (int i = 0; i < 3; ++i) {
    // R_M(e_i) is the triangle (M, y_j, y_k) for the edge's endpoints.
    Point2 yj = f.basic_vertex((i + 1) % 3), yk = f.basic_vertex((i + 2) % 3);
    if (side_match(x, mc, yj - mc, yk) >= -kBoundaryTol &&
        side_match(x, mc, yk - mc, yj) >= -kBoundaryTol)
      return i;
  }
  fail(Errc::invalid_param, "internal: edge regions do not cover the point");
}

int vertex_region_of(const Point2& x, const TriangleFrame& f, const CenterSpec& m,
                     SchemeMethod method) {
  validate_vertex_scheme(f, m, method);
  require_in_triangle(f, x);
  return vertex_region_resolved(x, f, resolve_center(f, m), method);
}

int edge_region_of(const Point2& x, const TriangleFrame& f, const CenterSpec& m) {
  validate_edge_scheme(f, m);
  require_in_triangle(f, x);
  return edge_region_resolved(x, f, resolve_center(f, m));
}

ProximityRegion region_polygon(const TriangleFrame& f, const CenterSpec& m, SchemeTarget target,
                               SchemeMethod method, int index) {
  if (target == SchemeTarget::edge && method == SchemeMethod::orthogonal)
    fail(Errc::invalid_spec, "edge regions have no orthogonal-projection form");
  if (index < 0 || index > 2) fail(Errc::invalid_param, "region index must be 0, 1, or 2");

  ProximityRegion r = frame_region(f);
  Point2 mc = resolve_center(f, m);
  if (target == SchemeTarget::vertex) {
    validate_vertex_scheme(f, m, method);
    Point2 yi = f.basic_vertex(index);
    for (int j = 0; j < 3; ++j) {
      if (j == index) continue;
      Point2 dir;
      if (method == SchemeMethod::lines) {
        dir = f.basic_vertex(j) - mc;
      } else {
        Point2 a = f.basic_vertex((j + 1) % 3), b = f.basic_vertex((j + 2) % 3);
        Point2 e = b - a;
        dir = Point2(-e.y(), e.x());
      }
      r.halfplanes.push_back(halfplane_through(mc, dir, yi));
    }
  } else {
    validate_edge_scheme(f, m);
    Point2 yj = f.basic_vertex((index + 1) % 3), yk = f.basic_vertex((index + 2) % 3);
    r.halfplanes.push_back(halfplane_through(mc, yj - mc, yk));
    r.halfplanes.push_back(halfplane_through(mc, yk - mc, yj));
  }
  return r;
}

}  // namespace pcd

#pragma once

#include "pcd/geometry.hpp"
#include "pcd/region.hpp"

namespace pcd {

// The point M that anchors vertex and edge regions, either a named triangle
// center or a custom point given in basic coordinates.
struct CenterSpec {
  enum class Kind { cc, ic, cm, oc, custom };
  Kind kind = Kind::cm;
  Point2 custom_point = Point2::Zero();

  static CenterSpec cc() { return {Kind::cc, Point2::Zero()}; }
  static CenterSpec ic() { return {Kind::ic, Point2::Zero()}; }
  static CenterSpec cm() { return {Kind::cm, Point2::Zero()}; }
  static CenterSpec oc() { return {Kind::oc, Point2::Zero()}; }
  static CenterSpec custom(const Point2& p) { return {Kind::custom, p}; }
};

Point2 resolve_center(const TriangleFrame& frame, const CenterSpec& m);

enum class SchemeMethod { lines, orthogonal };
enum class SchemeTarget { vertex, edge };

// Vertex regions partition the triangle so each part touches exactly one
// vertex; the two construction schemes join M to the edges either along the
// extended vertex-to-M lines or along the orthogonal projections of M onto
// the edges. Indices are 0-based: vertex 0 = (0,0), 1 = (1,0), 2 = (c1,c2);
// edge i is opposite vertex i. Points on a shared boundary go to the
// smallest index. Inputs are basic coordinates.
int vertex_region_of(const Point2& x, const TriangleFrame& frame, const CenterSpec& m,
                     SchemeMethod method);
int edge_region_of(const Point2& x, const TriangleFrame& frame, const CenterSpec& m);

// Unvalidated variants taking an already resolved center; the caller is
// responsible for scheme validity and for x being in the closed triangle.
int vertex_region_resolved(const Point2& x, const TriangleFrame& frame, const Point2& center,
                           SchemeMethod method);
int edge_region_resolved(const Point2& x, const TriangleFrame& frame, const Point2& center);

// The closed region as half-plane constraints clipped to the triangle.
ProximityRegion region_polygon(const TriangleFrame& frame, const CenterSpec& m,
                               SchemeTarget target, SchemeMethod method, int index);

// Validation helpers: throw CenterOutsideTriangle / ProjectionOffEdge when
// the scheme is not well defined for the resolved M on this frame.
void validate_vertex_scheme(const TriangleFrame& frame, const CenterSpec& m, SchemeMethod method);
void validate_edge_scheme(const TriangleFrame& frame, const CenterSpec& m);

}  // namespace pcd

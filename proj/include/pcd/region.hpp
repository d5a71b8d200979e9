#pragma once

#include <optional>
#include <vector>

#include "pcd/geometry.hpp"

namespace pcd {

// normal . p <= offset, with |normal| = 1 so tolerances are distances.
struct HalfPlane {
  Point2 normal;
  double offset;
};

// Half-plane through `a` and `b` keeping points to the left of a->b inside.
HalfPlane halfplane_left_of(const Point2& a, const Point2& b);
// Half-plane with boundary through `through` whose inside contains `inside`.
HalfPlane halfplane_through(const Point2& through, const Point2& direction, const Point2& inside);

struct Disk {
  Point2 center;
  double radius;
};

enum class DegenerateKind { none, point, segment, empty };

// A convex region: intersection of half-planes, optionally clipped by one
// disk. Regions of zero area carry a degeneracy tag instead of constraints.
struct ProximityRegion {
  std::vector<HalfPlane> halfplanes;
  std::optional<Disk> disk;
  DegenerateKind degenerate = DegenerateKind::none;
  Point2 deg_a = Point2::Zero();
  Point2 deg_b = Point2::Zero();

  static ProximityRegion point(const Point2& p);
  static ProximityRegion segment(const Point2& a, const Point2& b);
  static ProximityRegion empty();

  bool contains(const Point2& p, double tol = kBoundaryTol) const;
};

// Exact polygon area of the half-plane intersection (shoelace on the clipped
// vertex cycle); with a disk present, the polygon/disk overlap via circular
// segment decomposition. Throws UnboundedRegion when the half-planes alone
// do not bound the region and no disk is present.
double region_area(const ProximityRegion& r);

// Vertex cycle (counterclockwise) of the half-plane intersection, disk
// ignored. Throws UnboundedRegion when unbounded.
std::vector<Point2> region_vertices(const ProximityRegion& r);

double polygon_area(const std::vector<Point2>& poly);

// Area of (possibly nonconvex) polygon intersected with a disk.
double polygon_disk_area(const std::vector<Point2>& poly, const Disk& d);

// Triangle half-planes of the frame's basic triangle.
std::vector<HalfPlane> frame_halfplanes(const TriangleFrame& frame);
ProximityRegion frame_region(const TriangleFrame& frame);

}  // namespace pcd

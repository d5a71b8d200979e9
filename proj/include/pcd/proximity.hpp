#pragma once

#include <array>
#include <string>

#include "pcd/partitions.hpp"
#include "pcd/region.hpp"

namespace pcd {

// Which proximity map family and its parameters. Families in the string
// grammar: "sph", "as:M=CC", "pe:r=2,M=CM,method=lines", "cs:tau=1,M=CM",
// "dd:M=CM", "dx". PropEdge accepts r = inf as a distinguished value whose
// region is the whole triangle; it never enters the edge formulas.
struct ProximityMapSpec {
  enum class Family { spherical, arc_slice, prop_edge, central_sim, dir_double, double_x };
  Family family = Family::prop_edge;
  double r = 2.0;    // prop_edge, in [1, inf]
  double tau = 1.0;  // central_sim, in [0, 1]
  CenterSpec center = CenterSpec::cm();
  SchemeMethod method = SchemeMethod::lines;  // vertex-region construction

  static ProximityMapSpec spherical();
  static ProximityMapSpec arc_slice(CenterSpec m, SchemeMethod method);
  static ProximityMapSpec prop_edge(double r, CenterSpec m,
                                    SchemeMethod method = SchemeMethod::lines);
  static ProximityMapSpec central_sim(double tau, CenterSpec m);
  static ProximityMapSpec dir_double(CenterSpec m);
  static ProximityMapSpec double_x();

  void validate() const;  // parameter ranges only; frame-dependent checks happen per frame
  std::string to_string() const;
  static ProximityMapSpec parse(const std::string& text);
};

// Per-frame evaluator: resolves and validates the center and scheme once,
// then answers catch queries cheaply. Coordinates are basic coordinates of
// the frame.
class ProximityEvaluator {
 public:
  ProximityEvaluator(const TriangleFrame& frame, const ProximityMapSpec& spec);

  const TriangleFrame& frame() const { return frame_; }
  const ProximityMapSpec& spec() const { return spec_; }
  const Point2& center() const { return center_; }

  bool catches(const Point2& x, const Point2& y) const;
  // Smallest absolute slack among the inequalities that decided the answer;
  // pairs with tiny margins sit numerically on a region boundary.
  double catch_margin(const Point2& x, const Point2& y) const;

  ProximityRegion region(const Point2& x) const;

 private:
  TriangleFrame frame_;
  ProximityMapSpec spec_;
  Point2 center_ = Point2::Zero();
};

// N(x) for the map family; x in basic coordinates. Only the spherical family
// may extend beyond the triangle; the others require x inside it.
ProximityRegion region(const Point2& x, const TriangleFrame& frame, const ProximityMapSpec& spec);

// y in N(x), evaluated directly from the defining inequalities.
bool catches(const Point2& x, const Point2& y, const TriangleFrame& frame,
             const ProximityMapSpec& spec);

// { x : N(x) = T }. Closed forms are implemented where the region is convex:
// PropEdge with the centroid, CentralSim, ArcSlice/CC, DirDouble with the
// centroid, DoubleX and Spherical.
ProximityRegion superset_region(const TriangleFrame& frame, const ProximityMapSpec& spec);

// The inner triangle of centers M for which the PropEdge superset region is
// empty; defined for r in [1, 3/2).
ProximityRegion t_r_triangle(const TriangleFrame& frame, double r);
std::array<Point2, 3> t_r_corners(const TriangleFrame& frame, double r);

// { x : area of N(x) = 0 }.
struct Lambda0 {
  enum class Kind { finite_points, boundary, whole_triangle };
  Kind kind = Kind::finite_points;
  std::vector<Point2> points;
};
Lambda0 lambda0_region(const TriangleFrame& frame, const ProximityMapSpec& spec);

}  // namespace pcd

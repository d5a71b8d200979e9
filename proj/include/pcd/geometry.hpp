#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>

#include "pcd/predicates.hpp"

namespace pcd {

using Point2 = Eigen::Vector2d;

// Absolute tolerance for point-on-boundary decisions. Predicates that
// determine combinatorial structure (orientation, incircle) are exact.
constexpr double kBoundaryTol = 1e-9;

enum class Errc {
  degenerate_triangle,
  all_collinear,
  duplicate_sites,
  unbounded_region,
  center_outside_triangle,
  projection_off_edge,
  invalid_spec,
  outside_triangle,
  empty_x,
  too_few_vertices,
  instance_too_large,
  invalid_param,
  out_of_support,
  degenerate_sample,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(Errc code);

inline double cross2(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

inline int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  return orient_sign(a.x(), a.y(), b.x(), b.y(), c.x(), c.y());
}

inline int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  return incircle_sign(a.x(), a.y(), b.x(), b.y(), c.x(), c.y(), d.x(), d.y());
}

inline bool finite(const Point2& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

enum class MapKind { rigid, rigid_scale, shear };

// p -> linear * p + offset with a nonsingular linear part.
struct AffineMap {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Point2 offset = Point2::Zero();
  MapKind kind = MapKind::rigid;

  Point2 operator()(const Point2& p) const { return linear * p + offset; }
  AffineMap inverse() const;
};

enum class ShapeClass { acute, right, obtuse, degenerate_interval };

// A triangle together with its basic-triangle parameters (c1, c2) and the
// similarity map that carries the original vertices onto
// ((0,0), (1,0), (c1, c2)). All region and proximity computations downstream
// work in these basic coordinates.
class TriangleFrame {
 public:
  TriangleFrame(const std::array<Point2, 3>& original, double c1, double c2,
                const AffineMap& to_basic);

  // Frame whose original coordinates already are basic coordinates.
  static TriangleFrame from_c(double c1, double c2);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  const std::array<Point2, 3>& vertices() const { return vertices_; }
  const AffineMap& to_basic() const { return to_basic_; }
  ShapeClass shape_class() const { return shape_; }

  // Basic-triangle vertices: 0 -> (0,0), 1 -> (1,0), 2 -> (c1,c2).
  Point2 basic_vertex(int i) const;
  double area() const { return c2_ / 2.0; }

  // Barycentric coordinates of a basic-coordinate point with respect to the
  // basic vertices; lambda[i] is the weight of basic_vertex(i).
  Eigen::Vector3d barycentric(const Point2& p) const;
  bool contains_basic(const Point2& p, double tol = kBoundaryTol) const;

  // Fraction of the way from basic vertex i toward its opposite edge at
  // which the parallel line through p lies (0 at the vertex, 1 on the edge).
  double parallel_fraction(int vertex, const Point2& p) const {
    return 1.0 - barycentric(p)[vertex];
  }

 private:
  std::array<Point2, 3> vertices_;
  double c1_, c2_;
  AffineMap to_basic_;
  ShapeClass shape_;
};

// Carries three non-collinear points to the basic triangle: the longest edge
// maps to the unit segment on the x axis and the apex to (c1, c2) with
// 0 < c1 <= 1/2. Longest-edge ties go to the smallest opposite-vertex index;
// an apex mapping exactly to x = 1/2 takes the lexicographically smaller
// endpoint as the origin.
TriangleFrame normalize_to_basic(const std::array<Point2, 3>& t);

// Shear (u,v) = (x + (1-2*c1)/sqrt(3) * y, sqrt(3)/(2*c2) * y) carrying the
// frame's basic triangle onto the standard equilateral triangle; preserves
// uniformity of uniform samples. Input and output are basic coordinates.
Point2 phi_e(const Point2& p, const TriangleFrame& frame);
Point2 phi_e_inverse(const Point2& p, const TriangleFrame& frame);
AffineMap phi_e_map(const TriangleFrame& frame);

enum class TriangleCenter { cc, ic, cm, oc };

// Center in basic coordinates.
Point2 triangle_center(const TriangleFrame& frame, TriangleCenter which);

}  // namespace pcd

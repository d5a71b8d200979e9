#include "pcd/geometry.hpp"

#include <cmath>

namespace pcd {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::degenerate_triangle: return "DegenerateTriangle";
    case Errc::all_collinear: return "AllCollinear";
    case Errc::duplicate_sites: return "DuplicateSites";
    case Errc::unbounded_region: return "UnboundedRegion";
    case Errc::center_outside_triangle: return "CenterOutsideTriangle";
    case Errc::projection_off_edge: return "ProjectionOffEdge";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::outside_triangle: return "OutsideTriangle";
    case Errc::empty_x: return "EmptyX";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::invalid_param: return "InvalidParam";
    case Errc::out_of_support: return "OutOfSupport";
    case Errc::degenerate_sample: return "DegenerateSample";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

AffineMap AffineMap::inverse() const {
  AffineMap inv;
  inv.linear = linear.inverse();
  inv.offset = -(inv.linear * offset);
  inv.kind = kind;
  return inv;
}

TriangleFrame::TriangleFrame(const std::array<Point2, 3>& original, double c1, double c2,
                             const AffineMap& to_basic)
    : vertices_(original), c1_(c1), c2_(c2), to_basic_(to_basic) {
  double s = c2_ * c2_ - (c1_ - c1_ * c1_);
  if (std::fabs(s) <= kBoundaryTol)
    shape_ = ShapeClass::right;
  else
    shape_ = s > 0.0 ? ShapeClass::acute : ShapeClass::obtuse;
}

TriangleFrame TriangleFrame::from_c(double c1, double c2) {
  if (!(c1 > 0.0 && c1 <= 0.5) || !(c2 > 0.0) || (1.0 - c1) * (1.0 - c1) + c2 * c2 > 1.0 + kBoundaryTol)
    fail(Errc::invalid_param, "(c1,c2) outside the basic-triangle domain");
  std::array<Point2, 3> v = {Point2(0, 0), Point2(1, 0), Point2(c1, c2)};
  return TriangleFrame(v, c1, c2, AffineMap{Eigen::Matrix2d::Identity(), Point2::Zero(), MapKind::rigid_scale});
}

Point2 TriangleFrame::basic_vertex(int i) const {
  switch (i) {
    case 0: return Point2(0, 0);
    case 1: return Point2(1, 0);
    default: return Point2(c1_, c2_);
  }
}

Eigen::Vector3d TriangleFrame::barycentric(const Point2& p) const {
  double l3 = p.y() / c2_;
  double l2 = p.x() - c1_ * l3;
  return Eigen::Vector3d(1.0 - l2 - l3, l2, l3);
}

bool TriangleFrame::contains_basic(const Point2& p, double tol) const {
  Eigen::Vector3d l = barycentric(p);
  return l[0] >= -tol && l[1] >= -tol && l[2] >= -tol;
}

namespace {

double sq_dist(const Point2& a, const Point2& b) { return (a - b).squaredNorm(); }

// Similarity mapping a -> (0,0) and b -> (1,0).
AffineMap unit_edge_map(const Point2& a, const Point2& b) {
  Point2 d = b - a;
  double len2 = d.squaredNorm();
  AffineMap m;
  m.linear << d.x() / len2, d.y() / len2, -d.y() / len2, d.x() / len2;
  m.offset = -(m.linear * a);
  m.kind = MapKind::rigid_scale;
  return m;
}

bool lex_less(const Point2& a, const Point2& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

}  // namespace

TriangleFrame normalize_to_basic(const std::array<Point2, 3>& t) {
  for (const Point2& p : t)
    if (!finite(p)) fail(Errc::degenerate_triangle, "non-finite vertex coordinate");
  if (orient_sign(t[0], t[1], t[2]) == 0)
    fail(Errc::degenerate_triangle, "vertices are collinear");

  // Edge i is opposite vertex i.
  std::array<double, 3> len2;
  for (int i = 0; i < 3; ++i) len2[i] = sq_dist(t[(i + 1) % 3], t[(i + 2) % 3]);
  int longest = 0;
  for (int i = 1; i < 3; ++i)
    if (len2[i] > len2[longest]) longest = i;

  const Point2& apex = t[longest];
  Point2 a = t[(longest + 1) % 3];
  Point2 b = t[(longest + 2) % 3];

  AffineMap m = unit_edge_map(a, b);
  Point2 im = m(apex);
  if (im.y() < 0.0) {
    m.linear.row(1) = -m.linear.row(1);
    m.offset.y() = -m.offset.y();
    im.y() = -im.y();
  }
  bool swap = im.x() > 0.5 || (im.x() == 0.5 && lex_less(b, a));
  if (swap) {
    std::swap(a, b);
    m = unit_edge_map(a, b);
    im = m(apex);
    if (im.y() < 0.0) {
      m.linear.row(1) = -m.linear.row(1);
      m.offset.y() = -m.offset.y();
      im.y() = -im.y();
    }
  }

  double c1 = std::min(im.x(), 0.5);
  double c2 = im.y();
  if (c2 <= 0.0) fail(Errc::degenerate_triangle, "vertices are numerically collinear");
  return TriangleFrame(t, c1, c2, m);
}

Point2 phi_e(const Point2& p, const TriangleFrame& f) {
  constexpr double sqrt3 = 1.7320508075688772;
  return Point2(p.x() + (1.0 - 2.0 * f.c1()) / sqrt3 * p.y(), sqrt3 / (2.0 * f.c2()) * p.y());
}

Point2 phi_e_inverse(const Point2& p, const TriangleFrame& f) {
  constexpr double sqrt3 = 1.7320508075688772;
  return Point2(p.x() - (1.0 - 2.0 * f.c1()) / sqrt3 * p.y(), 2.0 * f.c2() / sqrt3 * p.y());
}

AffineMap phi_e_map(const TriangleFrame& f) {
  constexpr double sqrt3 = 1.7320508075688772;
  AffineMap m;
  m.linear << 1.0, (1.0 - 2.0 * f.c1()) / sqrt3, 0.0, sqrt3 / (2.0 * f.c2());
  m.offset = Point2::Zero();
  m.kind = MapKind::shear;
  return m;
}

Point2 triangle_center(const TriangleFrame& f, TriangleCenter which) {
  double c1 = f.c1(), c2 = f.c2();
  switch (which) {
    case TriangleCenter::cc:
      return Point2(0.5, (c1 * c1 - c1 + c2 * c2) / (2.0 * c2));
    case TriangleCenter::ic: {
      // Edge-length weighted vertex average; edge i is opposite vertex i.
      double e1 = std::hypot(1.0 - c1, c2);
      double e2 = std::hypot(c1, c2);
      double p = e1 + e2 + 1.0;
      return Point2((e2 + c1) / p, c2 / p);
    }
    case TriangleCenter::cm:
      return Point2((1.0 + c1) / 3.0, c2 / 3.0);
    case TriangleCenter::oc:
      return Point2(c1, c1 * (1.0 - c1) / c2);
  }
  fail(Errc::invalid_param, "unknown triangle center");
}

}  // namespace pcd

#include "pcd/region.hpp"

#include <cmath>

namespace pcd {

namespace {

constexpr double kClipBox = 1e7;

std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const HalfPlane& hp) {
  std::vector<Point2> out;
  out.reserve(poly.size() + 2);
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % n];
    double dc = hp.normal.dot(cur) - hp.offset;
    double dn = hp.normal.dot(nxt) - hp.offset;
    if (dc <= 0.0) out.push_back(cur);
    if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn <= 0.0)) {
      double t = dc / (dc - dn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

std::vector<Point2> clip_all(std::vector<Point2> poly, const std::vector<HalfPlane>& hps) {
  for (const HalfPlane& hp : hps) {
    poly = clip_halfplane(poly, hp);
    if (poly.size() < 3) return {};
  }
  return poly;
}

std::vector<Point2> box_polygon(const Point2& lo, const Point2& hi) {
  return {Point2(lo.x(), lo.y()), Point2(hi.x(), lo.y()), Point2(hi.x(), hi.y()),
          Point2(lo.x(), hi.y())};
}

double dist_point_segment(const Point2& p, const Point2& a, const Point2& b) {
  Point2 d = b - a;
  double len2 = d.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

}  // namespace

HalfPlane halfplane_left_of(const Point2& a, const Point2& b) {
  Point2 d = b - a;
  Point2 n(d.y(), -d.x());
  n.normalize();
  return {n, n.dot(a)};
}

HalfPlane halfplane_through(const Point2& through, const Point2& direction, const Point2& inside) {
  Point2 n(direction.y(), -direction.x());
  n.normalize();
  if (n.dot(inside - through) > 0.0) n = -n;
  return {n, n.dot(through)};
}

ProximityRegion ProximityRegion::point(const Point2& p) {
  ProximityRegion r;
  r.degenerate = DegenerateKind::point;
  r.deg_a = p;
  return r;
}

ProximityRegion ProximityRegion::segment(const Point2& a, const Point2& b) {
  ProximityRegion r;
  r.degenerate = DegenerateKind::segment;
  r.deg_a = a;
  r.deg_b = b;
  return r;
}

ProximityRegion ProximityRegion::empty() {
  ProximityRegion r;
  r.degenerate = DegenerateKind::empty;
  return r;
}

bool ProximityRegion::contains(const Point2& p, double tol) const {
  switch (degenerate) {
    case DegenerateKind::empty:
      return false;
    case DegenerateKind::point:
      return (p - deg_a).norm() <= tol;
    case DegenerateKind::segment:
      return dist_point_segment(p, deg_a, deg_b) <= tol;
    case DegenerateKind::none:
      break;
  }
  for (const HalfPlane& hp : halfplanes)
    if (hp.normal.dot(p) > hp.offset + tol) return false;
  if (disk && (p - disk->center).norm() > disk->radius + tol) return false;
  return true;
}

double polygon_area(const std::vector<Point2>& poly) {
  double a = 0.0;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) a += cross2(poly[i], poly[(i + 1) % n]);
  return a / 2.0;
}

double polygon_disk_area(const std::vector<Point2>& poly, const Disk& d) {
  if (poly.size() < 3) return 0.0;
  double r = d.radius;
  if (r <= 0.0) return 0.0;
  double r2 = r * r;
  double total = 0.0;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point2 a = poly[i] - d.center;
    Point2 b = poly[(i + 1) % n] - d.center;
    Point2 dir = b - a;

    // Parameters where the edge crosses the circle.
    double qa = dir.squaredNorm();
    double qb = 2.0 * a.dot(dir);
    double qc = a.squaredNorm() - r2;
    double ts[4] = {0.0, 1.0, 1.0, 1.0};
    int nt = 1;
    if (qa > 0.0) {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc > 0.0) {
        double sd = std::sqrt(disc);
        double t1 = (-qb - sd) / (2.0 * qa);
        double t2 = (-qb + sd) / (2.0 * qa);
        if (t1 > 0.0 && t1 < 1.0) ts[nt++] = t1;
        if (t2 > 0.0 && t2 < 1.0 && t2 > t1) ts[nt++] = t2;
      }
    }
    ts[nt++] = 1.0;
    for (int k = 0; k + 1 < nt; ++k) {
      double s = ts[k], e = ts[k + 1];
      if (e <= s) continue;
      Point2 ps = a + s * dir;
      Point2 pe = a + e * dir;
      Point2 mid = a + 0.5 * (s + e) * dir;
      if (mid.squaredNorm() <= r2) {
        total += cross2(ps, pe) / 2.0;
      } else {
        double ang = std::atan2(cross2(ps, pe), ps.dot(pe));
        total += r2 * ang / 2.0;
      }
    }
  }
  return total;
}

std::vector<Point2> region_vertices(const ProximityRegion& r) {
  if (r.degenerate != DegenerateKind::none) return {};
  Point2 lo(-kClipBox, -kClipBox), hi(kClipBox, kClipBox);
  if (r.disk) {
    lo = r.disk->center - Point2(r.disk->radius, r.disk->radius);
    hi = r.disk->center + Point2(r.disk->radius, r.disk->radius);
  }
  std::vector<Point2> poly = clip_all(box_polygon(lo, hi), r.halfplanes);
  if (!r.disk) {
    for (const Point2& p : poly)
      if (std::fabs(p.x()) >= 0.9 * kClipBox || std::fabs(p.y()) >= 0.9 * kClipBox)
        fail(Errc::unbounded_region, "half-planes do not bound the region");
  }
  if (polygon_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
  return poly;
}

double region_area(const ProximityRegion& r) {
  if (r.degenerate != DegenerateKind::none) return 0.0;
  std::vector<Point2> poly = region_vertices(r);
  if (poly.size() < 3) return 0.0;
  if (r.disk) return polygon_disk_area(poly, *r.disk);
  return polygon_area(poly);
}

std::vector<HalfPlane> frame_halfplanes(const TriangleFrame& f) {
  Point2 v0 = f.basic_vertex(0), v1 = f.basic_vertex(1), v2 = f.basic_vertex(2);
  return {halfplane_left_of(v0, v1), halfplane_left_of(v1, v2), halfplane_left_of(v2, v0)};
}

ProximityRegion frame_region(const TriangleFrame& f) {
  ProximityRegion r;
  r.halfplanes = frame_halfplanes(f);
  return r;
}

}  // namespace pcd

#include "pcd/proximity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool exactly_at(const Point2& p, const Point2& q) {
  return p.x() == q.x() && p.y() == q.y();
}

// The barycentric weight of vertex i as an affine functional a.p + b.
void lambda_functional(const TriangleFrame& f, int i, Point2& a, double& b) {
  double c1 = f.c1(), c2 = f.c2();
  switch (i) {
    case 0: a = Point2(-1.0, (c1 - 1.0) / c2); b = 1.0; break;
    case 1: a = Point2(1.0, -c1 / c2); b = 0.0; break;
    default: a = Point2(0.0, 1.0 / c2); b = 0.0; break;
  }
}

HalfPlane lambda_halfplane(const TriangleFrame& f, int i, double t, bool at_least) {
  Point2 a;
  double b;
  lambda_functional(f, i, a, b);
  // at_least: a.p + b >= t  <=>  (-a).p <= b - t
  Point2 n = at_least ? Point2(-a) : a;
  double c = at_least ? b - t : t - b;
  double len = n.norm();
  return {n / len, c / len};
}

std::string center_to_string(const CenterSpec& m) {
  switch (m.kind) {
    case CenterSpec::Kind::cc: return "CC";
    case CenterSpec::Kind::ic: return "IC";
    case CenterSpec::Kind::cm: return "CM";
    case CenterSpec::Kind::oc: return "OC";
    case CenterSpec::Kind::custom: {
      char buf[80];
      std::snprintf(buf, sizeof buf, "custom(%.17g;%.17g)", m.custom_point.x(),
                    m.custom_point.y());
      return buf;
    }
  }
  return "CM";
}

CenterSpec center_from_string(const std::string& s) {
  if (s == "CC") return CenterSpec::cc();
  if (s == "IC") return CenterSpec::ic();
  if (s == "CM") return CenterSpec::cm();
  if (s == "OC") return CenterSpec::oc();
  if (s.rfind("custom(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(7, s.size() - 8);
    auto semi = body.find(';');
    if (semi != std::string::npos) {
      try {
        double x = std::stod(body.substr(0, semi));
        double y = std::stod(body.substr(semi + 1));
        return CenterSpec::custom(Point2(x, y));
      } catch (const std::exception&) {
      }
    }
  }
  fail(Errc::invalid_spec, "unknown center '" + s + "'");
}

}  // namespace

ProximityMapSpec ProximityMapSpec::spherical() {
  ProximityMapSpec s;
  s.family = Family::spherical;
  return s;
}

ProximityMapSpec ProximityMapSpec::arc_slice(CenterSpec m, SchemeMethod method) {
  ProximityMapSpec s;
  s.family = Family::arc_slice;
  s.center = m;
  s.method = method;
  return s;
}

ProximityMapSpec ProximityMapSpec::prop_edge(double r, CenterSpec m, SchemeMethod method) {
  ProximityMapSpec s;
  s.family = Family::prop_edge;
  s.r = r;
  s.center = m;
  s.method = method;
  return s;
}

ProximityMapSpec ProximityMapSpec::central_sim(double tau, CenterSpec m) {
  ProximityMapSpec s;
  s.family = Family::central_sim;
  s.tau = tau;
  s.center = m;
  return s;
}

ProximityMapSpec ProximityMapSpec::dir_double(CenterSpec m) {
  ProximityMapSpec s;
  s.family = Family::dir_double;
  s.center = m;
  return s;
}

ProximityMapSpec ProximityMapSpec::double_x() {
  ProximityMapSpec s;
  s.family = Family::double_x;
  return s;
}

void ProximityMapSpec::validate() const {
  if (family == Family::prop_edge && !(r >= 1.0))
    fail(Errc::invalid_spec, "prop_edge needs r >= 1");
  if (family == Family::central_sim && !(tau >= 0.0 && tau <= 1.0))
    fail(Errc::invalid_spec, "central_sim needs tau in [0, 1]");
}

std::string ProximityMapSpec::to_string() const {
  std::ostringstream out;
  char num[40];
  auto fmt = [&num](double v) -> const char* {
    std::snprintf(num, sizeof num, "%.17g", v);
    return num;
  };
  switch (family) {
    case Family::spherical:
      out << "sph";
      break;
    case Family::arc_slice:
      out << "as:M=" << center_to_string(center)
          << ",method=" << (method == SchemeMethod::lines ? "lines" : "orthogonal");
      break;
    case Family::prop_edge:
      out << "pe:r=" << (std::isinf(r) ? "inf" : fmt(r)) << ",M=" << center_to_string(center)
          << ",method=" << (method == SchemeMethod::lines ? "lines" : "orthogonal");
      break;
    case Family::central_sim:
      out << "cs:tau=" << fmt(tau) << ",M=" << center_to_string(center);
      break;
    case Family::dir_double:
      out << "dd:M=" << center_to_string(center);
      break;
    case Family::double_x:
      out << "dx";
      break;
  }
  return out.str();
}

ProximityMapSpec ProximityMapSpec::parse(const std::string& text) {
  std::string fam = text;
  std::string rest;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    fam = text.substr(0, colon);
    rest = text.substr(colon + 1);
  }
  ProximityMapSpec s;
  if (fam == "sph") s.family = Family::spherical;
  else if (fam == "as") s.family = Family::arc_slice;
  else if (fam == "pe") s.family = Family::prop_edge;
  else if (fam == "cs") s.family = Family::central_sim;
  else if (fam == "dd") s.family = Family::dir_double;
  else if (fam == "dx") s.family = Family::double_x;
  else fail(Errc::invalid_spec, "unknown proximity family '" + fam + "'");

  bool saw_method = false, saw_r = false, saw_tau = false;
  std::string item;
  std::istringstream in(rest);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(Errc::invalid_spec, "expected key=value in '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "r") {
      saw_r = true;
      if (val == "inf") s.r = kInf;
      else {
        try { s.r = std::stod(val); } catch (const std::exception&) {
          fail(Errc::invalid_spec, "bad value for r: '" + val + "'");
        }
      }
    } else if (key == "tau") {
      saw_tau = true;
      try { s.tau = std::stod(val); } catch (const std::exception&) {
        fail(Errc::invalid_spec, "bad value for tau: '" + val + "'");
      }
    } else if (key == "M") {
      s.center = center_from_string(val);
    } else if (key == "method") {
      saw_method = true;
      if (val == "lines") s.method = SchemeMethod::lines;
      else if (val == "orthogonal") s.method = SchemeMethod::orthogonal;
      else fail(Errc::invalid_spec, "unknown method '" + val + "'");
    } else {
      fail(Errc::invalid_spec, "unknown key '" + key + "'");
    }
  }
  if (s.family == Family::prop_edge && !saw_r)
    fail(Errc::invalid_spec, "prop_edge needs r=<value>");
  if (s.family == Family::central_sim && !saw_tau)
    fail(Errc::invalid_spec, "central_sim needs tau=<value>");
  if (!saw_method && (s.family == Family::arc_slice || s.family == Family::prop_edge))
    s.method = s.center.kind == CenterSpec::Kind::cc ? SchemeMethod::orthogonal
                                                     : SchemeMethod::lines;
  s.validate();
  return s;
}

ProximityEvaluator::ProximityEvaluator(const TriangleFrame& frame, const ProximityMapSpec& spec)
    : frame_(frame), spec_(spec) {
  spec_.validate();
  switch (spec_.family) {
    case ProximityMapSpec::Family::spherical:
    case ProximityMapSpec::Family::double_x:
      break;
    case ProximityMapSpec::Family::arc_slice:
    case ProximityMapSpec::Family::prop_edge:
      validate_vertex_scheme(frame_, spec_.center, spec_.method);
      center_ = resolve_center(frame_, spec_.center);
      break;
    case ProximityMapSpec::Family::central_sim:
    case ProximityMapSpec::Family::dir_double:
      validate_edge_scheme(frame_, spec_.center);
      center_ = resolve_center(frame_, spec_.center);
      break;
  }
}

bool ProximityEvaluator::catches(const Point2& x, const Point2& y) const {
  using Family = ProximityMapSpec::Family;
  if (spec_.family != Family::spherical && !frame_.contains_basic(x))
    fail(Errc::outside_triangle, "x outside the triangle");

  switch (spec_.family) {
    case Family::spherical: {
      double r2 = kInf;
      for (int i = 0; i < 3; ++i)
        r2 = std::min(r2, (x - frame_.basic_vertex(i)).squaredNorm());
      return (y - x).squaredNorm() < r2;
    }
    case Family::arc_slice: {
      int i = vertex_region_resolved(x, frame_, center_, spec_.method);
      double r2 = (x - frame_.basic_vertex(i)).squaredNorm();
      return frame_.contains_basic(y, 0.0) && (y - x).squaredNorm() <= r2;
    }
    case Family::prop_edge: {
      for (int i = 0; i < 3; ++i)
        if (exactly_at(x, frame_.basic_vertex(i))) return exactly_at(y, x);
      if (std::isinf(spec_.r)) return frame_.contains_basic(y, 0.0);
      int i = vertex_region_resolved(x, frame_, center_, spec_.method);
      return frame_.contains_basic(y, 0.0) &&
             frame_.parallel_fraction(i, y) <= spec_.r * frame_.parallel_fraction(i, x);
    }
    case Family::central_sim: {
      if (spec_.tau <= 0.0) return exactly_at(y, x);
      int i = edge_region_resolved(x, frame_, center_);
      double lx = frame_.barycentric(x)[i];
      if (lx <= 0.0) return exactly_at(y, x);
      double s = spec_.tau * lx / frame_.barycentric(center_)[i];
      Point2 pre = center_ + (y - x) / s;
      return frame_.contains_basic(pre, 0.0);
    }
    case Family::dir_double: {
      int i = edge_region_resolved(x, frame_, center_);
      double lx = frame_.barycentric(x)[i];
      return frame_.contains_basic(y, 0.0) && frame_.barycentric(y)[i] <= 2.0 * lx;
    }
    case Family::double_x: {
      if (exactly_at(x, frame_.basic_vertex(0)) || exactly_at(x, frame_.basic_vertex(1)))
        return exactly_at(y, x);
      if (!frame_.contains_basic(y, 0.0)) return false;
      if (x.x() <= 0.5) return y.x() <= 2.0 * x.x();
      return 1.0 - y.x() <= 2.0 * (1.0 - x.x());
    }
  }
  fail(Errc::invalid_spec, "unknown proximity family");
}

double ProximityEvaluator::catch_margin(const Point2& x, const Point2& y) const {
  using Family = ProximityMapSpec::Family;
  double margin = kInf;
  auto note = [&margin](double v) { margin = std::min(margin, std::fabs(v)); };

  Eigen::Vector3d ly = frame_.barycentric(y);
  switch (spec_.family) {
    case Family::spherical: {
      double r2 = kInf;
      for (int i = 0; i < 3; ++i)
        r2 = std::min(r2, (x - frame_.basic_vertex(i)).squaredNorm());
      note(std::sqrt(r2) - (y - x).norm());
      break;
    }
    case Family::arc_slice:
    case Family::prop_edge: {
      for (int j = 0; j < 3; ++j) {
        Point2 dir;
        if (spec_.method == SchemeMethod::lines) {
          dir = frame_.basic_vertex(j) - center_;
        } else {
          Point2 a = frame_.basic_vertex((j + 1) % 3), b = frame_.basic_vertex((j + 2) % 3);
          Point2 e = b - a;
          dir = Point2(-e.y(), e.x());
        }
        note(cross2(dir.normalized(), x - center_));
      }
      int i = vertex_region_resolved(x, frame_, center_, spec_.method);
      if (spec_.family == Family::arc_slice) {
        note((x - frame_.basic_vertex(i)).norm() - (y - x).norm());
      } else if (!std::isinf(spec_.r)) {
        note(spec_.r * frame_.parallel_fraction(i, x) - frame_.parallel_fraction(i, y));
      }
      for (int k = 0; k < 3; ++k) note(ly[k]);
      break;
    }
    case Family::central_sim:
    case Family::dir_double: {
      for (int j = 0; j < 3; ++j)
        note(cross2((frame_.basic_vertex(j) - center_).normalized(), x - center_));
      int i = edge_region_resolved(x, frame_, center_);
      double lx = frame_.barycentric(x)[i];
      if (spec_.family == Family::dir_double) {
        note(2.0 * lx - ly[i]);
        for (int k = 0; k < 3; ++k) note(ly[k]);
      } else if (spec_.tau > 0.0 && lx > 0.0) {
        double s = spec_.tau * lx / frame_.barycentric(center_)[i];
        Eigen::Vector3d lp = frame_.barycentric(center_ + (y - x) / s);
        for (int k = 0; k < 3; ++k) note(lp[k] * s);
      } else {
        note(lx);
      }
      break;
    }
    case Family::double_x: {
      note(x.x() - 0.5);
      if (x.x() <= 0.5) note(2.0 * x.x() - y.x());
      else note(2.0 * (1.0 - x.x()) - (1.0 - y.x()));
      for (int k = 0; k < 3; ++k) note(ly[k]);
      break;
    }
  }
  return margin;
}

ProximityRegion ProximityEvaluator::region(const Point2& x) const {
  using Family = ProximityMapSpec::Family;
  if (spec_.family != Family::spherical && !frame_.contains_basic(x))
    fail(Errc::outside_triangle, "x outside the triangle");

  switch (spec_.family) {
    case Family::spherical: {
      double r2 = kInf;
      for (int i = 0; i < 3; ++i)
        r2 = std::min(r2, (x - frame_.basic_vertex(i)).squaredNorm());
      ProximityRegion reg;
      reg.disk = Disk{x, std::sqrt(r2)};
      return reg;
    }
    case Family::arc_slice: {
      int i = vertex_region_resolved(x, frame_, center_, spec_.method);
      ProximityRegion reg = frame_region(frame_);
      reg.disk = Disk{x, (x - frame_.basic_vertex(i)).norm()};
      return reg;
    }
    case Family::prop_edge: {
      for (int i = 0; i < 3; ++i)
        if (exactly_at(x, frame_.basic_vertex(i))) return ProximityRegion::point(x);
      if (std::isinf(spec_.r)) return frame_region(frame_);
      int i = vertex_region_resolved(x, frame_, center_, spec_.method);
      ProximityRegion reg = frame_region(frame_);
      double t = 1.0 - spec_.r * frame_.parallel_fraction(i, x);
      reg.halfplanes.push_back(lambda_halfplane(frame_, i, t, true));
      return reg;
    }
    case Family::central_sim: {
      if (spec_.tau <= 0.0) return ProximityRegion::point(x);
      int i = edge_region_resolved(x, frame_, center_);
      double lx = frame_.barycentric(x)[i];
      if (lx <= 0.0) return ProximityRegion::point(x);
      double s = spec_.tau * lx / frame_.barycentric(center_)[i];
      ProximityRegion reg;
      for (const HalfPlane& hp : frame_halfplanes(frame_)) {
        double off = s * (hp.offset - hp.normal.dot(center_)) + hp.normal.dot(x);
        reg.halfplanes.push_back({hp.normal, off});
      }
      return reg;
    }
    case Family::dir_double: {
      int i = edge_region_resolved(x, frame_, center_);
      double lx = frame_.barycentric(x)[i];
      if (lx <= 0.0) {
        Point2 a = frame_.basic_vertex((i + 1) % 3), b = frame_.basic_vertex((i + 2) % 3);
        return ProximityRegion::segment(a, b);
      }
      ProximityRegion reg = frame_region(frame_);
      reg.halfplanes.push_back(lambda_halfplane(frame_, i, 2.0 * lx, false));
      return reg;
    }
    case Family::double_x: {
      if (exactly_at(x, frame_.basic_vertex(0)) || exactly_at(x, frame_.basic_vertex(1)))
        return ProximityRegion::point(x);
      ProximityRegion reg = frame_region(frame_);
      if (x.x() <= 0.5)
        reg.halfplanes.push_back({Point2(1, 0), 2.0 * x.x()});
      else
        reg.halfplanes.push_back({Point2(-1, 0), 2.0 * (1.0 - x.x()) - 1.0});
      return reg;
    }
  }
  fail(Errc::invalid_spec, "unknown proximity family");
}

ProximityRegion region(const Point2& x, const TriangleFrame& frame, const ProximityMapSpec& spec) {
  return ProximityEvaluator(frame, spec).region(x);
}

bool catches(const Point2& x, const Point2& y, const TriangleFrame& frame,
             const ProximityMapSpec& spec) {
  return ProximityEvaluator(frame, spec).catches(x, y);
}

ProximityRegion t_r_triangle(const TriangleFrame& f, double r) {
  if (!(r >= 1.0 && r < 1.5)) fail(Errc::invalid_spec, "t_r triangle needs r in [1, 3/2)");
  double c1 = f.c1(), c2 = f.c2();
  ProximityRegion reg;
  // y >= c2 (r-1)/r
  reg.halfplanes.push_back({Point2(0, -1), -c2 * (r - 1.0) / r});
  // y <= c2 (1 - r x) / (r (1 - c1))  <=>  r c2 x + r (1-c1) y <= c2
  {
    Point2 n(r * c2, r * (1.0 - c1));
    double len = n.norm();
    reg.halfplanes.push_back({n / len, c2 / len});
  }
  // y <= c2 (r (x-1) + 1) / (r c1)  <=>  -r c2 x + r c1 y <= c2 (1 - r)
  {
    Point2 n(-r * c2, r * c1);
    double len = n.norm();
    reg.halfplanes.push_back({n / len, c2 * (1.0 - r) / len});
  }
  return reg;
}

std::array<Point2, 3> t_r_corners(const TriangleFrame& f, double r) {
  if (!(r >= 1.0 && r < 1.5)) fail(Errc::invalid_spec, "t_r triangle needs r in [1, 3/2)");
  double c1 = f.c1(), c2 = f.c2();
  // The printed corner t3 has ordinate c2 (2-r)/r, obtained by intersecting
  // the two upper constraints.
  return {Point2((r - 1.0) * (1.0 + c1) / r, c2 * (r - 1.0) / r),
          Point2((2.0 - r + c1 * (r - 1.0)) / r, c2 * (r - 1.0) / r),
          Point2((c1 * (2.0 - r) + r - 1.0) / r, c2 * (2.0 - r) / r)};
}

ProximityRegion superset_region(const TriangleFrame& f, const ProximityMapSpec& spec) {
  using Family = ProximityMapSpec::Family;
  spec.validate();
  switch (spec.family) {
    case Family::spherical: {
      if (f.shape_class() == ShapeClass::obtuse) return ProximityRegion::empty();
      return ProximityRegion::point(triangle_center(f, TriangleCenter::cc));
    }
    case Family::arc_slice: {
      if (spec.center.kind != CenterSpec::Kind::cc)
        fail(Errc::invalid_spec, "arc-slice superset region implemented for M = CC only");
      if (f.shape_class() == ShapeClass::obtuse) return ProximityRegion::empty();
      return ProximityRegion::point(triangle_center(f, TriangleCenter::cc));
    }
    case Family::prop_edge: {
      if (spec.center.kind != CenterSpec::Kind::cm || spec.method != SchemeMethod::lines)
        fail(Errc::invalid_spec,
             "prop-edge superset region implemented for M = CM with the lines scheme");
      if (std::isinf(spec.r)) return frame_region(f);
      if (spec.r < 1.5 - 1e-12) return ProximityRegion::empty();
      if (spec.r <= 1.5 + 1e-12)
        return ProximityRegion::point(triangle_center(f, TriangleCenter::cm));
      ProximityRegion reg = frame_region(f);
      double t = (spec.r - 1.0) / spec.r;
      for (int i = 0; i < 3; ++i) reg.halfplanes.push_back(lambda_halfplane(f, i, t, false));
      return reg;
    }
    case Family::central_sim: {
      validate_edge_scheme(f, spec.center);
      if (spec.tau < 1.0 - 1e-12) return ProximityRegion::empty();
      return ProximityRegion::point(resolve_center(f, spec.center));
    }
    case Family::dir_double: {
      validate_edge_scheme(f, spec.center);
      Eigen::Vector3d lm = f.barycentric(resolve_center(f, spec.center));
      if (lm.maxCoeff() <= 0.5 + kBoundaryTol) return ProximityRegion::empty();
      fail(Errc::invalid_spec,
           "directional-doubling superset region implemented for M in the medial triangle only");
    }
    case Family::double_x: {
      double ytop = f.c2() / (2.0 * (1.0 - f.c1()));
      return ProximityRegion::segment(Point2(0.5, 0.0), Point2(0.5, ytop));
    }
  }
  fail(Errc::invalid_spec, "unknown proximity family");
}

Lambda0 lambda0_region(const TriangleFrame& f, const ProximityMapSpec& spec) {
  using Family = ProximityMapSpec::Family;
  spec.validate();
  Lambda0 out;
  switch (spec.family) {
    case Family::spherical:
    case Family::arc_slice:
    case Family::prop_edge:
      out.kind = Lambda0::Kind::finite_points;
      out.points = {f.basic_vertex(0), f.basic_vertex(1), f.basic_vertex(2)};
      return out;
    case Family::central_sim:
      out.kind = spec.tau <= 0.0 ? Lambda0::Kind::whole_triangle : Lambda0::Kind::boundary;
      return out;
    case Family::dir_double:
      out.kind = Lambda0::Kind::boundary;
      return out;
    case Family::double_x:
      out.kind = Lambda0::Kind::finite_points;
      out.points = {f.basic_vertex(0), f.basic_vertex(1)};
      return out;
  }
  fail(Errc::invalid_spec, "unknown proximity family");
}

}  // namespace pcd

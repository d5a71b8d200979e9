#include "pcd/quadrature.hpp"

#include <cmath>

namespace pcd {

namespace {

// G7/K15 nodes and weights on [-1, 1]; even nodes are the Gauss points.
constexpr int kN = 15;
constexpr double kNode[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWeightK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWeightG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GK {
  double kronrod, err;
};

GK gk15(const std::function<double(double)>& f, double a, double b) {
  double h = (b - a) / 2.0, c = (a + b) / 2.0;
  double fk = 0.0, fg = 0.0;
  for (int i = 0; i < 8; ++i) {
    double v = f(c + h * kNode[i]);
    if (kNode[i] != 0.0) v += f(c - h * kNode[i]);
    fk += kWeightK[i] * v;
    // Gauss nodes are the odd-index entries plus the center.
    if (i % 2 == 1 || i == 7) fg += kWeightG[i / 2] * v;
  }
  return {fk * h, std::fabs((fk - fg) * h)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
  GK r = gk15(f, a, b);
  if (r.err <= tol || depth > 48) return r.kronrod;
  double m = (a + b) / 2.0;
  return adapt(f, a, m, tol / 2.0, depth + 1) + adapt(f, m, b, tol / 2.0, depth + 1);
}

struct GK2 {
  double kronrod, err;
};

GK2 gk15_2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
            double by) {
  double hx = (bx - ax) / 2.0, cx = (ax + bx) / 2.0;
  double hy = (by - ay) / 2.0, cy = (ay + by) / 2.0;
  double xs[kN], wkx[kN], wgx[kN], ys[kN], wky[kN], wgy[kN];
  int n = 0;
  for (int i = 0; i < 8; ++i) {
    xs[n] = cx + hx * kNode[i];
    ys[n] = cy + hy * kNode[i];
    wkx[n] = kWeightK[i];
    wgx[n] = (i % 2 == 1 || i == 7) ? kWeightG[i / 2] : 0.0;
    wky[n] = wkx[n];
    wgy[n] = wgx[n];
    ++n;
    if (kNode[i] != 0.0) {
      xs[n] = cx - hx * kNode[i];
      ys[n] = cy - hy * kNode[i];
      wkx[n] = wkx[n - 1];
      wgx[n] = wgx[n - 1];
      wky[n] = wkx[n];
      wgy[n] = wgx[n];
      ++n;
    }
  }
  double sk = 0.0, sg = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = f(xs[i], ys[j]);
      sk += wkx[i] * wky[j] * v;
      sg += wgx[i] * wgy[j] * v;
    }
  }
  double scale = hx * hy;
  return {sk * scale, std::fabs(sk - sg) * scale};
}

double adapt2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
               double by, double tol, int depth) {
  GK2 r = gk15_2d(f, ax, bx, ay, by);
  if (r.err <= tol || depth > 22) return r.kronrod;
  double mx = (ax + bx) / 2.0, my = (ay + by) / 2.0;
  return adapt2d(f, ax, mx, ay, my, tol / 4.0, depth + 1) +
         adapt2d(f, mx, bx, ay, my, tol / 4.0, depth + 1) +
         adapt2d(f, ax, mx, my, by, tol / 4.0, depth + 1) +
         adapt2d(f, mx, bx, my, by, tol / 4.0, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  return adapt(f, a, b, abs_tol, 0);
}

double integrate_semi_infinite(const std::function<double(double)>& f, double a, double abs_tol) {
  auto g = [&](double t) {
    double u = 1.0 - t;
    double x = a + t / u;
    double v = f(x);
    return v == 0.0 ? 0.0 : v / (u * u);
  };
  return adapt(g, 0.0, 1.0 - 1e-14, abs_tol, 0);
}

double integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                   double ay, double by, double abs_tol) {
  return adapt2d(f, ax, bx, ay, by, abs_tol, 0);
}

double integrate2d_quadrant(const std::function<double(double, double)>& f, double abs_tol) {
  auto g = [&](double s, double t) {
    double us = 1.0 - s, ut = 1.0 - t;
    double v = f(s / us, t / ut);
    return v == 0.0 ? 0.0 : v / (us * us * ut * ut);
  };
  return adapt2d(g, 0.0, 1.0 - 1e-12, 0.0, 1.0 - 1e-12, abs_tol, 0);
}

}  // namespace pcd

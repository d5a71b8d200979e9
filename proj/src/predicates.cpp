#include "pcd/predicates.hpp"

#include <cmath>
#include <vector>

namespace pcd {
namespace {

// 2^-53, the half-ulp used in the classic filter bounds.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kCcwBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccBoundA = (10.0 + 96.0 * kEps) * kEps;

struct TwoD {
  double hi, lo;
};

inline TwoD two_sum(double a, double b) {
  double x = a + b;
  double bv = x - a;
  double av = x - bv;
  double br = b - bv;
  double ar = a - av;
  return {x, ar + br};
}

inline TwoD two_diff(double a, double b) {
  double x = a - b;
  double bv = a - x;
  double av = x + bv;
  double br = bv - b;
  double ar = a - av;
  return {x, ar + br};
}

inline TwoD two_prod(double a, double b) {
  double x = a * b;
  return {x, std::fma(a, b, -x)};
}

// Nonoverlapping expansion, components in ascending magnitude order.
using Expansion = std::vector<double>;

// e += b, exactly; preserves the expansion invariant (Shewchuk, grow-expansion).
void grow(Expansion& e, double b) {
  double q = b;
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    TwoD s = two_sum(q, e[i]);
    q = s.hi;
    if (s.lo != 0.0) e[out++] = s.lo;
  }
  e.resize(out);
  if (q != 0.0 || e.empty()) e.push_back(q);
}

inline void add_product(Expansion& e, double a, double b) {
  TwoD p = two_prod(a, b);
  if (p.lo != 0.0) grow(e, p.lo);
  if (p.hi != 0.0) grow(e, p.hi);
}

// e += u * v for expansions u, v.
void add_expansion_product(Expansion& e, const Expansion& u, const Expansion& v) {
  for (double a : u)
    for (double b : v) add_product(e, a, b);
}

inline int sign_of(const Expansion& e) {
  double top = e.empty() ? 0.0 : e.back();
  return (top > 0.0) - (top < 0.0);
}

inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

int orient_exact(double ax, double ay, double bx, double by, double cx, double cy) {
  // (b-a) x (c-a), fully expanded into monomials of the inputs.
  Expansion det;
  add_product(det, bx, cy);
  add_product(det, -bx, ay);
  add_product(det, -ax, cy);
  add_product(det, -by, cx);
  add_product(det, by, ax);
  add_product(det, ay, cx);
  return sign_of(det);
}

Expansion exp_diff(double a, double b) {
  TwoD d = two_diff(a, b);
  Expansion e;
  if (d.lo != 0.0) e.push_back(d.lo);
  e.push_back(d.hi);
  return e;
}

Expansion exp_product(const Expansion& u, const Expansion& v) {
  Expansion e;
  add_expansion_product(e, u, v);
  if (e.empty()) e.push_back(0.0);
  return e;
}

Expansion exp_sub(const Expansion& u, const Expansion& v) {
  Expansion e = u;
  for (double t : v)
    if (t != 0.0) grow(e, -t);
  return e;
}

Expansion exp_add(const Expansion& u, const Expansion& v) {
  Expansion e = u;
  for (double t : v)
    if (t != 0.0) grow(e, t);
  return e;
}

int incircle_exact(double ax, double ay, double bx, double by,
                   double cx, double cy, double dx, double dy) {
  Expansion adx = exp_diff(ax, dx), ady = exp_diff(ay, dy);
  Expansion bdx = exp_diff(bx, dx), bdy = exp_diff(by, dy);
  Expansion cdx = exp_diff(cx, dx), cdy = exp_diff(cy, dy);

  Expansion alift = exp_add(exp_product(adx, adx), exp_product(ady, ady));
  Expansion blift = exp_add(exp_product(bdx, bdx), exp_product(bdy, bdy));
  Expansion clift = exp_add(exp_product(cdx, cdx), exp_product(cdy, cdy));

  Expansion minor_a = exp_sub(exp_product(bdx, cdy), exp_product(cdx, bdy));
  Expansion minor_b = exp_sub(exp_product(cdx, ady), exp_product(adx, cdy));
  Expansion minor_c = exp_sub(exp_product(adx, bdy), exp_product(bdx, ady));

  Expansion det;
  add_expansion_product(det, alift, minor_a);
  add_expansion_product(det, blift, minor_b);
  add_expansion_product(det, clift, minor_c);
  return sign_of(det);
}

}  // namespace

int orient_sign(double ax, double ay, double bx, double by, double cx, double cy) {
  double detleft = (ax - cx) * (by - cy);
  double detright = (ay - cy) * (bx - cx);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(det);
  }
  double errbound = kCcwBoundA * detsum;
  if (det >= errbound || -det >= errbound) return sign_of(det);
  return orient_exact(ax, ay, bx, by, cx, cy);
}

int incircle_sign(double ax, double ay, double bx, double by,
                  double cx, double cy, double dx, double dy) {
  double adx = ax - dx, ady = ay - dy;
  double bdx = bx - dx, bdy = by - dy;
  double cdx = cx - dx, cdy = cy - dy;

  double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  double cdxady = cdx * ady, adxcdy = adx * cdy;
  double adxbdy = adx * bdy, bdxady = bdx * ady;
  double alift = adx * adx + ady * ady;
  double blift = bdx * bdx + bdy * bdy;
  double clift = cdx * cdx + cdy * cdy;

  double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
               clift * (adxbdy - bdxady);
  double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                     (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                     (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  double errbound = kIccBoundA * permanent;
  if (det > errbound || -det > errbound) return sign_of(det);
  return incircle_exact(ax, ay, bx, by, cx, cy, dx, dy);
}

}  // namespace pcd

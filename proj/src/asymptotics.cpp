#include "pcd/asymptotics.hpp"

#include <cmath>

#include "pcd/quadrature.hpp"

namespace pcd {

namespace detail {

double mu_pe_branch(int branch, double r) {
  switch (branch) {
    case 0: return 37.0 / 216.0 * r * r;
    case 1: return -r * r / 8.0 + 4.0 - 8.0 / r + 4.5 / (r * r);
    default: return 1.0 - 1.5 / (r * r);
  }
}

namespace {

double poly(const double* coef, int n, double r) {
  double v = 0.0;
  for (int i = 0; i < n; ++i) v = v * r + coef[i];
  return v;
}

}  // namespace

double nu_pe_branch(int branch, double r) {
  switch (branch) {
    case 0: {
      static const double c[] = {3007, -13824, 898, 77760, -117953, 48888,
                                 -24246, 60480, -38880, 0, 3888};
      return poly(c, 11, r) / (58320.0 * std::pow(r, 4));
    }
    case 1: {
      static const double c[] = {5467, -37800, 61912, 0, 46588, -191520,
                                 13608, 241920, -155520, 0, 15552};
      return poly(c, 11, r) / (233280.0 * std::pow(r, 4));
    }
    case 2: {
      static const double c[] = {7, -72, 312, 0, -5332, 15072, 13704,
                                 -139264, 273600, -242176, 103232, -27648, 8640};
      return -poly(c, 13, r) / (960.0 * std::pow(r, 6));
    }
    default: {
      static const double c[] = {15, 0, -11, -48, 25};
      return poly(c, 5, r) / (15.0 * std::pow(r, 6));
    }
  }
}

}  // namespace detail

double mu_pe(double r) {
  if (!(r >= 1.0) || std::isinf(r)) fail(Errc::invalid_param, "mu_pe needs finite r >= 1");
  if (r < 1.5) return detail::mu_pe_branch(0, r);
  if (r < 2.0) return detail::mu_pe_branch(1, r);
  return detail::mu_pe_branch(2, r);
}

double nu_pe(double r) {
  if (!(r >= 1.0) || std::isinf(r)) fail(Errc::invalid_param, "nu_pe needs finite r >= 1");
  if (r < 4.0 / 3.0) return detail::nu_pe_branch(0, r);
  if (r < 1.5) return detail::nu_pe_branch(1, r);
  if (r < 2.0) return detail::nu_pe_branch(2, r);
  return detail::nu_pe_branch(3, r);
}

double mu_cs(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) fail(Errc::invalid_param, "mu_cs needs tau in [0, 1]");
  return tau * tau / 6.0;
}

double nu_cs(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) fail(Errc::invalid_param, "nu_cs needs tau in [0, 1]");
  double t = tau;
  double num = std::pow(t, 4) *
               (6 * std::pow(t, 5) - 3 * std::pow(t, 4) - 25 * std::pow(t, 3) + t * t + 49 * t + 14);
  double den = 45.0 * (t + 1.0) * (2.0 * t + 1.0) * (t + 2.0);
  return num / den;
}

double p_r(double r) {
  if (!(r >= 1.0 && r < 1.5)) fail(Errc::invalid_param, "p_r is defined for r in [1, 3/2)");
  if (r == 1.0) return 1.0;
  double rho = r * (r - 1.0);
  // After u = sqrt(a) w1, v = sqrt(a) w3 with a = 4r/(3(r-1)) the integral is
  // 4 * int int u v exp(-(u^2 + v^2 + 2 rho u v)) du dv over the quadrant.
  auto f = [rho](double u, double v) {
    double e = u * u + v * v + 2.0 * rho * u * v;
    if (e > 700.0) return 0.0;
    return 4.0 * u * v * std::exp(-e);
  };
  return integrate2d_quadrant(f, 1e-6);
}

GammaLimit gamma_limit(double r, CenterCase center_case) {
  if (!(r >= 1.0)) fail(Errc::invalid_param, "gamma_limit needs r >= 1");
  GammaLimit g;
  if (r < 1.5) {
    switch (center_case) {
      case CenterCase::t_vertex:
        g.kind = GammaLimit::Kind::two_plus_bernoulli;
        g.bernoulli_p = p_r(r);
        return g;
      case CenterCase::other_in_tr:
        g.kind = GammaLimit::Kind::degenerate;
        g.value = 3.0;
        return g;
      case CenterCase::interior:
        fail(Errc::invalid_param,
             "for r < 3/2 the limit is stated only for centers inside the inner triangle");
    }
  }
  if (r == 1.5) {
    if (center_case == CenterCase::t_vertex) {
      // At r = 3/2 the inner triangle degenerates to the centroid; the
      // published constant is stored, not recomputed.
      g.kind = GammaLimit::Kind::two_plus_bernoulli;
      g.bernoulli_p = 0.7413;
      g.externally_sourced = true;
      return g;
    }
    fail(Errc::invalid_param, "at r = 3/2 the limit is stated only for M at the centroid");
  }
  if (center_case != CenterCase::interior)
    fail(Errc::invalid_param, "for r > 3/2 the limit is stated for interior centers");
  g.kind = GammaLimit::Kind::degenerate;
  g.value = 1.0;
  return g;
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_finite(double x) {
  if (!std::isfinite(x)) fail(Errc::out_of_support, "non-finite pdf argument");
}

}  // namespace

double pd_joint_angle_pdf(double x, double y) {
  require_finite(x);
  require_finite(y);
  if (x <= 0.0 || y <= 0.0 || x + y >= kPi) return 0.0;
  return 8.0 / (3.0 * kPi) * std::sin(x) * std::sin(y) * std::sin(x + y);
}

double pd_angle_pdf(double x) {
  require_finite(x);
  if (x <= 0.0 || x >= kPi) return 0.0;
  return 4.0 / (3.0 * kPi) * ((kPi - x) * std::cos(x) + std::sin(x)) * std::sin(x);
}

double pd_min_angle_pdf(double x) {
  require_finite(x);
  if (x <= 0.0 || x >= kPi / 3.0) return 0.0;
  return 2.0 / kPi * ((kPi - 3.0 * x) * std::sin(2.0 * x) + std::cos(2.0 * x) - std::cos(4.0 * x));
}

double pd_max_angle_pdf(double x) {
  require_finite(x);
  if (x <= kPi / 3.0 || x >= kPi) return 0.0;
  if (x < kPi / 2.0)
    return 2.0 / kPi *
           (3.0 * x * std::sin(2.0 * x) - std::cos(2.0 * x) + std::cos(4.0 * x) -
            kPi * std::sin(2.0 * x));
  double s = std::sin(x), c = std::cos(x);
  return 1.0 / kPi * (4.0 * kPi * c * s + 3.0 * s * s - c * c - 4.0 * x * c * s + 1.0);
}

double pd_edge_length_pdf(double x, double lambda) {
  require_finite(x);
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    fail(Errc::out_of_support, "edge-length pdf needs lambda > 0");
  if (x <= 0.0) return 0.0;
  double s = std::sqrt(lambda);
  return kPi * lambda * x / 3.0 *
         (s * x * std::exp(-kPi * lambda * x * x / 4.0) + std::erfc(std::sqrt(kPi * lambda) * x / 2.0));
}

double pd_area_moment(int k, double lambda) {
  if (k < 1) fail(Errc::out_of_support, "area moment needs integer k >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    fail(Errc::out_of_support, "area moment needs lambda > 0");
  double lg = std::lgamma((3.0 * k + 5.0) / 2.0) + std::lgamma(k / 2.0 + 1.0) -
              2.0 * std::lgamma((k + 3.0) / 2.0);
  return std::exp(lg) / (3.0 * std::pow(2.0, k) * std::pow(kPi, k - 0.5) * std::pow(lambda, k));
}

double pd_obtuse_probability() {
  return integrate([](double x) { return pd_max_angle_pdf(x); }, kPi / 2.0, kPi, 1e-9);
}

}  // namespace pcd

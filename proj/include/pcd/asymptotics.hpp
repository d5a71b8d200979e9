#pragma once

#include "pcd/geometry.hpp"

namespace pcd {

// Limit mean of the relative arc density of the proportional-edge PCD with
// M = CM in one triangle, as a function of r >= 1 (three branches, continuous
// at r = 3/2 and r = 2). Equals the arc probability P(X2 in N(X1)).
double mu_pe(double r);
namespace detail {
double mu_pe_branch(int branch, double r);  // 0: [1,3/2), 1: [3/2,2), 2: [2,inf)
double nu_pe_branch(int branch, double r);  // 0: [1,4/3), 1: [4/3,3/2), 2: [3/2,2), 3: [2,inf)
}  // namespace detail

// Limit variance (the U-statistic covariance term) of the same density.
double nu_pe(double r);

// Central-similarity analogues over tau in [0, 1].
double mu_cs(double tau);
double nu_cs(double tau);

// Bernoulli parameter of the nondegenerate domination-number limit for the
// proportional-edge PCD with M at a corner of the inner triangle, r in
// (1, 3/2); r = 1 returns the limiting value 1. Evaluated by adaptive 2-D
// quadrature of the defining integral (with the exponent taken negative;
// the printed positive sign diverges) to 1e-6 absolute tolerance.
double p_r(double r);

enum class CenterCase { t_vertex, interior, other_in_tr };

struct GammaLimit {
  enum class Kind { degenerate, two_plus_bernoulli };
  Kind kind = Kind::degenerate;
  double value = 1.0;            // degenerate limit value
  double bernoulli_p = 0.0;      // P(gamma = 2) in the nondegenerate case
  bool externally_sourced = false;  // true for the stored r = 3/2, M = CM constant

  double mean() const { return kind == Kind::degenerate ? value : 3.0 - bernoulli_p; }
  double variance() const {
    return kind == Kind::degenerate ? 0.0 : bernoulli_p * (1.0 - bernoulli_p);
  }
};

GammaLimit gamma_limit(double r, CenterCase center_case);

// 2-D Poisson-Delaunay triangle statistics. Pdfs evaluate to 0 outside their
// supports; invalid parameters (non-finite argument, lambda <= 0, k < 1)
// raise OutOfSupport.
double pd_joint_angle_pdf(double x, double y);
double pd_angle_pdf(double x);
double pd_min_angle_pdf(double x);
double pd_max_angle_pdf(double x);
double pd_edge_length_pdf(double x, double lambda);
double pd_area_moment(int k, double lambda);
double pd_obtuse_probability();

}  // namespace pcd

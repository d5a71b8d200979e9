#pragma once

#include <functional>

namespace pcd {

// Adaptive Gauss-Kronrod (G7/K15) integration on [a, b] to the given
// absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol);

// Integral over [a, inf) via the compactification x = a + t/(1-t).
double integrate_semi_infinite(const std::function<double(double)>& f, double a, double abs_tol);

// Adaptive tensor G7/K15 over the rectangle [ax,bx] x [ay,by].
double integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                   double ay, double by, double abs_tol);

// Integral over [0,inf)^2 via t/(1-t) in both coordinates.
double integrate2d_quadrant(const std::function<double(double, double)>& f, double abs_tol);

}  // namespace pcd

#pragma once

// Exact-sign planar predicates.
//
// Fast path evaluates the determinant in double precision and accepts the
// sign when it clears a forward error bound (static filter). Otherwise the
// determinant is re-evaluated exactly with floating-point expansion
// arithmetic, so the returned sign is always the true sign.

namespace pcd {

// Sign of the signed area of triangle (a,b,c): +1 if c lies to the left of
// the directed line a->b, -1 if to the right, 0 if collinear.
int orient_sign(double ax, double ay, double bx, double by, double cx, double cy);

// For (a,b,c) in counterclockwise order: +1 if d lies strictly inside their
// circumcircle, -1 if strictly outside, 0 if cocircular. Clockwise input
// flips the sign.
int incircle_sign(double ax, double ay, double bx, double by,
                  double cx, double cy, double dx, double dy);

}  // namespace pcd

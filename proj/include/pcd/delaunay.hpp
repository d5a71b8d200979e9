#pragma once

#include <array>
#include <vector>

#include "pcd/geometry.hpp"

namespace pcd {

constexpr int kOutside = -1;

struct Triangulation {
  std::vector<Point2> sites;
  std::vector<std::array<int, 3>> triangles;  // CCW vertex indices
  std::vector<std::array<int, 3>> neighbors;  // [t][k]: across edge opposite vertex k, -1 on hull
  std::vector<int> hull;                      // CCW boundary vertex indices

  std::array<Point2, 3> triangle_points(int t) const {
    return {sites[triangles[t][0]], sites[triangles[t][1]], sites[triangles[t][2]]};
  }
};

// Delaunay triangulation by sorted incremental insertion with edge
// legalization. Exactly cocircular quadruples are never flipped, so the
// diagonal is the one produced by the deterministic lexicographic insertion
// order; rerunning on the same input reproduces the same triangulation.
Triangulation triangulate(const std::vector<Point2>& sites);

// Index of the triangle containing p, or kOutside. Points on shared
// boundaries go to the lowest-index incident triangle.
int locate(const Triangulation& t, const Point2& p);

}  // namespace pcd

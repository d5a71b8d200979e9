#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcd/asymptotics.hpp"
#include "pcd/pcd.hpp"
#include "pcd/rng.hpp"

namespace pcd {

struct SupportSpec {
  enum class Kind { single_triangle, hull };
  Kind kind = Kind::single_triangle;
  double c1 = 0.5, c2 = 0.8660254037844386;  // single-triangle shape
  std::vector<Point2> y_points;              // hull support

  static SupportSpec single_triangle(double c1, double c2);
  static SupportSpec hull(std::vector<Point2> y);
};

struct SimConfig {
  std::uint64_t seed = 1;
  int replicates = 1;
  int n_x = 2;
  ProximityMapSpec map;
  SupportSpec support;
  int workers = 1;
};

// Estimates are a pure function of (seed, config); the worker count only
// changes the wall clock.
struct SimResult {
  std::vector<std::pair<std::string, double>> estimates;
  std::vector<std::pair<std::string, double>> std_errors;  // from replicate variability
  int replicates = 0;
  double seconds = 0.0;
  std::vector<std::string> replicate_columns;
  std::vector<std::vector<double>> replicate_rows;  // one row per replicate
};

// n iid uniform points in the frame's basic triangle (sqrt construction).
std::vector<Point2> sample_uniform_triangle(const TriangleFrame& frame, int n, Rng& rng);

// Exact Poisson sampler (Knuth's product method on additive chunks).
std::int64_t poisson_count(Rng& rng, double mean);

// Fraction of ordered pairs (Xi, Xj) with an arc, over n_x uniform points per
// replicate.
SimResult estimate_arc_probability(const SimConfig& cfg);

// Frequency table of the exact domination number of the proportional-edge
// PCD over replicates of n_x uniform points in the configured triangle. The
// center is placed per center_case: a corner of the inner triangle, the
// centroid, or another inner-triangle point.
SimResult estimate_gamma_distribution(const SimConfig& cfg, double r, CenterCase center_case);

// 1-D CCCD arc probability over independent uniform pairs on (0, 1) with
// Y = {0, 1}; one pair per replicate.
SimResult estimate_interval_arc_probability(std::uint64_t seed, int replicates, int workers);

struct PdTriangleStats {
  double angles[3];
  double lengths[3];
  double area;
};

// One Poisson-Delaunay realization in [0,w] x [0,h]: Poisson(lambda*w*h)
// uniform points, triangulated; per-triangle statistics for the triangles
// whose circumdisk lies inside the window (edge-effect guard).
std::vector<PdTriangleStats> sample_poisson_delaunay(double lambda, double w, double h, Rng& rng);

// Replicated Poisson-Delaunay summary: obtuse-probability, mean area, mean
// angle across all kept triangles.
SimResult estimate_poisson_delaunay(double lambda, double w, double h, int replicates,
                                    std::uint64_t seed, int workers);

}  // namespace pcd

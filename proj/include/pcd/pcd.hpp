#pragma once

#include <cstdint>
#include <vector>

#include "pcd/delaunay.hpp"
#include "pcd/proximity.hpp"

namespace pcd {

// Fixed-width bitset over 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  }
  int count() const;
  bool all() const;
  bool covers_all_with(const Bitset& o) const;  // (*this | o) covers every bit
  static bool pair_covers(const Bitset& a, const Bitset& b, const Bitset& c);  // a|b|c full

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
  friend class BitsetOps;
};

// The data-random proximity catch digraph over the retained X points.
struct PcDigraph {
  int n = 0;
  std::vector<Bitset> out;       // successor sets, no self loops
  std::vector<int> cell_of;      // Delaunay cell per retained vertex (kOutside never appears)
  std::vector<int> retained;     // original X indices, in input order
  std::vector<int> excluded;     // original X indices outside the hull

  std::int64_t arc_count() const;
};

// Triangulates Y, drops X points outside the hull, and evaluates catch
// relations pairwise inside each Delaunay cell (globally for the spherical
// map, whose regions may cross cells).
PcDigraph build(const std::vector<Point2>& x_points, const std::vector<Point2>& y_points,
                const ProximityMapSpec& spec);

struct IntervalFixture {
  std::vector<double> y_points;  // strictly increasing
  std::vector<double> x_points;
};

// 1-D CCCD: arc i->j iff |x_j - x_i| < min_y |x_i - y|.
PcDigraph build_interval_cccd(const IntervalFixture& f);

// |arcs| / (n (n-1)).
double relative_density(const PcDigraph& g);

// Minimum dominating set size. Weakly connected components are solved
// independently and summed. Cardinalities 1 and 2 are searched exhaustively
// for any size; deeper searches run the branch-and-bound only for components
// of at most kExactDominationCap vertices, except that an answer of 3 is
// still certified exactly on larger components when the greedy cover has
// size 3 or a guided triple search finds one.
constexpr int kExactDominationCap = 24;
int domination_exact(const PcDigraph& g);

// Repeatedly takes the vertex covering the most uncovered vertices, ties to
// the smallest index. Never smaller than domination_exact.
int domination_greedy(const PcDigraph& g);

}  // namespace pcd

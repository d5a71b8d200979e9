#include "pcd/pcd.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pcd {

int Bitset::count() const {
  int c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Bitset::all() const {
  if (n_ == 0) return true;
  for (std::size_t k = 0; k + 1 < w_.size(); ++k)
    if (~w_[k]) return false;
  std::uint64_t last_mask = (n_ & 63) ? ((std::uint64_t(1) << (n_ & 63)) - 1) : ~std::uint64_t(0);
  return (w_.back() & last_mask) == last_mask;
}

bool Bitset::covers_all_with(const Bitset& o) const {
  std::uint64_t last_mask = (n_ & 63) ? ((std::uint64_t(1) << (n_ & 63)) - 1) : ~std::uint64_t(0);
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t need = (k + 1 == w_.size()) ? last_mask : ~std::uint64_t(0);
    if ((w_[k] | o.w_[k]) != need) return false;
  }
  return true;
}

bool Bitset::pair_covers(const Bitset& a, const Bitset& b, const Bitset& c) {
  std::uint64_t last_mask =
      (a.n_ & 63) ? ((std::uint64_t(1) << (a.n_ & 63)) - 1) : ~std::uint64_t(0);
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    std::uint64_t need = (k + 1 == a.w_.size()) ? last_mask : ~std::uint64_t(0);
    if ((a.w_[k] | b.w_[k] | c.w_[k]) != need) return false;
  }
  return true;
}

std::int64_t PcDigraph::arc_count() const {
  std::int64_t c = 0;
  for (const Bitset& b : out) c += b.count();
  return c;
}

PcDigraph build(const std::vector<Point2>& xs, const std::vector<Point2>& ys,
                const ProximityMapSpec& spec) {
  if (xs.empty()) fail(Errc::empty_x, "no X points");
  spec.validate();
  Triangulation tri = triangulate(ys);

  PcDigraph g;
  std::vector<int> cell;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    int c = locate(tri, xs[i]);
    if (c == kOutside) {
      g.excluded.push_back(static_cast<int>(i));
    } else {
      g.retained.push_back(static_cast<int>(i));
      cell.push_back(c);
    }
  }
  g.n = static_cast<int>(g.retained.size());
  g.cell_of = cell;
  g.out.assign(g.n, Bitset(g.n));

  if (spec.family == ProximityMapSpec::Family::spherical) {
    // Global rule: the ball radius is the distance to the nearest Y site.
    for (int i = 0; i < g.n; ++i) {
      const Point2& xi = xs[g.retained[i]];
      double r2 = std::numeric_limits<double>::infinity();
      for (const Point2& y : ys) r2 = std::min(r2, (xi - y).squaredNorm());
      for (int j = 0; j < g.n; ++j) {
        if (j == i) continue;
        if ((xs[g.retained[j]] - xi).squaredNorm() < r2) g.out[i].set(j);
      }
    }
    return g;
  }

  // Group retained vertices by cell and evaluate pairwise within cells. The
  // spec must be valid on every cell, occupied or not.
  std::vector<std::vector<int>> by_cell(tri.triangles.size());
  for (int i = 0; i < g.n; ++i) by_cell[cell[i]].push_back(i);
  for (std::size_t c = 0; c < by_cell.size(); ++c) {
    TriangleFrame frame = normalize_to_basic(tri.triangle_points(static_cast<int>(c)));
    ProximityEvaluator eval(frame, spec);
    const std::vector<int>& members = by_cell[c];
    if (members.empty()) continue;
    std::vector<Point2> basic(members.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      basic[k] = frame.to_basic()(xs[g.retained[members[k]]]);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b < members.size(); ++b) {
        if (a == b) continue;
        if (eval.catches(basic[a], basic[b])) g.out[members[a]].set(members[b]);
      }
  }
  return g;
}

PcDigraph build_interval_cccd(const IntervalFixture& f) {
  for (std::size_t i = 0; i + 1 < f.y_points.size(); ++i)
    if (!(f.y_points[i] < f.y_points[i + 1]))
      fail(Errc::invalid_param, "interval fixture needs strictly increasing y points");
  if (f.x_points.empty()) fail(Errc::empty_x, "no X points");

  PcDigraph g;
  g.n = static_cast<int>(f.x_points.size());
  g.retained.resize(g.n);
  std::iota(g.retained.begin(), g.retained.end(), 0);
  g.cell_of.assign(g.n, 0);
  g.out.assign(g.n, Bitset(g.n));
  for (int i = 0; i < g.n; ++i) {
    double r = std::numeric_limits<double>::infinity();
    for (double y : f.y_points) r = std::min(r, std::fabs(f.x_points[i] - y));
    for (int j = 0; j < g.n; ++j)
      if (j != i && std::fabs(f.x_points[j] - f.x_points[i]) < r) g.out[i].set(j);
  }
  return g;
}

double relative_density(const PcDigraph& g) {
  if (g.n < 2) fail(Errc::too_few_vertices, "relative density needs at least 2 vertices");
  return static_cast<double>(g.arc_count()) / (static_cast<double>(g.n) * (g.n - 1));
}

namespace {

// Closed out-neighborhoods restricted to one component, in local indices.
struct Component {
  std::vector<int> verts;          // global indices
  std::vector<Bitset> covers;      // covers[i] = {i} union successors, local
};

std::vector<Component> split_components(const PcDigraph& g) {
  std::vector<int> comp(g.n, -1);
  int nc = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.n; ++u) {
        if (comp[u] >= 0) continue;
        if (g.out[v].test(u) || g.out[u].test(v)) {
          comp[u] = nc;
          stack.push_back(u);
        }
      }
    }
    ++nc;
  }
  std::vector<Component> out(nc);
  for (int v = 0; v < g.n; ++v) out[comp[v]].verts.push_back(v);
  for (Component& c : out) {
    int m = static_cast<int>(c.verts.size());
    c.covers.assign(m, Bitset(m));
    for (int i = 0; i < m; ++i) {
      c.covers[i].set(i);
      for (int j = 0; j < m; ++j)
        if (j != i && g.out[c.verts[i]].test(c.verts[j])) c.covers[i].set(j);
    }
  }
  return out;
}

int greedy_on(const std::vector<Bitset>& covers, int m) {
  Bitset covered(m);
  int size = 0;
  while (!covered.all()) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < m; ++v) {
      int gain = 0;
      for (int u = 0; u < m; ++u)
        if (covers[v].test(u) && !covered.test(u)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    covered |= covers[best];
    ++size;
  }
  return size;
}

// Depth-limited exact cover search: can `remaining` picks dominate the rest?
bool cover_search(const std::vector<Bitset>& covers, const Bitset& covered, int remaining,
                  std::int64_t& budget) {
  if (covered.all()) return true;
  if (remaining == 0) return false;
  if (--budget <= 0) fail(Errc::instance_too_large, "domination search budget exhausted");
  int m = covered.size();
  if (remaining == 1) {
    for (int v = 0; v < m; ++v)
      if (covered.covers_all_with(covers[v])) return true;
    return false;
  }
  // Branch on an uncovered vertex with the fewest dominators.
  int pivot = -1, best_deg = m + 1;
  for (int u = 0; u < m; ++u) {
    if (covered.test(u)) continue;
    int deg = 0;
    for (int v = 0; v < m; ++v)
      if (covers[v].test(u)) ++deg;
    if (deg < best_deg) {
      best_deg = deg;
      pivot = u;
    }
  }
  for (int v = 0; v < m; ++v) {
    if (!covers[v].test(pivot)) continue;
    Bitset next = covered;
    next |= covers[v];
    if (cover_search(covers, next, remaining - 1, budget)) return true;
  }
  return false;
}

int exact_on(const Component& c) {
  int m = static_cast<int>(c.verts.size());
  if (m == 1) return 1;
  for (int v = 0; v < m; ++v)
    if (c.covers[v].all()) return 1;

  // Pairs, largest cover first so hits come early.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pc(m);
  for (int v = 0; v < m; ++v) pc[v] = c.covers[v].count();
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pc[a] > pc[b]; });
  for (int a = 0; a < m; ++a) {
    if (pc[order[a]] * 2 < m) break;  // no later pair can reach m
    for (int b = a + 1; b < m; ++b) {
      if (pc[order[a]] + pc[order[b]] < m) break;
      if (c.covers[order[a]].covers_all_with(c.covers[order[b]])) return 2;
    }
  }

  int ub = greedy_on(c.covers, m);
  if (ub == 3) return 3;
  if (m <= kExactDominationCap) {
    std::int64_t budget = std::int64_t(1) << 40;
    for (int k = 3; k <= m; ++k) {
      Bitset none(m);
      if (cover_search(c.covers, none, k, budget)) return k;
    }
    return m;
  }
  // Large component: certify 3 if a dominating triple exists.
  std::int64_t budget = 200'000'000;
  Bitset none(m);
  if (cover_search(c.covers, none, 3, budget)) return 3;
  fail(Errc::instance_too_large, "component too large for exact domination beyond 3");
}

}  // namespace

int domination_exact(const PcDigraph& g) {
  if (g.n < 1) fail(Errc::too_few_vertices, "domination needs at least 1 vertex");
  int total = 0;
  for (const Component& c : split_components(g)) total += exact_on(c);
  return total;
}

int domination_greedy(const PcDigraph& g) {
  if (g.n < 1) fail(Errc::too_few_vertices, "domination needs at least 1 vertex");
  std::vector<Bitset> covers(g.n, Bitset(g.n));
  for (int i = 0; i < g.n; ++i) {
    covers[i].set(i);
    for (int j = 0; j < g.n; ++j)
      if (j != i && g.out[i].test(j)) covers[i].set(j);
  }
  return greedy_on(covers, g.n);
}

}  // namespace pcd

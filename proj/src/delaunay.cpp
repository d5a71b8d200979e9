#include "pcd/delaunay.hpp"

#include <algorithm>
#include <numeric>

namespace pcd {

namespace {

struct Builder {
  const std::vector<Point2>& pts;
  std::vector<std::array<int, 3>> tri;
  std::vector<std::array<int, 3>> nbr;

  // Hull as a circular linked list over site indices.
  std::vector<int> next, prev, edge_tri;  // edge_tri[v]: triangle inside v -> next[v]
  std::vector<char> on_hull;
  int hull_start = -1;

  std::vector<std::pair<int, int>> suspects;  // (triangle, slot)

  explicit Builder(const std::vector<Point2>& p)
      : pts(p), next(p.size(), -1), prev(p.size(), -1), edge_tri(p.size(), -1),
        on_hull(p.size(), 0) {}

  int add_triangle(int a, int b, int c) {
    tri.push_back({a, b, c});
    nbr.push_back({-1, -1, -1});
    return static_cast<int>(tri.size()) - 1;
  }

  int slot_of_edge(int t, int u, int v) const {
    for (int k = 0; k < 3; ++k)
      if (tri[t][(k + 1) % 3] == u && tri[t][(k + 2) % 3] == v) return k;
    for (int k = 0; k < 3; ++k)
      if (tri[t][(k + 1) % 3] == v && tri[t][(k + 2) % 3] == u) return k;
    fail(Errc::invalid_param, "internal: edge not in triangle");
  }

  void link(int t1, int t2, int u, int v) {
    nbr[t1][slot_of_edge(t1, u, v)] = t2;
    nbr[t2][slot_of_edge(t2, u, v)] = t1;
  }

  int orient(int a, int b, const Point2& p) const {
    return orient_sign(pts[a], pts[b], p);
  }

  // Fan over a collinear chain and the first off-line point p.
  void build_initial_fan(const std::vector<int>& chain, int ip) {
    int s = orient(chain[0], chain[1], pts[ip]);
    std::vector<int> fans;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      int a = chain[i], b = chain[i + 1];
      fans.push_back(s > 0 ? add_triangle(a, b, ip) : add_triangle(b, a, ip));
      if (i > 0) link(fans[i], fans[i - 1], chain[i], ip);
    }
    // Hull ring: chain run (oriented so the interior is on the left) then p.
    std::vector<int> ring = chain;
    if (s < 0) std::reverse(ring.begin(), ring.end());
    ring.push_back(ip);
    int h = static_cast<int>(ring.size());
    for (int i = 0; i < h; ++i) {
      int u = ring[i], v = ring[(i + 1) % h];
      next[u] = v;
      prev[v] = u;
      on_hull[u] = 1;
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      int u = s > 0 ? chain[i] : chain[i + 1];
      edge_tri[u] = fans[i];
    }
    edge_tri[ring[h - 2]] = s > 0 ? fans.back() : fans.front();  // last ring vertex -> p
    edge_tri[ip] = s > 0 ? fans.front() : fans.back();           // p -> first ring vertex
    hull_start = ip;
  }

  void legalize() {
    while (!suspects.empty()) {
      auto [t, slot] = suspects.back();
      suspects.pop_back();
      int n = nbr[t][slot];
      if (n < 0) continue;
      int a = tri[t][slot];
      int u = tri[t][(slot + 1) % 3];
      int v = tri[t][(slot + 2) % 3];
      int dslot = -1;
      for (int k = 0; k < 3; ++k)
        if (tri[n][k] != u && tri[n][k] != v) dslot = k;
      int d = tri[n][dslot];
      if (incircle_sign(pts[tri[t][0]], pts[tri[t][1]], pts[tri[t][2]], pts[d]) <= 0)
        continue;

      // Flip shared edge (u,v) to (a,d). Quad (a,u,d,v) is CCW.
      int t_au = nbr[t][(slot + 2) % 3];  // across (a,u)
      int t_va = nbr[t][(slot + 1) % 3];  // across (v,a)
      int n_ud = nbr[n][slot_of_edge(n, u, d)];
      int n_dv = nbr[n][slot_of_edge(n, d, v)];

      tri[t] = {a, u, d};
      tri[n] = {a, d, v};
      nbr[t] = {n_ud, n, t_au};   // edges (u,d), (d,a), (a,u)
      nbr[n] = {n_dv, t_va, t};   // edges (d,v), (v,a), (a,d)
      if (n_ud >= 0) nbr[n_ud][slot_of_edge(n_ud, u, d)] = t;
      if (t_va >= 0) nbr[t_va][slot_of_edge(t_va, v, a)] = n;
      if (on_hull[u] && next[u] == d) edge_tri[u] = t;
      if (on_hull[v] && next[v] == a) edge_tri[v] = n;

      suspects.push_back({t, 0});
      suspects.push_back({n, 0});
    }
  }

  void insert(int ip) {
    const Point2& p = pts[ip];
    // Ring walk from hull_start.
    std::vector<int> ring;
    int v = hull_start;
    do {
      ring.push_back(v);
      v = next[v];
    } while (v != hull_start);
    int h = static_cast<int>(ring.size());
    std::vector<char> vis(h);
    int nvis = 0;
    for (int i = 0; i < h; ++i) {
      vis[i] = orient(ring[i], ring[(i + 1) % h], p) < 0;
      nvis += vis[i];
    }
    if (nvis == 0 || nvis == h) fail(Errc::invalid_param, "internal: no visible hull edge");
    int start = 0;
    while (!(vis[start % h] && !vis[(start + h - 1) % h])) {
      if (++start > 2 * h) fail(Errc::invalid_param, "internal: visible chain not contiguous");
    }
    start %= h;

    std::vector<int> fans;
    std::vector<int> run;  // hull vertices spanned by the visible chain
    run.push_back(ring[start]);
    for (int i = start; vis[i % h]; ++i) {
      int a = ring[i % h], b = ring[(i + 1) % h];
      int t = add_triangle(a, ip, b);
      int inner = edge_tri[a];
      link(t, inner, a, b);
      suspects.push_back({t, 1});  // base edge (b,a), opposite ip
      if (!fans.empty()) link(t, fans.back(), a, ip);
      fans.push_back(t);
      run.push_back(b);
    }
    // Replace run interior with ip on the hull.
    for (std::size_t i = 1; i + 1 < run.size(); ++i) on_hull[run[i]] = 0;
    int first = run.front(), last = run.back();
    next[first] = ip;
    prev[ip] = first;
    next[ip] = last;
    prev[last] = ip;
    on_hull[ip] = 1;
    edge_tri[first] = fans.front();
    edge_tri[ip] = fans.back();
    hull_start = ip;
    legalize();
  }
};

}  // namespace

Triangulation triangulate(const std::vector<Point2>& sites) {
  if (sites.size() < 3) fail(Errc::all_collinear, "need at least 3 sites");
  for (const Point2& p : sites)
    if (!finite(p)) fail(Errc::parse_error, "non-finite site coordinate");

  std::vector<int> order(sites.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return sites[i].x() < sites[j].x() ||
           (sites[i].x() == sites[j].x() && sites[i].y() < sites[j].y());
  });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const Point2& a = sites[order[i]];
    const Point2& b = sites[order[i + 1]];
    if (a.x() == b.x() && a.y() == b.y())
      fail(Errc::duplicate_sites, "duplicate site coordinates");
  }

  Builder b(sites);
  std::vector<int> chain;  // collinear prefix in lexicographic order
  bool have_triangles = false;
  for (int ip : order) {
    if (!have_triangles) {
      if (chain.size() < 2 || orient_sign(sites[chain[0]], sites[chain[1]], sites[ip]) == 0) {
        chain.push_back(ip);
        continue;
      }
      b.build_initial_fan(chain, ip);
      b.legalize();
      have_triangles = true;
      continue;
    }
    b.insert(ip);
  }
  if (!have_triangles) fail(Errc::all_collinear, "all sites are collinear");

  Triangulation t;
  t.sites = sites;
  t.triangles = std::move(b.tri);
  t.neighbors = std::move(b.nbr);
  int start = b.hull_start;
  for (int v = b.next[start]; ; v = b.next[v]) {
    t.hull.push_back(v);
    if (v == start) break;
  }
  auto lowest = std::min_element(t.hull.begin(), t.hull.end());
  std::rotate(t.hull.begin(), lowest, t.hull.end());
  return t;
}

namespace {

bool triangle_contains(const Triangulation& t, int idx, const Point2& p) {
  const auto& v = t.triangles[idx];
  for (int k = 0; k < 3; ++k)
    if (orient_sign(t.sites[v[(k + 1) % 3]], t.sites[v[(k + 2) % 3]], p) < 0) return false;
  return true;
}

}  // namespace

int locate(const Triangulation& t, const Point2& p) {
  if (t.triangles.empty()) return kOutside;
  int cur = 0;
  std::size_t steps = 0, cap = 4 * t.triangles.size() + 16;
  while (true) {
    if (++steps > cap) fail(Errc::invalid_param, "internal: point location walk did not terminate");
    const auto& v = t.triangles[cur];
    int exit_slot = -1;
    for (int k = 0; k < 3; ++k) {
      if (orient_sign(t.sites[v[(k + 1) % 3]], t.sites[v[(k + 2) % 3]], p) < 0) {
        exit_slot = k;
        break;
      }
    }
    if (exit_slot < 0) break;
    int n = t.neighbors[cur][exit_slot];
    if (n < 0) return kOutside;
    cur = n;
  }
  // Boundary points: take the lowest-index triangle that contains p among the
  // patch reachable through edges/vertices that p lies on.
  int best = cur;
  std::vector<int> stack = {cur};
  std::vector<char> seen(t.triangles.size(), 0);
  seen[cur] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (c < best) best = c;
    for (int k = 0; k < 3; ++k) {
      int u = t.triangles[c][(k + 1) % 3], v2 = t.triangles[c][(k + 2) % 3];
      if (orient_sign(t.sites[u], t.sites[v2], p) != 0) continue;
      int n = t.neighbors[c][k];
      if (n >= 0 && !seen[n] && triangle_contains(t, n, p)) {
        seen[n] = 1;
        stack.push_back(n);
      }
      // p may sit exactly on a vertex; walk the full ring around both
      // endpoints of the zero-orientation edge.
      for (int w : {u, v2}) {
        if (t.sites[w].x() != p.x() || t.sites[w].y() != p.y()) continue;
        for (std::size_t j = 0; j < t.triangles.size(); ++j) {
          if (seen[j]) continue;
          const auto& tv = t.triangles[j];
          if ((tv[0] == w || tv[1] == w || tv[2] == w) && triangle_contains(t, j, p)) {
            seen[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }
  }
  return best;
}

}  // namespace pcd

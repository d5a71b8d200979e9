#include "pcd/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace pcd {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs fn(k) for k in [0, replicates) across workers; each call fills its own
// row, so the result is independent of scheduling.
template <typename Fn>
void run_replicates(int replicates, int workers, Fn&& fn) {
  workers = std::max(1, std::min(workers, replicates));
  if (workers == 1) {
    for (int k = 0; k < replicates; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  auto body = [&]() {
    while (true) {
      int k = next.fetch_add(1);
      if (k >= replicates) return;
      fn(k);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
}

std::pair<double, double> mean_se(const std::vector<std::vector<double>>& rows, std::size_t col) {
  double sum = 0.0;
  for (const auto& r : rows) sum += r[col];
  double n = static_cast<double>(rows.size());
  double mean = sum / n;
  double ss = 0.0;
  for (const auto& r : rows) {
    double d = r[col] - mean;
    ss += d * d;
  }
  double se = rows.size() > 1 ? std::sqrt(ss / (n * (n - 1.0))) : 0.0;
  return {mean, se};
}

}  // namespace

SupportSpec SupportSpec::single_triangle(double c1, double c2) {
  SupportSpec s;
  s.kind = Kind::single_triangle;
  s.c1 = c1;
  s.c2 = c2;
  return s;
}

SupportSpec SupportSpec::hull(std::vector<Point2> y) {
  SupportSpec s;
  s.kind = Kind::hull;
  s.y_points = std::move(y);
  return s;
}

std::vector<Point2> sample_uniform_triangle(const TriangleFrame& f, int n, Rng& rng) {
  std::vector<Point2> out;
  out.reserve(n);
  Point2 a = f.basic_vertex(0), b = f.basic_vertex(1), c = f.basic_vertex(2);
  for (int i = 0; i < n; ++i) {
    double s = std::sqrt(rng.uniform());
    double t = rng.uniform();
    out.push_back((1.0 - s) * a + s * (1.0 - t) * b + s * t * c);
  }
  return out;
}

std::int64_t poisson_count(Rng& rng, double mean) {
  if (!(mean >= 0.0)) fail(Errc::invalid_param, "poisson mean must be nonnegative");
  std::int64_t total = 0;
  while (mean > 0.0) {
    double chunk = std::min(mean, 16.0);
    double limit = std::exp(-chunk);
    double p = 1.0;
    std::int64_t k = 0;
    do {
      ++k;
      p *= rng.uniform();
    } while (p > limit);
    total += k - 1;
    mean -= chunk;
  }
  return total;
}

namespace {

struct HullSampler {
  Triangulation tri;
  std::vector<TriangleFrame> frames;
  std::vector<ProximityEvaluator> evals;
  std::vector<double> area_cdf;

  HullSampler(const std::vector<Point2>& ys, const ProximityMapSpec& spec) {
    tri = triangulate(ys);
    double total = 0.0;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
      frames.push_back(normalize_to_basic(tri.triangle_points(static_cast<int>(t))));
      evals.emplace_back(frames.back(), spec);
      auto p = tri.triangle_points(static_cast<int>(t));
      total += std::fabs(cross2(p[1] - p[0], p[2] - p[0])) / 2.0;
      area_cdf.push_back(total);
    }
  }

  // (cell, original point, basic point)
  std::tuple<int, Point2, Point2> sample(Rng& rng) const {
    double u = rng.uniform() * area_cdf.back();
    std::size_t cell = std::lower_bound(area_cdf.begin(), area_cdf.end(), u) - area_cdf.begin();
    if (cell >= frames.size()) cell = frames.size() - 1;
    auto p = tri.triangle_points(static_cast<int>(cell));
    double s = std::sqrt(rng.uniform());
    double t = rng.uniform();
    Point2 orig = (1.0 - s) * p[0] + s * (1.0 - t) * p[1] + s * t * p[2];
    return {static_cast<int>(cell), orig, frames[cell].to_basic()(orig)};
  }
};

}  // namespace

SimResult estimate_arc_probability(const SimConfig& cfg) {
  if (cfg.replicates < 1) fail(Errc::invalid_param, "need at least one replicate");
  if (cfg.n_x < 2) fail(Errc::invalid_param, "arc probability needs n_x >= 2");
  cfg.map.validate();
  auto t0 = Clock::now();

  SimResult res;
  res.replicates = cfg.replicates;
  res.replicate_columns = {"arc_fraction"};
  res.replicate_rows.assign(cfg.replicates, {});

  if (cfg.support.kind == SupportSpec::Kind::single_triangle) {
    TriangleFrame frame = TriangleFrame::from_c(cfg.support.c1, cfg.support.c2);
    ProximityEvaluator eval(frame, cfg.map);
    run_replicates(cfg.replicates, cfg.workers, [&](int k) {
      Rng rng = substream(cfg.seed, static_cast<std::uint64_t>(k));
      std::vector<Point2> pts = sample_uniform_triangle(frame, cfg.n_x, rng);
      std::int64_t arcs = 0;
      for (int i = 0; i < cfg.n_x; ++i)
        for (int j = 0; j < cfg.n_x; ++j)
          if (i != j && eval.catches(pts[i], pts[j])) ++arcs;
      res.replicate_rows[k] = {static_cast<double>(arcs) /
                               (static_cast<double>(cfg.n_x) * (cfg.n_x - 1))};
    });
  } else {
    HullSampler sampler(cfg.support.y_points, cfg.map);
    bool spherical = cfg.map.family == ProximityMapSpec::Family::spherical;
    run_replicates(cfg.replicates, cfg.workers, [&](int k) {
      Rng rng = substream(cfg.seed, static_cast<std::uint64_t>(k));
      std::vector<int> cell(cfg.n_x);
      std::vector<Point2> orig(cfg.n_x), basic(cfg.n_x);
      for (int i = 0; i < cfg.n_x; ++i) std::tie(cell[i], orig[i], basic[i]) = sampler.sample(rng);
      std::int64_t arcs = 0;
      for (int i = 0; i < cfg.n_x; ++i) {
        double r2 = std::numeric_limits<double>::infinity();
        if (spherical)
          for (const Point2& y : cfg.support.y_points)
            r2 = std::min(r2, (orig[i] - y).squaredNorm());
        for (int j = 0; j < cfg.n_x; ++j) {
          if (i == j) continue;
          bool arc;
          if (spherical)
            arc = (orig[j] - orig[i]).squaredNorm() < r2;
          else
            arc = cell[i] == cell[j] && sampler.evals[cell[i]].catches(basic[i], basic[j]);
          if (arc) ++arcs;
        }
      }
      res.replicate_rows[k] = {static_cast<double>(arcs) /
                               (static_cast<double>(cfg.n_x) * (cfg.n_x - 1))};
    });
  }

  auto [mean, se] = mean_se(res.replicate_rows, 0);
  res.estimates = {{"arc_probability", mean}};
  res.std_errors = {{"arc_probability", se}};
  res.seconds = elapsed_since(t0);
  return res;
}

SimResult estimate_gamma_distribution(const SimConfig& cfg, double r, CenterCase center_case) {
  if (cfg.replicates < 1) fail(Errc::invalid_param, "need at least one replicate");
  if (cfg.n_x < 1) fail(Errc::invalid_param, "need n_x >= 1");
  if (cfg.support.kind != SupportSpec::Kind::single_triangle)
    fail(Errc::invalid_param, "gamma estimation runs on a single triangle");
  if (!(r >= 1.0)) fail(Errc::invalid_param, "prop_edge needs r >= 1");
  auto t0 = Clock::now();

  TriangleFrame frame = TriangleFrame::from_c(cfg.support.c1, cfg.support.c2);
  CenterSpec center = CenterSpec::cm();
  if (r < 1.5) {
    auto corners = t_r_corners(frame, r);
    if (center_case == CenterCase::t_vertex)
      center = CenterSpec::custom(corners[0]);
    else if (center_case == CenterCase::other_in_tr)
      center = CenterSpec::custom((corners[0] + corners[1] + corners[2]) / 3.0);
  }
  ProximityMapSpec spec = ProximityMapSpec::prop_edge(r, center);
  ProximityEvaluator eval(frame, spec);

  SimResult res;
  res.replicates = cfg.replicates;
  res.replicate_columns = {"gamma"};
  res.replicate_rows.assign(cfg.replicates, {});
  run_replicates(cfg.replicates, cfg.workers, [&](int k) {
    Rng rng = substream(cfg.seed, static_cast<std::uint64_t>(k));
    std::vector<Point2> pts = sample_uniform_triangle(frame, cfg.n_x, rng);
    PcDigraph g;
    g.n = cfg.n_x;
    g.out.assign(g.n, Bitset(g.n));
    g.cell_of.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (i != j && eval.catches(pts[i], pts[j])) g.out[i].set(j);
    res.replicate_rows[k] = {static_cast<double>(domination_exact(g))};
  });

  std::vector<double> freq(4, 0.0);  // gamma = 1, 2, 3, >3
  double sum = 0.0;
  for (const auto& row : res.replicate_rows) {
    sum += row[0];
    int gi = static_cast<int>(row[0]);
    freq[gi >= 1 && gi <= 3 ? gi - 1 : 3] += 1.0;
  }
  double n = static_cast<double>(cfg.replicates);
  auto binom_se = [n](double p) {
    return n > 1 ? std::sqrt(p * (1.0 - p) / n) : 0.0;
  };
  res.estimates = {{"p_gamma_1", freq[0] / n},
                   {"p_gamma_2", freq[1] / n},
                   {"p_gamma_3", freq[2] / n},
                   {"p_gamma_other", freq[3] / n},
                   {"gamma_mean", sum / n}};
  auto [gmean, gse] = mean_se(res.replicate_rows, 0);
  (void)gmean;
  res.std_errors = {{"p_gamma_1", binom_se(freq[0] / n)},
                    {"p_gamma_2", binom_se(freq[1] / n)},
                    {"p_gamma_3", binom_se(freq[2] / n)},
                    {"p_gamma_other", binom_se(freq[3] / n)},
                    {"gamma_mean", gse}};
  res.seconds = elapsed_since(t0);
  return res;
}

SimResult estimate_interval_arc_probability(std::uint64_t seed, int replicates, int workers) {
  if (replicates < 1) fail(Errc::invalid_param, "need at least one replicate");
  auto t0 = Clock::now();
  SimResult res;
  res.replicates = replicates;
  res.replicate_columns = {"arc_fraction"};
  res.replicate_rows.assign(replicates, {});
  run_replicates(replicates, workers, [&](int k) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(k));
    double x1 = rng.uniform(), x2 = rng.uniform();
    double r1 = std::min(x1, 1.0 - x1), r2 = std::min(x2, 1.0 - x2);
    double d = std::fabs(x2 - x1);
    res.replicate_rows[k] = {((d < r1) + (d < r2)) / 2.0};
  });
  auto [mean, se] = mean_se(res.replicate_rows, 0);
  res.estimates = {{"arc_probability", mean}};
  res.std_errors = {{"arc_probability", se}};
  res.seconds = elapsed_since(t0);
  return res;
}

std::vector<PdTriangleStats> sample_poisson_delaunay(double lambda, double w, double h, Rng& rng) {
  if (!(lambda > 0.0) || !(w > 0.0) || !(h > 0.0))
    fail(Errc::invalid_param, "need lambda > 0 and a positive window");
  std::int64_t n = poisson_count(rng, lambda * w * h);
  if (n < 3) fail(Errc::degenerate_sample, "fewer than 3 points in the window");
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::int64_t i = 0; i < n; ++i) pts.emplace_back(rng.uniform() * w, rng.uniform() * h);

  Triangulation tri;
  try {
    tri = triangulate(pts);
  } catch (const Error& e) {
    if (e.code() == Errc::all_collinear || e.code() == Errc::duplicate_sites)
      fail(Errc::degenerate_sample, "degenerate Poisson sample");
    throw;
  }

  std::vector<PdTriangleStats> out;
  out.reserve(tri.triangles.size());
  for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
    auto p = tri.triangle_points(static_cast<int>(t));
    // Circumcenter; the triangle is kept only when its circumdisk lies
    // inside the window, so its Delaunay status cannot depend on unseen
    // points beyond the boundary.
    Point2 d0 = p[1] - p[0], d1 = p[2] - p[0];
    double a2 = 2.0 * cross2(d0, d1);
    double d00 = d0.squaredNorm(), d11 = d1.squaredNorm();
    Point2 cc = p[0] + Point2(d1.y() * d00 - d0.y() * d11, d0.x() * d11 - d1.x() * d00) / a2;
    double r = (cc - p[0]).norm();
    if (cc.x() - r < 0.0 || cc.x() + r > w || cc.y() - r < 0.0 || cc.y() + r > h) continue;

    PdTriangleStats st;
    st.area = std::fabs(cross2(d0, d1)) / 2.0;
    for (int k = 0; k < 3; ++k) {
      Point2 u = p[(k + 1) % 3] - p[k], v = p[(k + 2) % 3] - p[k];
      st.angles[k] = std::acos(std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0));
      st.lengths[k] = (p[(k + 2) % 3] - p[(k + 1) % 3]).norm();
    }
    out.push_back(st);
  }
  return out;
}

SimResult estimate_poisson_delaunay(double lambda, double w, double h, int replicates,
                                    std::uint64_t seed, int workers) {
  if (replicates < 1) fail(Errc::invalid_param, "need at least one replicate");
  auto t0 = Clock::now();
  SimResult res;
  res.replicates = replicates;
  res.replicate_columns = {"kept", "obtuse_fraction", "mean_area", "mean_angle"};
  res.replicate_rows.assign(replicates, {});
  run_replicates(replicates, workers, [&](int k) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(k));
    auto stats = sample_poisson_delaunay(lambda, w, h, rng);
    double obtuse = 0.0, area = 0.0, angle = 0.0;
    for (const auto& st : stats) {
      double amax = std::max({st.angles[0], st.angles[1], st.angles[2]});
      if (amax > 1.5707963267948966) obtuse += 1.0;
      area += st.area;
      angle += st.angles[0] + st.angles[1] + st.angles[2];
    }
    double m = stats.empty() ? 1.0 : static_cast<double>(stats.size());
    res.replicate_rows[k] = {static_cast<double>(stats.size()), obtuse / m, area / m,
                             angle / (3.0 * m)};
  });

  double kept = 0.0;
  for (const auto& row : res.replicate_rows) kept += row[0];
  auto [obtuse, se_obtuse] = mean_se(res.replicate_rows, 1);
  auto [area, se_area] = mean_se(res.replicate_rows, 2);
  auto [angle, se_angle] = mean_se(res.replicate_rows, 3);
  res.estimates = {{"kept_triangles", kept},
                   {"obtuse_probability", obtuse},
                   {"mean_area", area},
                   {"mean_angle", angle}};
  res.std_errors = {{"kept_triangles", 0.0},
                    {"obtuse_probability", se_obtuse},
                    {"mean_area", se_area},
                    {"mean_angle", se_angle}};
  res.seconds = elapsed_since(t0);
  return res;
}

}  // namespace pcd

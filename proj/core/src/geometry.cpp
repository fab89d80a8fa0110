#include "mtc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mtc {
namespace {

inline double wrap_delta(double a, double b, double window) {
  double d = std::abs(a - b);
  return std::min(d, window - d);
}

}  // namespace

std::vector<Vec2> sample_ppp(double density, double window,
                             RngStream& stream) {
  if (density < 0.0 || !(window > 0.0))
    throw std::invalid_argument("sample_ppp: bad density or window");
  const std::uint64_t n = stream.poisson(density * window * window);
  std::vector<Vec2> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = stream.uniform() * window;
    const double y = stream.uniform() * window;
    pts.push_back({x, y});
  }
  return pts;
}

double torus_distance_sq(const Vec2& a, const Vec2& b, double window) {
  const double dx = wrap_delta(a.x, b.x, window);
  const double dy = wrap_delta(a.y, b.y, window);
  return dx * dx + dy * dy;
}

double torus_distance(const Vec2& a, const Vec2& b, double window) {
  return std::sqrt(torus_distance_sq(a, b, window));
}

Grouping assign_nearest(const NetworkSnapshot& snapshot,
                        std::uint32_t resolution) {
  const std::size_t g = snapshot.gateways.size();
  if (g < 2)
    throw std::invalid_argument("assign_nearest: need at least two gateways");
  Grouping grouping;
  grouping.owner.resize(snapshot.devices.size());
  grouping.counts.assign(g, 0);
  for (std::size_t d = 0; d < snapshot.devices.size(); ++d) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_g = 0;
    for (std::size_t i = 0; i < g; ++i) {
      const double d2 = torus_distance_sq(snapshot.devices[d],
                                          snapshot.gateways[i],
                                          snapshot.window);
      if (d2 < best) {
        best = d2;
        best_g = static_cast<std::uint32_t>(i);
      }
    }
    grouping.owner[d] = best_g;
    ++grouping.counts[best_g];
  }
  grouping.areas = cell_areas(snapshot, resolution);
  const double w2 = snapshot.window * snapshot.window;
  grouping.gamma.resize(g);
  for (std::size_t i = 0; i < g; ++i) grouping.gamma[i] = grouping.areas[i] / w2;
  return grouping;
}

std::vector<double> cell_areas(const NetworkSnapshot& snapshot,
                               std::uint32_t resolution) {
  if (resolution < 64)
    throw std::invalid_argument("cell_areas: resolution must be >= 64");
  const std::size_t g = snapshot.gateways.size();
  if (g == 0) throw std::invalid_argument("cell_areas: no gateways");
  const double window = snapshot.window;
  const double step = window / resolution;

  // Per-axis wrapped squared deltas, so the inner loop is one add + compare.
  std::vector<double> dx2(g * resolution), dy2(g * resolution);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::uint32_t k = 0; k < resolution; ++k) {
      const double c = (k + 0.5) * step;
      const double ddx = wrap_delta(c, snapshot.gateways[i].x, window);
      const double ddy = wrap_delta(c, snapshot.gateways[i].y, window);
      dx2[i * resolution + k] = ddx * ddx;
      dy2[i * resolution + k] = ddy * ddy;
    }
  }

  std::vector<std::uint64_t> hits(g, 0);
  for (std::uint32_t iy = 0; iy < resolution; ++iy) {
    for (std::uint32_t ix = 0; ix < resolution; ++ix) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_g = 0;
      for (std::size_t i = 0; i < g; ++i) {
        const double d2 = dx2[i * resolution + ix] + dy2[i * resolution + iy];
        if (d2 < best) {
          best = d2;
          best_g = i;
        }
      }
      ++hits[best_g];
    }
  }

  // gamma = hits/res^2 is an exact dyadic partition of 1; areas scale it.
  const double cells = static_cast<double>(resolution) * resolution;
  std::vector<double> areas(g);
  for (std::size_t i = 0; i < g; ++i)
    areas[i] = (static_cast<double>(hits[i]) / cells) * (window * window);
  return areas;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> nearest_gateway_pairs(
    const NetworkSnapshot& snapshot) {
  const std::size_t g = snapshot.gateways.size();
  if (g < 2)
    throw std::invalid_argument(
        "nearest_gateway_pairs: need at least two gateways");

  struct Candidate {
    double dist2;
    std::uint32_t a, b;
  };
  std::vector<Candidate> cands;
  cands.reserve(g);
  for (std::size_t i = 0; i < g; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_j = 0;
    for (std::size_t j = 0; j < g; ++j) {
      if (j == i) continue;
      const double d2 = torus_distance_sq(snapshot.gateways[i],
                                          snapshot.gateways[j],
                                          snapshot.window);
      if (d2 < best) {
        best = d2;
        best_j = static_cast<std::uint32_t>(j);
      }
    }
    const auto a = static_cast<std::uint32_t>(std::min<std::size_t>(i, best_j));
    const auto b = static_cast<std::uint32_t>(std::max<std::size_t>(i, best_j));
    cands.push_back({best, a, b});
  }

  std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
    if (l.dist2 != r.dist2) return l.dist2 < r.dist2;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Candidate& l, const Candidate& r) {
                            return l.a == r.a && l.b == r.b;
                          }),
              cands.end());

  std::vector<char> used(g, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& c : cands) {
    if (used[c.a] || used[c.b]) continue;
    used[c.a] = used[c.b] = 1;
    pairs.emplace_back(c.a, c.b);
  }
  return pairs;
}

}  // namespace mtc

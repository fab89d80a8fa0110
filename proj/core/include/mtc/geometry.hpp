#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mtc/rng.hpp"

namespace mtc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// One realization of the device and gateway point processes on a square
/// torus of side `window`.
struct NetworkSnapshot {
  std::vector<Vec2> devices;
  std::vector<Vec2> gateways;
  double window = 0.0;
  bool torus = true;
};

/// Device-to-gateway association plus the per-gateway bookkeeping derived
/// from it. gamma follows territory area, not membership, and sums to 1.
struct Grouping {
  std::vector<std::uint32_t> owner;   // device index -> gateway index
  std::vector<std::uint32_t> counts;  // per-gateway member count
  std::vector<double> gamma;          // per-gateway spectrum share
  std::vector<double> areas;          // per-gateway cell area
};

/// Homogeneous PPP sample: Poisson(density*L^2) points, i.i.d. uniform on
/// [0,L)^2, fully determined by the stream.
std::vector<Vec2> sample_ppp(double density, double window, RngStream& stream);

/// Euclidean distance with per-axis wraparound. Bounded by L/sqrt(2).
double torus_distance(const Vec2& a, const Vec2& b, double window);
double torus_distance_sq(const Vec2& a, const Vec2& b, double window);

/// Nearest-gateway association; ties break toward the lower gateway index.
/// gamma/areas are filled from cell_areas at the given grid resolution.
Grouping assign_nearest(const NetworkSnapshot& snapshot,
                        std::uint32_t resolution = 256);

/// Grid estimate of the per-gateway cell areas: each of resolution^2 cell
/// centers is assigned to its nearest gateway under the torus metric.
/// The returned areas partition L^2 exactly.
std::vector<double> cell_areas(const NetworkSnapshot& snapshot,
                               std::uint32_t resolution);

/// Unordered nearest-gateway pairs: every gateway nominates its nearest
/// neighbour; after dedup the candidates are taken greedily in ascending
/// distance so each gateway lands in at most one pair. Returned in that
/// ascending order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> nearest_gateway_pairs(
    const NetworkSnapshot& snapshot);

}  // namespace mtc

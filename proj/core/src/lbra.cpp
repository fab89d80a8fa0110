#include "mtc/lbra.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mtc {

std::uint32_t k_change(std::uint32_t k_i, std::uint32_t k_0) {
  const std::uint32_t diff = k_i > k_0 ? k_i - k_0 : k_0 - k_i;
  return diff / 2;
}

std::optional<TransferMove> balance_pair(
    Grouping& grouping, const NetworkSnapshot& snapshot,
    const std::pair<std::uint32_t, std::uint32_t>& pair) {
  const auto [a, b] = pair;
  const std::uint32_t ka = grouping.counts[a];
  const std::uint32_t kb = grouping.counts[b];
  const std::uint32_t moved = k_change(ka, kb);
  if (moved == 0) return std::nullopt;  // includes the equal-count tie

  const std::uint32_t donor = ka > kb ? a : b;
  const std::uint32_t receiver = ka > kb ? b : a;

  struct Member {
    double dist2;
    std::uint32_t device;
  };
  std::vector<Member> members;
  members.reserve(grouping.counts[donor]);
  const Vec2 recv_pos = snapshot.gateways[receiver];
  for (std::uint32_t d = 0; d < grouping.owner.size(); ++d) {
    if (grouping.owner[d] != donor) continue;
    members.push_back(
        {torus_distance_sq(snapshot.devices[d], recv_pos, snapshot.window), d});
  }
  // Closest to the receiver move; equal distances break toward the lower
  // device index for determinism.
  std::partial_sort(members.begin(), members.begin() + moved, members.end(),
                    [](const Member& l, const Member& r) {
                      if (l.dist2 != r.dist2) return l.dist2 < r.dist2;
                      return l.device < r.device;
                    });

  TransferMove move;
  move.donor = donor;
  move.receiver = receiver;
  move.k_change = moved;
  move.devices.reserve(moved);
  for (std::uint32_t m = 0; m < moved; ++m) {
    const std::uint32_t d = members[m].device;
    grouping.owner[d] = receiver;
    move.devices.push_back(d);
  }
  std::sort(move.devices.begin(), move.devices.end());
  grouping.counts[donor] -= moved;
  grouping.counts[receiver] += moved;
  return move;
}

std::pair<Grouping, TransferPlan> regroup(const Grouping& grouping,
                                          const NetworkSnapshot& snapshot,
                                          Policy policy) {
  if (policy == Policy::kNpra) return {grouping, TransferPlan{}};

  Grouping out = grouping;
  TransferPlan plan;
  for (const auto& pair : nearest_gateway_pairs(snapshot)) {
    if (auto move = balance_pair(out, snapshot, pair)) {
      plan.moves.push_back(std::move(*move));
    }
  }
  return {std::move(out), std::move(plan)};
}

}  // namespace mtc

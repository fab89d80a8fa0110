#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mtc/geometry.hpp"

namespace mtc {

enum class Policy { kNpra, kLbra };

struct TransferMove {
  std::uint32_t donor;
  std::uint32_t receiver;
  std::uint32_t k_change;
  std::vector<std::uint32_t> devices;  // moved device indices
};

struct TransferPlan {
  std::vector<TransferMove> moves;
};

/// floor(|k_i - k_0| / 2): how many devices one balancing step moves.
std::uint32_t k_change(std::uint32_t k_i, std::uint32_t k_0);

/// Balances one gateway pair in place: the larger group donates its
/// k_change members closest to the receiving gateway (equal counts move
/// nothing). gamma/areas stay untouched; spectrum follows territory.
std::optional<TransferMove> balance_pair(
    Grouping& grouping, const NetworkSnapshot& snapshot,
    const std::pair<std::uint32_t, std::uint32_t>& pair);

/// NPRA returns the grouping unchanged with an empty plan. LBRA applies
/// balance_pair to every nearest-gateway pair in ascending pair-distance
/// order, one pass.
std::pair<Grouping, TransferPlan> regroup(const Grouping& grouping,
                                          const NetworkSnapshot& snapshot,
                                          Policy policy);

}  // namespace mtc

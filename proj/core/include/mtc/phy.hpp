#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mtc/geometry.hpp"
#include "mtc/params.hpp"
#include "mtc/rng.hpp"

namespace mtc {

/// Channel index per device, each in [0, u1).
struct ChannelAssignment {
  std::vector<std::uint32_t> channel;
  std::uint32_t u1 = 0;
};

struct GatewayTally {
  std::uint32_t members = 0;
  std::uint32_t captured = 0;
  std::uint32_t budget = 0;
  std::uint32_t relayed = 0;
};

struct TrialResult {
  std::uint64_t n_devices = 0;
  std::uint64_t n_captured = 0;
  std::uint64_t n_relayed = 0;
  std::vector<char> success;  // per device: captured and relayed
  std::vector<GatewayTally> per_gateway;
  std::uint32_t resample_count = 0;
};

/// i.i.d. uniform channel per device (thins the device process by 1/u1 on
/// each channel).
ChannelAssignment assign_channels(std::size_t n_devices, std::uint32_t u1,
                                  RngStream& stream);

/// SIR of one device at one gateway: own fade times d^-alpha over the sum of
/// the co-channel interferers' faded powers, all distances on the torus.
/// Returns +inf when the interference sum is zero.
double sir(std::uint32_t device, std::uint32_t gateway,
           const ChannelAssignment& assignment, const NetworkSnapshot& snapshot,
           const std::function<double(std::uint32_t, std::uint32_t)>& fade,
           double alpha);

/// Capture flags: device captured iff its SIR at the serving gateway exceeds
/// eta. Fades come from the per-link field; interference is network-wide
/// co-channel.
std::vector<char> resolve_captures(const Grouping& grouping,
                                   const ChannelAssignment& assignment,
                                   const NetworkSnapshot& snapshot,
                                   const RadioParams& radio,
                                   const LinkFades& fades);

/// Per gateway: all captured packets relay if they fit the budget, otherwise
/// a uniform random subset of budget size does.
std::vector<char> relay_select(const Grouping& grouping,
                               const std::vector<char>& captured,
                               const std::vector<std::uint32_t>& budgets,
                               RngStream& stream);

}  // namespace mtc

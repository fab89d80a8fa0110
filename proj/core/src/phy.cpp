#include "mtc/phy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mtc {

ChannelAssignment assign_channels(std::size_t n_devices, std::uint32_t u1,
                                  RngStream& stream) {
  if (u1 < 1) throw std::invalid_argument("assign_channels: u1 must be >= 1");
  ChannelAssignment a;
  a.u1 = u1;
  a.channel.resize(n_devices);
  for (std::size_t d = 0; d < n_devices; ++d)
    a.channel[d] = static_cast<std::uint32_t>(stream.uniform_int(u1));
  return a;
}

double sir(std::uint32_t device, std::uint32_t gateway,
           const ChannelAssignment& assignment, const NetworkSnapshot& snapshot,
           const std::function<double(std::uint32_t, std::uint32_t)>& fade,
           double alpha) {
  const std::uint32_t u = assignment.channel[device];
  const Vec2 rx = snapshot.gateways[gateway];
  double interference = 0.0;
  double signal = 0.0;
  for (std::uint32_t j = 0; j < snapshot.devices.size(); ++j) {
    if (assignment.channel[j] != u) continue;
    const double d = torus_distance(snapshot.devices[j], rx, snapshot.window);
    const double p = fade(j, gateway) * std::pow(d, -alpha);
    if (j == device)
      signal = p;
    else
      interference += p;
  }
  if (interference == 0.0) return std::numeric_limits<double>::infinity();
  return signal / interference;
}

std::vector<char> resolve_captures(const Grouping& grouping,
                                   const ChannelAssignment& assignment,
                                   const NetworkSnapshot& snapshot,
                                   const RadioParams& radio,
                                   const LinkFades& fades) {
  const std::size_t n = snapshot.devices.size();
  std::vector<char> captured(n, 0);

  // Bucket devices by channel once; each channel is independent.
  std::vector<std::vector<std::uint32_t>> by_channel(assignment.u1);
  for (std::uint32_t d = 0; d < n; ++d)
    by_channel[assignment.channel[d]].push_back(d);

  std::vector<std::uint32_t> rx_gateways;
  std::vector<double> power;
  for (std::uint32_t u = 0; u < assignment.u1; ++u) {
    const auto& devs = by_channel[u];
    if (devs.empty()) continue;

    rx_gateways.clear();
    for (std::uint32_t d : devs) rx_gateways.push_back(grouping.owner[d]);
    std::sort(rx_gateways.begin(), rx_gateways.end());
    rx_gateways.erase(std::unique(rx_gateways.begin(), rx_gateways.end()),
                      rx_gateways.end());

    for (std::uint32_t g : rx_gateways) {
      const Vec2 rx = snapshot.gateways[g];
      power.resize(devs.size());
      double total = 0.0;
      for (std::size_t k = 0; k < devs.size(); ++k) {
        const double d =
            torus_distance(snapshot.devices[devs[k]], rx, snapshot.window);
        power[k] = fades(devs[k], g) * std::pow(d, -radio.alpha);
        total += power[k];
      }
      for (std::size_t k = 0; k < devs.size(); ++k) {
        if (grouping.owner[devs[k]] != g) continue;
        const double interference = total - power[k];
        // Zero interference means infinite SIR: captured whenever the signal
        // itself is nonzero.
        const bool ok = interference > 0.0 ? power[k] > radio.eta * interference
                                           : power[k] > 0.0;
        captured[devs[k]] = ok ? 1 : 0;
      }
    }
  }
  return captured;
}

std::vector<char> relay_select(const Grouping& grouping,
                               const std::vector<char>& captured,
                               const std::vector<std::uint32_t>& budgets,
                               RngStream& stream) {
  const std::size_t n_gateways = grouping.counts.size();
  std::vector<std::vector<std::uint32_t>> per_gateway(n_gateways);
  for (std::uint32_t d = 0; d < captured.size(); ++d)
    if (captured[d]) per_gateway[grouping.owner[d]].push_back(d);

  std::vector<char> relayed(captured.size(), 0);
  for (std::size_t g = 0; g < n_gateways; ++g) {
    auto& list = per_gateway[g];
    const std::uint32_t budget = budgets[g];
    if (list.size() <= budget) {
      for (std::uint32_t d : list) relayed[d] = 1;
      continue;
    }
    // Partial Fisher-Yates: the first `budget` slots become the chosen subset.
    for (std::uint32_t k = 0; k < budget; ++k) {
      const std::size_t j = k + stream.uniform_int(list.size() - k);
      std::swap(list[k], list[j]);
      relayed[list[k]] = 1;
    }
  }
  return relayed;
}

}  // namespace mtc

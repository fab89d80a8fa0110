#pragma once

#include <array>
#include <cstdint>

namespace mtc {

/// Philox4x64-10 counter-based generator. A block is a pure function of
/// (counter, key), so any draw in the program can be reproduced from its
/// coordinates alone; there is no shared generator state to sequence.
struct Philox {
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  static Counter block(Counter ctr, Key key);
};

/// Role of a substream within one trial (or one analytic sample). Keeping
/// the purposes on separate counters means adding draws to one stage never
/// shifts the randomness of another.
enum class StreamPurpose : std::uint32_t {
  kDevices = 1,
  kGateways = 2,
  kChannels = 3,
  kFades = 4,
  kRelay = 5,
  kPairDistance = 6,
  kCellArea = 7,
  kGroupCounts = 8,
};

/// Sequential view of the substream identified by
/// (seed, trial, purpose, attempt). `attempt` bumps the whole substream when
/// a degenerate draw forces a resample.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t trial, StreamPurpose purpose,
            std::uint32_t attempt = 0);

  std::uint64_t next_u64();

  /// Uniform on [0,1) with 53 random bits.
  double uniform();
  /// Uniform integer on [0, n), unbiased (rejection).
  std::uint64_t uniform_int(std::uint64_t n);
  /// Exponential with the given mean.
  double exponential(double mean = 1.0);
  /// Standard normal (Box-Muller, one value per pair of uniforms).
  double normal();
  /// Gamma(shape, scale), shape >= 1 (Marsaglia-Tsang).
  double gamma(double shape, double scale);
  /// Poisson(mean); inversion below mean 10, PTRS rejection above.
  std::uint64_t poisson(double mean);

 private:
  Philox::Counter ctr_;
  Philox::Key key_;
  std::array<std::uint64_t, 4> buf_{};
  int pos_ = 4;
};

/// Random-access unit-mean exponential fades, one independent value per
/// (transmitter, receiver) link per trial. Being counter-based, the value
/// does not depend on evaluation order.
class LinkFades {
 public:
  LinkFades(std::uint64_t seed, std::uint64_t trial, std::uint32_t attempt = 0);

  double operator()(std::uint32_t tx, std::uint32_t rx) const;

 private:
  Philox::Key key_;
  std::uint64_t tag_;
  std::uint64_t trial_;
};

}  // namespace mtc

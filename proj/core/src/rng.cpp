#include "mtc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mtc {
namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

// Fixed second key word; the first carries the user seed.
constexpr std::uint64_t kKeySalt = 0x6D746372656C6179ull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  lo = static_cast<std::uint64_t>(p);
  hi = static_cast<std::uint64_t>(p >> 64);
}

inline double u64_to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

constexpr double kTwoPi = 6.283185307179586;

}  // namespace

Philox::Counter Philox::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t trial,
                     StreamPurpose purpose, std::uint32_t attempt)
    : ctr_{0, 0,
           (static_cast<std::uint64_t>(purpose) << 32) | attempt, trial},
      key_{seed, kKeySalt} {}

std::uint64_t RngStream::next_u64() {
  if (pos_ == 4) {
    buf_ = Philox::block(ctr_, key_);
    ++ctr_[0];  // block counter; 2^64 blocks per substream
    pos_ = 0;
  }
  return buf_[pos_++];
}

double RngStream::uniform() { return u64_to_unit(next_u64()); }

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double RngStream::exponential(double mean) {
  // 1-u is in (0,1], so the log never sees zero.
  return -mean * std::log1p(-uniform());
}

double RngStream::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::gamma(double shape, double scale) {
  if (shape < 1.0) throw std::invalid_argument("gamma: shape must be >= 1");
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v * scale;
  }
}

std::uint64_t RngStream::poisson(double mean) {
  if (mean < 0.0 || !std::isfinite(mean))
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // Inversion by sequential search.
    const double l = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }
  // PTRS transformed rejection (Hormann), exact for mean >= 10.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform() - 0.5;
    const double v = uniform();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
        kf * loglam - mean - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

LinkFades::LinkFades(std::uint64_t seed, std::uint64_t trial,
                     std::uint32_t attempt)
    : key_{seed, kKeySalt},
      tag_{(static_cast<std::uint64_t>(StreamPurpose::kFades) << 32) | attempt},
      trial_{trial} {}

double LinkFades::operator()(std::uint32_t tx, std::uint32_t rx) const {
  // Counter layout {0, link id, purpose|attempt, trial}: the link id lives in
  // word 1, so it can never collide with the sequential streams' block counter
  // in word 0.
  const std::uint64_t link =
      (static_cast<std::uint64_t>(tx) << 32) | static_cast<std::uint64_t>(rx);
  const auto out = Philox::block({0, link, tag_, trial_}, key_);
  return -std::log1p(-u64_to_unit(out[0]));
}

}  // namespace mtc

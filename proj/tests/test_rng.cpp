#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mtc/rng.hpp"
#include "test_util.hpp"

using namespace mtc;

TEST_CASE("philox4x64-10 known-answer vectors") {
  // Reference outputs generated with numpy's Philox bit generator (which
  // pre-increments the counter, hence the +1 on the first word here).
  const Philox::Key zero_key{0, 0};
  auto out = Philox::block({1, 0, 0, 0}, zero_key);
  CHECK(out[0] == 0x02f4ba6408e4d89bull);
  CHECK(out[1] == 0x3dd62b0b9ca8c5b2ull);
  CHECK(out[2] == 0x1c8667a55d902e79ull);
  CHECK(out[3] == 0x907d7a052fd5b4dcull);
  out = Philox::block({2, 0, 0, 0}, zero_key);
  CHECK(out[0] == 0x809bf322883987c3ull);
  CHECK(out[1] == 0x471128b9e807f7ddull);
  CHECK(out[2] == 0xf250ba0dbec065b7ull);
  CHECK(out[3] == 0xfc6ed66767a457bcull);

  const Philox::Key pi_key{0x243F6A8885A308D3ull, 0x13198A2E03707344ull};
  out = Philox::block({0xdeadbef0ull, 0x12345678ull, 0xabcdef01ull,
                       0x55aa55aaull},
                      pi_key);
  CHECK(out[0] == 0x6a1f07131031f831ull);
  CHECK(out[1] == 0x1af9a8aaa0b0a742ull);
  CHECK(out[2] == 0xafadcefae91474d6ull);
  CHECK(out[3] == 0x41e9527294a359a9ull);
  out = Philox::block({0xdeadbef1ull, 0x12345678ull, 0xabcdef01ull,
                       0x55aa55aaull},
                      pi_key);
  CHECK(out[0] == 0x86500341172ea1e6ull);
  CHECK(out[1] == 0x090067474733dac9ull);
  CHECK(out[2] == 0xc2388fa5eb6480ebull);
  CHECK(out[3] == 0x2d2bc1df05d4ede2ull);

  out = Philox::block({2, 2, 3, 4}, Philox::Key{42, 0});
  CHECK(out[0] == 0x8899e81e7f1c0eddull);
  CHECK(out[1] == 0x6b64134515dbe3afull);
  CHECK(out[2] == 0xdc2ee0327b26d9f8ull);
  CHECK(out[3] == 0xbff4cc14b0341e6aull);
}

TEST_CASE("streams are deterministic and purpose-separated") {
  RngStream a(7, 3, StreamPurpose::kDevices);
  RngStream b(7, 3, StreamPurpose::kDevices);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream c(7, 3, StreamPurpose::kGateways);
  RngStream d(7, 3, StreamPurpose::kDevices);
  bool differ = false;
  for (int i = 0; i < 16; ++i) differ |= (c.next_u64() != d.next_u64());
  CHECK(differ);

  RngStream e(7, 3, StreamPurpose::kDevices, 1);  // bumped attempt
  RngStream f(7, 3, StreamPurpose::kDevices, 0);
  differ = false;
  for (int i = 0; i < 16; ++i) differ |= (e.next_u64() != f.next_u64());
  CHECK(differ);
}

TEST_CASE("uniform lies in [0,1) and looks uniform") {
  RngStream s(11, 0, StreamPurpose::kDevices);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean - 0.5) < 5.0 / std::sqrt(12.0 * n));
  CHECK(std::abs(var - 1.0 / 12.0) < 0.002);
}

TEST_CASE("uniform_int covers its range without bias") {
  RngStream s(13, 1, StreamPurpose::kChannels);
  std::vector<int> hits(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++hits[s.uniform_int(7)];
  for (int k = 0; k < 7; ++k) {
    CHECK(hits[k] > 0);
    CHECK(std::abs(hits[k] - n / 7.0) < 5.0 * std::sqrt(n / 7.0));
  }
  CHECK_THROWS_AS(s.uniform_int(0), std::invalid_argument);
}

TEST_CASE("exponential and normal moments") {
  RngStream s(17, 2, StreamPurpose::kFades);
  const int n = 200000;
  double se = 0.0, se2 = 0.0, sn = 0.0, sn2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = s.exponential(2.0);
    CHECK(e >= 0.0);
    se += e;
    se2 += e * e;
    const double z = s.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(std::abs(se / n - 2.0) < 5.0 * 2.0 / std::sqrt(double(n)));
  CHECK(std::abs(se2 / n - 8.0) < 0.25);  // E[X^2] = 2 mean^2
  CHECK(std::abs(sn / n) < 5.0 / std::sqrt(double(n)));
  CHECK(std::abs(sn2 / n - 1.0) < 0.02);
}

TEST_CASE("gamma sampler matches mean and variance") {
  RngStream s(19, 5, StreamPurpose::kCellArea);
  const double shape = 3.5, scale = 2.0;
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = s.gamma(shape, scale);
    CHECK(g > 0.0);
    sum += g;
    sum2 += g * g;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean - shape * scale) < 0.05);
  CHECK(std::abs(var - shape * scale * scale) < 0.3);
}

namespace {

// Exact Poisson CDF table for the DKW-style distribution check.
std::vector<double> poisson_cdf(double mean, int kmax) {
  std::vector<double> cdf(kmax + 1);
  double acc = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    acc += std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
    cdf[k] = acc;
  }
  return cdf;
}

void check_poisson(double mean, std::uint64_t seed) {
  RngStream s(seed, 0, StreamPurpose::kGroupCounts);
  const int n = 200000;
  const int kmax = static_cast<int>(mean + 12.0 * std::sqrt(mean) + 20.0);
  std::vector<int> counts(kmax + 1, 0);
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto k = s.poisson(mean);
    REQUIRE(k <= static_cast<std::uint64_t>(kmax));
    ++counts[k];
    sum += double(k);
    sum2 += double(k) * double(k);
  }
  const double m = sum / n;
  const double v = sum2 / n - m * m;
  CHECK(std::abs(m - mean) < 5.0 * std::sqrt(mean / n));
  CHECK(std::abs(v - mean) < 0.05 * mean + 5.0 * mean / std::sqrt(double(n)));
  // Empirical CDF against the exact one (DKW-style bound with margin).
  const auto cdf = poisson_cdf(mean, kmax);
  double acc = 0.0, worst = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    acc += double(counts[k]) / n;
    worst = std::max(worst, std::abs(acc - cdf[k]));
  }
  CHECK(worst < 0.006);
}

}  // namespace

TEST_CASE("poisson sampler: inversion and PTRS regimes") {
  check_poisson(0.5, 101);
  check_poisson(4.0, 102);
  check_poisson(25.0, 103);   // PTRS
  check_poisson(400.0, 104);  // PTRS, large mean
  RngStream s(1, 0, StreamPurpose::kGroupCounts);
  CHECK(s.poisson(0.0) == 0);
  CHECK_THROWS_AS(s.poisson(-1.0), std::invalid_argument);
}

TEST_CASE("link fades: deterministic, order-free, exponential") {
  const LinkFades fades(23, 9);
  const LinkFades same(23, 9);
  CHECK(fades(3, 7) == same(3, 7));
  CHECK(fades(3, 7) == fades(3, 7));
  CHECK(fades(3, 7) != fades(7, 3));  // directed links are distinct draws

  const LinkFades other_trial(23, 10);
  CHECK(fades(3, 7) != other_trial(3, 7));

  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += fades(static_cast<std::uint32_t>(i), 5);
  CHECK(std::abs(sum / n - 1.0) < 5.0 / std::sqrt(double(n)));
}

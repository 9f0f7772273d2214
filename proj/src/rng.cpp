#include "greypath/rng.hpp"

#include <cmath>

namespace greypath {

namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

inline void philox2x64_round(std::uint64_t& c0, std::uint64_t& c1,
                             std::uint64_t& key) {
  unsigned __int128 prod = static_cast<unsigned __int128>(kPhiloxM) * c0;
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
  std::uint64_t lo = static_cast<std::uint64_t>(prod);
  c0 = hi ^ key ^ c1;
  c1 = lo;
  key += kWeyl;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index) {}

void RngStream::refill() {
  std::uint64_t c0 = block_++;
  std::uint64_t c1 = stream_;
  std::uint64_t key = seed_;
  for (int r = 0; r < 10; ++r) philox2x64_round(c0, c1, key);
  buf_[0] = c0;
  buf_[1] = c1;
  buf_pos_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (buf_pos_ == 2) refill();
  return buf_[buf_pos_++];
}

double RngStream::uniform01() {
  // 53 random bits shifted into (0,1): (k + 0.5) * 2^-53, k in [0, 2^53).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  if (have_cached_normal_) {
    have_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559 * u2;
  cached_normal_ = r * std::sin(a);
  have_cached_normal_ = true;
  return r * std::cos(a);
}

double RngStream::exponential() { return -std::log(uniform01()); }

}  // namespace greypath

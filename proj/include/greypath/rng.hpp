#pragma once

#include <cstdint>

namespace greypath {

// Counter-based random stream (Philox2x64-10). A stream is fully determined
// by (seed, stream_index) and the number of draws taken, so replicas of a
// parallel ensemble can each own stream_index = replica without any
// coordination, and reruns reproduce draws bit-for-bit.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1); never returns an endpoint, so
  // log(u) and log1p(-u) are always finite.
  double uniform01();

  // Standard normal via the trigonometric Box-Muller pair; consumes exactly
  // two uniforms per pair, second value cached.
  double normal();

  // Standard exponential (rate 1).
  double exponential();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int buf_pos_ = 2;
  double cached_normal_ = 0.0;
  bool have_cached_normal_ = false;
};

}  // namespace greypath

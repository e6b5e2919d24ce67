// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace dephase {

/**
 * Philox4x32-10 counter-based generator (Salmon et al., SC'11).
 *
 * A stream is identified by (seed, stream id). Each call to the block
 * function maps a 128-bit counter to 128 random bits, so any sample can be
 * regenerated independently of how work is split across threads. The 64-bit
 * seed is the key; the stream id fills the upper two counter words and the
 * lower two words count blocks within the stream.
 *
 * Normal variates use Box-Muller on two 53-bit uniforms, and bounded integers
 * use rejection sampling, so the output sequence depends only on this file
 * (plus libm for log/sin/cos).
 */
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  /// The raw 10-round bijection.
  static Block block(Block counter, Key key);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 bits.
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t bounded(std::uint64_t bound);

 private:
  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Block buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; used to fold several integers into one stream id.
std::uint64_t mix64(std::uint64_t x);

}  // namespace dephase

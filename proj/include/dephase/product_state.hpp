// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dephase {

inline constexpr int kMaxQubits = 63;

/**
 * An n-qubit spin configuration packed into one machine word.
 *
 * Bit j holds the spin of qubit j+1: 0 is up (+1), 1 is down (-1). The least
 * significant bit is qubit 1, so the printed form l_n ... l_1 reads the word
 * from the most significant used bit down.
 */
class ProductState {
 public:
  ProductState() = default;
  /// Throws ValidationError if n is outside [1, 63] or bits has set positions >= n.
  ProductState(int n, std::uint64_t bits);

  static ProductState all_up(int n) { return ProductState(n, 0); }
  static ProductState all_down(int n);
  /// Parses l_n ... l_1 with '1' for up and '-' for down.
  static ProductState parse(std::string_view text);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  /// Spin of qubit `j` (0-based): +1 up, -1 down.
  int spin(int j) const { return ((bits_ >> j) & 1U) ? -1 : +1; }
  /// Manifold index: number of down spins.
  int down_count() const;

  std::string to_string() const;

  friend bool operator==(const ProductState&, const ProductState&) = default;
  friend auto operator<=>(const ProductState&, const ProductState&) = default;

 private:
  int n_ = 1;
  std::uint64_t bits_ = 0;
};

/// Number of positions where the spins differ. Throws on mismatched qubit counts.
int hamming(const ProductState& a, const ProductState& b);

/// Mask with the lowest n bits set.
constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace dephase

// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/product_state.hpp"

#include <bit>

#include "dephase/errors.hpp"

namespace dephase {

ProductState::ProductState(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count must be in [1, 63], got " + std::to_string(n));
  }
  if ((bits & ~low_mask(n)) != 0) {
    throw ValidationError("product state has spins set beyond qubit " + std::to_string(n));
  }
}

ProductState ProductState::all_down(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count must be in [1, 63], got " + std::to_string(n));
  }
  return ProductState(n, low_mask(n));
}

ProductState ProductState::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("bitstring length must be in [1, 63]");
  }
  std::uint64_t bits = 0;
  for (int pos = 0; pos < n; ++pos) {
    // Leftmost character is qubit n.
    const char c = text[static_cast<std::size_t>(pos)];
    const int qubit = n - 1 - pos;
    if (c == '-') {
      bits |= std::uint64_t{1} << qubit;
    } else if (c != '1') {
      throw ValidationError("bitstring may only contain '1' and '-': " + std::string(text));
    }
  }
  return ProductState(n, bits);
}

int ProductState::down_count() const { return std::popcount(bits_); }

std::string ProductState::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '1');
  for (int j = 0; j < n_; ++j) {
    if ((bits_ >> j) & 1U) out[static_cast<std::size_t>(n_ - 1 - j)] = '-';
  }
  return out;
}

int hamming(const ProductState& a, const ProductState& b) {
  if (a.n() != b.n()) {
    throw ValidationError("hamming: qubit counts differ (" + std::to_string(a.n()) + " vs " +
                          std::to_string(b.n()) + ")");
  }
  return std::popcount(a.bits() ^ b.bits());
}

}  // namespace dephase

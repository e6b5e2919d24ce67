// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "dephase/superposed_state.hpp"

namespace dephase {

/// Tolerance on the amplitude norm accepted by the text parser.
inline constexpr double kParseNormTolerance = 1e-9;

/**
 * Text format: one term per line, "amp_re amp_im bitstring", bitstring written
 * l_n ... l_1 with '1' = up and '-' = down. Blank lines and lines starting
 * with '#' are ignored.
 */
void write_state(std::ostream& out, const SuperposedState& state);
std::string format_state(const SuperposedState& state);

/// Rejects duplicate bitstrings, mixed lengths and norms off by more than 1e-9.
/// Accepted input is renormalized exactly.
SuperposedState read_state(std::istream& in);
SuperposedState parse_state(const std::string& text);

}  // namespace dephase

// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "dephase/errors.hpp"

namespace dephase {

void write_state(std::ostream& out, const SuperposedState& state) {
  char buf[64];
  for (const auto& t : state.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g ", t.amplitude.real(), t.amplitude.imag());
    out << buf << t.basis.to_string() << '\n';
  }
}

std::string format_state(const SuperposedState& state) {
  std::ostringstream os;
  write_state(os, state);
  return os.str();
}

SuperposedState read_state(std::istream& in) {
  std::vector<Term> terms;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double re = 0.0;
    double im = 0.0;
    std::string bits;
    std::string extra;
    if (!(fields >> re >> im >> bits) || (fields >> extra)) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'amp_re amp_im bitstring'");
    }
    if (!seen.insert(bits).second) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate bitstring " + bits);
    }
    terms.push_back({Amplitude(re, im), ProductState::parse(bits)});
  }
  if (terms.empty()) throw ValidationError("state text has no terms");
  double norm = 0.0;
  for (const auto& t : terms) norm += std::norm(t.amplitude);
  if (std::abs(norm - 1.0) > kParseNormTolerance) {
    throw ValidationError("amplitudes are not normalized (sum |d|^2 = " + std::to_string(norm) +
                          ")");
  }
  if (std::abs(norm - 1.0) <= kNormTolerance) return SuperposedState(std::move(terms));
  return SuperposedState::normalized(std::move(terms));
}

SuperposedState parse_state(const std::string& text) {
  std::istringstream in(text);
  return read_state(in);
}

}  // namespace dephase

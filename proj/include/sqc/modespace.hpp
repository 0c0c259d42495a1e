// Copyright 2026 The sqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqc/linalg.hpp"

namespace sqc {

// Mode labels. Logical bit values: D = 0 for right-moving, 1 for
// left-moving; S = 0 for the symmetric dual-rail state, 1 for the
// antisymmetric one; P = 0 for horizontal polarization, 1 for vertical.
enum class Direction { R = 0, L = 1 };
enum class Polarization { H = 0, V = 1 };
enum class Rail { a = 0, b = 1 };

inline char to_char(Direction d) { return d == Direction::R ? 'R' : 'L'; }
inline char to_char(Polarization p) { return p == Polarization::H ? 'H' : 'V'; }
inline char to_char(Rail r) { return r == Rail::a ? 'a' : 'b'; }

/// Index of (P,S,D) in the fixed logical ordering
/// (HSR, HSL, HAR, HAL, VSR, VSL, VAR, VAL): 4P + 2S + D.
inline int logical_index(int p, int s, int d) {
  if ((p | s | d) & ~1) throw std::invalid_argument("logical_index: arguments must be bits");
  return 4 * p + 2 * s + d;
}

inline std::string logical_label(int p, int s, int d) {
  std::string out;
  out += (p == 0 ? 'H' : 'V');
  out += (s == 0 ? 'S' : 'A');
  out += (d == 0 ? 'R' : 'L');
  return out;
}

/// The eight (P,S,D) labels in index order.
inline std::vector<std::string> logical_basis_labels(bool polarized = true) {
  std::vector<std::string> out;
  for (int p = 0; p < (polarized ? 2 : 1); ++p)
    for (int s = 0; s < 2; ++s)
      for (int d = 0; d < 2; ++d)
        out.push_back(polarized ? logical_label(p, s, d)
                                : logical_label(p, s, d).substr(1));
  return out;
}

/// XOR of all entries; the total bit carried by a multi-photon state.
inline int mod2_total(const std::vector<int>& bits) {
  if (bits.empty()) throw std::invalid_argument("mod2_total: empty bit list");
  int acc = 0;
  for (int b : bits) {
    if (b & ~1) throw std::invalid_argument("mod2_total: entries must be bits");
    acc ^= b;
  }
  return acc;
}

/// The 2x2 rail->symmetry block: maps (a,b) rail amplitudes to (S,A)
/// amplitudes. Self-inverse.
inline Mat symmetry_block() {
  Mat h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

/// Block-diagonal change of basis from rail amplitudes (a1,b1,a2,b2,...)
/// to symmetry amplitudes (S1,A1,S2,A2,...) over n dual-rail pairs.
inline Mat symmetry_change_of_basis(int n_rail_pairs) {
  if (n_rail_pairs < 1) throw std::invalid_argument("symmetry_change_of_basis: need at least one pair");
  Mat u = Mat::Zero(2 * n_rail_pairs, 2 * n_rail_pairs);
  const Mat h = symmetry_block();
  for (int k = 0; k < n_rail_pairs; ++k) u.block(2 * k, 2 * k, 2, 2) = h;
  return u;
}

}  // namespace sqc

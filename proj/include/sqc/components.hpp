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

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqc/linalg.hpp"
#include "sqc/modespace.hpp"

namespace sqc {

enum class Side { left, right };

struct Port {
  std::string name;
  Side side;
};

enum class ElementKind {
  grover4,
  beam_splitter,
  pbs,
  phase_shifter,
  mirror,
  circulator,
  pol_rotator,
};

inline std::string kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::grover4: return "grover4";
    case ElementKind::beam_splitter: return "bs";
    case ElementKind::pbs: return "pbs";
    case ElementKind::phase_shifter: return "phase";
    case ElementKind::mirror: return "mirror";
    case ElementKind::circulator: return "circ";
    case ElementKind::pol_rotator: return "rot";
  }
  return "?";
}

/// One nonzero coupling from an incoming directed port-mode to an outgoing
/// one. Polarization-blind elements leave pol_in/pol_out at -1 and act as
/// the identity on the polarization axis.
struct ScatterEntry {
  int port_in;
  int port_out;
  cx amp;
  int pol_in = -1;
  int pol_out = -1;
};

/// An optical component: named ports plus a unitary scattering map over its
/// directed port-modes. Immutable value object.
struct ScatteringElement {
  ElementKind kind;
  std::vector<Port> ports;
  std::vector<ScatterEntry> entries;
  bool pol_aware = false;
  std::map<std::string, double> parameters;

  int port_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(ports.size()); ++i)
      if (ports[i].name == name) return i;
    return -1;
  }

  /// Dense in->out scattering matrix. Polarization-blind elements are
  /// returned over ports alone; polarization-aware ones over (port, pol)
  /// channels, pol-major (all H channels first, then all V).
  Mat channel_matrix() const {
    const int np = static_cast<int>(ports.size());
    const int dim = pol_aware ? 2 * np : np;
    Mat m = Mat::Zero(dim, dim);
    for (const auto& e : entries) {
      if (pol_aware) {
        m(e.pol_out * np + e.port_out, e.pol_in * np + e.port_in) += e.amp;
      } else {
        m(e.port_out, e.port_in) += e.amp;
      }
    }
    return m;
  }
};

namespace detail {
inline void add_line(ScatteringElement& el, int p_in, int p_out, cx amp) {
  el.entries.push_back({p_in, p_out, amp});
}
}  // namespace detail

/// Directionally unbiased four-port with ports a,b (left) and c,d (right).
/// Input at any port exits all four: amplitude -1/2 back out the input port
/// and +1/2 out of each of the others. Transmits symmetric dual-rail states
/// and retro-reflects antisymmetric ones with a sign.
inline ScatteringElement grover_four_port() {
  ScatteringElement el;
  el.kind = ElementKind::grover4;
  el.ports = {{"a", Side::left}, {"b", Side::left}, {"c", Side::right}, {"d", Side::right}};
  for (int q = 0; q < 4; ++q)
    for (int p = 0; p < 4; ++p)
      detail::add_line(el, q, p, p == q ? cx{-0.5, 0.0} : cx{0.5, 0.0});
  return el;
}

/// 50/50 dielectric beam splitter, ports la,lb (left) and ra,rb (right).
/// Forward matrix (1/sqrt 2)[[1,1],[1,-1]] from (la,lb) to (ra,rb); the
/// reverse flow uses the transpose (reciprocal element). dot_side selects
/// which corner carries the symmetric association: dot_side=2 swaps the
/// left-port roles, equivalent to mounting the splitter flipped.
inline ScatteringElement beam_splitter(int dot_side = 1) {
  if (dot_side != 1 && dot_side != 2) throw std::invalid_argument("beam_splitter: dot_side must be 1 or 2");
  ScatteringElement el;
  el.kind = ElementKind::beam_splitter;
  el.ports = {{"la", Side::left}, {"lb", Side::left}, {"ra", Side::right}, {"rb", Side::right}};
  el.parameters["dot"] = dot_side;
  const double r = 1.0 / std::sqrt(2.0);
  Mat fwd(2, 2);
  fwd << r, r, r, -r;
  if (dot_side == 2) {
    Mat p(2, 2);
    p << 0, 1, 1, 0;
    fwd = fwd * p;  // left-port relabeling
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (fwd(i, j) != 0.0) detail::add_line(el, j, 2 + i, fwd(i, j));
      // reciprocity: right-to-left flow is the transpose
      if (fwd(i, j) != 0.0) detail::add_line(el, 2 + i, j, fwd(i, j));
    }
  return el;
}

/// Polarizing beam splitter cube, ports l, r, u, d. Horizontal polarization
/// transmits along each axis (l<->r, u<->d); vertical reflects across the
/// coating (l<->u, r<->d) with phase +1.
inline ScatteringElement polarizing_beam_splitter() {
  ScatteringElement el;
  el.kind = ElementKind::pbs;
  el.pol_aware = true;
  el.ports = {{"l", Side::left}, {"r", Side::right}, {"u", Side::left}, {"d", Side::right}};
  const int H = 0, V = 1;
  auto pair = [&](int p, int q, int pol) {
    el.entries.push_back({p, q, cx{1, 0}, pol, pol});
    el.entries.push_back({q, p, cx{1, 0}, pol, pol});
  };
  pair(0, 1, H);  // l <-> r
  pair(2, 3, H);  // u <-> d
  pair(0, 2, V);  // l <-> u
  pair(1, 3, V);  // r <-> d
  return el;
}

/// Phase shifter across a dual-rail pair: ports la,lb,ra,rb. Multiplies the
/// amplitude on the designated rail by e^{i phi} in both travel directions
/// and leaves the other rail untouched.
inline ScatteringElement phase_shifter(double phi, Rail rail = Rail::b) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phase_shifter: phi must be finite");
  ScatteringElement el;
  el.kind = ElementKind::phase_shifter;
  el.ports = {{"la", Side::left}, {"lb", Side::left}, {"ra", Side::right}, {"rb", Side::right}};
  el.parameters["phi"] = phi;
  el.parameters["rail"] = rail == Rail::a ? 0 : 1;
  const cx ph = std::exp(kI * phi);
  const cx amp_a = rail == Rail::a ? ph : cx{1, 0};
  const cx amp_b = rail == Rail::b ? ph : cx{1, 0};
  detail::add_line(el, 0, 2, amp_a);
  detail::add_line(el, 2, 0, amp_a);
  detail::add_line(el, 1, 3, amp_b);
  detail::add_line(el, 3, 1, amp_b);
  return el;
}

/// Single-port mirror: reverses direction on its line, multiplying by
/// e^{i phase}. Default pi, a bare metallic reflection.
inline ScatteringElement mirror(double reflection_phase = kPi) {
  ScatteringElement el;
  el.kind = ElementKind::mirror;
  el.ports = {{"m", Side::left}};
  el.parameters["phase"] = reflection_phase;
  detail::add_line(el, 0, 0, std::exp(kI * reflection_phase));
  return el;
}

/// Ideal lossless three-port circulator: whatever enters port p1 exits p2,
/// p2 exits p3, p3 exits p1. Non-reciprocal.
inline ScatteringElement circulator() {
  ScatteringElement el;
  el.kind = ElementKind::circulator;
  el.ports = {{"p1", Side::left}, {"p2", Side::right}, {"p3", Side::right}};
  detail::add_line(el, 0, 1, cx{1, 0});
  detail::add_line(el, 1, 2, cx{1, 0});
  detail::add_line(el, 2, 0, cx{1, 0});
  return el;
}

/// Polarization rotator on a single line, ports l,r: rotates (H,V) by
/// [[cos t, -sin t],[sin t, cos t]] in both travel directions
/// (Faraday-style).
inline ScatteringElement polarization_rotator(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("polarization_rotator: theta must be finite");
  ScatteringElement el;
  el.kind = ElementKind::pol_rotator;
  el.pol_aware = true;
  el.ports = {{"l", Side::left}, {"r", Side::right}};
  el.parameters["theta"] = theta;
  const double c = std::cos(theta), s = std::sin(theta);
  const int H = 0, V = 1;
  auto both_ways = [&](int pol_in, int pol_out, double amp) {
    if (amp == 0.0) return;
    el.entries.push_back({0, 1, cx{amp, 0}, pol_in, pol_out});
    el.entries.push_back({1, 0, cx{amp, 0}, pol_in, pol_out});
  };
  both_ways(H, H, c);
  both_ways(H, V, s);
  both_ways(V, H, -s);
  both_ways(V, V, c);
  return el;
}

}  // namespace sqc

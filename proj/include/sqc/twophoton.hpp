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

#include <string>
#include <vector>

#include "sqc/gates.hpp"
#include "sqc/photon_state.hpp"

namespace sqc {

// ---------------------------------------------------------------------------
// Distributed-qubit CNOT: two photons through the Grover four-port
// ---------------------------------------------------------------------------

struct TwoPhotonRow {
  std::string photon1, photon2;  // input labels, e.g. "SR", "AL"
  int s_in, d_in;                // totals before
  int s_out, d_out;              // totals after
  cx phase;                      // surviving component amplitude ratio (recorded; no printed reference)
};

namespace detail {
inline LogicalGeometry grover_in_geometry() { return make_geometry(0, 1, 2, 3, 0, 4); }
inline LogicalGeometry grover_out_geometry() { return make_geometry(2, 3, 0, 1, 0, 4); }
}  // namespace detail

/// Evolves all 16 products {S,A}x{R,L} per photon through the Grover
/// four-port and reads the mod-2 totals before and after. Throws if any
/// product fails to land on a definite-totals product state.
inline std::vector<TwoPhotonRow> grover_two_photon_sweep() {
  const GateCircuit cnot = build_cnot_sd();
  const auto gin = detail::grover_in_geometry();
  const auto gout = detail::grover_out_geometry();
  std::vector<TwoPhotonRow> rows;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      const Vec psi = from_logical(0, k >> 1, k & 1, gin);
      const Vec phi = from_logical(0, l >> 1, l & 1, gin);
      const TwoPhotonState in = two_photon_product(psi, phi);
      const TwoPhotonState out = evolve_two_photon(cnot.compiled, in);
      const TotalBits tin = total_logical_bits(in, gin);
      const TotalBits tout = total_logical_bits(out, gout);
      if (!tin.determinate || !tout.determinate)
        throw std::logic_error("grover_two_photon_sweep: product state lost definite totals");
      TwoPhotonRow row;
      row.photon1 = logical_label(0, k >> 1, k & 1).substr(1);
      row.photon2 = logical_label(0, l >> 1, l & 1).substr(1);
      row.s_in = tin.s_total;
      row.d_in = tin.d_total;
      row.s_out = tout.s_total;
      row.d_out = tout.d_total;
      if (tin.components.size() != 1 || tout.components.size() != 1)
        throw std::logic_error("grover_two_photon_sweep: output is not a single product component");
      row.phase = tout.components[0].coeff / tin.components[0].coeff;
      rows.push_back(row);
    }
  return rows;
}

/// Collapses the 16-product sweep onto its 4-row (S_total, D_total) truth
/// table and asserts consistency: every product with the same input totals
/// must produce the same output totals.
inline TruthTable grover_two_photon_table() {
  TruthTable t;
  t.n_bits = 2;
  std::array<std::pair<int, int>, 4> seen;
  std::array<bool, 4> have{};
  std::array<cx, 4> phase;
  for (const auto& row : grover_two_photon_sweep()) {
    const int idx = 2 * row.s_in + row.d_in;
    const auto out = std::make_pair(row.s_out, row.d_out);
    if (have[idx] && seen[idx] != out)
      throw std::logic_error("grover_two_photon_table: inconsistent totals for one input row");
    seen[idx] = out;
    have[idx] = true;
    phase[idx] = row.phase;
  }
  for (int idx = 0; idx < 4; ++idx) {
    if (!have[idx]) throw std::logic_error("grover_two_photon_table: missing input row");
    t.rows.push_back({{idx >> 1, idx & 1}, {seen[idx].first, seen[idx].second}, phase[idx]});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Hong-Ou-Mandel symmetry separation
// ---------------------------------------------------------------------------

struct HomOutcome {
  double p_coincidence = 0;
  double p_bunched_e = 0;
  double p_bunched_f = 0;
};

/// Two same-direction photons with symmetry bits (s1, s2) through a 50/50
/// beam splitter. Overall-symmetric inputs bunch (zero coincidences);
/// overall-antisymmetric ones always split.
inline HomOutcome hom_separation(int s1, int s2) {
  if ((s1 | s2) & ~1) throw std::invalid_argument("hom_separation: arguments must be bits");
  const GateCircuit h = build_hadamard_s();
  const double r = 1.0 / std::sqrt(2.0);
  auto rail_state = [&](int s) {
    Vec v(2);
    v << r, (s == 0 ? r : -r);
    return v;
  };
  const TwoPhotonState out =
      evolve_two_photon(h.compiled, two_photon_product(rail_state(s1), rail_state(s2)));
  HomOutcome o;
  o.p_bunched_e = 2.0 * std::norm(out.m(0, 0));
  o.p_bunched_f = 2.0 * std::norm(out.m(1, 1));
  o.p_coincidence = std::norm(out.m(0, 1) + out.m(1, 0));
  return o;
}

/// Three-beam-splitter separator: symmetric dual-rail input leaves as a
/// symmetric dual-rail state on one arm, antisymmetric on the other arm.
/// Inputs: [main_a, main_b, spare_s_arm, spare_a_arm]; outputs:
/// [s_arm_a, s_arm_b, a_arm_a, a_arm_b].
inline CompiledCircuit symmetry_router() {
  PortGraph g;
  g.add_element("b1", beam_splitter());
  g.add_element("b2", beam_splitter());
  g.add_element("b3", beam_splitter());
  g.connect({"b1", "ra"}, {"b2", "la"});  // single-rail S line into the dotted port
  g.connect({"b1", "rb"}, {"b3", "lb"});  // single-rail A line into the undotted port
  g.declare_input({"b1", "la"});
  g.declare_input({"b1", "lb"});
  g.declare_input({"b2", "lb"});
  g.declare_input({"b3", "la"});
  g.declare_output({"b2", "ra"});
  g.declare_output({"b2", "rb"});
  g.declare_output({"b3", "ra"});
  g.declare_output({"b3", "rb"});
  return compile(g);
}

// ---------------------------------------------------------------------------
// Quantum comparator
// ---------------------------------------------------------------------------

enum class Verdict { same, different, indeterminate };

struct ComparatorVerdict {
  Verdict symmetry = Verdict::indeterminate;
  Verdict direction = Verdict::indeterminate;
};

/// Reads a two-photon state as a comparator: total bit 0 means the two
/// photons agree in that property, 1 means they differ. Each property is
/// judged independently; a superposition over one total leaves only that
/// property indeterminate.
inline ComparatorVerdict comparator_verdict(const TwoPhotonState& state, const LogicalGeometry& g) {
  const TotalBits t = total_logical_bits(state, g);
  ComparatorVerdict v;
  if (t.components.empty()) return v;
  bool s_mixed = false, d_mixed = false;
  const int s0 = t.components[0].s_total, d0 = t.components[0].d_total;
  for (const auto& c : t.components) {
    s_mixed |= c.s_total != s0;
    d_mixed |= c.d_total != d0;
  }
  if (!s_mixed) v.symmetry = s0 == 0 ? Verdict::same : Verdict::different;
  if (!d_mixed) v.direction = d0 == 0 ? Verdict::same : Verdict::different;
  return v;
}

}  // namespace sqc

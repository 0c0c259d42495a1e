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

#include <functional>
#include <string>
#include <vector>

#include "sqc/circuit.hpp"
#include "sqc/closedform.hpp"
#include "sqc/components.hpp"
#include "sqc/linalg.hpp"
#include "sqc/photon_state.hpp"

namespace sqc {

// ---------------------------------------------------------------------------
// Logical extraction
// ---------------------------------------------------------------------------

/// The logical basis of a gate: prepared physical states over the circuit's
/// input modes and the matching analyzer states over its output modes.
struct LogicalIo {
  std::vector<Vec> in_states;
  std::vector<Vec> out_states;
  std::vector<std::string> labels;
};

class NotClassicalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column k = logical decomposition of apply(circuit, in_state k). Throws if
/// amplitude escapes the declared logical output space or the result is not
/// unitary.
inline Mat extract_logical_unitary(const CompiledCircuit& c, const LogicalIo& io,
                                   double tol = kTolCompiled) {
  const int n = static_cast<int>(io.in_states.size());
  if (static_cast<int>(io.out_states.size()) != n)
    throw std::invalid_argument("extract_logical_unitary: in/out basis size mismatch");
  Mat l(n, n);
  for (int k = 0; k < n; ++k) {
    Vec y = c.apply(io.in_states[k]);
    double captured = 0.0;
    for (int j = 0; j < n; ++j) {
      l(j, k) = io.out_states[j].dot(y);  // Eigen dot conjugates the left side
      captured += std::norm(l(j, k));
    }
    if (std::abs(captured - 1.0) > tol)
      throw CircuitError(CircuitErrorCode::leaking_output,
                         "circuit is not logically closed: input '" +
                             (k < static_cast<int>(io.labels.size()) ? io.labels[k] : std::to_string(k)) +
                             "' keeps only " + std::to_string(captured) + " of its probability in the logical space");
  }
  if (unitarity_defect(l) > tol)
    throw CircuitError(CircuitErrorCode::non_unitary, "extracted logical matrix is not unitary");
  return l;
}

// ---------------------------------------------------------------------------
// Truth tables and phase-insensitive comparison
// ---------------------------------------------------------------------------

/// Classical action of a permutation-like logical unitary: input bit-tuple ->
/// output bit-tuple with the unit phase of the surviving amplitude.
struct TruthTable {
  int n_bits = 0;
  struct Row {
    std::vector<int> in, out;
    cx phase;
  };
  std::vector<Row> rows;
};

inline std::vector<int> index_bits(int index, int n_bits) {
  std::vector<int> bits(n_bits);
  for (int b = 0; b < n_bits; ++b) bits[b] = (index >> (n_bits - 1 - b)) & 1;
  return bits;
}

inline TruthTable truth_table(const Mat& logical, double tol = 1e-8) {
  const int n = static_cast<int>(logical.cols());
  int n_bits = 0;
  while ((1 << n_bits) < n) ++n_bits;
  if ((1 << n_bits) != n) throw std::invalid_argument("truth_table: dimension is not a power of two");
  TruthTable t;
  t.n_bits = n_bits;
  std::vector<int> used(n, 0);
  for (int col = 0; col < n; ++col) {
    int hit = -1;
    for (int row = 0; row < n; ++row)
      if (std::abs(logical(row, col)) >= 1.0 - tol) hit = row;
    if (hit < 0 || used[hit])
      throw NotClassicalError("not a classical gate");
    used[hit] = 1;
    t.rows.push_back({index_bits(col, n_bits), index_bits(hit, n_bits), logical(hit, col)});
  }
  return t;
}

struct PhaseMatch {
  bool equal = false;
  double max_error = 0.0;
  cx phase{1.0, 0.0};  // U ~ phase * V
};

/// Tests U = e^{i theta} V entrywise. theta is estimated from the
/// largest-magnitude entry of V.
inline PhaseMatch equal_up_to_global_phase(const Mat& u, const Mat& v, double tol = kTolPhaseMatch) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  int rk = 0, ck = 0;
  v.cwiseAbs().maxCoeff(&rk, &ck);
  PhaseMatch m;
  if (std::abs(v(rk, ck)) < 1e-14) {
    m.max_error = u.cwiseAbs().maxCoeff();
    m.equal = m.max_error < tol;
    return m;
  }
  cx ratio = u(rk, ck) / v(rk, ck);
  if (std::abs(ratio) < 1e-14) {
    m.max_error = max_abs_diff(u, v);
    m.equal = false;
    return m;
  }
  m.phase = ratio / std::abs(ratio);
  m.max_error = max_abs_diff(u, m.phase * v);
  m.equal = m.max_error < tol;
  return m;
}

struct BlockPhaseMatch {
  bool equal = false;
  double max_error = 0.0;
  cx phase_h{1.0, 0.0};
  cx phase_v{1.0, 0.0};
};

/// Compares two 8x8 polarization-block-diagonal matrices block by block,
/// each 4x4 block up to its own global phase. Off-diagonal blocks must
/// vanish in both.
inline BlockPhaseMatch compare_blockwise_up_to_phase(const Mat& u, const Mat& v,
                                                     double tol = kTolPhaseMatch) {
  if (u.rows() != 8 || u.cols() != 8 || v.rows() != 8 || v.cols() != 8)
    throw std::invalid_argument("compare_blockwise_up_to_phase: expected 8x8 matrices");
  BlockPhaseMatch out;
  double off = std::max(
      std::max(u.block(0, 4, 4, 4).cwiseAbs().maxCoeff(), u.block(4, 0, 4, 4).cwiseAbs().maxCoeff()),
      std::max(v.block(0, 4, 4, 4).cwiseAbs().maxCoeff(), v.block(4, 0, 4, 4).cwiseAbs().maxCoeff()));
  auto h = equal_up_to_global_phase(u.block(0, 0, 4, 4), v.block(0, 0, 4, 4), tol);
  auto w = equal_up_to_global_phase(u.block(4, 4, 4, 4), v.block(4, 4, 4, 4), tol);
  out.phase_h = h.phase;
  out.phase_v = w.phase;
  out.max_error = std::max({off, h.max_error, w.max_error});
  out.equal = off < tol && h.equal && w.equal;
  return out;
}

// ---------------------------------------------------------------------------
// Reference matrices, built from first principles (independent of any
// circuit path).
// ---------------------------------------------------------------------------

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat pauli_x() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
inline Mat pauli_y() { return (Mat(2, 2) << 0, -kI, kI, 0).finished(); }
inline Mat pauli_z() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }
inline Mat hadamard2() { return symmetry_block(); }
inline Mat phase2(double phi) { return (Mat(2, 2) << 1, 0, 0, std::exp(kI * phi)).finished(); }

/// Permutation unitary from a classical bijection on basis indices.
inline Mat permutation_matrix(int n, const std::function<int(int)>& f) {
  Mat m = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) m(f(k), k) = 1.0;
  return m;
}

// Basis layouts: 4-dim (SR,SL,AR,AL) index 2s+d; 8-dim (HSR..VAL) index 4p+2s+d.
inline Mat ideal_cnot_sd() {
  return permutation_matrix(4, [](int k) { int s = k >> 1, d = k & 1; return 2 * s + (d ^ s); });
}
inline Mat ideal_cnot_ds() {
  return permutation_matrix(4, [](int k) { int s = k >> 1, d = k & 1; return 2 * (s ^ d) + d; });
}
inline Mat ideal_swap_sd() {
  return permutation_matrix(4, [](int k) { int s = k >> 1, d = k & 1; return 2 * d + s; });
}
inline Mat ideal_toffoli() {
  return permutation_matrix(8, [](int k) {
    int p = k >> 2, s = (k >> 1) & 1, d = k & 1;
    return 4 * p + 2 * s + (d ^ (p & s));
  });
}
inline Mat ideal_fredkin() {
  return permutation_matrix(8, [](int k) {
    int p = k >> 2, s = (k >> 1) & 1, d = k & 1;
    return p == 1 ? 4 * p + 2 * d + s : k;
  });
}

// ---------------------------------------------------------------------------
// Gate builders
// ---------------------------------------------------------------------------

struct GateCircuit {
  std::string name;
  PortGraph graph;
  CompiledCircuit compiled;
  LogicalIo io;
};

namespace detail {

// Two ends of a line assembly, to be spliced into a rail.
struct LineEnds {
  PortRef left, right;
};

/// Circulator + mirror detour on a single line. Flow in the caught
/// direction takes the mirror arm and picks up detour_phase; the opposite
/// flow passes straight through.
inline LineEnds add_direction_phase(PortGraph& g, const std::string& id, bool catch_leftward,
                                    double detour_phase) {
  g.add_element(id + "_c", circulator());
  g.add_element(id + "_m", mirror(detour_phase));
  g.connect({id + "_c", "p2"}, {id + "_m", "m"});
  if (catch_leftward) return {{id + "_c", "p3"}, {id + "_c", "p1"}};
  return {{id + "_c", "p1"}, {id + "_c", "p3"}};
}

struct PairEnds {
  PortRef left_a, left_b, right_a, right_b;
};

/// SWAP core: a Grover four-port flanked by direction-conditioned symmetry
/// flippers (rail-b leftward pi detours), with leftward global-pi detours on
/// both rails outside to cancel the Grover reflection sign. The logical
/// action is the exact (S,D) interchange.
inline PairEnds append_swap_exact(PortGraph& g, const std::string& p) {
  g.add_element(p + "g", grover_four_port());
  auto wbl = add_direction_phase(g, p + "wbl", true, kPi);   // core flipper, left
  auto wbr = add_direction_phase(g, p + "wbr", true, kPi);   // core flipper, right
  auto oal = add_direction_phase(g, p + "oal", true, kPi);   // outer sign fix, left rail a
  auto obl = add_direction_phase(g, p + "obl", true, kPi);   // outer sign fix, left rail b
  auto oar = add_direction_phase(g, p + "oar", true, kPi);   // outer sign fix, right rail a
  auto obr = add_direction_phase(g, p + "obr", true, kPi);   // outer sign fix, right rail b
  g.connect(oal.right, {p + "g", "a"});
  g.connect(obl.right, wbl.left);
  g.connect(wbl.right, {p + "g", "b"});
  g.connect({p + "g", "c"}, oar.left);
  g.connect({p + "g", "d"}, wbr.left);
  g.connect(wbr.right, obr.left);
  return {oal.left, obl.left, oar.right, obr.right};
}

/// Two-sided (S,D) logical bases over a circuit declared with boundary
/// order [left_a, left_b, right_a, right_b] for both inputs and outputs.
inline LogicalIo two_sided_io(const CompiledCircuit& c) {
  const int npol = c.polarized ? 2 : 1;
  const int n_in = static_cast<int>(c.inputs.size());
  const int n_out = static_cast<int>(c.outputs.size());
  LogicalGeometry gin = make_geometry(0, 1, 2, 3, c.polarized ? n_in / npol : 0, n_in);
  LogicalGeometry gout = make_geometry(2, 3, 0, 1, c.polarized ? n_out / npol : 0, n_out);
  LogicalIo io;
  const int np = c.polarized ? 2 : 1;
  for (int p = 0; p < np; ++p)
    for (int s = 0; s < 2; ++s)
      for (int d = 0; d < 2; ++d) {
        io.in_states.push_back(from_logical(p, s, d, gin));
        io.out_states.push_back(from_logical(p, s, d, gout));
        io.labels.push_back(c.polarized ? logical_label(p, s, d) : logical_label(0, s, d).substr(1));
      }
  return io;
}

/// Feed-forward S-qubit bases: dual-rail (S,A) on the left pair in, right
/// pair out. Input order must be [left_a, left_b], output [right_a, right_b].
inline LogicalIo s_qubit_io(const CompiledCircuit& c) {
  LogicalIo io;
  const double r = 1.0 / std::sqrt(2.0);
  for (int s = 0; s < 2; ++s) {
    Vec in = Vec::Zero(c.inputs.size());
    Vec out = Vec::Zero(c.outputs.size());
    in[0] = r;
    in[1] = s == 0 ? r : -r;
    out[0] = r;
    out[1] = s == 0 ? r : -r;
    io.in_states.push_back(in);
    io.out_states.push_back(out);
    io.labels.push_back(s == 0 ? "S" : "A");
  }
  return io;
}

/// D-qubit bases over a two-sided circuit, with the symmetry held fixed.
inline LogicalIo d_qubit_io(const CompiledCircuit& c, int s_fixed = 0) {
  LogicalIo io;
  const int n_in = static_cast<int>(c.inputs.size());
  const int n_out = static_cast<int>(c.outputs.size());
  LogicalGeometry gin = make_geometry(0, 1, 2, 3, 0, n_in);
  LogicalGeometry gout = make_geometry(2, 3, 0, 1, 0, n_out);
  for (int d = 0; d < 2; ++d) {
    io.in_states.push_back(from_logical(0, s_fixed, d, gin));
    io.out_states.push_back(from_logical(0, s_fixed, d, gout));
    io.labels.push_back(d == 0 ? "R" : "L");
  }
  return io;
}

inline void declare_both(PortGraph& g, const PortRef& p) {
  g.declare_input(p);
  g.declare_output(p);
}

/// Declares the four logical boundary ports (in declaration order
/// left_a, left_b, right_a, right_b, which the logical geometry relies on),
/// then any idle drain ports, compiles, and attaches the (S,D) bases.
inline GateCircuit finish_two_sided(std::string name, PortGraph graph, const PairEnds& ends,
                                    const std::vector<PortRef>& drains = {}) {
  declare_both(graph, ends.left_a);
  declare_both(graph, ends.left_b);
  declare_both(graph, ends.right_a);
  declare_both(graph, ends.right_b);
  for (const auto& p : drains) graph.declare_output(p);
  GateCircuit gc{std::move(name), std::move(graph), {}, {}};
  gc.compiled = compile(gc.graph);
  gc.io = two_sided_io(gc.compiled);
  return gc;
}

}  // namespace detail

/// The Grover four-port itself: a CNOT with the symmetry qubit as control
/// and direction as target.
inline GateCircuit build_cnot_sd() {
  PortGraph g;
  g.add_element("g", grover_four_port());
  return detail::finish_two_sided("cnot_sd", std::move(g),
                                  {{"g", "a"}, {"g", "b"}, {"g", "c"}, {"g", "d"}});
}

/// NOT on the symmetry qubit: a pi phase shift in one rail of the pair.
inline GateCircuit build_not_s() {
  PortGraph g;
  g.add_element("ps", phase_shifter(kPi, Rail::b));
  return detail::finish_two_sided("not_s", std::move(g),
                                  {{"ps", "la"}, {"ps", "lb"}, {"ps", "ra"}, {"ps", "rb"}});
}

/// NOT on the direction qubit: a pi shifter between two Grover four-ports.
/// Flips D for every input while leaving S unchanged (global phase -1).
inline GateCircuit build_not_d() {
  PortGraph g;
  g.add_element("g1", grover_four_port());
  g.add_element("ps", phase_shifter(kPi, Rail::b));
  g.add_element("g2", grover_four_port());
  g.connect({"g1", "c"}, {"ps", "la"});
  g.connect({"g1", "d"}, {"ps", "lb"});
  g.connect({"ps", "ra"}, {"g2", "a"});
  g.connect({"ps", "rb"}, {"g2", "b"});
  return detail::finish_two_sided("not_d", std::move(g),
                                  {{"g1", "a"}, {"g1", "b"}, {"g2", "c"}, {"g2", "d"}});
}

/// Hadamard on the symmetry qubit: a single beam splitter. The two
/// single-rail outputs are read as a dual-rail pair.
inline GateCircuit build_hadamard_s() {
  PortGraph g;
  g.add_element("b1", beam_splitter());
  g.declare_input({"b1", "la"});
  g.declare_input({"b1", "lb"});
  g.declare_output({"b1", "ra"});
  g.declare_output({"b1", "rb"});
  GateCircuit gc{"hadamard_s", std::move(g), {}, {}};
  gc.compiled = compile(gc.graph);
  gc.io = detail::s_qubit_io(gc.compiled);
  return gc;
}

/// General phase gate on S: separate with a beam splitter, shift the
/// antisymmetric arm by phi, recombine. diag(1, e^{i phi}).
inline GateCircuit build_phase_gate_s(double phi) {
  PortGraph g;
  g.add_element("b1", beam_splitter());
  g.add_element("ph", phase_shifter(phi, Rail::b));
  g.add_element("b2", beam_splitter());
  g.connect({"b1", "ra"}, {"ph", "la"});
  g.connect({"b1", "rb"}, {"ph", "lb"});
  g.connect({"ph", "ra"}, {"b2", "la"});
  g.connect({"ph", "rb"}, {"b2", "lb"});
  g.declare_input({"b1", "la"});
  g.declare_input({"b1", "lb"});
  g.declare_output({"b2", "ra"});
  g.declare_output({"b2", "rb"});
  GateCircuit gc{"phase_s", std::move(g), {}, {}};
  gc.compiled = compile(gc.graph);
  gc.io = detail::s_qubit_io(gc.compiled);
  return gc;
}

enum class PauliAxis { X, Y, Z };

/// Pauli gates on S: beam splitter to separate S and A onto single rails,
/// arm phases, beam splitter to recombine. X and Y cross the arms into the
/// second splitter (the "dot" moves); Z keeps them straight.
inline GateCircuit build_pauli_s(PauliAxis axis) {
  PortGraph g;
  g.add_element("b1", beam_splitter());
  g.add_element("b2", beam_splitter());
  PortRef arm_a{"b1", "ra"}, arm_b{"b1", "rb"};
  if (axis == PauliAxis::Y) {
    g.add_element("pa", phase_shifter(kPi / 2, Rail::a));
    g.add_element("pb", phase_shifter(3 * kPi / 2, Rail::b));
    g.connect(arm_a, {"pa", "la"});
    g.connect(arm_b, {"pa", "lb"});
    g.connect({"pa", "ra"}, {"pb", "la"});
    g.connect({"pa", "rb"}, {"pb", "lb"});
    arm_a = {"pb", "ra"};
    arm_b = {"pb", "rb"};
  } else if (axis == PauliAxis::Z) {
    g.add_element("pz", phase_shifter(kPi, Rail::b));
    g.connect(arm_a, {"pz", "la"});
    g.connect(arm_b, {"pz", "lb"});
    arm_a = {"pz", "ra"};
    arm_b = {"pz", "rb"};
  }
  if (axis == PauliAxis::Z) {
    g.connect(arm_a, {"b2", "la"});
    g.connect(arm_b, {"b2", "lb"});
  } else {
    g.connect(arm_a, {"b2", "lb"});  // crossed arms: off-diagonal S/A interchange
    g.connect(arm_b, {"b2", "la"});
  }
  g.declare_input({"b1", "la"});
  g.declare_input({"b1", "lb"});
  g.declare_output({"b2", "ra"});
  g.declare_output({"b2", "rb"});
  std::string name = axis == PauliAxis::X ? "pauli_s_x" : axis == PauliAxis::Y ? "pauli_s_y" : "pauli_s_z";
  GateCircuit gc{name, std::move(g), {}, {}};
  gc.compiled = compile(gc.graph);
  gc.io = detail::s_qubit_io(gc.compiled);
  return gc;
}

/// Pauli gates on D. X: a mirror wall on each side. Y: the same with the
/// left-moving side given an extra pi/2 shift per pass. Z: per-rail
/// circulator+mirror detours, round trip 0 mod 2pi for right-movers and pi
/// for left-movers.
inline GateCircuit build_pauli_d(PauliAxis axis) {
  PortGraph g;
  std::string name;
  std::array<PortRef, 4> boundary;
  if (axis == PauliAxis::X || axis == PauliAxis::Y) {
    name = axis == PauliAxis::X ? "pauli_d_x" : "pauli_d_y";
    g.add_element("mla", mirror(kPi));
    g.add_element("mlb", mirror(kPi));
    g.add_element("mra", mirror(kPi));
    g.add_element("mrb", mirror(kPi));
    if (axis == PauliAxis::Y) {
      // pi/2 on each rail per pass, right side only
      g.add_element("qa", phase_shifter(kPi / 2, Rail::a));
      g.add_element("qb", phase_shifter(kPi / 2, Rail::b));
      g.connect({"qa", "la"}, {"qb", "ra"});
      g.connect({"qa", "lb"}, {"qb", "rb"});
      g.connect({"qa", "ra"}, {"mra", "m"});
      g.connect({"qa", "rb"}, {"mrb", "m"});
      boundary = {PortRef{"mla", "m"}, {"mlb", "m"}, {"qb", "la"}, {"qb", "lb"}};
    } else {
      boundary = {PortRef{"mla", "m"}, {"mlb", "m"}, {"mra", "m"}, {"mrb", "m"}};
    }
  } else {
    name = "pauli_d_z";
    for (const char* rail : {"a", "b"}) {
      auto right_going = detail::add_direction_phase(g, std::string("zr_") + rail, false, 0.0);
      auto left_going = detail::add_direction_phase(g, std::string("zl_") + rail, true, kPi);
      g.connect(right_going.right, left_going.left);
      boundary[rail[0] == 'a' ? 0 : 1] = right_going.left;
      boundary[rail[0] == 'a' ? 2 : 3] = left_going.right;
    }
  }
  for (const auto& p : boundary) detail::declare_both(g, p);
  GateCircuit gc{name, std::move(g), {}, {}};
  gc.compiled = compile(gc.graph);
  gc.io = detail::d_qubit_io(gc.compiled);
  return gc;
}

/// SWAP of the symmetry and direction qubits (exact, all +1 entries).
inline GateCircuit build_swap_sd() {
  PortGraph g;
  auto ends = detail::append_swap_exact(g, "s_");
  return detail::finish_two_sided("swap_sd", std::move(g), ends);
}

/// SWAP followed by NOT on the (post-swap) symmetry qubit, realized with
/// rail-b pi detours that catch only the outgoing flow on each side.
inline GateCircuit build_swap_then_not() {
  PortGraph g;
  auto core = detail::append_swap_exact(g, "s_");
  auto fl = detail::add_direction_phase(g, "fl", true, kPi);    // outgoing on the left
  auto fr = detail::add_direction_phase(g, "fr", false, kPi);   // outgoing on the right
  g.connect(fl.right, core.left_b);
  g.connect(core.right_b, fr.left);
  return detail::finish_two_sided("swap_then_not", std::move(g),
                                  {core.left_a, fl.left, core.right_a, fr.right});
}

/// CNOT(D->S) ; SWAP ; CNOT(D->S). Each outer stage is a rail-b leftward pi
/// detour, which is exactly a CNOT with direction as control and symmetry
/// as target.
inline GateCircuit build_double_cnot_circuit() {
  PortGraph g;
  auto core = detail::append_swap_exact(g, "s_");
  auto dl = detail::add_direction_phase(g, "dl", true, kPi);
  auto dr = detail::add_direction_phase(g, "dr", true, kPi);
  g.connect(dl.right, core.left_b);
  g.connect(core.right_b, dr.left);
  return detail::finish_two_sided("double_cnot", std::move(g),
                                  {core.left_a, dl.left, core.right_a, dr.right});
}

namespace detail {

struct PbsShell {
  PairEnds outer;                 // main-line boundary ports
  PairEnds arm;                   // V-arm: left pair feeds the inner device, right pair returns
  std::vector<PortRef> drains;    // idle PBS faces; never see amplitude but must terminate
};

/// The polarization shell shared by the three-qubit gates: a PBS per rail
/// on each side; H passes straight through, V detours through the arm.
inline PbsShell append_pbs_shell(PortGraph& g, const std::string& p) {
  for (const char* side : {"l", "r"})
    for (const char* rail : {"a", "b"})
      g.add_element(p + side + rail, polarizing_beam_splitter());
  g.connect({p + "la", "r"}, {p + "ra", "l"});
  g.connect({p + "lb", "r"}, {p + "rb", "l"});
  PbsShell shell;
  shell.outer = {{p + "la", "l"}, {p + "lb", "l"}, {p + "ra", "r"}, {p + "rb", "r"}};
  shell.arm = {{p + "la", "u"}, {p + "lb", "u"}, {p + "ra", "d"}, {p + "rb", "d"}};
  shell.drains = {{p + "la", "d"}, {p + "lb", "d"}, {p + "ra", "u"}, {p + "rb", "u"}};
  return shell;
}

}  // namespace detail

/// Toffoli: polarization and symmetry control, direction target. V-polarized
/// light is routed through a Grover four-port; H passes by.
inline GateCircuit build_toffoli() {
  PortGraph g;
  auto shell = detail::append_pbs_shell(g, "p");
  g.add_element("g", grover_four_port());
  g.connect(shell.arm.left_a, {"g", "a"});
  g.connect(shell.arm.left_b, {"g", "b"});
  g.connect({"g", "c"}, shell.arm.right_a);
  g.connect({"g", "d"}, shell.arm.right_b);
  return detail::finish_two_sided("toffoli", std::move(g), shell.outer, shell.drains);
}

/// Fredkin (controlled SWAP): the Toffoli with its Grover replaced by the
/// SWAP assembly, so V-polarized light has its S and D interchanged.
inline GateCircuit build_fredkin() {
  PortGraph g;
  auto shell = detail::append_pbs_shell(g, "p");
  auto swap = detail::append_swap_exact(g, "s_");
  g.connect(shell.arm.left_a, swap.left_a);
  g.connect(shell.arm.left_b, swap.left_b);
  g.connect(swap.right_a, shell.arm.right_a);
  g.connect(swap.right_b, shell.arm.right_b);
  return detail::finish_two_sided("fredkin", std::move(g), shell.outer, shell.drains);
}

/// The four-phase programmable three-qubit device: phi3 on the main line,
/// PBS split, (phi1, Grover, phi2) on the vertical arm, PBS merge, phi4 on
/// the main line.
inline GateCircuit build_programmable(double phi1, double phi2, double phi3, double phi4) {
  PortGraph g;
  auto shell = detail::append_pbs_shell(g, "p");
  g.add_element("g", grover_four_port());
  g.add_element("f1", phase_shifter(phi1, Rail::b));
  g.add_element("f2", phase_shifter(phi2, Rail::b));
  g.add_element("f3", phase_shifter(phi3, Rail::b));
  g.add_element("f4", phase_shifter(phi4, Rail::b));
  g.connect({"f3", "ra"}, shell.outer.left_a);
  g.connect({"f3", "rb"}, shell.outer.left_b);
  g.connect(shell.arm.left_a, {"f1", "la"});
  g.connect(shell.arm.left_b, {"f1", "lb"});
  g.connect({"f1", "ra"}, {"g", "a"});
  g.connect({"f1", "rb"}, {"g", "b"});
  g.connect({"g", "c"}, {"f2", "la"});
  g.connect({"g", "d"}, {"f2", "lb"});
  g.connect({"f2", "ra"}, shell.arm.right_a);
  g.connect({"f2", "rb"}, shell.arm.right_b);
  g.connect(shell.outer.right_a, {"f4", "la"});
  g.connect(shell.outer.right_b, {"f4", "lb"});
  return detail::finish_two_sided("programmable", std::move(g),
                                  {{"f3", "la"}, {"f3", "lb"}, {"f4", "ra"}, {"f4", "rb"}},
                                  shell.drains);
}

inline GateCircuit build_programmable(const PhaseQuad& q) {
  return build_programmable(q.phi1, q.phi2, q.phi3, q.phi4);
}

// ---------------------------------------------------------------------------
// Verification registry
// ---------------------------------------------------------------------------

struct GateVerdict {
  std::string gate;
  bool pass = false;
  double max_error = 0.0;
  cx phase{1.0, 0.0};
  std::string detail;
};

/// Builds the named gate and checks it against its reference. Gates with a
/// parametric reference read the phases argument.
inline GateVerdict verify_gate(const std::string& name, const std::vector<double>& phases = {},
                               double tol = kTolPhaseMatch) {
  GateVerdict v;
  v.gate = name;
  auto check_phase = [&](const GateCircuit& gc, const Mat& ref) {
    Mat u = extract_logical_unitary(gc.compiled, gc.io);
    auto m = equal_up_to_global_phase(u, ref, tol);
    v.pass = m.equal;
    v.max_error = m.max_error;
    v.phase = m.phase;
  };
  auto check_table = [&](const GateCircuit& gc, const Mat& ref_perm) {
    Mat u = extract_logical_unitary(gc.compiled, gc.io);
    TruthTable got = truth_table(u);
    TruthTable want = truth_table(ref_perm);
    bool ok = got.rows.size() == want.rows.size();
    double max_err = 0.0;
    for (std::size_t i = 0; ok && i < got.rows.size(); ++i) {
      ok = got.rows[i].in == want.rows[i].in && got.rows[i].out == want.rows[i].out;
      max_err = std::max(max_err, std::abs(std::abs(got.rows[i].phase) - 1.0));
    }
    v.pass = ok;
    v.max_error = max_err;
  };
  if (name == "cnot_sd") check_table(build_cnot_sd(), ideal_cnot_sd());
  else if (name == "not_s") check_phase(build_not_s(), kron(pauli_x(), Mat::Identity(2, 2)));
  else if (name == "not_d") check_phase(build_not_d(), kron(Mat::Identity(2, 2), pauli_x()));
  else if (name == "hadamard_s") check_phase(build_hadamard_s(), hadamard2());
  else if (name == "pauli_s_x") check_phase(build_pauli_s(PauliAxis::X), pauli_x());
  else if (name == "pauli_s_y") check_phase(build_pauli_s(PauliAxis::Y), pauli_y());
  else if (name == "pauli_s_z") check_phase(build_pauli_s(PauliAxis::Z), pauli_z());
  else if (name == "pauli_d_x") check_phase(build_pauli_d(PauliAxis::X), pauli_x());
  else if (name == "pauli_d_y") check_phase(build_pauli_d(PauliAxis::Y), pauli_y());
  else if (name == "pauli_d_z") check_phase(build_pauli_d(PauliAxis::Z), pauli_z());
  else if (name == "phase_s") {
    double phi = phases.empty() ? kPi / 2 : phases[0];
    check_phase(build_phase_gate_s(phi), phase2(phi));
  } else if (name == "swap_sd") check_phase(build_swap_sd(), ideal_swap_sd());
  else if (name == "swap_then_not")
    check_phase(build_swap_then_not(), kron(pauli_x(), Mat::Identity(2, 2)) * ideal_swap_sd());
  else if (name == "double_cnot")
    check_phase(build_double_cnot_circuit(), ideal_cnot_ds() * ideal_swap_sd() * ideal_cnot_ds());
  else if (name == "toffoli") check_table(build_toffoli(), ideal_toffoli());
  else if (name == "fredkin") check_table(build_fredkin(), ideal_fredkin());
  else if (name == "programmable") {
    PhaseQuad q{0, 0, 0, 0};
    if (phases.size() == 4) q = PhaseQuad{phases[0], phases[1], phases[2], phases[3]};
    GateCircuit gc = build_programmable(q);
    Mat u = extract_logical_unitary(gc.compiled, gc.io);
    auto m = compare_blockwise_up_to_phase(u, programmable_closed_form(q), tol);
    v.pass = m.equal;
    v.max_error = m.max_error;
    v.phase = m.phase_v;
  } else {
    v.detail = "unknown gate '" + name + "'";
    return v;
  }
  return v;
}

inline std::vector<std::string> gate_names() {
  return {"cnot_sd",  "not_s",     "not_d",     "hadamard_s", "pauli_s_x", "pauli_s_y",
          "pauli_s_z", "pauli_d_x", "pauli_d_y", "pauli_d_z",  "phase_s",   "swap_sd",
          "swap_then_not", "double_cnot", "toffoli", "fredkin", "programmable"};
}

}  // namespace sqc

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

// Acceptance suite: every claim the library is contracted to reproduce,
// one pass/fail line per criterion, exit status 0 only if all pass.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "sqc/dsl.hpp"
#include "sqc/gates.hpp"
#include "sqc/twophoton.hpp"

using namespace sqc;

namespace {

int g_failures = 0;

std::string sci(double v) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(2) << v;
  return ss.str();
}

void report(int number, const std::string& name, bool pass, const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << number << "] " << name;
  if (!note.empty()) std::cout << "  (" << note << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

Mat logical_of(const GateCircuit& gc) { return extract_logical_unitary(gc.compiled, gc.io); }

bool table_bits_equal(const TruthTable& got, const Mat& reference_permutation) {
  const TruthTable want = truth_table(reference_permutation);
  if (got.rows.size() != want.rows.size()) return false;
  for (std::size_t i = 0; i < got.rows.size(); ++i)
    if (got.rows[i].in != want.rows[i].in || got.rows[i].out != want.rows[i].out) return false;
  return true;
}

// 1. The compiled four-port reproduces the printed scattering matrix with
//    entries exactly +-1/2, and the symmetric/antisymmetric mappings.
void criterion_grover_action() {
  const CompiledCircuit c = build_cnot_sd().compiled;
  bool pass = c.total.rows() == 4 && c.total.cols() == 4;
  for (int i = 0; pass && i < 4; ++i)
    for (int j = 0; pass && j < 4; ++j)
      pass = c.total(i, j) == (i == j ? cx{-0.5, 0.0} : cx{0.5, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  Vec sym(4), anti(4);
  sym << r, r, 0, 0;
  anti << r, -r, 0, 0;
  Vec sym_out = c.apply(sym), anti_out = c.apply(anti);
  double err = std::abs(sym_out[2] - r);
  err = std::max(err, std::abs(sym_out[3] - r));
  err = std::max(err, std::abs(sym_out[0]) + std::abs(sym_out[1]));
  err = std::max(err, std::abs(anti_out[0] + r));
  err = std::max(err, std::abs(anti_out[1] - r));
  err = std::max(err, std::abs(anti_out[2]) + std::abs(anti_out[3]));
  pass = pass && err < 1e-12;
  report(1, "grover four-port scattering and symmetry action", pass,
         "max amplitude error " + sci(err));
}

// 2. truth_table(grover) equals the CNOT rows bit-exactly.
void criterion_cnot_table() {
  const TruthTable t = truth_table(logical_of(build_cnot_sd()));
  bool pass = table_bits_equal(t, ideal_cnot_sd());
  std::string phases;
  for (const auto& row : t.rows) {
    std::ostringstream ss;
    ss << "(" << row.phase.real() << "," << row.phase.imag() << ") ";
    phases += ss.str();
  }
  report(2, "grover truth table is the CNOT on (S,D)", pass, "row phases " + phases);
}

// 3. The one- and two-qubit gate zoo matches the ideal matrices up to a
//    global phase.
void criterion_gate_zoo() {
  struct Item {
    std::string name;
    Mat got, want;
  };
  std::vector<Item> items;
  items.push_back({"not_s", logical_of(build_not_s()), kron(pauli_x(), Mat::Identity(2, 2))});
  items.push_back({"not_d", logical_of(build_not_d()), kron(Mat::Identity(2, 2), pauli_x())});
  items.push_back({"hadamard_s", logical_of(build_hadamard_s()), hadamard2()});
  items.push_back({"pauli_s_x", logical_of(build_pauli_s(PauliAxis::X)), pauli_x()});
  items.push_back({"pauli_s_y", logical_of(build_pauli_s(PauliAxis::Y)), pauli_y()});
  items.push_back({"pauli_s_z", logical_of(build_pauli_s(PauliAxis::Z)), pauli_z()});
  items.push_back({"pauli_d_x", logical_of(build_pauli_d(PauliAxis::X)), pauli_x()});
  items.push_back({"pauli_d_y", logical_of(build_pauli_d(PauliAxis::Y)), pauli_y()});
  items.push_back({"pauli_d_z", logical_of(build_pauli_d(PauliAxis::Z)), pauli_z()});
  items.push_back({"phase_s(pi/2)", logical_of(build_phase_gate_s(kPi / 2)), phase2(kPi / 2)});
  items.push_back({"phase_s(0.37)", logical_of(build_phase_gate_s(0.37)), phase2(0.37)});
  items.push_back({"swap_sd", logical_of(build_swap_sd()), ideal_swap_sd()});
  double worst = 0;
  std::string failed;
  for (const auto& item : items) {
    auto m = equal_up_to_global_phase(item.got, item.want, 1e-8);
    worst = std::max(worst, m.max_error);
    if (!m.equal) failed += item.name + " ";
  }
  report(3, "gate zoo matches ideal references up to global phase", failed.empty(),
         failed.empty() ? "worst error " + sci(worst) : "failed: " + failed);
}

// 4. The composite circuits equal the products of their schematic gates.
void criterion_composites() {
  const Mat fig8 = logical_of(build_swap_then_not());
  const Mat fig8_want = kron(pauli_x(), Mat::Identity(2, 2)) * ideal_swap_sd();
  const Mat fig9 = logical_of(build_double_cnot_circuit());
  const Mat fig9_want = ideal_cnot_ds() * ideal_swap_sd() * ideal_cnot_ds();
  auto m8 = equal_up_to_global_phase(fig8, fig8_want, 1e-8);
  auto m9 = equal_up_to_global_phase(fig9, fig9_want, 1e-8);
  report(4, "composite circuits equal their schematic products", m8.equal && m9.equal,
         "errors " + sci(m8.max_error) + ", " + sci(m9.max_error));
}

// 5. All 16 two-photon products collapse to the 4-row CNOT table on totals.
void criterion_two_photon_cnot() {
  bool pass = true;
  try {
    const auto rows = grover_two_photon_sweep();
    pass = rows.size() == 16;
    for (const auto& r : rows)
      pass = pass && r.s_out == r.s_in && r.d_out == (r.d_in ^ r.s_in);
    pass = pass && table_bits_equal(grover_two_photon_table(), ideal_cnot_sd());
  } catch (const std::exception&) {
    pass = false;
  }
  report(5, "two-photon CNOT: 16 products collapse to the 4-row table", pass);
}

// 6. Hong-Ou-Mandel: coincidence probability 0 for S_total=0, 1 for 1.
void criterion_hom() {
  double err = 0;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      const HomOutcome o = hom_separation(s1, s2);
      const double want = (s1 ^ s2) ? 1.0 : 0.0;
      err = std::max(err, std::abs(o.p_coincidence - want));
      err = std::max(err, std::abs(o.p_coincidence + o.p_bunched_e + o.p_bunched_f - 1.0));
    }
  report(6, "HOM coincidences follow the total symmetry", err < 1e-10,
         "max error " + sci(err));
}

// 7. Toffoli and Fredkin match the standard permutations up to row phases.
void criterion_three_qubit() {
  bool pass = true;
  std::string note;
  try {
    const TruthTable toff = truth_table(logical_of(build_toffoli()));
    const TruthTable fred = truth_table(logical_of(build_fredkin()));
    pass = table_bits_equal(toff, ideal_toffoli()) && table_bits_equal(fred, ideal_fredkin());
    for (const auto& row : toff.rows) pass = pass && std::abs(std::abs(row.phase) - 1.0) < 1e-10;
    for (const auto& row : fred.rows) pass = pass && std::abs(std::abs(row.phase) - 1.0) < 1e-10;
  } catch (const std::exception& e) {
    pass = false;
    note = e.what();
  }
  report(7, "toffoli and fredkin tables are bit-exact with unit row phases", pass, note);
}

// 8. The programmable device at the three printed phase settings equals the
//    printed matrices exactly as printed, signs included; at all-zero
//    phases it is the toffoli up to global phase.
void criterion_programmable_settings() {
  auto block8 = [](const Mat& h, const Mat& v) {
    Mat u = Mat::Zero(8, 8);
    u.block(0, 0, 4, 4) = h;
    u.block(4, 4, 4, 4) = v;
    return u;
  };
  const Mat id4 = Mat::Identity(4, 4);
  Mat xs = kron(pauli_x(), Mat::Identity(2, 2));
  Mat v_flip_sym(4, 4), v_flip_anti(4, 4);
  v_flip_sym << 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1;
  v_flip_anti << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0;

  struct Setting {
    PhaseQuad q;
    Mat want;
    const char* label;
  };
  const std::vector<Setting> settings = {
      {{kPi, kPi, 0, 0}, block8(id4, v_flip_sym), "(pi,pi,0,0)"},
      {{kPi, 0, 0, kPi}, block8(xs, v_flip_sym), "(pi,0,0,pi)"},
      {{kPi, 0, kPi, 0}, block8(xs, v_flip_anti), "(pi,0,pi,0)"},
  };
  double worst = 0;
  bool pass = true;
  for (const auto& s : settings) {
    const GateCircuit gc = build_programmable(s.q);
    const double err = max_abs_diff(logical_of(gc), s.want);
    worst = std::max(worst, err);
    pass = pass && err < 1e-8;
  }
  const GateCircuit zero = build_programmable(0, 0, 0, 0);
  auto m = equal_up_to_global_phase(logical_of(zero), logical_of(build_toffoli()), 1e-8);
  pass = pass && m.equal;
  report(8, "programmable device reproduces the three printed settings exactly as printed", pass,
         "worst entry deviation " + sci(worst) + ", no sign convention needed");
}

// 9. Closed form vs compiled circuit for 1000 random phase quadruples.
void criterion_closed_form_oracle() {
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
  double worst = 0;
  bool pass = true;
  for (int k = 0; k < 1000; ++k) {
    PhaseQuad q{dist(rng), dist(rng), dist(rng), dist(rng)};
    const GateCircuit gc = build_programmable(q);
    auto m = compare_blockwise_up_to_phase(logical_of(gc), programmable_closed_form(q), 1e-8);
    worst = std::max(worst, m.max_error);
    pass = pass && m.equal;
  }
  report(9, "closed form agrees with the compiled oracle on 1000 random quadruples", pass,
         "worst deviation " + sci(worst));
}

// 10. Universal properties: corpus unitarity, norm preservation, and parser
//     robustness against random bytes.
void criterion_universal() {
  bool pass = true;
  std::string note;
  int circuits = 0;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (const auto& entry : std::filesystem::directory_iterator(SQC_CIRCUITS_DIR)) {
    if (entry.path().extension() != ".sqc") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    const ParseResult r = parse(ss.str());
    if (!r.ok()) {
      pass = false;
      note = "parse failed: " + entry.path().filename().string();
      break;
    }
    const CompiledCircuit c = compile(*r.graph);
    ++circuits;
    if (unitarity_defect(c.total) >= 1e-10) {
      pass = false;
      note = "not unitary: " + entry.path().filename().string();
      break;
    }
    Vec psi(c.total.cols());
    for (int i = 0; i < psi.size(); ++i) psi[i] = cx{amp(rng), amp(rng)};
    psi /= psi.norm();
    if (std::abs(c.apply(psi).norm() - 1.0) >= 1e-10) {
      pass = false;
      note = "norm drift: " + entry.path().filename().string();
      break;
    }
  }
  if (pass && circuits < 16) {
    pass = false;
    note = "corpus too small";
  }
  std::uniform_int_distribution<int> len_dist(0, 300);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  for (int trial = 0; pass && trial < 500; ++trial) {
    std::string src;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) src += static_cast<char>(byte_dist(rng));
    try {
      const ParseResult r = parse(src);
      if (!r.ok() && r.diagnostics.empty()) {
        pass = false;
        note = "fuzz input produced no diagnostic";
      }
      for (const auto& d : r.diagnostics)
        if (d.line < 1 || d.column < 1) {
          pass = false;
          note = "diagnostic without a position";
        }
    } catch (...) {
      pass = false;
      note = "parser threw on fuzz input";
    }
  }
  report(10, "corpus unitarity, norm preservation, and parser fuzzing", pass, note);
}

}  // namespace

int main() {
  criterion_grover_action();
  criterion_cnot_table();
  criterion_gate_zoo();
  criterion_composites();
  criterion_two_photon_cnot();
  criterion_hom();
  criterion_three_qubit();
  criterion_programmable_settings();
  criterion_closed_form_oracle();
  criterion_universal();
  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria FAILED")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}

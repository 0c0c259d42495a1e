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

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqc/closedform.hpp"
#include "sqc/dsl.hpp"
#include "sqc/gates.hpp"
#include "sqc/jsonio.hpp"
#include "sqc/twophoton.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  double tol = sqc::kTolPhaseMatch;
  bool json = false;
  bool quiet = false;
};

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedCircuit {
  sqc::PortGraph graph;
  sqc::CompiledCircuit compiled;
};

// Parses and compiles FILE, or prints diagnostics and returns nullopt.
std::optional<LoadedCircuit> load_circuit(const std::string& path) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: file not found: " << path << "\n";
    return std::nullopt;
  }
  sqc::ParseResult r = sqc::parse(*text);
  if (!r.ok()) {
    for (const auto& d : r.diagnostics) std::cerr << path << ":" << d.str() << "\n";
    return std::nullopt;
  }
  try {
    LoadedCircuit lc{std::move(*r.graph), {}};
    lc.compiled = sqc::compile(lc.graph);
    return lc;
  } catch (const sqc::CircuitError& e) {
    std::cerr << path << ": compile error: " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<std::vector<double>> parse_phase_list(const std::string& csv, std::size_t expect = 0) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    auto v = sqc::parse_number_literal(item);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  if (expect != 0 && out.size() != expect) return std::nullopt;
  return out;
}

// The CLI's logical reading of a DSL circuit. Two-sided circuits declare
// four boundary ports in the order [left_a, left_b, right_a, right_b] as
// both inputs and outputs (possibly followed by drain-only outputs);
// feed-forward circuits declare one dual-rail pair each way and are read
// as a single (S,A) qubit.
std::optional<sqc::Mat> logical_of(const LoadedCircuit& lc, std::string* err) {
  const int per_pol = lc.compiled.polarized ? 2 : 1;
  const int n_in = static_cast<int>(lc.compiled.inputs.size());
  const int n_out = static_cast<int>(lc.compiled.outputs.size());
  try {
    if (n_in == 4 * per_pol && n_out >= 4 * per_pol && n_out % per_pol == 0)
      return sqc::extract_logical_unitary(lc.compiled, sqc::detail::two_sided_io(lc.compiled));
    if (!lc.compiled.polarized && n_in == 2 && n_out == 2)
      return sqc::extract_logical_unitary(lc.compiled, sqc::detail::s_qubit_io(lc.compiled));
  } catch (const std::exception& e) {
    *err = e.what();
    return std::nullopt;
  }
  *err = "logical basis needs either four boundary ports declared in+out in the order "
         "left_a, left_b, right_a, right_b, or a feed-forward dual-rail pair each way";
  return std::nullopt;
}

int cmd_compile(const std::string& path, const Options& opt) {
  auto lc = load_circuit(path);
  if (!lc) return kExitUsage;
  if (opt.json) {
    sqc::json out;
    out["schema_version"] = sqc::kJsonSchemaVersion;
    out["inputs"] = sqc::labels_json(lc->compiled.inputs);
    out["outputs"] = sqc::labels_json(lc->compiled.outputs);
    out["polarized"] = lc->compiled.polarized;
    out["bounce_depth"] = lc->compiled.bounce_depth;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (!opt.quiet) {
    std::cout << "circuit ok: " << lc->compiled.inputs.size() << " input modes, "
              << lc->compiled.outputs.size() << " output modes"
              << (lc->compiled.polarized ? ", polarization-resolved" : "") << "\n";
    std::cout << "inputs:\n";
    for (const auto& m : lc->compiled.inputs) std::cout << "  " << m.label << "\n";
    std::cout << "outputs:\n";
    for (const auto& m : lc->compiled.outputs) std::cout << "  " << m.label << "\n";
  }
  return kExitOk;
}

int cmd_unitary(const std::string& path, const std::string& basis, const Options&) {
  auto lc = load_circuit(path);
  if (!lc) return kExitUsage;
  sqc::json out;
  out["schema_version"] = sqc::kJsonSchemaVersion;
  out["basis"] = basis;
  if (basis == "rail") {
    out["inputs"] = sqc::labels_json(lc->compiled.inputs);
    out["outputs"] = sqc::labels_json(lc->compiled.outputs);
    out["matrix"] = sqc::matrix_json(lc->compiled.total);
  } else if (basis == "symmetry") {
    const int ni = static_cast<int>(lc->compiled.inputs.size());
    const int no = static_cast<int>(lc->compiled.outputs.size());
    if (ni % 2 || no % 2)
      return fail_usage("symmetry basis needs an even number of external modes (consecutive rail pairs)");
    sqc::Mat u = sqc::symmetry_change_of_basis(no / 2) * lc->compiled.total *
                 sqc::symmetry_change_of_basis(ni / 2);
    auto labels = [](const std::vector<sqc::ModeInfo>& modes) {
      sqc::json l = sqc::json::array();
      for (std::size_t k = 0; k < modes.size(); k += 2) {
        l.push_back("S(" + modes[k].label + "," + modes[k + 1].label + ")");
        l.push_back("A(" + modes[k].label + "," + modes[k + 1].label + ")");
      }
      return l;
    };
    out["inputs"] = labels(lc->compiled.inputs);
    out["outputs"] = labels(lc->compiled.outputs);
    out["matrix"] = sqc::matrix_json(u);
  } else if (basis == "logical") {
    std::string err;
    auto u = logical_of(*lc, &err);
    if (!u) return fail_usage(err);
    out["inputs"] = out["outputs"] = sqc::logical_basis_labels(lc->compiled.polarized);
    out["matrix"] = sqc::matrix_json(*u);
  } else {
    return fail_usage("unknown basis '" + basis + "' (rail|symmetry|logical)");
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_truthtable(const std::string& path, const Options& opt) {
  auto lc = load_circuit(path);
  if (!lc) return kExitUsage;
  std::string err;
  auto u = logical_of(*lc, &err);
  if (!u) return fail_usage(err);
  try {
    sqc::TruthTable t = sqc::truth_table(*u);
    if (opt.json) {
      sqc::json out;
      out["schema_version"] = sqc::kJsonSchemaVersion;
      out["bits"] = t.n_bits;
      out["rows"] = sqc::truth_table_json(t);
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& r : t.rows) {
        for (int b : r.in) std::cout << b;
        std::cout << " -> ";
        for (int b : r.out) std::cout << b;
        std::cout << "   phase (" << r.phase.real() << ", " << r.phase.imag() << ")\n";
      }
    }
    return kExitOk;
  } catch (const sqc::NotClassicalError&) {
    std::cout << "not classical\n";
    return kExitOk;
  }
}

int cmd_verify(const std::string& gate, const std::string& phases_csv, const Options& opt) {
  std::vector<double> phases;
  if (!phases_csv.empty()) {
    auto p = parse_phase_list(phases_csv);
    if (!p) return fail_usage("bad --phases list '" + phases_csv + "'");
    phases = *p;
  }
  sqc::GateVerdict v;
  try {
    v = sqc::verify_gate(gate, phases, opt.tol);
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (!v.detail.empty() && v.detail.rfind("unknown gate", 0) == 0) {
    std::cerr << "error: " << v.detail << "\nknown gates:";
    for (const auto& n : sqc::gate_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return kExitUsage;
  }
  if (!opt.quiet) std::cout << sqc::verdict_json(v).dump(2) << "\n";
  return v.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_twophoton(bool hom_only, bool table_only, const Options& opt) {
  sqc::json out;
  out["schema_version"] = sqc::kJsonSchemaVersion;
  if (!hom_only) {
    sqc::json rows = sqc::json::array();
    for (const auto& r : sqc::grover_two_photon_sweep()) {
      sqc::json row;
      row["photons"] = {r.photon1, r.photon2};
      row["in"] = {r.s_in, r.d_in};
      row["out"] = {r.s_out, r.d_out};
      row["phase"] = {r.phase.real(), r.phase.imag()};
      rows.push_back(std::move(row));
    }
    out["product_table"] = std::move(rows);
    out["cnot_table"] = sqc::truth_table_json(sqc::grover_two_photon_table());
  }
  if (!table_only) {
    sqc::json rows = sqc::json::array();
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        auto h = sqc::hom_separation(s1, s2);
        sqc::json row;
        row["s1"] = s1;
        row["s2"] = s2;
        row["p_coincidence"] = h.p_coincidence;
        row["p_bunched_e"] = h.p_bunched_e;
        row["p_bunched_f"] = h.p_bunched_f;
        rows.push_back(std::move(row));
      }
    out["hom"] = std::move(rows);
  }
  if (!opt.quiet) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_closedform(const std::string& phases_csv, const Options& opt) {
  auto p = parse_phase_list(phases_csv, 4);
  if (!p) return fail_usage("--phases needs four comma-separated values");
  sqc::PhaseQuad q{(*p)[0], (*p)[1], (*p)[2], (*p)[3]};
  sqc::Mat closed = sqc::programmable_closed_form(q);
  sqc::GateCircuit gc = sqc::build_programmable(q);
  sqc::Mat compiled = sqc::extract_logical_unitary(gc.compiled, gc.io);
  auto m = sqc::compare_blockwise_up_to_phase(compiled, closed, opt.tol);
  sqc::json out;
  out["schema_version"] = sqc::kJsonSchemaVersion;
  out["phases"] = *p;
  out["basis"] = sqc::logical_basis_labels(true);
  out["closed_form"] = sqc::matrix_json(closed);
  out["compiled"] = sqc::matrix_json(compiled);
  out["max_deviation"] = m.max_error;
  out["agree"] = m.equal;
  if (!opt.quiet) std::cout << out.dump(2) << "\n";
  return m.equal ? kExitOk : kExitVerificationFailed;
}

// Builds the named gate and prints its netlist in .sqc form.
int cmd_export(const std::string& gate, const std::string& phases_csv) {
  std::vector<double> phases;
  if (!phases_csv.empty()) {
    auto p = parse_phase_list(phases_csv);
    if (!p) return fail_usage("bad --phases list '" + phases_csv + "'");
    phases = *p;
  }
  sqc::GateCircuit gc;
  try {
    if (gate == "cnot_sd") gc = sqc::build_cnot_sd();
    else if (gate == "not_s") gc = sqc::build_not_s();
    else if (gate == "not_d") gc = sqc::build_not_d();
    else if (gate == "hadamard_s") gc = sqc::build_hadamard_s();
    else if (gate == "phase_s") gc = sqc::build_phase_gate_s(phases.empty() ? sqc::kPi / 2 : phases[0]);
    else if (gate == "pauli_s_x") gc = sqc::build_pauli_s(sqc::PauliAxis::X);
    else if (gate == "pauli_s_y") gc = sqc::build_pauli_s(sqc::PauliAxis::Y);
    else if (gate == "pauli_s_z") gc = sqc::build_pauli_s(sqc::PauliAxis::Z);
    else if (gate == "pauli_d_x") gc = sqc::build_pauli_d(sqc::PauliAxis::X);
    else if (gate == "pauli_d_y") gc = sqc::build_pauli_d(sqc::PauliAxis::Y);
    else if (gate == "pauli_d_z") gc = sqc::build_pauli_d(sqc::PauliAxis::Z);
    else if (gate == "swap_sd") gc = sqc::build_swap_sd();
    else if (gate == "swap_then_not") gc = sqc::build_swap_then_not();
    else if (gate == "double_cnot") gc = sqc::build_double_cnot_circuit();
    else if (gate == "toffoli") gc = sqc::build_toffoli();
    else if (gate == "fredkin") gc = sqc::build_fredkin();
    else if (gate == "programmable") {
      sqc::PhaseQuad q{0, 0, 0, 0};
      if (phases.size() == 4) q = sqc::PhaseQuad{phases[0], phases[1], phases[2], phases[3]};
      gc = sqc::build_programmable(q);
    } else {
      return fail_usage("unknown gate '" + gate + "'");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  std::cout << sqc::pretty_print(sqc::to_netlist(gc.graph, gc.name));
  return kExitOk;
}

int cmd_sweep(int grid, const Options& opt) {
  if (grid < 1) return fail_usage("--grid must be positive");
  const long total = static_cast<long>(grid) * grid * grid * grid;
  struct Result {
    double max_error;
    bool pass;
  };
  std::vector<Result> results(total);
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      for (long i = w; i < total; i += workers) {
        long r = i;
        double ph[4];
        for (int k = 3; k >= 0; --k) {
          ph[k] = 2.0 * sqc::kPi * static_cast<double>(r % grid) / grid;
          r /= grid;
        }
        sqc::PhaseQuad q{ph[0], ph[1], ph[2], ph[3]};
        sqc::GateCircuit gc = sqc::build_programmable(q);
        sqc::Mat u = sqc::extract_logical_unitary(gc.compiled, gc.io);
        auto m = sqc::compare_blockwise_up_to_phase(u, sqc::programmable_closed_form(q), opt.tol);
        results[i] = {m.max_error, m.equal};
      }
    }));
  }
  for (auto& f : futures) f.get();
  long failures = 0;
  double worst = 0;
  for (long i = 0; i < total; ++i) {
    if (!results[i].pass) ++failures;
    worst = std::max(worst, results[i].max_error);
    if (!opt.quiet && (opt.json || !results[i].pass)) {
      long r = i;
      int idx[4];
      for (int k = 3; k >= 0; --k) {
        idx[k] = static_cast<int>(r % grid);
        r /= grid;
      }
      std::cout << (results[i].pass ? "pass" : "FAIL") << " grid=(" << idx[0] << "," << idx[1] << ","
                << idx[2] << "," << idx[3] << ") max_error=" << results[i].max_error << "\n";
    }
  }
  if (!opt.quiet)
    std::cout << "sweep: " << (total - failures) << "/" << total << " pass, worst deviation " << worst
              << "\n";
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulator and verification harness for symmetry-qubit linear-optical circuits"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("SQC_TOL")) {
    if (auto v = sqc::parse_number_literal(env)) opt.tol = *v;
  }
  app.add_option("--tol", opt.tol, "comparison tolerance");
  app.add_flag("--json", opt.json, "emit JSON where optional");
  app.add_flag("--quiet", opt.quiet, "suppress normal output");

  std::string file, basis = "rail", gate, phases_csv;
  int grid = 3;
  bool hom_only = false, table_only = false;

  auto* c_compile = app.add_subcommand("compile", "parse and validate a circuit file");
  c_compile->add_option("file", file)->required();

  auto* c_unitary = app.add_subcommand("unitary", "print the total matrix of a circuit file");
  c_unitary->add_option("file", file)->required();
  c_unitary->add_option("--basis", basis, "rail|symmetry|logical");

  auto* c_truth = app.add_subcommand("truthtable", "print a circuit's classical action");
  c_truth->add_option("file", file)->required();

  auto* c_verify = app.add_subcommand("verify", "verify a named gate against its reference");
  c_verify->add_option("--gate", gate)->required();
  c_verify->add_option("--phases", phases_csv, "comma-separated phases (pi literals ok)");

  auto* c_two = app.add_subcommand("twophoton", "two-photon product table and interference outcomes");
  c_two->add_flag("--hom", hom_only, "only the two-photon beam splitter outcomes");
  c_two->add_flag("--cnot-table", table_only, "only the 16-product table");

  auto* c_closed = app.add_subcommand("closedform", "closed-form vs compiled programmable device");
  c_closed->add_option("--phases", phases_csv)->required();

  auto* c_sweep = app.add_subcommand("sweep", "grid sweep of closed-form equivalence");
  std::string sweep_gate = "programmable";
  c_sweep->add_option("--gate", sweep_gate, "only 'programmable' is defined");
  c_sweep->add_option("--grid", grid, "grid points per phase");

  auto* c_export = app.add_subcommand("export", "print a built-in gate as a .sqc netlist");
  c_export->add_option("--gate", gate)->required();
  c_export->add_option("--phases", phases_csv, "comma-separated phases (pi literals ok)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_compile->parsed()) return cmd_compile(file, opt);
    if (c_unitary->parsed()) return cmd_unitary(file, basis, opt);
    if (c_truth->parsed()) return cmd_truthtable(file, opt);
    if (c_verify->parsed()) return cmd_verify(gate, phases_csv, opt);
    if (c_two->parsed()) return cmd_twophoton(hom_only, table_only, opt);
    if (c_closed->parsed()) return cmd_closedform(phases_csv, opt);
    if (c_export->parsed()) return cmd_export(gate, phases_csv);
    if (c_sweep->parsed()) {
      if (sweep_gate != "programmable") return fail_usage("sweep supports only --gate programmable");
      return cmd_sweep(grid, opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

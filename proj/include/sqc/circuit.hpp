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

#include <Eigen/Sparse>
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqc/components.hpp"
#include "sqc/linalg.hpp"

namespace sqc {

struct PortRef {
  std::string element;
  std::string port;
  std::string str() const { return element + "." + port; }
  bool operator==(const PortRef&) const = default;
  auto operator<=>(const PortRef&) const = default;
};

enum class CircuitErrorCode {
  duplicate_id,
  unknown_element,
  unknown_port,
  already_wired,
  already_declared,
  dangling_port,
  resonant_loop,
  leaking_output,
  non_unitary,
  dimension_mismatch,
};

class CircuitError : public std::runtime_error {
 public:
  CircuitError(CircuitErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  CircuitErrorCode code() const { return code_; }

 private:
  CircuitErrorCode code_;
};

/// A netlist of element instances and wires. Internal ports are connected
/// exactly once; boundary ports are declared as external inputs and/or
/// outputs. Construction is single-owner mutation; compile() produces an
/// immutable CompiledCircuit.
class PortGraph {
 public:
  void add_element(const std::string& id, ScatteringElement el) {
    if (index_.count(id))
      throw CircuitError(CircuitErrorCode::duplicate_id, "duplicate element id '" + id + "'");
    index_[id] = elements_.size();
    elements_.emplace_back(id, std::move(el));
  }

  const ScatteringElement& element(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw CircuitError(CircuitErrorCode::unknown_element, "unknown element '" + id + "'");
    return elements_[it->second].second;
  }

  bool has_element(const std::string& id) const { return index_.count(id) != 0; }

  void connect(const PortRef& a, const PortRef& b) {
    check_port(a);
    check_port(b);
    if (a == b)
      throw CircuitError(CircuitErrorCode::already_wired, "cannot wire port " + a.str() + " to itself");
    for (const auto& ref : {a, b})
      if (wired_.count(ref))
        throw CircuitError(CircuitErrorCode::already_wired, "port " + ref.str() + " is already wired");
    wired_.insert(a);
    wired_.insert(b);
    wires_.emplace_back(a, b);
  }

  void declare_input(const PortRef& p) {
    check_port(p);
    if (std::find(inputs_.begin(), inputs_.end(), p) != inputs_.end())
      throw CircuitError(CircuitErrorCode::already_declared, "input " + p.str() + " declared twice");
    inputs_.push_back(p);
  }

  void declare_output(const PortRef& p) {
    check_port(p);
    if (std::find(outputs_.begin(), outputs_.end(), p) != outputs_.end())
      throw CircuitError(CircuitErrorCode::already_declared, "output " + p.str() + " declared twice");
    outputs_.push_back(p);
  }

  const std::vector<std::pair<std::string, ScatteringElement>>& elements() const { return elements_; }
  const std::vector<std::pair<PortRef, PortRef>>& wires() const { return wires_; }
  const std::vector<PortRef>& inputs() const { return inputs_; }
  const std::vector<PortRef>& outputs() const { return outputs_; }
  bool is_wired(const PortRef& p) const { return wired_.count(p) != 0; }

 private:
  void check_port(const PortRef& p) const {
    const auto& el = element(p.element);
    if (el.port_index(p.port) < 0)
      throw CircuitError(CircuitErrorCode::unknown_port,
                         "element '" + p.element + "' has no port '" + p.port + "'");
  }

  std::vector<std::pair<std::string, ScatteringElement>> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<PortRef, PortRef>> wires_;
  std::set<PortRef> wired_;
  std::vector<PortRef> inputs_;
  std::vector<PortRef> outputs_;
};

struct ModeInfo {
  PortRef port;
  Polarization pol;
  std::string label;
};

/// Feed-forward unfolding of a port graph: the total scattering matrix from
/// declared external input modes to declared external output modes, plus
/// the mode tables. total is an isometry (columns orthonormal); it is
/// square-unitary when the declarations cover the full boundary.
struct CompiledCircuit {
  Mat total;
  std::vector<ModeInfo> inputs;
  std::vector<ModeInfo> outputs;
  bool polarized = false;
  int internal_modes = 0;
  int bounce_depth = 0;                  // wavefront steps of the deepest input
  std::vector<std::string> schedule;     // directed modes in first-excitation order

  /// total_unitary . amplitudes, with shape checking. Norm is preserved.
  Vec apply(const Vec& state) const {
    if (state.size() != total.cols())
      throw CircuitError(CircuitErrorCode::dimension_mismatch,
                         "state dimension " + std::to_string(state.size()) +
                             " != input mode count " + std::to_string(total.cols()));
    return total * state;
  }
};

namespace detail {

struct Wire {
  PortRef end0, end1;  // end1.element empty => external stub, end0 is the boundary port
  bool external() const { return end1.element.empty(); }
};

// Strongly connected components (Tarjan, iterative).
inline std::vector<std::vector<int>> strongly_connected(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> idx(n, -1), low(n, 0), on(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  struct Frame { int v; std::size_t child; };
  for (int root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    while (!call.empty()) {
      auto& fr = call.back();
      int v = fr.v;
      if (fr.child == 0) {
        idx[v] = low[v] = counter++;
        stack.push_back(v);
        on[v] = 1;
      }
      bool descended = false;
      while (fr.child < adj[v].size()) {
        int w = adj[v][fr.child++];
        if (idx[w] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on[w]) low[v] = std::min(low[v], idx[w]);
      }
      if (descended) continue;
      if (low[v] == idx[v]) {
        std::vector<int> comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp.push_back(w);
          if (w == v) break;
        }
        comps.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return comps;
}

}  // namespace detail

/// Unfolds the graph into its directed-mode propagation network, pushes
/// unit amplitude through every declared input, and assembles the total
/// input->output matrix. Amplitude is propagated wavefront by wavefront;
/// a configuration in which amplitude circulates without draining (a
/// resonant loop) is rejected rather than solved.
inline CompiledCircuit compile(const PortGraph& graph) {
  constexpr double kDrainTol = 1e-13;
  constexpr int kMaxBounces = 10000;
  constexpr double kLeakTol = 1e-10;

  // Boundary bookkeeping: every port is wired exactly once or declared.
  std::set<PortRef> declared;
  for (const auto& p : graph.inputs()) declared.insert(p);
  for (const auto& p : graph.outputs()) declared.insert(p);
  for (const auto& p : declared)
    if (graph.is_wired(p))
      throw CircuitError(CircuitErrorCode::already_declared,
                         "port " + p.str() + " is wired but also declared external");
  for (const auto& [id, el] : graph.elements())
    for (const auto& port : el.ports) {
      PortRef ref{id, port.name};
      if (!graph.is_wired(ref) && !declared.count(ref))
        throw CircuitError(CircuitErrorCode::dangling_port,
                           "dangling port " + ref.str() + " (wire it or declare input/output)");
    }

  bool polarized = false;
  for (const auto& [id, el] : graph.elements()) polarized |= el.pol_aware;
  const int npol = polarized ? 2 : 1;

  // Canonical wire list: internal wires sorted by endpoint labels, then one
  // stub per declared boundary port.
  std::vector<detail::Wire> wires;
  for (const auto& [a, b] : graph.wires()) {
    detail::Wire w{std::min(a, b), std::max(a, b)};
    wires.push_back(w);
  }
  std::sort(wires.begin(), wires.end(),
            [](const detail::Wire& x, const detail::Wire& y) {
              return std::tie(x.end0, x.end1) < std::tie(y.end0, y.end1);
            });
  std::map<PortRef, int> stub_of;
  for (const auto& p : declared)
    if (!stub_of.count(p)) {
      stub_of[p] = static_cast<int>(wires.size());
      wires.push_back({p, PortRef{}});
    }

  // port -> (wire, endpoint)
  std::map<PortRef, std::pair<int, int>> attach;
  for (int w = 0; w < static_cast<int>(wires.size()); ++w) {
    attach[wires[w].end0] = {w, 0};
    if (!wires[w].external()) attach[wires[w].end1] = {w, 1};
  }

  const int n_modes = static_cast<int>(wires.size()) * 2 * npol;
  // sense 0: flow end0 -> end1 ; sense 1: flow end1 -> end0.
  auto mode_id = [&](int wire, int sense, int pol) { return (wire * 2 + sense) * npol + pol; };
  auto mode_label = [&](int m) {
    int pol = m % npol;
    int sense = (m / npol) % 2;
    int w = m / (2 * npol);
    std::string tag = polarized ? std::string(":") + (pol == 0 ? "H" : "V") : std::string();
    if (wires[w].external())
      return (sense == 1 ? "in:" : "out:") + wires[w].end0.str() + tag;
    const std::string a = wires[w].end0.str(), b = wires[w].end1.str();
    return (sense == 0 ? a + ">" + b : b + ">" + a) + tag;
  };
  // Incoming mode of a port carries amplitude toward its element.
  auto incoming = [&](const PortRef& p, int pol) {
    auto [w, e] = attach.at(p);
    return mode_id(w, 1 - e, pol);
  };
  auto outgoing = [&](const PortRef& p, int pol) {
    auto [w, e] = attach.at(p);
    return mode_id(w, e, pol);
  };

  // Cross-element propagation matrix over directed modes.
  std::vector<Eigen::Triplet<cx>> trip;
  for (const auto& [id, el] : graph.elements()) {
    for (const auto& e : el.entries) {
      PortRef pin{id, el.ports[e.port_in].name};
      PortRef pout{id, el.ports[e.port_out].name};
      if (el.pol_aware) {
        trip.emplace_back(outgoing(pout, e.pol_out), incoming(pin, e.pol_in), e.amp);
      } else {
        for (int pol = 0; pol < npol; ++pol)
          trip.emplace_back(outgoing(pout, pol), incoming(pin, pol), e.amp);
      }
    }
  }
  Eigen::SparseMatrix<cx> prop(n_modes, n_modes);
  prop.setFromTriplets(trip.begin(), trip.end());

  // Structural cycles are tolerated only if every excitation of the cycle
  // drains; otherwise the loop is resonant and unsupported.
  {
    std::vector<std::vector<int>> adj(n_modes);
    for (int k = 0; k < prop.outerSize(); ++k)
      for (Eigen::SparseMatrix<cx>::InnerIterator it(prop, k); it; ++it)
        if (it.value() != cx{0, 0}) adj[it.col()].push_back(static_cast<int>(it.row()));
    bool cyclic = false;
    auto comps = detail::strongly_connected(adj);
    std::vector<char> in_loop(n_modes, 0);
    for (const auto& c : comps) {
      bool self = c.size() == 1 && std::find(adj[c[0]].begin(), adj[c[0]].end(), c[0]) != adj[c[0]].end();
      if (c.size() > 1 || self) {
        cyclic = true;
        for (int m : c) in_loop[m] = 1;
      }
    }
    if (cyclic) {
      for (int m = 0; m < n_modes; ++m) {
        if (!in_loop[m]) continue;
        Vec f = Vec::Zero(n_modes);
        f[m] = 1.0;
        bool drained = false;
        for (int k = 0; k < kMaxBounces; ++k) {
          f = prop * f;
          if (f.cwiseAbs().maxCoeff() < kDrainTol) {
            drained = true;
            break;
          }
        }
        if (!drained) {
          std::string msg = "resonant loop: amplitude does not drain; cycle modes:";
          for (int q = 0; q < n_modes; ++q)
            if (in_loop[q]) msg += " " + mode_label(q);
          throw CircuitError(CircuitErrorCode::resonant_loop, msg);
        }
      }
    }
  }

  CompiledCircuit out;
  out.polarized = polarized;
  out.internal_modes = n_modes;
  for (int pol = 0; pol < npol; ++pol) {
    for (const auto& p : graph.inputs()) {
      std::string tag = polarized ? std::string(":") + (pol == 0 ? "H" : "V") : std::string();
      out.inputs.push_back({p, static_cast<Polarization>(pol), "in:" + p.str() + tag});
    }
    for (const auto& p : graph.outputs()) {
      std::string tag = polarized ? std::string(":") + (pol == 0 ? "H" : "V") : std::string();
      out.outputs.push_back({p, static_cast<Polarization>(pol), "out:" + p.str() + tag});
    }
  }

  const int n_in = static_cast<int>(out.inputs.size());
  const int n_out = static_cast<int>(out.outputs.size());
  out.total = Mat::Zero(n_out, n_in);

  std::set<PortRef> declared_out(graph.outputs().begin(), graph.outputs().end());
  std::vector<char> touched(n_modes, 0);
  std::vector<std::string> leaks;

  for (int col = 0; col < n_in; ++col) {
    const auto& mi = out.inputs[col];
    const int pol = static_cast<int>(mi.pol);
    Vec x = Vec::Zero(n_modes);
    Vec f = Vec::Zero(n_modes);
    // stub wires have the boundary port at end0, so inbound flow has sense 1
    f[mode_id(stub_of.at(mi.port), 1, pol)] = 1.0;
    x = f;
    int steps = 0;
    while (true) {
      f = prop * f;
      if (f.cwiseAbs().maxCoeff() < kDrainTol) break;
      x += f;
      ++steps;
      if (steps > kMaxBounces)
        throw CircuitError(CircuitErrorCode::resonant_loop,
                           "propagation from " + mi.label + " did not settle");
      for (int m = 0; m < n_modes; ++m)
        if (!touched[m] && std::abs(f[m]) > kDrainTol) {
          touched[m] = 1;
          out.schedule.push_back(mode_label(m));
        }
    }
    out.bounce_depth = std::max(out.bounce_depth, steps);

    for (int row = 0; row < n_out; ++row) {
      const auto& mo = out.outputs[row];
      out.total(row, col) = x[mode_id(stub_of.at(mo.port), 0, static_cast<int>(mo.pol))];
    }
    // Amplitude escaping through an undeclared boundary direction is a
    // netlist mistake; report it with the offending modes.
    for (const auto& [p, w] : stub_of) {
      if (declared_out.count(p)) continue;
      for (int q = 0; q < npol; ++q)
        if (std::abs(x[mode_id(w, 0, q)]) > kLeakTol)
          leaks.push_back(mode_label(mode_id(w, 0, q)) + " from " + mi.label);
    }
  }
  if (!leaks.empty()) {
    std::string msg = "amplitude reaches undeclared output modes:";
    for (const auto& s : leaks) msg += " [" + s + "]";
    throw CircuitError(CircuitErrorCode::leaking_output, msg);
  }
  if (unitarity_defect(out.total) > kTolCompiled)
    throw CircuitError(CircuitErrorCode::non_unitary,
                       "total scattering matrix is not an isometry (internal consistency failure)");
  return out;
}

}  // namespace sqc

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
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqc/circuit.hpp"
#include "sqc/linalg.hpp"
#include "sqc/modespace.hpp"

namespace sqc {

/// Where a logical (P,S,D) space lives inside a mode list: for each
/// direction, the indices of the two rail modes (in the H block when the
/// circuit is polarization-resolved). pol_stride is the offset from the H
/// block to the V block, 0 for polarization-blind spaces.
struct LogicalGeometry {
  std::array<std::array<int, 2>, 2> rails{};  // [direction][rail] -> mode index
  int pol_stride = 0;
  int dim = 0;

  bool polarized() const { return pol_stride != 0; }
  int logical_dim() const { return polarized() ? 8 : 4; }
};

inline LogicalGeometry make_geometry(int right_a, int right_b, int left_a, int left_b,
                                     int pol_stride, int dim) {
  LogicalGeometry g;
  g.rails[0] = {right_a, right_b};
  g.rails[1] = {left_a, left_b};
  g.pol_stride = pol_stride;
  g.dim = dim;
  return g;
}

/// Physical dual-rail state for logical bits (p,s,d): (rail_a +- rail_b)/sqrt2
/// on the direction-d pair, in the polarization-p block. p is ignored for
/// polarization-blind geometries.
inline Vec from_logical(int p, int s, int d, const LogicalGeometry& g) {
  if ((p | s | d) & ~1) throw std::invalid_argument("from_logical: arguments must be bits");
  Vec v = Vec::Zero(g.dim);
  const int off = g.polarized() ? p * g.pol_stride : 0;
  const int ia = g.rails[d][0] + off;
  const int ib = g.rails[d][1] + off;
  if (ia < 0 || ib < 0 || ia >= g.dim || ib >= g.dim)
    throw std::invalid_argument("from_logical: geometry lacks the required modes");
  const double r = 1.0 / std::sqrt(2.0);
  v[ia] = r;
  v[ib] = s == 0 ? r : -r;
  return v;
}

/// Basis matrix whose column k is the physical state of logical index k.
inline Mat logical_basis_matrix(const LogicalGeometry& g) {
  const int n = g.logical_dim();
  Mat x(g.dim, n);
  for (int k = 0; k < n; ++k) {
    const int p = g.polarized() ? (k >> 2) : 0;
    const int s = (k >> 1) & 1;
    const int d = k & 1;
    x.col(k) = from_logical(p, s, d, g);
  }
  return x;
}

/// Change of basis into logical (P,S,D) amplitudes. The state must be
/// supported entirely on the geometry's dual-rail modes.
inline Vec to_logical(const Vec& state, const LogicalGeometry& g, double tol = kTolCompiled) {
  if (state.size() != g.dim) throw std::invalid_argument("to_logical: dimension mismatch");
  const Mat x = logical_basis_matrix(g);
  Vec coeffs = x.adjoint() * state;
  const double residual = (state - x * coeffs).norm();
  if (residual > tol)
    throw std::invalid_argument("to_logical: state has support outside the dual-rail pair (residual " +
                                std::to_string(residual) + ")");
  return coeffs;
}

/// Bosonic two-photon amplitude matrix: state = sum_ij M_ij a_i^dag a_j^dag |0>,
/// M symmetric, normalized so 2 sum |M_ij|^2 = 1.
struct TwoPhotonState {
  Mat m;

  static double norm(const Mat& m) { return std::sqrt(2.0 * m.cwiseAbs2().sum()); }

  static TwoPhotonState from_matrix(Mat m, double tol = kTolCompiled) {
    if (m.rows() != m.cols()) throw std::invalid_argument("TwoPhotonState: matrix must be square");
    if (max_abs_diff(m, m.transpose()) > tol)
      throw std::invalid_argument("TwoPhotonState: amplitude matrix must be symmetric");
    if (std::abs(norm(m) - 1.0) > tol)
      throw std::invalid_argument("TwoPhotonState: state not normalized");
    return TwoPhotonState{std::move(m)};
  }
};

/// Symmetrized, normalized product of two single-photon states.
inline TwoPhotonState two_photon_product(const Vec& psi, const Vec& phi) {
  if (psi.size() != phi.size()) throw std::invalid_argument("two_photon_product: dimension mismatch");
  Mat m = 0.5 * (psi * phi.transpose() + phi * psi.transpose());
  const double n = TwoPhotonState::norm(m);
  if (n == 0.0) throw std::invalid_argument("two_photon_product: zero state");
  return TwoPhotonState{m / n};
}

/// Non-interacting bosonic evolution through a compiled circuit:
/// M -> U M U^T. Symmetry and normalization are preserved.
inline TwoPhotonState evolve_two_photon(const CompiledCircuit& c, const TwoPhotonState& s) {
  if (s.m.rows() != c.total.cols())
    throw CircuitError(CircuitErrorCode::dimension_mismatch,
                       "two-photon state dimension does not match circuit input modes");
  return TwoPhotonState{c.total * s.m * c.total.transpose()};
}

/// Decomposition of a two-photon state over products of logical basis
/// states, with the mod-2 totals of each component.
struct TotalBits {
  bool determinate = false;
  int s_total = 0;
  int d_total = 0;
  struct Component {
    int k, l;        // logical indices, k <= l
    cx coeff;
    int s_total, d_total;
  };
  std::vector<Component> components;
};

/// Extracts (S_total, D_total) when every nonzero component of the state
/// shares one value of each; otherwise reports indeterminate with the
/// component breakdown.
inline TotalBits total_logical_bits(const TwoPhotonState& state, const LogicalGeometry& g,
                                    double tol = 1e-9) {
  const Mat x = logical_basis_matrix(g);
  // M = X d X^T for states supported on the logical span.
  Mat d = x.adjoint() * state.m * x.conjugate();
  if (max_abs_diff(state.m, x * d * x.transpose()) > kTolCompiled)
    throw std::invalid_argument("total_logical_bits: state leaves the logical mode span");
  TotalBits out;
  const int n = g.logical_dim();
  std::optional<std::pair<int, int>> totals;
  bool mixed = false;
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l) {
      if (std::abs(d(k, l)) < tol) continue;
      const int s = ((k >> 1) & 1) ^ ((l >> 1) & 1);
      const int dd = (k & 1) ^ (l & 1);
      out.components.push_back({k, l, d(k, l), s, dd});
      if (!totals)
        totals = {s, dd};
      else if (*totals != std::make_pair(s, dd))
        mixed = true;
    }
  if (totals && !mixed) {
    out.determinate = true;
    out.s_total = totals->first;
    out.d_total = totals->second;
  }
  return out;
}

}  // namespace sqc

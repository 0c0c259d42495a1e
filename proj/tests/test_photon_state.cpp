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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sqc/gates.hpp"
#include "sqc/photon_state.hpp"

using namespace sqc;

namespace {
const LogicalGeometry kIn4 = make_geometry(0, 1, 2, 3, 0, 4);
const LogicalGeometry kOut4 = make_geometry(2, 3, 0, 1, 0, 4);

Mat random_symmetric(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cx{dist(rng), dist(rng)};
  m = Mat(0.5 * (m + m.transpose()));
  return m / TwoPhotonState::norm(m);
}
}  // namespace

TEST_CASE("from_logical produces the dual-rail amplitudes", "[photon_state]") {
  const double r = 1.0 / std::sqrt(2.0);
  Vec v = from_logical(0, 0, 0, kIn4);
  REQUIRE(std::abs(v[0] - r) < kTolExact);
  REQUIRE(std::abs(v[1] - r) < kTolExact);
  REQUIRE(std::abs(v[2]) < kTolExact);

  v = from_logical(0, 1, 1, kIn4);
  REQUIRE(std::abs(v[2] - r) < kTolExact);
  REQUIRE(std::abs(v[3] + r) < kTolExact);
}

TEST_CASE("to_logical inverts from_logical on all computational inputs", "[photon_state]") {
  const LogicalGeometry g8 = make_geometry(0, 1, 2, 3, 4, 8);
  for (int p = 0; p < 2; ++p)
    for (int s = 0; s < 2; ++s)
      for (int d = 0; d < 2; ++d) {
        Vec coeffs = to_logical(from_logical(p, s, d, g8), g8);
        for (int k = 0; k < 8; ++k) {
          const double want = k == logical_index(p, s, d) ? 1.0 : 0.0;
          REQUIRE(std::abs(coeffs[k] - want) < kTolExact);
        }
      }
}

TEST_CASE("to_logical picks the printed indices", "[photon_state]") {
  const LogicalGeometry g8 = make_geometry(0, 1, 2, 3, 4, 8);
  const double r = 1.0 / std::sqrt(2.0);

  SECTION("symmetric right-moving H is index 0") {
    Vec v = Vec::Zero(8);
    v[0] = r;
    v[1] = r;
    Vec c = to_logical(v, g8);
    REQUIRE(std::abs(c[0] - 1.0) < kTolExact);
  }
  SECTION("antisymmetric left-moving V is index 7") {
    Vec v = Vec::Zero(8);
    v[4 + 2] = r;
    v[4 + 3] = -r;
    Vec c = to_logical(v, g8);
    REQUIRE(std::abs(c[7] - 1.0) < kTolExact);
  }
  SECTION("equal superposition has weight 1/8 everywhere") {
    Vec v = Vec::Zero(8);
    for (int k = 0; k < 8; ++k) v += from_logical(k >> 2, (k >> 1) & 1, k & 1, g8);
    v /= v.norm();
    Vec c = to_logical(v, g8);
    for (int k = 0; k < 8; ++k) REQUIRE(std::abs(std::norm(c[k]) - 0.125) < kTolExact);
  }
}

TEST_CASE("to_logical rejects support outside the pair", "[photon_state]") {
  LogicalGeometry g = make_geometry(0, 1, 2, 3, 0, 6);
  Vec v = Vec::Zero(6);
  v[4] = 1.0;  // a mode not covered by the dual-rail pair
  REQUIRE_THROWS_AS(to_logical(v, g), std::invalid_argument);
}

TEST_CASE("two-photon product states", "[photon_state]") {
  SECTION("orthogonal photons: off-diagonal entries 1/2, norm 1") {
    Vec e = Vec::Zero(2), f = Vec::Zero(2);
    e[0] = 1.0;
    f[1] = 1.0;
    TwoPhotonState s = two_photon_product(e, f);
    REQUIRE(std::abs(s.m(0, 1) - 0.5) < kTolExact);
    REQUIRE(std::abs(s.m(1, 0) - 0.5) < kTolExact);
    REQUIRE(std::abs(TwoPhotonState::norm(s.m) - 1.0) < kTolExact);
  }
  SECTION("identical photons: diagonal 1/sqrt2") {
    Vec e = Vec::Zero(2);
    e[0] = 1.0;
    TwoPhotonState s = two_photon_product(e, e);
    REQUIRE(std::abs(s.m(0, 0) - 1.0 / std::sqrt(2.0)) < kTolExact);
  }
}

TEST_CASE("two-photon evolution through the grover four-port", "[photon_state]") {
  const GateCircuit cnot = build_cnot_sd();

  SECTION("identity circuit leaves the amplitude matrix unchanged") {
    PortGraph g;
    g.add_element("p0", phase_shifter(0.0, Rail::b));
    g.declare_input({"p0", "la"});
    g.declare_input({"p0", "lb"});
    g.declare_output({"p0", "ra"});
    g.declare_output({"p0", "rb"});
    const CompiledCircuit id2 = compile(g);
    const Mat m = random_symmetric(2, 5);
    TwoPhotonState out = evolve_two_photon(id2, TwoPhotonState::from_matrix(m));
    REQUIRE(max_abs_diff(out.m, m) < kTolExact);
  }
  SECTION("S_R S_R passes through unchanged") {
    const TwoPhotonState in =
        two_photon_product(from_logical(0, 0, 0, kIn4), from_logical(0, 0, 0, kIn4));
    const TwoPhotonState out = evolve_two_photon(cnot.compiled, in);
    const TwoPhotonState want =
        two_photon_product(from_logical(0, 0, 0, kOut4), from_logical(0, 0, 0, kOut4));
    REQUIRE(max_abs_diff(out.m, want.m) < kTolCompiled);
  }
  SECTION("S_R A_R becomes S_R A_L up to phase") {
    const TwoPhotonState in =
        two_photon_product(from_logical(0, 0, 0, kIn4), from_logical(0, 1, 0, kIn4));
    const TwoPhotonState out = evolve_two_photon(cnot.compiled, in);
    const TwoPhotonState want =
        two_photon_product(from_logical(0, 0, 0, kOut4), from_logical(0, 1, 1, kOut4));
    auto match = equal_up_to_global_phase(out.m, want.m, kTolCompiled);
    REQUIRE(match.equal);
    REQUIRE(std::abs(match.phase - cx{-1.0, 0.0}) < kTolCompiled);  // the reflection sign
  }
  SECTION("symmetry and norm preserved for random symmetric amplitude matrices") {
    for (unsigned seed = 0; seed < 8; ++seed) {
      const Mat m = random_symmetric(4, 100 + seed);
      TwoPhotonState out = evolve_two_photon(cnot.compiled, TwoPhotonState::from_matrix(m));
      REQUIRE(max_abs_diff(out.m, out.m.transpose()) < kTolCompiled);
      REQUIRE(std::abs(TwoPhotonState::norm(out.m) - 1.0) < kTolCompiled);
    }
  }
  SECTION("product states evolve as products of single-photon evolutions") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
      Vec psi(4), phi(4);
      for (int i = 0; i < 4; ++i) {
        psi[i] = cx{dist(rng), dist(rng)};
        phi[i] = cx{dist(rng), dist(rng)};
      }
      psi /= psi.norm();
      phi /= phi.norm();
      const TwoPhotonState lhs = evolve_two_photon(cnot.compiled, two_photon_product(psi, phi));
      const TwoPhotonState rhs =
          two_photon_product(cnot.compiled.apply(psi), cnot.compiled.apply(phi));
      REQUIRE(max_abs_diff(lhs.m, rhs.m) < kTolCompiled);
    }
  }
}

TEST_CASE("total logical bits of two-photon states", "[photon_state]") {
  SECTION("A_R A_R is symmetric overall") {
    auto t = total_logical_bits(
        two_photon_product(from_logical(0, 1, 0, kIn4), from_logical(0, 1, 0, kIn4)), kIn4);
    REQUIRE(t.determinate);
    REQUIRE(t.s_total == 0);
    REQUIRE(t.d_total == 0);
  }
  SECTION("S_R A_R is antisymmetric overall") {
    auto t = total_logical_bits(
        two_photon_product(from_logical(0, 0, 0, kIn4), from_logical(0, 1, 0, kIn4)), kIn4);
    REQUIRE(t.determinate);
    REQUIRE(t.s_total == 1);
    REQUIRE(t.d_total == 0);
  }
  SECTION("superposing different S totals is indeterminate") {
    const Mat a = two_photon_product(from_logical(0, 0, 0, kIn4), from_logical(0, 0, 0, kIn4)).m;
    const Mat b = two_photon_product(from_logical(0, 0, 0, kIn4), from_logical(0, 1, 0, kIn4)).m;
    Mat mix = a + b;
    mix /= TwoPhotonState::norm(mix);
    auto t = total_logical_bits(TwoPhotonState::from_matrix(mix), kIn4);
    REQUIRE_FALSE(t.determinate);
    REQUIRE(t.components.size() == 2);
  }
}

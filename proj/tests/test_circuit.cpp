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

#include <cstring>
#include <random>

#include "sqc/circuit.hpp"

using namespace sqc;

namespace {

PortGraph single_grover() {
  PortGraph g;
  g.add_element("g1", grover_four_port());
  for (const char* p : {"a", "b", "c", "d"}) {
    g.declare_input({"g1", p});
    g.declare_output({"g1", p});
  }
  return g;
}

}  // namespace

TEST_CASE("graph construction errors", "[circuit]") {
  PortGraph g;
  g.add_element("g1", grover_four_port());
  SECTION("duplicate id") {
    REQUIRE_THROWS_AS(g.add_element("g1", beam_splitter()), CircuitError);
  }
  SECTION("two unwired elements coexist") {
    g.add_element("bs1", beam_splitter());
    g.add_element("bs2", beam_splitter());
    REQUIRE(g.elements().size() == 3);
  }
  SECTION("connect and reconnect") {
    g.add_element("bs1", beam_splitter());
    g.connect({"g1", "c"}, {"bs1", "la"});
    REQUIRE_THROWS_AS(g.connect({"g1", "c"}, {"bs1", "lb"}), CircuitError);
  }
  SECTION("nonexistent port") {
    REQUIRE_THROWS_AS(g.connect({"g1", "x"}, {"g1", "a"}), CircuitError);
  }
  SECTION("dangling port is a compile error") {
    g.declare_input({"g1", "a"});
    REQUIRE_THROWS_AS(compile(g), CircuitError);
  }
}

TEST_CASE("compiled single grover reproduces the four-port matrix", "[circuit]") {
  const CompiledCircuit c = compile(single_grover());
  REQUIRE(c.total.rows() == 4);
  REQUIRE(c.total.cols() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      REQUIRE(c.total(i, j) == (i == j ? cx{-0.5, 0.0} : cx{0.5, 0.0}));

  SECTION("symmetric right-moving input transmits") {
    const double r = 1.0 / std::sqrt(2.0);
    Vec in(4);
    in << r, r, 0, 0;
    Vec out = c.apply(in);
    REQUIRE(std::abs(out[2] - r) < kTolExact);
    REQUIRE(std::abs(out[3] - r) < kTolExact);
    REQUIRE(std::abs(out[0]) < kTolExact);
  }
  SECTION("antisymmetric right-moving input retro-reflects negated") {
    const double r = 1.0 / std::sqrt(2.0);
    Vec in(4);
    in << r, -r, 0, 0;
    Vec out = c.apply(in);
    REQUIRE(std::abs(out[0] + r) < kTolExact);
    REQUIRE(std::abs(out[1] - r) < kTolExact);
  }
}

TEST_CASE("grover - pi shifter - grover flips direction and keeps symmetry", "[circuit]") {
  PortGraph g;
  g.add_element("g1", grover_four_port());
  g.add_element("ps", phase_shifter(kPi, Rail::b));
  g.add_element("g2", grover_four_port());
  g.connect({"g1", "c"}, {"ps", "la"});
  g.connect({"g1", "d"}, {"ps", "lb"});
  g.connect({"ps", "ra"}, {"g2", "a"});
  g.connect({"ps", "rb"}, {"g2", "b"});
  for (const char* p : {"a", "b"}) {
    g.declare_input({"g1", p});
    g.declare_output({"g1", p});
  }
  for (const char* p : {"c", "d"}) {
    g.declare_input({"g2", p});
    g.declare_output({"g2", p});
  }
  const CompiledCircuit c = compile(g);
  const double r = 1.0 / std::sqrt(2.0);

  // right-moving symmetric input leaves left-moving symmetric, sign -1
  Vec in(4);
  in << r, r, 0, 0;
  Vec out = c.apply(in);
  REQUIRE(std::abs(out[0] + r) < kTolCompiled);
  REQUIRE(std::abs(out[1] + r) < kTolCompiled);
  REQUIRE(std::abs(out[2]) < kTolCompiled);
  REQUIRE(std::abs(out[3]) < kTolCompiled);

  // right-moving antisymmetric input reflects off the first grover
  in << r, -r, 0, 0;
  out = c.apply(in);
  REQUIRE(std::abs(out[0] + r) < kTolCompiled);
  REQUIRE(std::abs(out[1] - r) < kTolCompiled);
}

TEST_CASE("two facing grovers without a shifter form a resonant cavity", "[circuit]") {
  PortGraph g;
  g.add_element("g1", grover_four_port());
  g.add_element("g2", grover_four_port());
  g.connect({"g1", "c"}, {"g2", "a"});
  g.connect({"g1", "d"}, {"g2", "b"});
  for (const char* p : {"a", "b"}) {
    g.declare_input({"g1", p});
    g.declare_output({"g1", p});
  }
  for (const char* p : {"c", "d"}) {
    g.declare_input({"g2", p});
    g.declare_output({"g2", p});
  }
  REQUIRE_THROWS_MATCHES(compile(g), CircuitError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("resonant loop")));
}

TEST_CASE("closed mirror loop is rejected with its cycle modes", "[circuit]") {
  PortGraph g;
  g.add_element("m1", mirror(kPi));
  g.add_element("m2", mirror(kPi));
  g.connect({"m1", "m"}, {"m2", "m"});
  try {
    compile(g);
    FAIL("expected a resonant loop error");
  } catch (const CircuitError& e) {
    REQUIRE(e.code() == CircuitErrorCode::resonant_loop);
    REQUIRE(std::string(e.what()).find("m1.m") != std::string::npos);
  }
}

TEST_CASE("amplitude reaching an undeclared output is reported", "[circuit]") {
  PortGraph g;
  g.add_element("b1", beam_splitter());
  g.declare_input({"b1", "la"});
  g.declare_input({"b1", "lb"});
  g.declare_output({"b1", "ra"});
  g.declare_input({"b1", "rb"});  // rb never declared as output: forward light leaks there
  try {
    compile(g);
    FAIL("expected a leak error");
  } catch (const CircuitError& e) {
    REQUIRE(e.code() == CircuitErrorCode::leaking_output);
    REQUIRE(std::string(e.what()).find("b1.rb") != std::string::npos);
  }
}

TEST_CASE("compile is deterministic bit for bit", "[circuit]") {
  auto build = [] {
    PortGraph g;
    g.add_element("g1", grover_four_port());
    g.add_element("ps", phase_shifter(1.234, Rail::b));
    g.add_element("g2", grover_four_port());
    g.connect({"g1", "c"}, {"ps", "la"});
    g.connect({"g1", "d"}, {"ps", "lb"});
    g.connect({"ps", "ra"}, {"g2", "a"});
    g.connect({"ps", "rb"}, {"g2", "b"});
    for (const char* p : {"a", "b"}) {
      g.declare_input({"g1", p});
      g.declare_output({"g1", p});
    }
    for (const char* p : {"c", "d"}) {
      g.declare_input({"g2", p});
      g.declare_output({"g2", p});
    }
    return compile(g);
  };
  const CompiledCircuit c1 = build();
  const CompiledCircuit c2 = build();
  REQUIRE(c1.total.rows() == c2.total.rows());
  REQUIRE(std::memcmp(c1.total.data(), c2.total.data(),
                      sizeof(cx) * c1.total.size()) == 0);
}

TEST_CASE("series concatenation obeys the matrix product law", "[circuit]") {
  // feed-forward chain: beam splitter then phase pair
  auto part1 = [] {
    PortGraph g;
    g.add_element("b1", beam_splitter());
    g.declare_input({"b1", "la"});
    g.declare_input({"b1", "lb"});
    g.declare_output({"b1", "ra"});
    g.declare_output({"b1", "rb"});
    return g;
  };
  auto part2 = [] {
    PortGraph g;
    g.add_element("p1", phase_shifter(0.8, Rail::a));
    g.declare_input({"p1", "la"});
    g.declare_input({"p1", "lb"});
    g.declare_output({"p1", "ra"});
    g.declare_output({"p1", "rb"});
    return g;
  };
  const Mat u1 = compile(part1()).total;
  const Mat u2 = compile(part2()).total;

  PortGraph joined;
  joined.add_element("b1", beam_splitter());
  joined.add_element("p1", phase_shifter(0.8, Rail::a));
  joined.connect({"b1", "ra"}, {"p1", "la"});
  joined.connect({"b1", "rb"}, {"p1", "lb"});
  joined.declare_input({"b1", "la"});
  joined.declare_input({"b1", "lb"});
  joined.declare_output({"p1", "ra"});
  joined.declare_output({"p1", "rb"});
  REQUIRE(max_abs_diff(compile(joined).total, u2 * u1) < kTolCompiled);
}

TEST_CASE("norm preservation and unitarity on random states", "[circuit]") {
  const CompiledCircuit c = compile(single_grover());
  REQUIRE(unitarity_defect(c.total) < kTolCompiled);
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    Vec psi(4);
    for (int i = 0; i < 4; ++i) psi[i] = cx{dist(rng), dist(rng)};
    psi /= psi.norm();
    REQUIRE(std::abs(c.apply(psi).norm() - 1.0) < kTolCompiled);
  }
}

TEST_CASE("apply rejects mismatched dimensions", "[circuit]") {
  const CompiledCircuit c = compile(single_grover());
  Vec bad = Vec::Zero(3);
  REQUIRE_THROWS_AS(c.apply(bad), CircuitError);
}

TEST_CASE("identity circuit leaves states unchanged", "[circuit]") {
  PortGraph g;
  g.add_element("p0", phase_shifter(0.0, Rail::b));
  g.declare_input({"p0", "la"});
  g.declare_input({"p0", "lb"});
  g.declare_output({"p0", "ra"});
  g.declare_output({"p0", "rb"});
  const CompiledCircuit c = compile(g);
  Vec psi(2);
  psi << cx{0.6, 0.0}, cx{0.0, 0.8};
  Vec out = c.apply(psi);
  REQUIRE((out - psi).cwiseAbs().maxCoeff() < kTolExact);
}

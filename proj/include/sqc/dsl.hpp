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

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqc/circuit.hpp"
#include "sqc/components.hpp"

// The .sqc circuit description language:
//
//   circuit ::= "circuit" IDENT "{" stmt* "}"
//   stmt    ::= decl | conn | extern
//   decl    ::= KIND IDENT ("(" param ("," param)* ")")? ";"
//   KIND    ::= grover4 | bs | pbs | phase | mirror | circ | rot
//   param   ::= IDENT "=" NUMBER
//   conn    ::= IDENT "." IDENT "--" IDENT "." IDENT ";"
//   extern  ::= ("input" | "output") IDENT "." IDENT ";"
//
// "//" comments run to end of line. NUMBER accepts decimals and pi
// literals (pi, pi/2, 3pi/4, 2pi), optionally negated. Parsing is total:
// any input produces either a graph or positioned diagnostics.

namespace sqc {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
  enum class Severity { error, warning } severity = Severity::error;

  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (severity == Severity::error ? "error: " : "warning: ") + message;
  }
};

namespace dsl {

struct Param {
  std::string name;
  double value = 0;
  int line = 0, column = 0;
};

struct Decl {
  std::string kind, id;
  std::vector<Param> params;
  int line = 0, column = 0;
};

struct Conn {
  PortRef a, b;
  int line = 0, column = 0;
};

struct Extern {
  bool is_input = true;
  PortRef port;
  int line = 0, column = 0;
};

struct Netlist {
  std::string name;
  std::vector<Decl> decls;
  std::vector<Conn> conns;
  std::vector<Extern> externs;
};

namespace detail {

struct Token {
  enum class Kind { ident, number, punct, eof } kind = Kind::eof;
  std::string text;
  double value = 0;
  int line = 1, column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<Diagnostic>& diags) : src_(src), diags_(diags) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = col_;
    if (eof()) {
      t.kind = Token::Kind::eof;
      return t;
    }
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident = scan_ident();
      if (ident == "pi") return finish_pi(t, 1.0, false);
      t.kind = Token::Kind::ident;
      t.text = ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && isdigit_at(1))) {
      double mant = scan_decimal();
      if (peek() == 'p' && at(1) == 'i' && !ident_at(2)) {
        get();
        get();
        return finish_pi(t, mant, true);
      }
      t.kind = Token::Kind::number;
      t.value = mant;
      t.text = "number";
      return t;
    }
    if (c == '-' && at(1) == '-') {
      get();
      get();
      t.kind = Token::Kind::punct;
      t.text = "--";
      return t;
    }
    if (std::string("{}();,=.-").find(c) != std::string::npos) {
      get();
      t.kind = Token::Kind::punct;
      t.text = std::string(1, c);
      return t;
    }
    diags_.push_back({line_, col_, std::string("unexpected character '") +
                                      (std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c)
                                                                                  : "\\x" + hex(c)) +
                                      "'"});
    get();
    return next();
  }

 private:
  static std::string hex(char c) {
    static const char* d = "0123456789abcdef";
    unsigned char u = static_cast<unsigned char>(c);
    return std::string(1, d[u >> 4]) + d[u & 15];
  }
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return eof() ? '\0' : src_[pos_]; }
  char at(std::size_t off) const { return pos_ + off < src_.size() ? src_[pos_ + off] : '\0'; }
  bool isdigit_at(std::size_t off) const { return std::isdigit(static_cast<unsigned char>(at(off))); }
  bool ident_at(std::size_t off) const {
    char c = at(off);
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '/' && at(1) == '/') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        return;
      }
    }
  }
  std::string scan_ident() {
    std::string s;
    while (!eof() && ident_at(0)) s += get();
    return s;
  }
  double scan_decimal() {
    std::string s;
    while (isdigit_at(0)) s += get();
    if (peek() == '.' && isdigit_at(1)) {
      s += get();
      while (isdigit_at(0)) s += get();
    }
    return s.empty() ? 0.0 : std::stod(s);
  }
  // pi literals stay exact multiples of the runtime pi constant
  Token finish_pi(Token t, double mult, bool had_mantissa) {
    (void)had_mantissa;
    double value = mult * kPi;
    if (peek() == '/' && isdigit_at(1)) {
      get();
      double den = scan_decimal();
      if (den == 0.0)
        diags_.push_back({t.line, t.column, "division by zero in pi literal"});
      else
        value /= den;
    }
    t.kind = Token::Kind::number;
    t.value = value;
    t.text = "number";
    return t;
  }

  std::string_view src_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace detail

/// Recursive-descent parser. Always returns; syntax problems become
/// diagnostics and parsing resynchronizes at the next ';' or '}'.
class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src, diags_) { advance(); }

  std::optional<Netlist> parse() {
    Netlist nl;
    if (!expect_ident("circuit")) return give_up();
    if (tok_.kind != detail::Token::Kind::ident) {
      error("expected circuit name");
      return give_up();
    }
    nl.name = tok_.text;
    advance();
    if (!expect_punct("{")) return give_up();
    while (!at_punct("}") && tok_.kind != detail::Token::Kind::eof) stmt(nl);
    if (!expect_punct("}")) return give_up();
    if (tok_.kind != detail::Token::Kind::eof) error("trailing input after circuit body");
    return nl;
  }

  std::vector<Diagnostic>& diagnostics() { return diags_; }

 private:
  std::optional<Netlist> give_up() { return std::nullopt; }

  void stmt(Netlist& nl) {
    if (tok_.kind != detail::Token::Kind::ident) {
      error("expected a statement");
      synchronize();
      return;
    }
    const std::string head = tok_.text;
    const int line = tok_.line, col = tok_.column;
    advance();
    if (head == "input" || head == "output") {
      Extern ex;
      ex.is_input = head == "input";
      ex.line = line;
      ex.column = col;
      if (!port_ref(ex.port)) return synchronize();
      if (!expect_punct(";")) return synchronize();
      nl.externs.push_back(ex);
      return;
    }
    if (at_punct(".")) {
      // connection: IDENT.IDENT -- IDENT.IDENT ;
      Conn cn;
      cn.line = line;
      cn.column = col;
      cn.a.element = head;
      advance();
      if (!take_ident(cn.a.port, "port name")) return synchronize();
      if (!expect_punct("--")) return synchronize();
      if (!port_ref(cn.b)) return synchronize();
      if (!expect_punct(";")) return synchronize();
      nl.conns.push_back(cn);
      return;
    }
    // declaration: KIND IDENT (params)? ;
    Decl d;
    d.kind = head;
    d.line = line;
    d.column = col;
    if (!take_ident(d.id, "instance name")) return synchronize();
    if (at_punct("(")) {
      advance();
      while (true) {
        Param p;
        p.line = tok_.line;
        p.column = tok_.column;
        if (!take_ident(p.name, "parameter name")) return synchronize();
        if (!expect_punct("=")) return synchronize();
        double sign = 1.0;
        if (at_punct("-")) {
          sign = -1.0;
          advance();
        }
        if (tok_.kind != detail::Token::Kind::number) {
          error("expected a number");
          return synchronize();
        }
        p.value = sign * tok_.value;
        advance();
        d.params.push_back(p);
        if (at_punct(",")) {
          advance();
          continue;
        }
        break;
      }
      if (!expect_punct(")")) return synchronize();
    }
    if (!expect_punct(";")) return synchronize();
    nl.decls.push_back(d);
  }

  bool port_ref(PortRef& out) {
    if (!take_ident(out.element, "element name")) return false;
    if (!expect_punct(".")) return false;
    return take_ident(out.port, "port name");
  }

  bool take_ident(std::string& out, const char* what) {
    if (tok_.kind != detail::Token::Kind::ident) {
      error(std::string("expected ") + what);
      return false;
    }
    out = tok_.text;
    advance();
    return true;
  }

  bool at_punct(const char* p) const {
    return tok_.kind == detail::Token::Kind::punct && tok_.text == p;
  }
  bool expect_punct(const char* p) {
    if (at_punct(p)) {
      advance();
      return true;
    }
    error(std::string("expected '") + p + "'");
    return false;
  }
  bool expect_ident(const char* word) {
    if (tok_.kind == detail::Token::Kind::ident && tok_.text == word) {
      advance();
      return true;
    }
    error(std::string("expected '") + word + "'");
    return false;
  }
  void error(const std::string& msg) { diags_.push_back({tok_.line, tok_.column, msg}); }
  void synchronize() {
    while (tok_.kind != detail::Token::Kind::eof && !at_punct(";") && !at_punct("}")) advance();
    if (at_punct(";")) advance();
  }
  void advance() { tok_ = lexer_.next(); }

  std::vector<Diagnostic> diags_;
  detail::Lexer lexer_;
  detail::Token tok_;
};

inline std::optional<double> find_param(const Decl& d, const std::string& name) {
  for (const auto& p : d.params)
    if (p.name == name) return p.value;
  return std::nullopt;
}

/// Instantiates the parsed netlist into a PortGraph, converting any
/// construction failures into positioned diagnostics.
inline std::optional<PortGraph> build_graph(const Netlist& nl, std::vector<Diagnostic>& diags) {
  PortGraph g;
  bool ok = true;
  auto fail = [&](int line, int col, const std::string& msg) {
    diags.push_back({line, col, msg});
    ok = false;
  };
  for (const auto& d : nl.decls) {
    std::optional<ScatteringElement> el;
    std::vector<std::string> known;
    try {
      if (d.kind == "grover4") {
        el = grover_four_port();
      } else if (d.kind == "bs") {
        known = {"dot"};
        el = beam_splitter(static_cast<int>(find_param(d, "dot").value_or(1)));
      } else if (d.kind == "pbs") {
        el = polarizing_beam_splitter();
      } else if (d.kind == "phase") {
        known = {"phi", "rail"};
        el = phase_shifter(find_param(d, "phi").value_or(0.0),
                           find_param(d, "rail").value_or(1.0) == 0.0 ? Rail::a : Rail::b);
      } else if (d.kind == "mirror") {
        known = {"phase"};
        el = mirror(find_param(d, "phase").value_or(kPi));
      } else if (d.kind == "circ") {
        el = circulator();
      } else if (d.kind == "rot") {
        known = {"theta"};
        el = polarization_rotator(find_param(d, "theta").value_or(0.0));
      } else {
        fail(d.line, d.column, "unknown kind '" + d.kind + "'");
        continue;
      }
    } catch (const std::exception& e) {
      fail(d.line, d.column, e.what());
      continue;
    }
    for (const auto& p : d.params)
      if (std::find(known.begin(), known.end(), p.name) == known.end())
        fail(p.line, p.column, "unknown parameter '" + p.name + "' for kind '" + d.kind + "'");
    try {
      g.add_element(d.id, std::move(*el));
    } catch (const CircuitError& e) {
      fail(d.line, d.column, e.what());
    }
  }
  for (const auto& c : nl.conns) {
    try {
      g.connect(c.a, c.b);
    } catch (const CircuitError& e) {
      fail(c.line, c.column, e.what());
    }
  }
  for (const auto& ex : nl.externs) {
    try {
      if (ex.is_input)
        g.declare_input(ex.port);
      else
        g.declare_output(ex.port);
    } catch (const CircuitError& e) {
      fail(ex.line, ex.column, e.what());
    }
  }
  if (!ok) return std::nullopt;
  return g;
}

}  // namespace dsl

/// Parses a single number token (decimal or pi literal, optionally
/// negated), as used by CLI --phases arguments.
inline std::optional<double> parse_number_literal(std::string_view text) {
  std::vector<Diagnostic> diags;
  dsl::detail::Lexer lx(text, diags);
  auto t = lx.next();
  double sign = 1.0;
  if (t.kind == dsl::detail::Token::Kind::punct && t.text == "-") {
    sign = -1.0;
    t = lx.next();
  }
  if (t.kind != dsl::detail::Token::Kind::number || !diags.empty()) return std::nullopt;
  if (lx.next().kind != dsl::detail::Token::Kind::eof) return std::nullopt;
  return sign * t.value;
}

struct ParseResult {
  std::optional<dsl::Netlist> netlist;
  std::optional<PortGraph> graph;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return graph.has_value(); }
};

/// Total parse: every input yields either a graph or at least one
/// diagnostic; malformed input never throws.
inline ParseResult parse(std::string_view source) {
  ParseResult r;
  dsl::Parser parser(source);
  r.netlist = parser.parse();
  r.diagnostics = std::move(parser.diagnostics());
  bool clean = r.diagnostics.empty();
  if (r.netlist && clean) r.graph = dsl::build_graph(*r.netlist, r.diagnostics);
  if (!r.graph && r.diagnostics.empty())
    r.diagnostics.push_back({1, 1, "invalid circuit"});
  return r;
}

/// Rebuilds netlist source structure from a constructed graph, so any
/// programmatically built circuit can be exported as a .sqc file.
inline dsl::Netlist to_netlist(const PortGraph& g, const std::string& name) {
  dsl::Netlist nl;
  nl.name = name;
  for (const auto& [id, el] : g.elements()) {
    dsl::Decl d;
    d.kind = kind_name(el.kind);
    d.id = id;
    for (const auto& [pname, value] : el.parameters) d.params.push_back({pname, value, 0, 0});
    nl.decls.push_back(std::move(d));
  }
  for (const auto& [a, b] : g.wires()) nl.conns.push_back({a, b, 0, 0});
  for (const auto& p : g.inputs()) nl.externs.push_back({true, p, 0, 0});
  for (const auto& p : g.outputs()) nl.externs.push_back({false, p, 0, 0});
  return nl;
}

/// Canonical source text; parsing it back yields an identical netlist.
inline std::string pretty_print(const dsl::Netlist& nl) {
  std::ostringstream out;
  out << "circuit " << nl.name << " {\n";
  auto num = [](double v) {
    // prefer exact pi fractions where they reproduce the value bit for bit
    if (v == 0.0) return std::string("0");
    for (int den = 1; den <= 12; ++den)
      for (int mult = 1; mult <= 24; ++mult) {
        const double candidate = mult * kPi / den;
        for (double sign : {1.0, -1.0})
          if (v == sign * candidate) {
            std::string s = sign < 0 ? "-" : "";
            if (mult != 1) s += std::to_string(mult);
            s += "pi";
            if (den != 1) s += "/" + std::to_string(den);
            return s;
          }
      }
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
  };
  for (const auto& d : nl.decls) {
    out << "  " << d.kind << " " << d.id;
    if (!d.params.empty()) {
      out << "(";
      for (std::size_t i = 0; i < d.params.size(); ++i)
        out << (i ? ", " : "") << d.params[i].name << "=" << num(d.params[i].value);
      out << ")";
    }
    out << ";\n";
  }
  for (const auto& c : nl.conns)
    out << "  " << c.a.str() << " -- " << c.b.str() << ";\n";
  for (const auto& e : nl.externs)
    out << "  " << (e.is_input ? "input " : "output ") << e.port.str() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sqc

// Copyright 2026 The paraconsistent-lts Authors
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

#include <charconv>
#include <map>
#include <sstream>

#include "plts/quantum.hpp"

namespace plts::quantum {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), first_column + start});
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  double number(const Token& t) const {
    double v = 0.0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      fail(t.column, "expected a number, found '" + std::string(t.text) + "'");
    }
    return v;
  }

  int integer(const Token& t) const {
    int v = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      fail(t.column, "expected an integer, found '" + std::string(t.text) + "'");
    }
    return v;
  }

  void arity(const std::vector<Token>& toks, std::size_t n, std::size_t end_column) const {
    if (toks.size() < n) fail(end_column, "missing argument to '" + std::string(toks[0].text) + "'");
    if (toks.size() > n) fail(toks[n].column, "unexpected '" + std::string(toks[n].text) + "'");
  }

 private:
  std::size_t line_;
};

const std::map<std::string_view, int> kDirectives = {
    {"qubits", 2}, {"tmax", 3}, {"tmin", 3}, {"tg", 2},
    {"t2g", 2},    {"tm", 2},   {"divisor", 2}, {"gate", 5}};

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::map<std::string, GateType> custom;
  std::map<int, double> tmax;
  std::map<int, double> tmin;
  std::optional<double> tmax_all;
  std::optional<double> tmin_all;
  bool seen_step = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const LineParser p(line_no);
    const auto toks = tokenize(line, 1);
    if (toks.empty()) continue;
    const std::size_t end_col = line.size() + 1;

    if (auto d = kDirectives.find(toks[0].text); d != kDirectives.end()) {
      if (seen_step) p.fail(toks[0].column, "directive '" + std::string(toks[0].text) +
                                                "' after the first step");
      p.arity(toks, static_cast<std::size_t>(d->second), end_col);
      const std::string_view name = toks[0].text;
      if (name == "qubits") {
        c.qubit_count = p.integer(toks[1]);
      } else if (name == "tmax" || name == "tmin") {
        const double v = p.number(toks[2]);
        auto& all = name == "tmax" ? tmax_all : tmin_all;
        auto& per = name == "tmax" ? tmax : tmin;
        if (toks[1].text == "*") {
          all = v;
        } else {
          per[p.integer(toks[1])] = v;
        }
      } else if (name == "tg") {
        c.timing.single_gate = p.number(toks[1]);
      } else if (name == "t2g") {
        c.timing.two_qubit_gate = p.number(toks[1]);
      } else if (name == "tm") {
        c.timing.measurement = p.number(toks[1]);
      } else if (name == "divisor") {
        c.timing.decoherence_divisor = p.number(toks[1]);
      } else {  // gate
        const std::string gname(toks[1].text);
        if (GateType::builtin(gname) || kDirectives.count(gname)) {
          p.fail(toks[1].column, "gate name '" + gname + "' is reserved");
        }
        const int ar = p.integer(toks[2]);
        if (ar < 1) p.fail(toks[2].column, "gate arity must be positive");
        DurationClass dur{};
        if (toks[3].text == "single") {
          dur = DurationClass::Single;
        } else if (toks[3].text == "two") {
          dur = DurationClass::Two;
        } else if (toks[3].text == "measure") {
          dur = DurationClass::Measure;
        } else {
          p.fail(toks[3].column, "duration class must be single, two or measure");
        }
        bool sup = false;
        if (toks[4].text == "superpose") {
          sup = true;
        } else if (toks[4].text != "keep") {
          p.fail(toks[4].column, "expected superpose or keep");
        }
        custom[gname] = GateType::custom(gname, ar, dur, sup);
      }
      continue;
    }

    // A step: factors separated by '|'.
    seen_step = true;
    CircuitStep step;
    std::size_t fstart = 0;
    while (fstart <= line.size()) {
      const std::size_t bar = line.find('|', fstart);
      const std::size_t fend = bar == std::string_view::npos ? line.size() : bar;
      const auto ftoks = tokenize(line.substr(fstart, fend - fstart), fstart + 1);
      if (ftoks.empty()) p.fail(fstart + 1, "empty gate factor");
      const std::string gname(ftoks[0].text);
      std::optional<GateType> type = GateType::builtin(gname);
      if (!type) {
        if (auto it = custom.find(gname); it != custom.end()) type = it->second;
      }
      if (!type) p.fail(ftoks[0].column, "unknown gate or directive '" + gname + "'");
      GateFactor f{*type, {}};
      if (ftoks.size() - 1 != static_cast<std::size_t>(type->arity)) {
        p.fail(ftoks[0].column, "gate '" + gname + "' takes " + std::to_string(type->arity) +
                                    " qubit(s), got " + std::to_string(ftoks.size() - 1));
      }
      for (std::size_t k = 1; k < ftoks.size(); ++k) f.qubits.push_back(p.integer(ftoks[k]));
      step.factors.push_back(std::move(f));
      if (bar == std::string_view::npos) break;
      fstart = bar + 1;
    }
    c.steps.push_back(std::move(step));
  }

  if (c.qubit_count <= 0) throw ParseError(line_no, 1, "missing 'qubits N' directive");
  for (int q = 0; q < c.qubit_count; ++q) {
    Coherence w;
    auto hi = tmax.count(q) ? std::optional<double>(tmax[q]) : tmax_all;
    auto lo = tmin.count(q) ? std::optional<double>(tmin[q]) : tmin_all;
    if (!hi || !lo) {
      throw ParseError(line_no, 1, "qubit " + std::to_string(q) + " lacks tmax/tmin");
    }
    w.tau_max = *hi;
    w.tau_min = *lo;
    c.coherence.push_back(w);
  }
  for (const auto& [q, _] : tmax) {
    if (q < 0 || q >= c.qubit_count) {
      throw ParseError(line_no, 1, "tmax given for unknown qubit " + std::to_string(q));
    }
  }
  for (const auto& [q, _] : tmin) {
    if (q < 0 || q >= c.qubit_count) {
      throw ParseError(line_no, 1, "tmin given for unknown qubit " + std::to_string(q));
    }
  }
  return c;
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  auto num = [](double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
  };
  out << "qubits " << c.qubit_count << "\n";
  for (std::size_t q = 0; q < c.coherence.size(); ++q) {
    out << "tmax " << q << " " << num(c.coherence[q].tau_max) << "\n";
    out << "tmin " << q << " " << num(c.coherence[q].tau_min) << "\n";
  }
  out << "tg " << num(c.timing.single_gate) << "\n";
  if (c.timing.two_qubit_gate) out << "t2g " << num(*c.timing.two_qubit_gate) << "\n";
  out << "tm " << num(c.timing.measurement) << "\n";
  out << "divisor " << num(c.timing.decoherence_divisor) << "\n";

  std::map<std::string, GateType> custom;
  for (const auto& step : c.steps) {
    for (const auto& f : step.factors) {
      if (!GateType::builtin(f.type.name)) custom.emplace(f.type.name, f.type);
    }
  }
  for (const auto& [name, g] : custom) {
    const char* dur = g.duration == DurationClass::Single ? "single"
                      : g.duration == DurationClass::Two  ? "two"
                                                          : "measure";
    out << "gate " << name << " " << g.arity << " " << dur << " "
        << (g.creates_superposition ? "superpose" : "keep") << "\n";
  }
  for (const auto& step : c.steps) {
    for (std::size_t i = 0; i < step.factors.size(); ++i) {
      if (i) out << " | ";
      out << step.factors[i].type.name;
      for (int q : step.factors[i].qubits) out << " " << q;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace plts::quantum

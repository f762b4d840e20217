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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fixtures.hpp"
#include "plts/behavior.hpp"
#include "plts/io.hpp"
#include "plts/quantum.hpp"
#include "properties.hpp"

#ifndef PLTS_BIN
#error "PLTS_BIN must name the command-line binary"
#endif

namespace {

using namespace plts;
using namespace plts::quantum;
using fixtures::Weights;

constexpr double kTol = 1e-9;

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

bool same_weights(const Weights& got, const Weights& expect) {
  if (got.size() != expect.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (std::abs(got[i].first - expect[i].first) > kTol) return false;
    if (std::abs(got[i].second - expect[i].second) > kTol) return false;
  }
  return true;
}

bool trace_is(const WeightedTrace& t, double p, double n) {
  return std::abs(t.pos.value() - p) <= kTol && std::abs(t.neg.value() - n) <= kTol;
}

// Drops the opening preparation edge, which is always (1,0).
Weights after_first(Weights w) {
  if (!w.empty()) w.erase(w.begin());
  return w;
}

void check_circuits(Checker& c, const std::string& left_text, const std::string& right_text,
                    const Weights& left_expect, const Weights& right_expect, bool skip_first) {
  const Translation l = translate(fixtures::circuit(left_text));
  const Translation r = translate(fixtures::circuit(right_text));
  Weights lw = fixtures::step_weights(l);
  Weights rw = fixtures::step_weights(r);
  if (skip_first) {
    c.expect(!lw.empty() && lw.front() == std::make_pair(1.0, 0.0), "first left edge is (1,0)");
    c.expect(!rw.empty() && rw.front() == std::make_pair(1.0, 0.0), "first right edge is (1,0)");
    lw = after_first(lw);
    rw = after_first(rw);
  }
  c.expect(same_weights(lw, left_expect), "left edge weights");
  c.expect(same_weights(rw, right_expect), "right edge weights");
  const Effectiveness e =
      compare_effectiveness(fixtures::circuit(left_text), fixtures::circuit(right_text));
  c.expect(e.verdict == Verdict::SecondMoreEffective, "second circuit more effective");
}

Checker criterion1() {
  Checker c;
  check_circuits(c, fixtures::circuit_one_left(), fixtures::circuit_one_right(),
                 {{1, 0}, {0.8, 0.5}, {0.4, 0.9}}, {{1, 0}, {0.6, 0.7}}, false);
  const WeightedTrace t1 = maximal_weighted_trace(circuit_to_plts(fixtures::circuit(fixtures::circuit_one_left())));
  const WeightedTrace t2 = maximal_weighted_trace(circuit_to_plts(fixtures::circuit(fixtures::circuit_one_right())));
  c.expect(trace_is(t1, 0.4, 0.9), "left maximal trace (0.4,0.9)");
  c.expect(trace_is(t2, 0.6, 0.7), "right maximal trace (0.6,0.7)");
  return c;
}

Checker criterion2() {
  Checker c;
  check_circuits(c, fixtures::circuit_two_left(), fixtures::circuit_two_right(),
                 {{1, 0}, {0.6, 0.7}, {0.8, 0.5}, {0, 1}, {0.8, 0.5}, {0.6, 0.7}, {0, 1}},
                 {{1, 0}, {0.6, 0.7}, {0.8, 0.5}, {0.6, 0.7}, {0.6, 0.7}}, false);
  return c;
}

Checker criterion3() {
  Checker c;
  check_circuits(c, fixtures::circuit_three_left(), fixtures::circuit_three_right(),
                 {{0.99, 0.31}, {0.98, 0.32}, {0.58, 0.72}, {0.99, 0.31}, {0.98, 0.32}},
                 {{0.6, 0.7}, {0.99, 0.31}, {0.98, 0.32}, {0.97, 0.33}, {0.96, 0.34}}, true);
  return c;
}

Checker criterion4() {
  Checker c;
  const StateRelation witness = {{"w1", "v1"}, {"w2", "v2"}, {"w3", "v2"}, {"w4", "v3"}, {"w5", "v4"}};
  c.expect(is_simulation(witness, fixtures::sim_left(), fixtures::sim_right()).ok,
           "witnessing relation is a simulation");
  c.expect(similar("w1", "v1", fixtures::sim_left(), fixtures::sim_right()), "w1 simulated by v1");

  // Weights exactly as drawn; see README for why this is reported.
  c.expect(bisimilar("w1", "v1", fixtures::bisim_left(), fixtures::bisim_right()),
           "w1 bisimilar to v1 (as drawn, w1's a-move (0.5,0.3) has no equal-weight match at v1)");

  const TraceSet x = weighted_traces(fixtures::trace_left(), "w1", 2);
  const TraceSet y = weighted_traces(fixtures::trace_right(), "v1", 2);
  c.expect(trace_set_leq(x, y), "X is a weighted sub-trace set of Y");
  c.expect(!similar("w1", "v1", fixtures::trace_left(), fixtures::trace_right()),
           "w1 not simulated by v1");
  return c;
}

Checker criterion5() {
  Checker c;
  const MorphismReport ok =
      is_morphism({{"w1", "v1"}, {"w2", "v2"}, {"w3", "v3"}}, fixtures::m1_without_w4(), fixtures::m2());
  c.expect(ok.ok, "h on w1..w3 is a morphism");
  const MorphismReport bad = is_morphism({{"w1", "v1"}, {"w2", "v2"}, {"w3", "v3"}, {"w4", "v4"}},
                                         fixtures::m1(), fixtures::m2());
  c.expect(!bad.ok, "extension over w4 is not a morphism");
  bool d_edge = false;
  for (const auto& v : bad.violations) {
    if (v.label == "d" && v.from == "w3" && v.to == "w4" && v.kind == "positive") d_edge = true;
  }
  c.expect(d_edge, "d-edge violation reported");
  return c;
}

Checker criterion6() {
  Checker c;
  for (const auto& group : props::acceptance_groups()) {
    for (const auto& member : group.members) {
      const props::Outcome o = member();
      if (o.instances < 200) c.expect(false, group.name + "/" + o.name + ": fewer than 200 instances");
      if (!o.ok()) c.expect(false, group.name + "/" + o.name + ": " + o.first_failure);
    }
  }
  return c;
}

// Runs the binary and captures stdout followed by the exit status.
std::string run(const std::string& args) {
  const std::string cmd = std::string(PLTS_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return out + "\n<exit " + std::to_string(status) + ">";
}

Checker criterion7() {
  namespace fs = std::filesystem;
  Checker c;
  const fs::path dir = fs::temp_directory_path() / ("plts-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& text) {
    const std::string p = (dir / name).string();
    io::write_file(p, text);
    return "'" + p + "'";
  };
  const std::string c1 = put("c1.qc", fixtures::circuit_one_left());
  const std::string c2 = put("c2.qc", fixtures::circuit_one_right());
  const std::string c3 = put("c3.qc", fixtures::circuit_three_left());
  const std::string sl = put("sl.json", io::to_json(fixtures::sim_left(), std::string("w1")));
  const std::string sr = put("sr.json", io::to_json(fixtures::sim_right(), std::string("v1")));
  const std::string bl = put("bl.json", io::to_json(fixtures::bisim_left(), std::string("w1")));
  const std::string br = put("br.json", io::to_json(fixtures::bisim_right(), std::string("v1")));
  const std::string m1 = put("m1.json", io::to_json(fixtures::m1(), std::string("w1")));
  const std::string m2 = put("m2.json", io::to_json(fixtures::m2(), std::string("v1")));
  const std::string h = put("h.json", R"({"w1":"v1","w2":"v2","w3":"v3","w4":"v4"})");
  const std::string pl = put("pl.json", io::to_json(fixtures::comp_left()));
  const std::string pr = put("pr.json", io::to_json(fixtures::comp_right()));
  const std::string pm = put("pm.json", R"({"sigma":{"i1":"i2","w":"v"},"lambda":{"a":"b"}})");
  const std::string lam = put("lam.json", R"({"a":"x","b":"x","c":"y","d":"y"})");
  const std::string dup = put("dup.json", R"({"states":["p"],"labels":["a"],"transitions":[
    {"from":"p","label":"a","to":"p","pos":0.1,"neg":0.2},
    {"from":"p","label":"a","to":"p","pos":0.3,"neg":0.2}]})");

  const std::vector<std::string> commands = {
      "build " + c1,
      "build " + c3 + " --format text",
      "build " + c1 + " --format dot --model literal",
      "compare " + c1 + " " + c2,
      "sim " + sl + " " + sr,
      "sim " + sl + " " + sr + " --states w1 v1 --mode negative",
      "sim " + sl + " " + sr + " --format json",
      "bisim " + bl + " " + br,
      "bisim " + br + " " + br + " --states v1 v1",
      "traces " + sl + " --maximal",
      "traces " + br + " --depth 4 --format json",
      "classify 0.7 0.5",
      "classify " + m1,
      "morphism " + m1 + " " + m2 + " --map " + h,
      "morphism " + pl + " " + pr + " --map " + pm + " --pointed",
      "op product " + pl + " " + pr,
      "op interleave " + pl + " " + pr + " --format text",
      "op sync " + pl + " " + pr + " --format dot",
      "op sum " + pl + " " + pr,
      "op restrict " + m1 + " --labels a,b",
      "op reachable " + m1,
      "op relabel " + m1 + " --map " + lam,
      "op prefix " + pl + " --label a --pos 0.9 --neg 0.1",
      "op approx " + m1 + " --v 0.25 --target both",
      "op purge " + m1 + " --p 0.3 --n 0.5",
      "validate " + m1,
      "validate " + dup,
      "export-dot " + m1,
  };
  for (const auto& cmd : commands) {
    const std::string first = run(cmd);
    const std::string second = run(cmd);
    c.expect(first == second, "differing output: " + cmd);
    c.expect(first.find("<exit 0>") != std::string::npos || cmd.rfind("validate", 0) == 0,
             "unexpected failure: " + cmd + "\n" + first);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* description;
    std::function<Checker()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "first circuit example weights, traces and verdict", criterion1},
      {2, "second circuit example weights and verdict", criterion2},
      {3, "measurement circuit example weights and verdict", criterion3},
      {4, "simulation, bisimulation and trace counterexample", criterion4},
      {5, "morphism example and its extension over w4", criterion5},
      {6, "property suites (a)-(g)", criterion6},
      {7, "CLI determinism", criterion7},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    try {
      c = cr.check();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << cr.number << ": " << (c.ok() ? "PASS" : "FAIL") << " - "
              << cr.description << "\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

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

// Reference systems and circuits shared by the unit and acceptance suites.

#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "plts/algebra.hpp"
#include "plts/quantum.hpp"

namespace plts::fixtures {

using Edge = std::tuple<const char*, const char*, const char*, double, double>;

inline Plts make(std::initializer_list<const char*> states, std::initializer_list<const char*> labels,
                 std::initializer_list<Edge> edges) {
  Plts t;
  for (const char* s : states) t.add_state(s);
  for (const char* l : labels) t.add_label(l);
  for (const auto& [f, l, to, p, n] : edges) {
    t.add_transition({f, l, to, LatticeValue(p), LatticeValue(n)});
  }
  return t;
}

// Morphism example: M1 -> M2 over {a,b,c,d}.
inline Plts m1() {
  return make({"w1", "w2", "w3", "w4"}, {"a", "b", "c", "d"},
              {{"w1", "a", "w2", 0.7, 0.2},
               {"w2", "b", "w3", 0.3, 0.5},
               {"w3", "c", "w2", 0.2, 0.3},
               {"w3", "d", "w4", 0.5, 0.8}});
}

// M1 without w4 and its d-move: the part the example's map is defined on.
inline Plts m1_without_w4() {
  return make({"w1", "w2", "w3"}, {"a", "b", "c", "d"},
              {{"w1", "a", "w2", 0.7, 0.2},
               {"w2", "b", "w3", 0.3, 0.5},
               {"w3", "c", "w2", 0.2, 0.3}});
}

inline Plts m2() {
  return make({"v1", "v2", "v3", "v4", "v5"}, {"a", "b", "c", "d"},
              {{"v1", "a", "v2", 0.9, 0.1},
               {"v2", "b", "v3", 0.5, 0.2},
               {"v3", "c", "v2", 0.6, 0.1},
               {"v3", "c", "v4", 0.8, 0.4},
               {"v3", "a", "v5", 0.4, 0.7}});
}

// Simulation example: w1 is simulated by v1.
inline Plts sim_left() {
  return make({"w1", "w2", "w3", "w4", "w5"}, {"a", "b", "c"},
              {{"w1", "a", "w2", 0.4, 0.7},
               {"w1", "a", "w3", 0.3, 0.6},
               {"w2", "b", "w4", 0.2, 0.8},
               {"w3", "c", "w5", 0.2, 0.9}});
}

inline Plts sim_right() {
  return make({"v1", "v2", "v3", "v4"}, {"a", "b", "c"},
              {{"v1", "a", "v2", 0.5, 0.5},
               {"v2", "b", "v3", 0.3, 0.5},
               {"v2", "c", "v4", 0.5, 0.5}});
}

// Bisimulation example, weights exactly as drawn.
inline Plts bisim_left() {
  return make({"w1", "w2", "w3"}, {"a", "c"},
              {{"w1", "a", "w2", 0.5, 0.3},
               {"w1", "a", "w3", 0.7, 0.2},
               {"w2", "c", "w3", 0.2, 0.3},
               {"w3", "c", "w3", 0.4, 0.5},
               {"w2", "c", "w2", 0.4, 0.5}});
}

inline Plts bisim_right() {
  return make({"v1", "v2"}, {"a", "c"},
              {{"v1", "a", "v2", 0.7, 0.2}, {"v2", "c", "v2", 0.4, 0.5}});
}

// Trace inclusion without similarity.
inline Plts trace_left() {
  return make({"w1", "w2", "w3"}, {"a", "b"},
              {{"w1", "a", "w2", 0.5, 0.3}, {"w2", "b", "w3", 0.7, 0.2}});
}

inline Plts trace_right() {
  return make({"v1", "v2", "v3"}, {"a", "b"},
              {{"v1", "a", "v2", 0.7, 0.2}, {"v2", "b", "v3", 0.5, 0.3}});
}

// Product / sum example components.
inline PointedPlts comp_left() {
  return PointedPlts(make({"i1", "w"}, {"a"}, {{"i1", "a", "w", 0.7, 0.2}}), "i1");
}

inline PointedPlts comp_right() {
  return PointedPlts(make({"i2", "v"}, {"b"}, {{"i2", "b", "v", 0.4, 0.2}}), "i2");
}

// Prefix example: (sigma, lambda) with lambda(a) = b.
inline PointedPlts prefix_right() {
  return PointedPlts(make({"i2", "v"}, {"b"}, {{"i2", "b", "v", 0.8, 0.1}}), "i2");
}

// ---------------------------------------------------------------------------
// Circuits (tau_G = 20, tau_max = 100, tau_min = 70 for every qubit).

inline const char* kCircuitHeader2 =
    "qubits 2\n"
    "tmax * 100\n"
    "tmin * 70\n"
    "tg 20\n";

inline std::string circuit_one_left() {
  return std::string(kCircuitHeader2) +
         "H 0\n"
         "I 0 | H 1\n"
         "CX 0 1\n";
}

inline std::string circuit_one_right() {
  return std::string(kCircuitHeader2) +
         "H 0 | H 1\n"
         "CX 0 1\n";
}

inline const char* kCircuitHeader12 =
    "qubits 12\n"
    "tmax * 100\n"
    "tmin * 70\n"
    "tg 20\n";

inline std::string circuit_two_left() {
  return std::string(kCircuitHeader12) +
         "H 1 | H 2\n"
         "CX 2 3\n"
         "H 2 | H 6\n"
         "CX 1 2 | CX 6 11\n"
         "H 6 | H 1\n"
         "CX 6 11\n"
         "CX 2 6\n";
}

inline std::string circuit_two_right() {
  return std::string(kCircuitHeader12) +
         "H 2 | H 6\n"
         "CX 2 3 | CX 6 11\n"
         "H 1 | H 2 | H 6 | H 11\n"
         "CX 1 2 | CX 6 11\n"
         "CX 2 6\n";
}

inline const char* kCircuitHeader4 =
    "qubits 4\n"
    "tmax * 100\n"
    "tmin * 70\n"
    "tg 20\n"
    "tm 1\n";

// Measurements interleaved with the computation.
inline std::string circuit_three_left() {
  return std::string(kCircuitHeader4) +
         "H 0 | H 1\n"
         "M 3\n"
         "M 2\n"
         "CX 0 1\n"
         "M 1\n"
         "M 0\n";
}

// All measurements postponed to the end.
inline std::string circuit_three_right() {
  return std::string(kCircuitHeader4) +
         "H 0 | H 1\n"
         "CX 0 1\n"
         "M 3\n"
         "M 2\n"
         "M 1\n"
         "M 0\n";
}

inline quantum::Circuit circuit(const std::string& text) {
  quantum::Circuit c = quantum::parse_circuit(text);
  quantum::validate(c);
  return c;
}

using Weights = std::vector<std::pair<double, double>>;

inline Weights step_weights(const quantum::Translation& tr) {
  Weights out;
  for (const auto& s : tr.steps) out.emplace_back(s.weight.pos.value(), s.weight.neg.value());
  return out;
}

}  // namespace plts::fixtures

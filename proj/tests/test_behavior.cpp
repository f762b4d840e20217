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

#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "plts/behavior.hpp"
#include "plts/errors.hpp"
#include "properties.hpp"

namespace plts {
namespace {

using namespace fixtures;

WeightedTrace trace(std::vector<Label> labels, double pos, double neg) {
  return {std::move(labels), LatticeValue(pos), LatticeValue(neg)};
}

bool contains(const TraceSet& s, const WeightedTrace& t) {
  return std::any_of(s.begin(), s.end(), [&](const WeightedTrace& u) {
    return u.labels == t.labels && u.pos == t.pos && u.neg == t.neg;
  });
}

const StateRelation kWitness = {{"w1", "v1"}, {"w2", "v2"}, {"w3", "v2"}, {"w4", "v3"}, {"w5", "v4"}};

TEST_CASE("witnessing relation is a simulation") {
  const RelationReport r = is_simulation(kWitness, sim_left(), sim_right());
  CHECK(r.ok);
  CHECK(is_simulation({}, sim_left(), sim_right()).ok);
}

TEST_CASE("counterexample relation is not a simulation") {
  const RelationReport r = is_simulation({{"w1", "v1"}, {"w2", "v2"}}, trace_left(), trace_right());
  CHECK_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].p == "w2");
  CHECK(r.violations[0].move.label == "b");
  CHECK(r.violations[0].move.pos.value() == 0.7);
}

TEST_CASE("largest simulation") {
  const StateRelation s = largest_simulation(sim_left(), sim_right());
  CHECK(s.count({"w1", "v1"}));
  for (const auto& pair : kWitness) CHECK(s.count(pair));
  // Independent oracle: union of every simulation over the 5x4 pairs.
  CHECK(s == oracle::union_of_simulations(sim_left(), sim_right(), SimulationMode::Full));

  const Plts m = m1();
  const StateRelation self = largest_simulation(m, m);
  for (const auto& st : m.states()) CHECK(self.count({st, st}));

  CHECK_FALSE(largest_simulation(trace_left(), trace_right()).count({"w1", "v1"}));
}

TEST_CASE("similarity queries") {
  CHECK(similar("w1", "v1", sim_left(), sim_right()));
  CHECK(similar("w2", "w2", sim_left(), sim_left()));
  CHECK_FALSE(similar("w1", "v1", trace_left(), trace_right()));
  CHECK_THROWS_AS(similar("w9", "v1", sim_left(), sim_right()), DomainError);
  CHECK_THROWS_AS(similar("w1", "v1", sim_left(), m2()), DomainError);
}

TEST_CASE("simulation variants") {
  const Plts left = make({"p", "p2"}, {"a"}, {{"p", "a", "p2", 0.5, 0.5}});
  const Plts right = make({"q", "q2"}, {"a"}, {{"q", "a", "q2", 0.6, 0.7}});
  CHECK(similar("p", "q", left, right, SimulationMode::PositiveOnly));
  CHECK_FALSE(similar("p", "q", left, right, SimulationMode::NegativeOnly));
  CHECK_FALSE(similar("p", "q", left, right, SimulationMode::Full));
  for (auto mode : {SimulationMode::Full, SimulationMode::PositiveOnly, SimulationMode::NegativeOnly}) {
    CHECK(largest_simulation(left, right, mode) == oracle::union_of_simulations(left, right, mode));
  }
}

TEST_CASE("bisimulation example as drawn is not a bisimulation") {
  // w1 has an a-move weighted (0.5,0.3); v1's only a-move is (0.7,0.2), so
  // equal-weight matching cannot succeed whatever the relation.
  const StateRelation b = {{"w1", "v1"}, {"w2", "v2"}, {"w3", "v2"}};
  const RelationReport r = is_bisimulation(b, bisim_left(), bisim_right());
  CHECK_FALSE(r.ok);
  const bool names_a_move = std::any_of(r.violations.begin(), r.violations.end(), [](const auto& v) {
    return v.from_left && v.p == "w1" && v.move.label == "a" && v.move.pos.value() == 0.5;
  });
  CHECK(names_a_move);
  CHECK_FALSE(bisimilar("w1", "v1", bisim_left(), bisim_right()));
  CHECK_FALSE(oracle::exists_bisimulation_containing(bisim_left(), bisim_right(), 0, 0));
}

TEST_CASE("bisimulation example with matching weights") {
  // The same shape with w1's first a-move and w2's c-move given the weights
  // of their v-counterparts.
  const Plts left = make({"w1", "w2", "w3"}, {"a", "c"},
                         {{"w1", "a", "w2", 0.7, 0.2},
                          {"w1", "a", "w3", 0.7, 0.2},
                          {"w2", "c", "w3", 0.4, 0.5},
                          {"w3", "c", "w3", 0.4, 0.5},
                          {"w2", "c", "w2", 0.4, 0.5}});
  const StateRelation b = {{"w1", "v1"}, {"w2", "v2"}, {"w3", "v2"}};
  CHECK(is_bisimulation(b, left, bisim_right()).ok);
  CHECK(bisimilar("w1", "v1", left, bisim_right()));
  CHECK(largest_bisimulation(left, bisim_right()) == b);
}

TEST_CASE("bisimulation basics") {
  CHECK(is_bisimulation({}, bisim_left(), bisim_right()).ok);
  CHECK_FALSE(is_bisimulation({{"w1", "v1"}}, bisim_left(), bisim_right()).ok);
  const Plts m = m1();
  for (const auto& s : m.states()) CHECK(bisimilar(s, s, m, m));
  CHECK_FALSE(bisimilar("w1", "v1", sim_left(), sim_right()));
  // Exhaustive search over the 2^19 relations containing (w1, v1).
  CHECK_FALSE(oracle::exists_bisimulation_containing(sim_left(), sim_right(), 0, 0));
}

TEST_CASE("converse swaps pairs") {
  CHECK(converse({{"a", "x"}, {"b", "y"}}) == StateRelation{{"x", "a"}, {"y", "b"}});
}

TEST_CASE("weighted traces of the simulation example") {
  const TraceSet all = weighted_traces(sim_left(), "w1", 2);
  CHECK(all.size() == 4);
  CHECK(contains(all, trace({"a"}, 0.4, 0.7)));
  CHECK(contains(all, trace({"a"}, 0.3, 0.6)));
  CHECK(contains(all, trace({"a", "b"}, 0.2, 0.8)));
  CHECK(contains(all, trace({"a", "c"}, 0.2, 0.9)));

  const TraceSet maximal = weighted_traces(sim_left(), "w1", 2, TraceFilter::MaximalOnly);
  CHECK(maximal.size() == 2);
  CHECK(contains(maximal, trace({"a", "b"}, 0.2, 0.8)));
  CHECK(contains(maximal, trace({"a", "c"}, 0.2, 0.9)));

  // From v1: min(0.5, 0.3) = 0.3 on the b-path.
  const TraceSet right = weighted_traces(sim_right(), "v1", 2, TraceFilter::MaximalOnly);
  CHECK(contains(right, trace({"a", "b"}, 0.3, 0.5)));
  CHECK(contains(right, trace({"a", "c"}, 0.5, 0.5)));
  CHECK(trace_set_leq(maximal, right));
}

TEST_CASE("weighted traces of the counterexample") {
  const TraceSet x = weighted_traces(trace_left(), "w1", 2);
  const TraceSet y = weighted_traces(trace_right(), "v1", 2);
  CHECK(x.size() == 2);
  CHECK(contains(x, trace({"a"}, 0.5, 0.3)));
  CHECK(contains(x, trace({"a", "b"}, 0.5, 0.3)));
  CHECK(contains(y, trace({"a"}, 0.7, 0.2)));
  CHECK(contains(y, trace({"a", "b"}, 0.5, 0.3)));
  CHECK(trace_set_leq(x, y));
  CHECK_FALSE(trace_set_leq(y, x));
  CHECK(trace_set_leq({}, y));
}

TEST_CASE("trace enumeration edge cases") {
  const Plts one = make({"p", "q"}, {"a"}, {{"p", "a", "q", 0.3, 0.4}});
  const TraceSet s = weighted_traces(one, "p", 5);
  REQUIRE(s.size() == 1);
  CHECK(contains(s, trace({"a"}, 0.3, 0.4)));
  CHECK(weighted_traces(one, "q", 3).empty());
  CHECK_THROWS_AS(weighted_traces(one, "p", 0), DomainError);
  CHECK_THROWS_AS(weighted_traces(one, "z", 1), DomainError);

  // Cycles are cut at the depth bound; maximal traces are those at the bound.
  const TraceSet loop = weighted_traces(bisim_right(), "v1", 3, TraceFilter::MaximalOnly);
  REQUIRE(loop.size() == 1);
  CHECK(contains(loop, trace({"a", "c", "c"}, 0.4, 0.5)));
}

TEST_CASE("trace enumeration agrees with a breadth-first oracle") {
  gen::Rng rng(4242);
  for (int i = 0; i < 60; ++i) {
    const Plts t = gen::random_plts(rng);
    const StateId start = rng.pick(t.states());
    const int depth = rng.uniform(1, 4);
    const TraceSet lib = weighted_traces(t, start, depth);
    const auto ref = oracle::traces(t, start, depth);
    for (const auto& r : ref) CHECK(contains(lib, trace(r.labels, r.pos, r.neg)));
    for (const auto& l : lib) {
      const bool found = std::any_of(ref.begin(), ref.end(), [&](const oracle::Trace& r) {
        return r.labels == l.labels && approx_equal(r.pos, l.pos.value()) &&
               approx_equal(r.neg, l.neg.value());
      });
      CHECK(found);
    }
  }
}

TEST_CASE("weighted subtrace") {
  CHECK(is_weighted_subtrace(trace({"a", "b"}, 0.2, 0.8), trace({"a", "b"}, 0.5, 0.5)));
  const WeightedTrace t = trace({"a"}, 0.4, 0.4);
  CHECK(is_weighted_subtrace(t, t));
  CHECK_FALSE(is_weighted_subtrace(trace({"a", "b"}, 0.5, 0.5), trace({"a"}, 0.7, 0.2)));
  CHECK(is_weighted_subtrace(trace({}, 0.0, 1.0), trace({"b"}, 0.0, 1.0)));
  CHECK(to_string(trace({"a", "b"}, 0.2, 0.8)) == "<[a,b],0.2,0.8>");
}

TEST_CASE("behaviour property suites") {
  for (auto p : {props::simulation_implies_trace_inclusion,
                 props::bisimulation_implies_trace_equality,
                 props::largest_simulation_matches_brute_force, props::simulation_preorder,
                 props::bisimulation_equivalence, props::bisimulation_is_two_way_simulation,
                 props::subtrace_preorder}) {
    const props::Outcome o = p(props::kInstances);
    INFO(o.name << ": " << o.first_failure << " (vacuous " << o.vacuous << ")");
    CHECK(o.instances >= 200);
    CHECK(o.ok());
  }
}

}  // namespace
}  // namespace plts

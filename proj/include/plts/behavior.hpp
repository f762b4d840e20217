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

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plts/lattice.hpp"
#include "plts/plts.hpp"

namespace plts {

/// Pairs (state of T1, state of T2).
using StateRelation = std::set<std::pair<StateId, StateId>>;

/// Which weight conditions a simulating move must meet: Full requires a
/// no-lower positive and a no-higher negative weight, PositiveOnly and
/// NegativeOnly check one side.
enum class SimulationMode { Full, PositiveOnly, NegativeOnly };

struct UnmatchedMove {
  StateId p;
  StateId q;
  /// The move left unanswered. `from_left` tells whether it belongs to T1
  /// (leaving p) or to T2 (leaving q, bisimulation only).
  Transition move;
  bool from_left = true;
};

struct RelationReport {
  bool ok = true;
  std::vector<UnmatchedMove> violations;
  explicit operator bool() const { return ok; }
};

RelationReport is_simulation(const StateRelation& s, const Plts& t1, const Plts& t2,
                             SimulationMode mode = SimulationMode::Full);

/// Greatest simulation, obtained by deleting violating pairs from W1 x W2
/// until nothing changes.
StateRelation largest_simulation(const Plts& t1, const Plts& t2,
                                 SimulationMode mode = SimulationMode::Full);

bool similar(const StateId& p, const StateId& q, const Plts& t1, const Plts& t2,
             SimulationMode mode = SimulationMode::Full);

/// Every move on either side must be answered with the same label and the
/// same weights (within tolerance), landing in related states.
RelationReport is_bisimulation(const StateRelation& b, const Plts& t1, const Plts& t2);

StateRelation largest_bisimulation(const Plts& t1, const Plts& t2);

bool bisimilar(const StateId& p, const StateId& q, const Plts& t1, const Plts& t2);

StateRelation converse(const StateRelation& r);

// ---------------------------------------------------------------------------
// Weighted traces.

/// Label sequence of a path with the meet of its positive weights and the
/// join of its negative weights.
struct WeightedTrace {
  std::vector<Label> labels;
  LatticeValue pos = LatticeValue::top();
  LatticeValue neg = LatticeValue::bottom();
};

/// Exact lexicographic order (labels, pos, neg); used for deduplication.
struct TraceOrder {
  bool operator()(const WeightedTrace& a, const WeightedTrace& b) const;
};

using TraceSet = std::set<WeightedTrace, TraceOrder>;

enum class TraceFilter {
  All,
  /// Only paths that end in a state without outgoing moves, or that reach
  /// the depth bound.
  MaximalOnly,
};

/// Weighted traces of every path of length 1..depth leaving `start`.
TraceSet weighted_traces(const Plts& t, const StateId& start, int depth,
                         TraceFilter filter = TraceFilter::All,
                         const ResiduatedLattice& lattice = godel());

/// t's labels are a prefix of t2's, t2.pos >= t.pos and t2.neg <= t.neg.
bool is_weighted_subtrace(const WeightedTrace& t, const WeightedTrace& t2);

/// Every trace of x is a weighted subtrace of some trace of y.
bool trace_set_leq(const TraceSet& x, const TraceSet& y);

/// Same label sequences with weights equal within tolerance, both ways.
bool trace_sets_equal(const TraceSet& x, const TraceSet& y);

std::string to_string(const WeightedTrace& t);

}  // namespace plts

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

#include "plts/behavior.hpp"

#include <algorithm>
#include <functional>

#include "plts/format.hpp"

namespace plts {

namespace {

void require_shared_alphabet(const Plts& t1, const Plts& t2) {
  const std::set<Label> a(t1.labels().begin(), t1.labels().end());
  const std::set<Label> b(t2.labels().begin(), t2.labels().end());
  if (a != b) throw DomainError("behavioural comparison requires a shared alphabet");
}

void require_declared(const StateRelation& r, const Plts& t1, const Plts& t2) {
  for (const auto& [p, q] : r) {
    if (!t1.has_state(p)) throw DomainError("relation mentions unknown left state '" + p + "'");
    if (!t2.has_state(q)) throw DomainError("relation mentions unknown right state '" + q + "'");
  }
}

bool dominates(const Transition& answer, const Transition& move, SimulationMode mode) {
  const bool pos_ok = answer.pos >= move.pos;
  const bool neg_ok = answer.neg <= move.neg;
  switch (mode) {
    case SimulationMode::Full:
      return pos_ok && neg_ok;
    case SimulationMode::PositiveOnly:
      return pos_ok;
    case SimulationMode::NegativeOnly:
      return neg_ok;
  }
  return false;
}

bool same_weights(const Transition& a, const Transition& b) {
  return a.pos == b.pos && a.neg == b.neg;
}

/// Dense relation over W1 x W2, indexed by state positions.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, bool init)
      : cols_(cols), cells_(rows * cols, init) {}
  bool get(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * cols_ + j] = v; }

 private:
  std::size_t cols_;
  std::vector<bool> cells_;
};

// Does some move of `answerer` out of q answer `move` under `accept`,
// landing in a pair that `related` holds?
template <class Accept, class Related>
bool answered(const Plts& answerer, const StateId& q, const Transition& move,
              Accept accept, Related related) {
  for (std::size_t idx : answerer.outgoing(q)) {
    const Transition& a = answerer.transitions()[idx];
    if (a.label == move.label && accept(a) && related(move.to, a.to)) return true;
  }
  return false;
}

StateRelation to_relation(const Matrix& m, const Plts& t1, const Plts& t2) {
  StateRelation out;
  for (std::size_t i = 0; i < t1.states().size(); ++i) {
    for (std::size_t j = 0; j < t2.states().size(); ++j) {
      if (m.get(i, j)) out.emplace(t1.states()[i], t2.states()[j]);
    }
  }
  return out;
}

// Greatest fixpoint by pair deletion. `stable(i, j, holds)` decides whether
// pair (i, j) survives against the current relation.
template <class Stable>
Matrix refine(const Plts& t1, const Plts& t2, Stable stable) {
  const std::size_t n1 = t1.states().size();
  const std::size_t n2 = t2.states().size();
  Matrix rel(n1, n2, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n2; ++j) {
        if (rel.get(i, j) && !stable(i, j, rel)) {
          rel.set(i, j, false);
          changed = true;
        }
      }
    }
  }
  return rel;
}

}  // namespace

RelationReport is_simulation(const StateRelation& s, const Plts& t1, const Plts& t2,
                             SimulationMode mode) {
  require_shared_alphabet(t1, t2);
  require_declared(s, t1, t2);
  RelationReport report;
  auto related = [&s](const StateId& a, const StateId& b) { return s.count({a, b}) != 0; };
  for (const auto& [p, q] : s) {
    for (std::size_t idx : t1.outgoing(p)) {
      const Transition& move = t1.transitions()[idx];
      auto accept = [&](const Transition& a) { return dominates(a, move, mode); };
      if (!answered(t2, q, move, accept, related)) {
        report.violations.push_back({p, q, move, true});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

StateRelation largest_simulation(const Plts& t1, const Plts& t2, SimulationMode mode) {
  require_shared_alphabet(t1, t2);
  const Matrix rel = refine(t1, t2, [&](std::size_t i, std::size_t j, const Matrix& cur) {
    const StateId& p = t1.states()[i];
    const StateId& q = t2.states()[j];
    auto related = [&](const StateId& a, const StateId& b) {
      return cur.get(t1.state_index(a), t2.state_index(b));
    };
    for (std::size_t idx : t1.outgoing(p)) {
      const Transition& move = t1.transitions()[idx];
      auto accept = [&](const Transition& a) { return dominates(a, move, mode); };
      if (!answered(t2, q, move, accept, related)) return false;
    }
    return true;
  });
  return to_relation(rel, t1, t2);
}

bool similar(const StateId& p, const StateId& q, const Plts& t1, const Plts& t2,
             SimulationMode mode) {
  t1.state_index(p);
  t2.state_index(q);
  return largest_simulation(t1, t2, mode).count({p, q}) != 0;
}

RelationReport is_bisimulation(const StateRelation& b, const Plts& t1, const Plts& t2) {
  require_shared_alphabet(t1, t2);
  require_declared(b, t1, t2);
  RelationReport report;
  auto related = [&b](const StateId& x, const StateId& y) { return b.count({x, y}) != 0; };
  auto related_rev = [&b](const StateId& y, const StateId& x) { return b.count({x, y}) != 0; };
  for (const auto& [p, q] : b) {
    for (std::size_t idx : t1.outgoing(p)) {
      const Transition& move = t1.transitions()[idx];
      auto accept = [&](const Transition& a) { return same_weights(a, move); };
      if (!answered(t2, q, move, accept, related)) report.violations.push_back({p, q, move, true});
    }
    for (std::size_t idx : t2.outgoing(q)) {
      const Transition& move = t2.transitions()[idx];
      auto accept = [&](const Transition& a) { return same_weights(a, move); };
      if (!answered(t1, p, move, accept, related_rev)) {
        report.violations.push_back({p, q, move, false});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

StateRelation largest_bisimulation(const Plts& t1, const Plts& t2) {
  require_shared_alphabet(t1, t2);
  const Matrix rel = refine(t1, t2, [&](std::size_t i, std::size_t j, const Matrix& cur) {
    const StateId& p = t1.states()[i];
    const StateId& q = t2.states()[j];
    auto related = [&](const StateId& a, const StateId& b) {
      return cur.get(t1.state_index(a), t2.state_index(b));
    };
    auto related_rev = [&](const StateId& b, const StateId& a) {
      return cur.get(t1.state_index(a), t2.state_index(b));
    };
    for (std::size_t idx : t1.outgoing(p)) {
      const Transition& move = t1.transitions()[idx];
      auto accept = [&](const Transition& a) { return same_weights(a, move); };
      if (!answered(t2, q, move, accept, related)) return false;
    }
    for (std::size_t idx : t2.outgoing(q)) {
      const Transition& move = t2.transitions()[idx];
      auto accept = [&](const Transition& a) { return same_weights(a, move); };
      if (!answered(t1, p, move, accept, related_rev)) return false;
    }
    return true;
  });
  return to_relation(rel, t1, t2);
}

bool bisimilar(const StateId& p, const StateId& q, const Plts& t1, const Plts& t2) {
  t1.state_index(p);
  t2.state_index(q);
  return largest_bisimulation(t1, t2).count({p, q}) != 0;
}

StateRelation converse(const StateRelation& r) {
  StateRelation out;
  for (const auto& [a, b] : r) out.emplace(b, a);
  return out;
}

bool TraceOrder::operator()(const WeightedTrace& a, const WeightedTrace& b) const {
  if (a.labels != b.labels) return a.labels < b.labels;
  if (a.pos.value() != b.pos.value()) return a.pos.value() < b.pos.value();
  return a.neg.value() < b.neg.value();
}

TraceSet weighted_traces(const Plts& t, const StateId& start, int depth, TraceFilter filter,
                         const ResiduatedLattice& lattice) {
  t.state_index(start);
  if (depth < 1) throw DomainError("trace depth must be at least 1");

  TraceSet out;
  WeightedTrace current{{}, lattice.top(), lattice.bottom()};
  std::function<void(const StateId&)> walk = [&](const StateId& state) {
    for (std::size_t idx : t.outgoing(state)) {
      const Transition& e = t.transitions()[idx];
      const WeightedTrace saved = current;
      current.labels.push_back(e.label);
      current.pos = lattice.meet(current.pos, e.pos);
      current.neg = lattice.join(current.neg, e.neg);
      const bool at_bound = static_cast<int>(current.labels.size()) == depth;
      const bool stuck = t.outgoing(e.to).empty();
      if (filter == TraceFilter::All || at_bound || stuck) out.insert(current);
      if (!at_bound) walk(e.to);
      current = saved;
    }
  };
  walk(start);
  return out;
}

bool is_weighted_subtrace(const WeightedTrace& t, const WeightedTrace& t2) {
  if (t.labels.size() > t2.labels.size()) return false;
  if (!std::equal(t.labels.begin(), t.labels.end(), t2.labels.begin())) return false;
  return t2.pos >= t.pos && t2.neg <= t.neg;
}

bool trace_set_leq(const TraceSet& x, const TraceSet& y) {
  return std::all_of(x.begin(), x.end(), [&y](const WeightedTrace& t) {
    return std::any_of(y.begin(), y.end(),
                       [&t](const WeightedTrace& u) { return is_weighted_subtrace(t, u); });
  });
}

bool trace_sets_equal(const TraceSet& x, const TraceSet& y) {
  auto covered = [](const TraceSet& from, const TraceSet& in) {
    return std::all_of(from.begin(), from.end(), [&in](const WeightedTrace& t) {
      return std::any_of(in.begin(), in.end(), [&t](const WeightedTrace& u) {
        return t.labels == u.labels && t.pos == u.pos && t.neg == u.neg;
      });
    });
  };
  return covered(x, y) && covered(y, x);
}

std::string to_string(const WeightedTrace& t) {
  std::string s = "<[";
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (i) s += ",";
    s += t.labels[i];
  }
  s += "]," + format_weight(t.pos.value()) + "," + format_weight(t.neg.value()) + ">";
  return s;
}

}  // namespace plts

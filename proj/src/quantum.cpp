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

#include "plts/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace plts::quantum {

GateType GateType::hadamard() { return {"H", 1, DurationClass::Single, true, false, false}; }
GateType GateType::pauli_x() { return {"X", 1, DurationClass::Single, false, false, false}; }
GateType GateType::idle() { return {"I", 1, DurationClass::Single, false, true, false}; }
GateType GateType::cx() { return {"CX", 2, DurationClass::Two, false, false, false}; }
GateType GateType::measure() { return {"M", 1, DurationClass::Measure, false, false, true}; }

GateType GateType::custom(std::string name, int arity, DurationClass duration,
                          bool creates_superposition) {
  return {std::move(name), arity, duration, creates_superposition, false, false};
}

std::optional<GateType> GateType::builtin(std::string_view name) {
  if (name == "H") return hadamard();
  if (name == "X") return pauli_x();
  if (name == "I") return idle();
  if (name == "CX" || name == "CNOT") return cx();
  if (name == "M") return measure();
  return std::nullopt;
}

std::string GateFactor::label() const {
  std::string s = type.name + "_";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(qubits[i]);
  }
  return s;
}

std::string CircuitStep::label() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "⊗";
    s += factors[i].label();
  }
  return s;
}

bool CircuitStep::measurement_only() const {
  return !factors.empty() && std::all_of(factors.begin(), factors.end(), [](const GateFactor& f) {
    return f.type.measurement;
  });
}

double TimingConfig::duration(DurationClass c) const {
  switch (c) {
    case DurationClass::Single:
      return single_gate;
    case DurationClass::Two:
      return two_qubit_gate.value_or(2.0 * single_gate);
    case DurationClass::Measure:
      return measurement;
  }
  return single_gate;
}

void validate(const Circuit& c) {
  if (c.qubit_count <= 0) throw DomainError("circuit: qubit count must be positive");
  if (static_cast<int>(c.coherence.size()) != c.qubit_count) {
    throw DomainError("circuit: every qubit needs a coherence window (tmax and tmin)");
  }
  for (int q = 0; q < c.qubit_count; ++q) {
    const Coherence& w = c.coherence[static_cast<std::size_t>(q)];
    if (!(w.tau_min <= w.tau_max)) {
      throw DomainError("circuit: qubit " + std::to_string(q) + " has tau_min > tau_max");
    }
  }
  const TimingConfig& t = c.timing;
  for (double d : {t.duration(DurationClass::Single), t.duration(DurationClass::Two),
                   t.duration(DurationClass::Measure), t.decoherence_divisor}) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw DomainError("circuit: durations and the divisor must be positive");
    }
  }
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const std::string where = "circuit step " + std::to_string(k + 1) + ": ";
    const CircuitStep& step = c.steps[k];
    if (step.factors.empty()) throw DomainError(where + "a step needs at least one gate");
    std::set<int> used;
    for (const GateFactor& f : step.factors) {
      if (static_cast<int>(f.qubits.size()) != f.type.arity) {
        throw DomainError(where + f.type.name + " expects " + std::to_string(f.type.arity) +
                          " qubit(s)");
      }
      for (int q : f.qubits) {
        if (q < 0 || q >= c.qubit_count) {
          throw DomainError(where + "qubit " + std::to_string(q) + " out of range");
        }
        if (!used.insert(q).second) {
          throw DomainError(where + "qubit " + std::to_string(q) + " used by two gates");
        }
      }
    }
  }
}

double step_duration(const CircuitStep& step, const TimingConfig& timing) {
  double d = 0.0;
  for (const GateFactor& f : step.factors) d = std::max(d, timing.duration(f.type.duration));
  return d;
}

bool QubitTracker::superposed(int q) const {
  return clock_start_.at(static_cast<std::size_t>(q)).has_value();
}

double QubitTracker::clock_start(int q) const {
  const auto& start = clock_start_.at(static_cast<std::size_t>(q));
  if (!start) throw DomainError("qubit " + std::to_string(q) + " is not in superposition");
  return *start;
}

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double coherence_fraction(double tau, int q, double t_end, const QubitTracker& tracker,
                          const Circuit& c) {
  const double prep = t_end - tracker.clock_start(q);
  return clamp01((tau - prep) / c.timing.decoherence_divisor);
}

// Worst-case fold over the superposed qubits in `qubits`.
struct Worst {
  double pos = 1.0;
  double neg = 0.0;

  void add(int q, double t_end, const QubitTracker& tracker, const Circuit& c) {
    pos = std::min(pos, f_max(q, t_end, tracker, c));
    neg = std::max(neg, 1.0 - f_min(q, t_end, tracker, c));
  }
};

StepWeight example_consistent(const CircuitStep& step, double t_end,
                              const QubitTracker& tracker, const Circuit& c) {
  Worst w;
  bool touched_superposed = false;
  for (const GateFactor& f : step.factors) {
    for (int q : f.qubits) {
      if (tracker.superposed(q)) {
        w.add(q, t_end, tracker, c);
        touched_superposed = true;
      }
    }
  }
  // Measuring definite qubits still takes time during which every other
  // superposed qubit decoheres.
  if (!touched_superposed && step.measurement_only()) {
    for (int q = 0; q < tracker.qubit_count(); ++q) {
      if (tracker.superposed(q)) w.add(q, t_end, tracker, c);
    }
  }
  return {LatticeValue(clamp01(w.pos)), LatticeValue(clamp01(w.neg))};
}

StepWeight literal_formula(const CircuitStep& step, double t_end, const QubitTracker& tracker,
                           const Circuit& c) {
  // Only factors acting on a superposed qubit contribute.
  double pos = 0.0;
  double least_min = 1.0;
  bool contributed = false;
  for (const GateFactor& f : step.factors) {
    for (int q : f.qubits) {
      if (!tracker.superposed(q)) continue;
      pos = std::max(pos, f_max(q, t_end, tracker, c));
      least_min = std::min(least_min, f_min(q, t_end, tracker, c));
      contributed = true;
    }
  }
  if (!contributed) return {LatticeValue(1.0), LatticeValue(0.0)};
  return {LatticeValue(clamp01(pos)), LatticeValue(clamp01(1.0 - least_min))};
}

}  // namespace

double f_max(int q, double t_end, const QubitTracker& tracker, const Circuit& c) {
  return coherence_fraction(c.coherence.at(static_cast<std::size_t>(q)).tau_max, q, t_end,
                            tracker, c);
}

double f_min(int q, double t_end, const QubitTracker& tracker, const Circuit& c) {
  return coherence_fraction(c.coherence.at(static_cast<std::size_t>(q)).tau_min, q, t_end,
                            tracker, c);
}

StepWeight step_weight(const CircuitStep& step, double t_end, const QubitTracker& tracker,
                       const Circuit& c, WeightModel model) {
  switch (model) {
    case WeightModel::ExampleConsistent:
      return example_consistent(step, t_end, tracker, c);
    case WeightModel::LiteralFormula:
      return literal_formula(step, t_end, tracker, c);
  }
  return {};
}

QubitTracker advance_tracker(const CircuitStep& step, double t_end, QubitTracker tracker) {
  for (const GateFactor& f : step.factors) {
    if (f.type.identity) continue;
    for (int q : f.qubits) {
      if (tracker.superposed(q)) {
        if (f.type.measurement) {
          tracker.collapse(q);
        } else {
          tracker.prepare(q, t_end);
        }
      } else if (f.type.creates_superposition) {
        tracker.prepare(q, t_end);
      }
    }
  }
  return tracker;
}

Translation translate(const Circuit& c, WeightModel model) {
  validate(c);
  auto state = [](std::size_t k) { return "s" + std::to_string(k + 1); };
  Plts chain;
  for (std::size_t k = 0; k <= c.steps.size(); ++k) chain.add_state(state(k));
  std::vector<StepRecord> records;
  QubitTracker tracker(c.qubit_count);
  double t = 0.0;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const CircuitStep& step = c.steps[k];
    t += step_duration(step, c.timing);
    const StepWeight w = step_weight(step, t, tracker, c, model);
    tracker = advance_tracker(step, t, std::move(tracker));
    const std::string label = step.label();
    chain.add_label(label);
    chain.add_transition({state(k), label, state(k + 1), w.pos, w.neg});
    records.push_back({label, t, w});
  }
  return {PointedPlts(std::move(chain), state(0)), std::move(records)};
}

PointedPlts circuit_to_plts(const Circuit& c, WeightModel model) {
  return translate(c, model).system;
}

WeightedTrace maximal_weighted_trace(const PointedPlts& t) {
  const Plts& sys = t.system();
  for (const auto& s : sys.states()) {
    if (sys.outgoing(s).size() > 1) {
      throw DomainError("not a chain: state '" + s + "' has several outgoing moves");
    }
  }
  std::map<Label, Label> to_star;
  for (const auto& l : sys.labels()) to_star.emplace(l, kStarLabel);
  const PointedPlts starred = relabel(t, to_star);
  const Plts& chain = starred.system();

  WeightedTrace trace;
  std::set<StateId> visited{starred.initial()};
  StateId cur = starred.initial();
  while (!chain.outgoing(cur).empty()) {
    const Transition& e = chain.transitions()[chain.outgoing(cur).front()];
    trace.labels.push_back(e.label);
    trace.pos = godel_meet(trace.pos, e.pos);
    trace.neg = godel_join(trace.neg, e.neg);
    if (!visited.insert(e.to).second) {
      throw DomainError("not a chain: cycle through state '" + e.to + "'");
    }
    cur = e.to;
  }
  return trace;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::FirstMoreEffective:
      return "first more effective";
    case Verdict::SecondMoreEffective:
      return "second more effective";
    case Verdict::Equal:
      return "equal";
    case Verdict::Incomparable:
      return "incomparable";
  }
  return "?";
}

Effectiveness compare_traces(const WeightedTrace& first, const WeightedTrace& second) {
  Effectiveness out{Verdict::Incomparable, first, second};
  if (first.pos == second.pos && first.neg == second.neg) {
    out.verdict = Verdict::Equal;
  } else if (second.pos >= first.pos && second.neg <= first.neg) {
    out.verdict = Verdict::SecondMoreEffective;
  } else if (first.pos >= second.pos && first.neg <= second.neg) {
    out.verdict = Verdict::FirstMoreEffective;
  }
  return out;
}

Effectiveness compare_effectiveness(const Circuit& c1, const Circuit& c2, WeightModel model) {
  return compare_traces(maximal_weighted_trace(circuit_to_plts(c1, model)),
                        maximal_weighted_trace(circuit_to_plts(c2, model)));
}

}  // namespace plts::quantum

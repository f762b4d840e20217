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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plts/algebra.hpp"
#include "plts/behavior.hpp"

// Timed gate circuits with qubit decoherence, translated into chains of
// weighted transitions. All times are in microseconds.
namespace plts::quantum {

enum class DurationClass { Single, Two, Measure };

/// What a gate does to the decoherence bookkeeping.
struct GateType {
  std::string name;
  int arity = 1;
  DurationClass duration = DurationClass::Single;
  bool creates_superposition = false;
  bool identity = false;
  bool measurement = false;

  static GateType hadamard();
  static GateType pauli_x();
  static GateType idle();
  static GateType cx();
  static GateType measure();
  static GateType custom(std::string name, int arity, DurationClass duration,
                         bool creates_superposition);

  /// Built-in gate by name (H, X, I, CX or CNOT, M).
  static std::optional<GateType> builtin(std::string_view name);
};

struct GateFactor {
  GateType type;
  std::vector<int> qubits;

  /// "H_0", "CX_2,3".
  std::string label() const;
};

struct CircuitStep {
  std::vector<GateFactor> factors;

  /// Factor labels joined by "⊗".
  std::string label() const;
  bool measurement_only() const;
};

struct TimingConfig {
  double single_gate = 20.0;
  /// Twice single_gate when unset.
  std::optional<double> two_qubit_gate;
  double measurement = 1.0;
  double decoherence_divisor = 100.0;

  double duration(DurationClass c) const;
};

struct Coherence {
  double tau_max = 0.0;
  double tau_min = 0.0;
};

struct Circuit {
  int qubit_count = 0;
  std::vector<CircuitStep> steps;
  TimingConfig timing;
  /// One entry per qubit.
  std::vector<Coherence> coherence;
};

/// Throws DomainError naming the first broken invariant: positive qubit
/// count, one coherence window per qubit with tau_min <= tau_max, positive
/// durations, non-empty steps, arity-matching factors over distinct
/// in-range qubits, and no qubit shared by two factors of a step.
void validate(const Circuit& c);

double step_duration(const CircuitStep& step, const TimingConfig& timing);

/// Per-qubit superposition state: a qubit is superposed iff it has a clock
/// start, the time its current coherence window began.
class QubitTracker {
 public:
  explicit QubitTracker(int qubit_count) : clock_start_(static_cast<std::size_t>(qubit_count)) {}

  bool superposed(int q) const;
  double clock_start(int q) const;
  void prepare(int q, double t) { clock_start_.at(static_cast<std::size_t>(q)) = t; }
  void collapse(int q) { clock_start_.at(static_cast<std::size_t>(q)).reset(); }
  int qubit_count() const { return static_cast<int>(clock_start_.size()); }

 private:
  std::vector<std::optional<double>> clock_start_;
};

enum class WeightModel {
  /// Worst case over the qubits a step touches; reproduces the worked
  /// circuit examples.
  ExampleConsistent,
  /// Max over gates for the positive weight, one minus the min over gates
  /// for the negative weight.
  LiteralFormula,
};

/// clamp((tau_max(q) - tau_prep) / divisor) with tau_prep = t_end minus the
/// clock start of q. Throws DomainError if q is not superposed.
double f_max(int q, double t_end, const QubitTracker& tracker, const Circuit& c);
double f_min(int q, double t_end, const QubitTracker& tracker, const Circuit& c);

struct StepWeight {
  LatticeValue pos;
  LatticeValue neg;
};

/// Weights of `step` finishing at `t_end`, given the tracker state before
/// the step.
StepWeight step_weight(const CircuitStep& step, double t_end, const QubitTracker& tracker,
                       const Circuit& c, WeightModel model = WeightModel::ExampleConsistent);

/// Tracker after `step`: superposing gates prepare definite qubits, every
/// non-identity gate restarts the clock of the superposed qubits it
/// touches, and measurements collapse them.
QubitTracker advance_tracker(const CircuitStep& step, double t_end, QubitTracker tracker);

struct StepRecord {
  std::string label;
  double t_end = 0.0;
  StepWeight weight;
};

struct Translation {
  PointedPlts system;
  std::vector<StepRecord> steps;
};

/// Chain s1 -> s2 -> ... with one move per step.
Translation translate(const Circuit& c, WeightModel model = WeightModel::ExampleConsistent);
PointedPlts circuit_to_plts(const Circuit& c, WeightModel model = WeightModel::ExampleConsistent);

/// Label every maximal trace uses after relabelling.
inline const Label kStarLabel = "*";

/// Weighted trace of the whole chain from the initial state, every label
/// renamed to kStarLabel. Throws DomainError unless the system is a chain
/// (at most one move per state, no cycle reachable from the initial state).
WeightedTrace maximal_weighted_trace(const PointedPlts& t);

enum class Verdict { FirstMoreEffective, SecondMoreEffective, Equal, Incomparable };

std::string_view to_string(Verdict v);

struct Effectiveness {
  Verdict verdict = Verdict::Incomparable;
  WeightedTrace first;
  WeightedTrace second;
};

/// A trace is more effective when it dominates: no lower positive and no
/// higher negative weight, one of them strictly. Sequence length is ignored.
Effectiveness compare_traces(const WeightedTrace& first, const WeightedTrace& second);
Effectiveness compare_effectiveness(const Circuit& c1, const Circuit& c2,
                                    WeightModel model = WeightModel::ExampleConsistent);

// ---------------------------------------------------------------------------
// Text format.
//
//   # comment
//   qubits 2
//   tmax * 100        (or: tmax <qubit> <value>)
//   tmin * 70
//   tg 20             single-qubit gate duration
//   t2g 40            two-qubit gate duration (default 2 * tg)
//   tm 1              measurement duration
//   divisor 100
//   gate U2 2 two keep    custom gate: name arity single|two|measure superpose|keep
//   H 0 | I 1
//   CX 0 1
//   M 3
//
// Directives must precede the first step.

/// Throws ParseError with line and column on malformed text. The result is
/// not validated; call validate().
Circuit parse_circuit(std::string_view text);

/// Text that parse_circuit reads back into an equal circuit.
std::string format_circuit(const Circuit& c);

}  // namespace plts::quantum

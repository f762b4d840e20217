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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "plts/lattice.hpp"

namespace plts {

using StateId = std::string;
using Label = std::string;

/// Reserved label of idle transitions. Never declared by users.
inline const Label kIdleLabel = "⊥";

/// A weighted transition (from, label, to, pos, neg): pos is the evidence
/// that the move happens, neg the evidence that it is prevented.
struct Transition {
  StateId from;
  Label label;
  StateId to;
  LatticeValue pos;
  LatticeValue neg;
};

/// Finite paraconsistent labelled transition system <W, R, Pi>.
///
/// The mutators enforce every structural invariant, so a Plts obtained
/// through them is always well formed (except for an empty state set,
/// which only `validate` and `from_raw` reject). States, labels and
/// transitions keep their insertion order, which makes every derived
/// output deterministic.
class Plts {
 public:
  Plts() = default;

  /// Declares a state; returns false if it already existed.
  bool add_state(const StateId& id);
  /// Declares a label; returns false if it already existed. Throws on the
  /// reserved idle label or an empty name.
  bool add_label(const Label& label);
  /// Adds a transition. Throws DomainError on undeclared endpoints or label,
  /// or when a transition with the same (from, label, to) already exists.
  void add_transition(Transition t);
  /// Adds a transition or merges it into an existing one with the same
  /// key, keeping the join of positive and the meet of negative weights.
  void merge_transition(Transition t);

  const std::vector<StateId>& states() const { return states_; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  bool has_state(std::string_view id) const;
  bool has_label(std::string_view label) const;
  std::size_t state_index(std::string_view id) const;

  /// Transition with the given key, or nullptr.
  const Transition* find(std::string_view from, std::string_view label,
                         std::string_view to) const;
  /// Indices into transitions() of the edges leaving `state`.
  const std::vector<std::size_t>& outgoing(std::string_view state) const;

  bool operator==(const Plts& other) const;

 private:
  using Key = std::tuple<std::string, std::string, std::string>;

  std::vector<StateId> states_;
  std::vector<Label> labels_;
  std::vector<Transition> transitions_;
  std::unordered_map<std::string, std::size_t> state_index_;
  std::unordered_map<std::string, std::size_t> label_index_;
  std::map<Key, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Positive accessibility r+(label)(from, to): weight of the matching
/// transition, 0 when absent. Throws on undeclared state or label.
LatticeValue r_plus(const Plts& t, std::string_view label, std::string_view from,
                    std::string_view to);
/// Negative accessibility r-(label)(from, to), 0 when absent.
LatticeValue r_minus(const Plts& t, std::string_view label, std::string_view from,
                     std::string_view to);

enum class TransitionClass { Inconsistent, Vague, Consistent };

TransitionClass classify(LatticeValue pos, LatticeValue neg);
std::string_view to_string(TransitionClass c);

// ---------------------------------------------------------------------------
// Unvalidated documents and invariant checking.

struct RawTransition {
  std::string from;
  std::string label;
  std::string to;
  double pos = 0.0;
  double neg = 0.0;
};

/// Exactly what a serialized system contains, before any checking.
struct RawPlts {
  std::vector<std::string> states;
  std::vector<std::string> labels;
  std::optional<std::string> initial;
  std::vector<RawTransition> transitions;
};

struct Violation {
  /// One of: "uniqueness", "weight range", "undeclared state",
  /// "undeclared label", "reserved label", "empty label", "duplicate state",
  /// "duplicate label", "empty state set", "initial".
  std::string kind;
  std::string detail;
};

std::vector<Violation> validate(const RawPlts& raw);
std::vector<Violation> validate(const Plts& t);

/// Builds a Plts, throwing DomainError that lists every violation.
Plts from_raw(const RawPlts& raw);
RawPlts to_raw(const Plts& t);

// ---------------------------------------------------------------------------
// Morphisms over a shared alphabet.

using StateMap = std::map<StateId, StateId>;

struct MorphismViolation {
  Label label;
  StateId from;
  StateId to;
  /// "positive" when r1+ > r2+ at the image, "negative" when r1- < r2-.
  std::string kind;
  double source_weight = 0.0;
  double image_weight = 0.0;
};

struct MorphismReport {
  bool ok = true;
  std::vector<MorphismViolation> violations;
  explicit operator bool() const { return ok; }
};

/// Checks r1+(a)(w,w') <= r2+(a)(hw,hw') and r1-(a)(w,w') >= r2-(a)(hw,hw')
/// for every label a and every pair of states (w,w'), including pairs
/// with no transition (whose weights are 0). Throws DomainError if the
/// alphabets differ or `h` is not a total map into T2's states.
MorphismReport is_morphism(const StateMap& h, const Plts& t1, const Plts& t2);

StateMap compose(const StateMap& first, const StateMap& second);

}  // namespace plts

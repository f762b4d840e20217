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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plts/plts.hpp"

namespace plts {

/// A PLTS with a distinguished initial state.
class PointedPlts {
 public:
  /// Throws DomainError unless `initial` is a state of `system`.
  PointedPlts(Plts system, StateId initial);

  const Plts& system() const { return system_; }
  const StateId& initial() const { return initial_; }

  bool operator==(const PointedPlts& other) const = default;

 private:
  Plts system_;
  StateId initial_;
};

/// The one-state, edgeless, label-free system; initial and final in the
/// category of pointed systems.
PointedPlts nil_system();

/// Arrow between pointed systems: a total state map and a partial label
/// map. Labels absent from `lambda` (or mapped to kIdleLabel) are
/// undefined, and their moves must be matched by idle loops.
struct PointedMorphism {
  StateMap sigma;
  std::map<Label, Label> lambda;

  /// Image of `label`, or kIdleLabel where undefined.
  const Label& apply(const Label& label) const;
};

struct PointedMorphismReport {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

/// Checks sigma(i1) = i2 and that every move (w,a,w',alpha,beta) of T1 has
/// an image (sigma w, lambda a, sigma w', alpha', beta') in T2 or among its
/// idle loops (w,bot,w,1,0), with alpha <= alpha' and beta' <= beta.
PointedMorphismReport is_pointed_morphism(const PointedMorphism& m, const PointedPlts& t1,
                                          const PointedPlts& t2);

/// g after f.
PointedMorphism compose(const PointedMorphism& f, const PointedMorphism& g);

PointedMorphism identity_morphism(const PointedPlts& t);

// ---------------------------------------------------------------------------
// Interface operators.

/// Keeps only moves whose label is in `keep`; the alphabet becomes `keep`.
/// Throws DomainError unless keep is a subset of the alphabet.
PointedPlts restrict(const PointedPlts& t, const std::set<Label>& keep);

/// States reachable from the initial state and the moves among them.
PointedPlts reachable_part(const PointedPlts& t);

/// Renames every label through the total map `lam`. Moves that collide on
/// one (from, label, to) key merge into a single move carrying the join of
/// the positive and the meet of the negative weights. The new alphabet is
/// `alphabet` when given (it must contain the image of `lam`), otherwise
/// the image of `lam` in declaration order.
PointedPlts relabel(const PointedPlts& t, const std::map<Label, Label>& lam,
                    const std::optional<std::vector<Label>>& alphabet = std::nullopt);

// ---------------------------------------------------------------------------
// Products and sums.

/// Element of Pi1 x_bot Pi2; at most one side is undefined.
struct ProductLabel {
  std::optional<Label> left;
  std::optional<Label> right;

  /// "(a,⊥)", "(⊥,b)" or "(a,b)".
  Label name() const;
};

/// "(w,v)", the state naming used by products and sums.
StateId pair_state(const StateId& left, const StateId& right);

/// Parallel composition. States W1 x W2; moves pair a move or idle loop of
/// each side (never two idle loops), with pos = min and neg = max.
PointedPlts product(const PointedPlts& t1, const PointedPlts& t2);
/// Product restricted to (a,⊥) and (⊥,b) labels.
PointedPlts interleave(const PointedPlts& t1, const PointedPlts& t2);
/// Product restricted to (a,b) labels.
PointedPlts sync_product(const PointedPlts& t1, const PointedPlts& t2);

enum class Side { Left, Right };

/// Projection from product(t1, t2) onto one component.
PointedMorphism product_projection(const PointedPlts& t1, const PointedPlts& t2, Side side);

/// Mediating arrow <g1, g2> into product(t1, t2) for g1 : T -> t1 and
/// g2 : T -> t2.
PointedMorphism pairing(const PointedMorphism& g1, const PointedMorphism& g2);

/// Non-deterministic choice: both systems glued at their initial states,
/// states (W1 x {i2}) u ({i1} x W2), alphabet Pi1 u Pi2. Loops on both
/// initial states with one label collide and merge like `relabel`.
PointedPlts sum(const PointedPlts& t1, const PointedPlts& t2);

PointedMorphism sum_injection(const PointedPlts& t1, const PointedPlts& t2, Side side);

/// Copairing [f1, f2] out of sum(t1, t2). Throws DomainError when f1 and f2
/// disagree on a label shared by both alphabets.
PointedMorphism copairing(const PointedMorphism& f1, const PointedMorphism& f2,
                          const PointedPlts& t1, const PointedPlts& t2);

// ---------------------------------------------------------------------------
// Prefix and weight operators.

/// Fresh initial state (named "new0", "new1", ... avoiding clashes) with
/// one move (label, pos, neg) into the old initial state.
PointedPlts prefix(const Label& label, LatticeValue pos, LatticeValue neg,
                   const PointedPlts& t);

enum class ApproxTarget { Positive, Negative, Both };

/// Shifts the selected weights of every move by v in [-1,1] with
/// bounded_add. Throws DomainError for v outside [-1,1].
PointedPlts v_approx(const PointedPlts& t, double v, ApproxTarget target);

/// Keeps exactly the moves with pos >= p and neg <= n.
PointedPlts purge(const PointedPlts& t, LatticeValue p, LatticeValue n);

}  // namespace plts

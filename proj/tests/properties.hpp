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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace plts::props {

/// Result of running one property over many seeded instances. `vacuous`
/// counts instances where the premise did not hold.
struct Outcome {
  std::string name;
  int instances = 0;
  int vacuous = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > vacuous; }
};

inline constexpr int kInstances = 250;
inline constexpr std::uint64_t kSeed = 20260418;

// Lattice.
Outcome residuation_law(int n = kInstances);
Outcome meet_join_laws(int n = kInstances);
Outcome bounded_add_range(int n = kInstances);
Outcome classify_partition(int n = kInstances);

// Unpointed morphisms.
Outcome morphism_composition(int n = kInstances);
Outcome identity_morphism(int n = kInstances);

// Pointed morphisms and operators.
Outcome product_projections(int n = kInstances);
Outcome sum_injections(int n = kInstances);
Outcome restriction_embedding(int n = kInstances);
Outcome relabel_unit(int n = kInstances);
Outcome product_mediating(int n = kInstances);
Outcome sum_copairing(int n = kInstances);
Outcome pointed_composition(int n = kInstances);
Outcome purge_and_approx_identity(int n = kInstances);
Outcome weight_operators_preserve_morphisms(int n = kInstances);
Outcome interleave_sync_partition(int n = kInstances);
Outcome interleave_edge_count(int n = kInstances);
Outcome sum_state_count(int n = kInstances);

// Behaviour.
Outcome simulation_implies_trace_inclusion(int n = kInstances);
Outcome bisimulation_implies_trace_equality(int n = kInstances);
Outcome largest_simulation_matches_brute_force(int n = kInstances);
Outcome simulation_preorder(int n = kInstances);
Outcome bisimulation_equivalence(int n = kInstances);
Outcome bisimulation_is_two_way_simulation(int n = kInstances);
Outcome subtrace_preorder(int n = kInstances);

// Quantum and persistence.
Outcome quantum_idle_monotonicity(int n = kInstances);
Outcome quantum_weights_in_range(int n = kInstances);
Outcome chain_trace_is_maximal(int n = kInstances);
Outcome json_round_trip(int n = kInstances);
Outcome circuit_text_round_trip(int n = kInstances);

/// The seven property groups the acceptance suite names, in order.
struct Group {
  std::string name;
  std::vector<std::function<Outcome()>> members;
};
std::vector<Group> acceptance_groups();

}  // namespace plts::props

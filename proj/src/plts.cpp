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

#include "plts/plts.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace plts {

namespace {

std::string edge_name(std::string_view from, std::string_view label,
                      std::string_view to) {
  std::string s;
  s.append("(").append(from).append(",").append(label).append(",").append(to).append(")");
  return s;
}

}  // namespace

bool Plts::add_state(const StateId& id) {
  if (state_index_.count(id)) return false;
  state_index_.emplace(id, states_.size());
  states_.push_back(id);
  out_.emplace_back();
  return true;
}

bool Plts::add_label(const Label& label) {
  if (label.empty()) throw DomainError("labels must be non-empty");
  if (label == kIdleLabel) {
    throw DomainError("the idle label " + kIdleLabel + " is reserved");
  }
  if (label_index_.count(label)) return false;
  label_index_.emplace(label, labels_.size());
  labels_.push_back(label);
  return true;
}

void Plts::add_transition(Transition t) {
  if (!has_state(t.from)) throw DomainError("undeclared state '" + t.from + "'");
  if (!has_state(t.to)) throw DomainError("undeclared state '" + t.to + "'");
  if (!has_label(t.label)) throw DomainError("undeclared label '" + t.label + "'");
  Key key{t.from, t.label, t.to};
  if (edge_index_.count(key)) {
    throw DomainError("uniqueness: duplicate transition " +
                      edge_name(t.from, t.label, t.to));
  }
  const std::size_t idx = transitions_.size();
  edge_index_.emplace(std::move(key), idx);
  out_[state_index(t.from)].push_back(idx);
  transitions_.push_back(std::move(t));
}

void Plts::merge_transition(Transition t) {
  auto it = edge_index_.find(Key{t.from, t.label, t.to});
  if (it == edge_index_.end()) {
    add_transition(std::move(t));
    return;
  }
  Transition& existing = transitions_[it->second];
  existing.pos = godel_join(existing.pos, t.pos);
  existing.neg = godel_meet(existing.neg, t.neg);
}

bool Plts::has_state(std::string_view id) const {
  return state_index_.count(std::string(id)) != 0;
}

bool Plts::has_label(std::string_view label) const {
  return label_index_.count(std::string(label)) != 0;
}

std::size_t Plts::state_index(std::string_view id) const {
  auto it = state_index_.find(std::string(id));
  if (it == state_index_.end()) {
    throw DomainError("unknown state '" + std::string(id) + "'");
  }
  return it->second;
}

const Transition* Plts::find(std::string_view from, std::string_view label,
                             std::string_view to) const {
  auto it = edge_index_.find(Key{std::string(from), std::string(label), std::string(to)});
  return it == edge_index_.end() ? nullptr : &transitions_[it->second];
}

const std::vector<std::size_t>& Plts::outgoing(std::string_view state) const {
  return out_[state_index(state)];
}

bool Plts::operator==(const Plts& other) const {
  if (states_ != other.states_ || labels_ != other.labels_ ||
      transitions_.size() != other.transitions_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const Transition& a = transitions_[i];
    const Transition& b = other.transitions_[i];
    if (a.from != b.from || a.label != b.label || a.to != b.to ||
        a.pos.value() != b.pos.value() || a.neg.value() != b.neg.value()) {
      return false;
    }
  }
  return true;
}

namespace {

void check_query(const Plts& t, std::string_view label, std::string_view from,
                 std::string_view to) {
  if (!t.has_label(label)) {
    throw DomainError("unknown label '" + std::string(label) + "'");
  }
  t.state_index(from);
  t.state_index(to);
}

}  // namespace

LatticeValue r_plus(const Plts& t, std::string_view label, std::string_view from,
                    std::string_view to) {
  check_query(t, label, from, to);
  const Transition* e = t.find(from, label, to);
  return e ? e->pos : LatticeValue::bottom();
}

LatticeValue r_minus(const Plts& t, std::string_view label, std::string_view from,
                     std::string_view to) {
  check_query(t, label, from, to);
  const Transition* e = t.find(from, label, to);
  return e ? e->neg : LatticeValue::bottom();
}

TransitionClass classify(LatticeValue pos, LatticeValue neg) {
  const double sum = pos.value() + neg.value();
  if (sum > 1.0 + tolerance()) return TransitionClass::Inconsistent;
  if (sum < 1.0 - tolerance()) return TransitionClass::Vague;
  return TransitionClass::Consistent;
}

std::string_view to_string(TransitionClass c) {
  switch (c) {
    case TransitionClass::Inconsistent:
      return "inconsistent";
    case TransitionClass::Vague:
      return "vague";
    case TransitionClass::Consistent:
      return "consistent";
  }
  return "?";
}

std::vector<Violation> validate(const RawPlts& raw) {
  std::vector<Violation> out;
  auto report = [&out](std::string kind, std::string detail) {
    out.push_back({std::move(kind), std::move(detail)});
  };

  if (raw.states.empty()) report("empty state set", "a system needs at least one state");

  std::set<std::string> states;
  for (const auto& s : raw.states) {
    if (!states.insert(s).second) report("duplicate state", "state '" + s + "' declared twice");
  }
  std::set<std::string> labels;
  for (const auto& l : raw.labels) {
    if (l.empty()) {
      report("empty label", "labels must be non-empty");
    } else if (l == kIdleLabel) {
      report("reserved label", "the idle label " + kIdleLabel + " cannot be declared");
    }
    if (!labels.insert(l).second) report("duplicate label", "label '" + l + "' declared twice");
  }
  if (raw.initial && !states.count(*raw.initial)) {
    report("initial", "initial state '" + *raw.initial + "' is not declared");
  }

  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& t : raw.transitions) {
    const std::string name = edge_name(t.from, t.label, t.to);
    if (!states.count(t.from)) report("undeclared state", name + ": source '" + t.from + "'");
    if (!states.count(t.to)) report("undeclared state", name + ": target '" + t.to + "'");
    if (!labels.count(t.label)) report("undeclared label", name + ": label '" + t.label + "'");
    for (double w : {t.pos, t.neg}) {
      if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
        std::ostringstream msg;
        msg << name << ": weight " << w << " outside [0,1]";
        report("weight range", msg.str());
      }
    }
    if (!seen.emplace(t.from, t.label, t.to).second) {
      report("uniqueness", name + ": at most one transition per (from, label, to)");
    }
  }
  return out;
}

std::vector<Violation> validate(const Plts& t) { return validate(to_raw(t)); }

Plts from_raw(const RawPlts& raw) {
  const auto violations = validate(raw);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid system:";
    for (const auto& v : violations) msg << " [" << v.kind << "] " << v.detail << ";";
    throw DomainError(msg.str());
  }
  Plts t;
  for (const auto& s : raw.states) t.add_state(s);
  for (const auto& l : raw.labels) t.add_label(l);
  for (const auto& e : raw.transitions) {
    t.add_transition({e.from, e.label, e.to, LatticeValue(e.pos), LatticeValue(e.neg)});
  }
  return t;
}

RawPlts to_raw(const Plts& t) {
  RawPlts raw;
  raw.states = t.states();
  raw.labels = t.labels();
  for (const auto& e : t.transitions()) {
    raw.transitions.push_back({e.from, e.label, e.to, e.pos.value(), e.neg.value()});
  }
  return raw;
}

MorphismReport is_morphism(const StateMap& h, const Plts& t1, const Plts& t2) {
  const std::set<Label> a1(t1.labels().begin(), t1.labels().end());
  const std::set<Label> a2(t2.labels().begin(), t2.labels().end());
  if (a1 != a2) throw DomainError("morphism requires both systems to share one alphabet");
  for (const auto& s : t1.states()) {
    auto it = h.find(s);
    if (it == h.end()) throw DomainError("state map is undefined on '" + s + "'");
    if (!t2.has_state(it->second)) {
      throw DomainError("state map sends '" + s + "' to unknown state '" + it->second + "'");
    }
  }
  for (const auto& [from, _] : h) {
    if (!t1.has_state(from)) throw DomainError("state map mentions unknown state '" + from + "'");
  }

  MorphismReport report;
  for (const auto& a : t1.labels()) {
    for (const auto& w : t1.states()) {
      for (const auto& w2 : t1.states()) {
        const Transition* src = t1.find(w, a, w2);
        const Transition* img = t2.find(h.at(w), a, h.at(w2));
        const double p1 = src ? src->pos.value() : 0.0;
        const double n1 = src ? src->neg.value() : 0.0;
        const double p2 = img ? img->pos.value() : 0.0;
        const double n2 = img ? img->neg.value() : 0.0;
        if (!approx_leq(p1, p2)) report.violations.push_back({a, w, w2, "positive", p1, p2});
        if (!approx_geq(n1, n2)) report.violations.push_back({a, w, w2, "negative", n1, n2});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

StateMap compose(const StateMap& first, const StateMap& second) {
  StateMap out;
  for (const auto& [k, v] : first) {
    auto it = second.find(v);
    if (it == second.end()) throw DomainError("cannot compose: '" + v + "' has no image");
    out.emplace(k, it->second);
  }
  return out;
}

}  // namespace plts

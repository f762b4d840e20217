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

#include "plts/algebra.hpp"

#include <deque>
#include <sstream>

#include "plts/format.hpp"

namespace plts {

PointedPlts::PointedPlts(Plts system, StateId initial)
    : system_(std::move(system)), initial_(std::move(initial)) {
  if (!system_.has_state(initial_)) {
    throw DomainError("initial state '" + initial_ + "' is not a state of the system");
  }
}

PointedPlts nil_system() {
  Plts t;
  t.add_state("*");
  return PointedPlts(std::move(t), "*");
}

const Label& PointedMorphism::apply(const Label& label) const {
  auto it = lambda.find(label);
  return it == lambda.end() ? kIdleLabel : it->second;
}

namespace {

std::string describe(const Transition& t) {
  std::ostringstream s;
  s << "(" << t.from << "," << t.label << "," << t.to << "," << format_weight(t.pos.value())
    << "," << format_weight(t.neg.value()) << ")";
  return s.str();
}

Plts copy_frame(const Plts& t) {
  Plts out;
  for (const auto& s : t.states()) out.add_state(s);
  return out;
}

}  // namespace

PointedMorphismReport is_pointed_morphism(const PointedMorphism& m, const PointedPlts& t1,
                                          const PointedPlts& t2) {
  PointedMorphismReport report;
  auto fail = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };
  const Plts& a = t1.system();
  const Plts& b = t2.system();

  bool total = true;
  for (const auto& w : a.states()) {
    auto it = m.sigma.find(w);
    if (it == m.sigma.end()) {
      fail("state map undefined on '" + w + "'");
      total = false;
    } else if (!b.has_state(it->second)) {
      fail("state map sends '" + w + "' to unknown state '" + it->second + "'");
      total = false;
    }
  }
  if (total && m.sigma.at(t1.initial()) != t2.initial()) {
    fail("initial state '" + t1.initial() + "' maps to '" + m.sigma.at(t1.initial()) +
         "' instead of '" + t2.initial() + "'");
  }
  for (const auto& [from, to] : m.lambda) {
    if (!a.has_label(from)) fail("label map mentions unknown label '" + from + "'");
    if (to != kIdleLabel && !b.has_label(to)) {
      fail("label map sends '" + from + "' to unknown label '" + to + "'");
    }
  }
  if (!total) {
    report.ok = false;
    return report;
  }

  for (const auto& e : a.transitions()) {
    const StateId& src = m.sigma.at(e.from);
    const StateId& dst = m.sigma.at(e.to);
    const Label& img = m.apply(e.label);
    if (img == kIdleLabel) {
      // Idle loops carry (1, 0), so only the endpoints can fail.
      if (src != dst) {
        fail(describe(e) + " has undefined label but its endpoints map to distinct states '" +
             src + "' and '" + dst + "'");
      }
      continue;
    }
    const Transition* target = b.find(src, img, dst);
    if (!target) {
      fail(describe(e) + " has no image (" + src + "," + img + "," + dst + ")");
    } else if (!(e.pos <= target->pos) || !(target->neg <= e.neg)) {
      fail(describe(e) + " is not dominated by its image " + describe(*target));
    }
  }
  report.ok = report.violations.empty();
  return report;
}

PointedMorphism compose(const PointedMorphism& f, const PointedMorphism& g) {
  PointedMorphism out;
  out.sigma = compose(f.sigma, g.sigma);
  for (const auto& [a, b] : f.lambda) {
    if (b == kIdleLabel) continue;
    const Label& c = g.apply(b);
    if (c != kIdleLabel) out.lambda.emplace(a, c);
  }
  return out;
}

PointedMorphism identity_morphism(const PointedPlts& t) {
  PointedMorphism m;
  for (const auto& s : t.system().states()) m.sigma.emplace(s, s);
  for (const auto& l : t.system().labels()) m.lambda.emplace(l, l);
  return m;
}

PointedPlts restrict(const PointedPlts& t, const std::set<Label>& keep) {
  const Plts& src = t.system();
  for (const auto& l : keep) {
    if (!src.has_label(l)) throw DomainError("cannot restrict to unknown label '" + l + "'");
  }
  Plts out = copy_frame(src);
  for (const auto& l : src.labels()) {
    if (keep.count(l)) out.add_label(l);
  }
  for (const auto& e : src.transitions()) {
    if (keep.count(e.label)) out.add_transition(e);
  }
  return PointedPlts(std::move(out), t.initial());
}

PointedPlts reachable_part(const PointedPlts& t) {
  const Plts& src = t.system();
  std::vector<bool> seen(src.states().size(), false);
  std::deque<StateId> queue{t.initial()};
  seen[src.state_index(t.initial())] = true;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (std::size_t idx : src.outgoing(s)) {
      const StateId& next = src.transitions()[idx].to;
      const std::size_t k = src.state_index(next);
      if (!seen[k]) {
        seen[k] = true;
        queue.push_back(next);
      }
    }
  }
  Plts out;
  for (std::size_t i = 0; i < src.states().size(); ++i) {
    if (seen[i]) out.add_state(src.states()[i]);
  }
  for (const auto& l : src.labels()) out.add_label(l);
  for (const auto& e : src.transitions()) {
    if (out.has_state(e.from)) out.add_transition(e);
  }
  return PointedPlts(std::move(out), t.initial());
}

PointedPlts relabel(const PointedPlts& t, const std::map<Label, Label>& lam,
                    const std::optional<std::vector<Label>>& alphabet) {
  const Plts& src = t.system();
  for (const auto& l : src.labels()) {
    if (!lam.count(l)) throw DomainError("relabelling is undefined on label '" + l + "'");
  }
  Plts out = copy_frame(src);
  if (alphabet) {
    for (const auto& l : *alphabet) out.add_label(l);
    for (const auto& l : src.labels()) {
      if (!out.has_label(lam.at(l))) {
        throw DomainError("relabelling target '" + lam.at(l) + "' is not in the new alphabet");
      }
    }
  } else {
    for (const auto& l : src.labels()) out.add_label(lam.at(l));
  }
  for (const auto& e : src.transitions()) {
    out.merge_transition({e.from, lam.at(e.label), e.to, e.pos, e.neg});
  }
  return PointedPlts(std::move(out), t.initial());
}

Label ProductLabel::name() const {
  if (!left && !right) throw DomainError("product label cannot be idle on both sides");
  return "(" + left.value_or(kIdleLabel) + "," + right.value_or(kIdleLabel) + ")";
}

StateId pair_state(const StateId& left, const StateId& right) {
  return "(" + left + "," + right + ")";
}

namespace {

void add_fresh_state(Plts& out, const StateId& name) {
  if (!out.add_state(name)) {
    throw DomainError("state name '" + name + "' is ambiguous in the composed system");
  }
}

}  // namespace

PointedPlts product(const PointedPlts& t1, const PointedPlts& t2) {
  const Plts& a = t1.system();
  const Plts& b = t2.system();
  Plts out;
  for (const auto& w : a.states()) {
    for (const auto& v : b.states()) add_fresh_state(out, pair_state(w, v));
  }
  for (const auto& l : a.labels()) out.add_label(ProductLabel{l, std::nullopt}.name());
  for (const auto& l : b.labels()) out.add_label(ProductLabel{std::nullopt, l}.name());
  for (const auto& l : a.labels()) {
    for (const auto& r : b.labels()) out.add_label(ProductLabel{l, r}.name());
  }

  for (const auto& w : a.states()) {
    for (const auto& v : b.states()) {
      const StateId here = pair_state(w, v);
      // Left move against an idle right: min(alpha, 1) = alpha, max(beta, 0) = beta.
      for (std::size_t i : a.outgoing(w)) {
        const Transition& e = a.transitions()[i];
        out.add_transition({here, ProductLabel{e.label, std::nullopt}.name(),
                            pair_state(e.to, v), e.pos, e.neg});
      }
      for (std::size_t j : b.outgoing(v)) {
        const Transition& f = b.transitions()[j];
        out.add_transition({here, ProductLabel{std::nullopt, f.label}.name(),
                            pair_state(w, f.to), f.pos, f.neg});
      }
      for (std::size_t i : a.outgoing(w)) {
        const Transition& e = a.transitions()[i];
        for (std::size_t j : b.outgoing(v)) {
          const Transition& f = b.transitions()[j];
          out.add_transition({here, ProductLabel{e.label, f.label}.name(),
                              pair_state(e.to, f.to), godel_meet(e.pos, f.pos),
                              godel_join(e.neg, f.neg)});
        }
      }
    }
  }
  return PointedPlts(std::move(out), pair_state(t1.initial(), t2.initial()));
}

PointedPlts interleave(const PointedPlts& t1, const PointedPlts& t2) {
  std::set<Label> keep;
  for (const auto& l : t1.system().labels()) keep.insert(ProductLabel{l, std::nullopt}.name());
  for (const auto& l : t2.system().labels()) keep.insert(ProductLabel{std::nullopt, l}.name());
  return restrict(product(t1, t2), keep);
}

PointedPlts sync_product(const PointedPlts& t1, const PointedPlts& t2) {
  std::set<Label> keep;
  for (const auto& l : t1.system().labels()) {
    for (const auto& r : t2.system().labels()) keep.insert(ProductLabel{l, r}.name());
  }
  return restrict(product(t1, t2), keep);
}

PointedMorphism product_projection(const PointedPlts& t1, const PointedPlts& t2, Side side) {
  PointedMorphism m;
  for (const auto& w : t1.system().states()) {
    for (const auto& v : t2.system().states()) {
      m.sigma.emplace(pair_state(w, v), side == Side::Left ? w : v);
    }
  }
  for (const auto& l : t1.system().labels()) {
    if (side == Side::Left) m.lambda.emplace(ProductLabel{l, std::nullopt}.name(), l);
    for (const auto& r : t2.system().labels()) {
      m.lambda.emplace(ProductLabel{l, r}.name(), side == Side::Left ? l : r);
    }
  }
  if (side == Side::Right) {
    for (const auto& r : t2.system().labels()) {
      m.lambda.emplace(ProductLabel{std::nullopt, r}.name(), r);
    }
  }
  return m;
}

PointedMorphism pairing(const PointedMorphism& g1, const PointedMorphism& g2) {
  PointedMorphism h;
  for (const auto& [w, x] : g1.sigma) {
    auto it = g2.sigma.find(w);
    if (it == g2.sigma.end()) throw DomainError("pairing: second map undefined on '" + w + "'");
    h.sigma.emplace(w, pair_state(x, it->second));
  }
  std::set<Label> domain;
  for (const auto& [a, _] : g1.lambda) domain.insert(a);
  for (const auto& [a, _] : g2.lambda) domain.insert(a);
  for (const auto& a : domain) {
    const Label& l = g1.apply(a);
    const Label& r = g2.apply(a);
    if (l == kIdleLabel && r == kIdleLabel) continue;
    ProductLabel p;
    if (l != kIdleLabel) p.left = l;
    if (r != kIdleLabel) p.right = r;
    h.lambda.emplace(a, p.name());
  }
  return h;
}

PointedPlts sum(const PointedPlts& t1, const PointedPlts& t2) {
  const Plts& a = t1.system();
  const Plts& b = t2.system();
  const StateId& i1 = t1.initial();
  const StateId& i2 = t2.initial();
  Plts out;
  for (const auto& w : a.states()) add_fresh_state(out, pair_state(w, i2));
  for (const auto& v : b.states()) {
    if (v != i2) add_fresh_state(out, pair_state(i1, v));
  }
  for (const auto& l : a.labels()) out.add_label(l);
  for (const auto& l : b.labels()) out.add_label(l);
  for (const auto& e : a.transitions()) {
    out.merge_transition({pair_state(e.from, i2), e.label, pair_state(e.to, i2), e.pos, e.neg});
  }
  for (const auto& e : b.transitions()) {
    out.merge_transition({pair_state(i1, e.from), e.label, pair_state(i1, e.to), e.pos, e.neg});
  }
  return PointedPlts(std::move(out), pair_state(i1, i2));
}

PointedMorphism sum_injection(const PointedPlts& t1, const PointedPlts& t2, Side side) {
  PointedMorphism m;
  const PointedPlts& from = side == Side::Left ? t1 : t2;
  for (const auto& s : from.system().states()) {
    m.sigma.emplace(s, side == Side::Left ? pair_state(s, t2.initial())
                                          : pair_state(t1.initial(), s));
  }
  for (const auto& l : from.system().labels()) m.lambda.emplace(l, l);
  return m;
}

PointedMorphism copairing(const PointedMorphism& f1, const PointedMorphism& f2,
                          const PointedPlts& t1, const PointedPlts& t2) {
  const StateId& i1 = t1.initial();
  const StateId& i2 = t2.initial();
  PointedMorphism m;
  for (const auto& w : t1.system().states()) {
    auto it = f1.sigma.find(w);
    if (it == f1.sigma.end()) throw DomainError("copairing: first map undefined on '" + w + "'");
    m.sigma.emplace(pair_state(w, i2), it->second);
  }
  for (const auto& v : t2.system().states()) {
    auto it = f2.sigma.find(v);
    if (it == f2.sigma.end()) throw DomainError("copairing: second map undefined on '" + v + "'");
    auto [pos, inserted] = m.sigma.emplace(pair_state(i1, v), it->second);
    if (!inserted && pos->second != it->second) {
      throw DomainError("copairing: the two maps disagree on the initial state");
    }
  }
  for (const auto& l : t1.system().labels()) {
    const Label& img = f1.apply(l);
    if (t2.system().has_label(l) && f2.apply(l) != img) {
      throw DomainError("copairing: the two maps disagree on shared label '" + l + "'");
    }
    if (img != kIdleLabel) m.lambda.emplace(l, img);
  }
  for (const auto& l : t2.system().labels()) {
    const Label& img = f2.apply(l);
    if (img != kIdleLabel) m.lambda.emplace(l, img);
  }
  return m;
}

PointedPlts prefix(const Label& label, LatticeValue pos, LatticeValue neg,
                   const PointedPlts& t) {
  const Plts& src = t.system();
  StateId fresh;
  for (int k = 0;; ++k) {
    fresh = "new" + std::to_string(k);
    if (!src.has_state(fresh)) break;
  }
  Plts out;
  out.add_state(fresh);
  for (const auto& s : src.states()) out.add_state(s);
  for (const auto& l : src.labels()) out.add_label(l);
  out.add_label(label);
  out.add_transition({fresh, label, t.initial(), pos, neg});
  for (const auto& e : src.transitions()) out.add_transition(e);
  return PointedPlts(std::move(out), fresh);
}

PointedPlts v_approx(const PointedPlts& t, double v, ApproxTarget target) {
  if (!(v >= -1.0 && v <= 1.0)) throw DomainError("approximation offset must lie in [-1,1]");
  const Plts& src = t.system();
  Plts out = copy_frame(src);
  for (const auto& l : src.labels()) out.add_label(l);
  const bool shift_pos = target != ApproxTarget::Negative;
  const bool shift_neg = target != ApproxTarget::Positive;
  for (Transition e : src.transitions()) {
    if (shift_pos) e.pos = bounded_add(e.pos.value(), v);
    if (shift_neg) e.neg = bounded_add(e.neg.value(), v);
    out.add_transition(std::move(e));
  }
  return PointedPlts(std::move(out), t.initial());
}

PointedPlts purge(const PointedPlts& t, LatticeValue p, LatticeValue n) {
  const Plts& src = t.system();
  Plts out = copy_frame(src);
  for (const auto& l : src.labels()) out.add_label(l);
  for (const auto& e : src.transitions()) {
    if (e.pos >= p && e.neg <= n) out.add_transition(e);
  }
  return PointedPlts(std::move(out), t.initial());
}

}  // namespace plts

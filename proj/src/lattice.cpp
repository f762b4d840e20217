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

#include "plts/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

namespace plts {

namespace {
std::atomic<double> g_tolerance{1e-9};
}  // namespace

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw DomainError("tolerance must be a finite non-negative number");
  }
  g_tolerance.store(eps, std::memory_order_relaxed);
}

ScopedTolerance::ScopedTolerance(double eps) : previous_(tolerance()) {
  set_tolerance(eps);
}

ScopedTolerance::~ScopedTolerance() { g_tolerance.store(previous_); }

bool approx_equal(double a, double b) { return std::fabs(a - b) <= tolerance(); }
bool approx_leq(double a, double b) { return a <= b + tolerance(); }
bool approx_geq(double a, double b) { return a + tolerance() >= b; }

LatticeValue::LatticeValue(double v) {
  const double eps = tolerance();
  if (!std::isfinite(v) || v < -eps || v > 1.0 + eps) {
    std::ostringstream msg;
    msg << "weight " << v << " outside [0,1]";
    throw DomainError(msg.str());
  }
  value_ = std::clamp(v, 0.0, 1.0);
}

LatticeValue GodelAlgebra::meet(LatticeValue a, LatticeValue b) const {
  return a.value() <= b.value() ? a : b;
}

LatticeValue GodelAlgebra::join(LatticeValue a, LatticeValue b) const {
  return a.value() >= b.value() ? a : b;
}

LatticeValue GodelAlgebra::product(LatticeValue a, LatticeValue b) const {
  return meet(a, b);
}

LatticeValue GodelAlgebra::residuum(LatticeValue a, LatticeValue b) const {
  return a <= b ? LatticeValue::top() : b;
}

const GodelAlgebra& godel() {
  static const GodelAlgebra instance;
  return instance;
}

LatticeValue godel_meet(LatticeValue a, LatticeValue b) { return godel().meet(a, b); }
LatticeValue godel_join(LatticeValue a, LatticeValue b) { return godel().join(a, b); }
LatticeValue godel_residuum(LatticeValue a, LatticeValue b) {
  return godel().residuum(a, b);
}

LatticeValue bounded_add(double a, double b) {
  const double s = a + b;
  if (s >= 1.0) return LatticeValue::top();
  if (s <= 0.0) return LatticeValue::bottom();
  return LatticeValue(s);
}

}  // namespace plts

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

#include <string>

#include "plts/errors.hpp"

namespace plts {

/// Comparison tolerance shared by every weight comparison in the library.
/// Defaults to 1e-9.
double tolerance();
void set_tolerance(double eps);

/// RAII override of the global tolerance, restored on scope exit.
class ScopedTolerance {
 public:
  explicit ScopedTolerance(double eps);
  ~ScopedTolerance();
  ScopedTolerance(const ScopedTolerance&) = delete;
  ScopedTolerance& operator=(const ScopedTolerance&) = delete;

 private:
  double previous_;
};

bool approx_equal(double a, double b);
bool approx_leq(double a, double b);
bool approx_geq(double a, double b);

/// An element of the weight lattice, a real number in [0,1].
class LatticeValue {
 public:
  constexpr LatticeValue() = default;
  /// Throws DomainError unless 0 <= v <= 1. Values within the tolerance of
  /// a bound are snapped onto it.
  explicit LatticeValue(double v);

  static constexpr LatticeValue bottom() { return LatticeValue(0.0, Unchecked{}); }
  static constexpr LatticeValue top() { return LatticeValue(1.0, Unchecked{}); }

  constexpr double value() const { return value_; }
  constexpr explicit operator double() const { return value_; }

  /// Tolerant equality.
  friend bool operator==(LatticeValue a, LatticeValue b) {
    return approx_equal(a.value_, b.value_);
  }
  friend bool operator<=(LatticeValue a, LatticeValue b) {
    return approx_leq(a.value_, b.value_);
  }
  friend bool operator>=(LatticeValue a, LatticeValue b) {
    return approx_geq(a.value_, b.value_);
  }

 private:
  struct Unchecked {};
  constexpr LatticeValue(double v, Unchecked) : value_(v) {}

  double value_ = 0.0;
};

/// Residuated lattice <A, meet, join, product, residuum, 1, 0>.
/// Implementations must satisfy  product(a,b) <= c  iff  b <= residuum(a,c).
class ResiduatedLattice {
 public:
  virtual ~ResiduatedLattice() = default;

  virtual LatticeValue meet(LatticeValue a, LatticeValue b) const = 0;
  virtual LatticeValue join(LatticeValue a, LatticeValue b) const = 0;
  virtual LatticeValue product(LatticeValue a, LatticeValue b) const = 0;
  virtual LatticeValue residuum(LatticeValue a, LatticeValue b) const = 0;
  virtual LatticeValue bottom() const { return LatticeValue::bottom(); }
  virtual LatticeValue top() const { return LatticeValue::top(); }
  virtual std::string name() const = 0;
};

/// The Goedel algebra on [0,1]: meet = product = min, join = max and
/// a -> b = 1 if a <= b, b otherwise.
class GodelAlgebra final : public ResiduatedLattice {
 public:
  LatticeValue meet(LatticeValue a, LatticeValue b) const override;
  LatticeValue join(LatticeValue a, LatticeValue b) const override;
  LatticeValue product(LatticeValue a, LatticeValue b) const override;
  LatticeValue residuum(LatticeValue a, LatticeValue b) const override;
  std::string name() const override { return "godel"; }
};

const GodelAlgebra& godel();

LatticeValue godel_meet(LatticeValue a, LatticeValue b);
LatticeValue godel_join(LatticeValue a, LatticeValue b);
LatticeValue godel_residuum(LatticeValue a, LatticeValue b);

/// Truncated addition: 1 when a+b >= 1, 0 when a+b <= 0, a+b otherwise.
/// Accepts offsets in [-1,1]; the result is always a lattice value.
LatticeValue bounded_add(double a, double b);

}  // namespace plts

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

#include "plts/algebra.hpp"
#include "plts/plts.hpp"

// JSON persistence and DOT export.
//
//   {"states": [...], "labels": [...], "initial": "w1",
//    "transitions": [{"from": .., "label": .., "to": .., "pos": .., "neg": ..}]}
//
// "initial" is optional for plain systems and mandatory for pointed ones.
// Weights are written rounded to 9 decimal places.
namespace plts::io {

/// Throws ParseError for malformed JSON (with line and column) and for
/// documents that do not follow the schema.
RawPlts parse_json(std::string_view text);

/// Validated system; throws DomainError listing every violated invariant.
Plts load_plts(std::string_view text);
/// As load_plts, and additionally requires "initial".
PointedPlts load_pointed(std::string_view text);

std::string to_json(const Plts& t, const std::optional<StateId>& initial = std::nullopt);
std::string to_json(const PointedPlts& t);

/// One edge per transition, labelled "(a,pos,neg)". The initial state, if
/// any, gets an entry arrow.
std::string to_dot(const Plts& t, const std::optional<StateId>& initial = std::nullopt);
std::string to_dot(const PointedPlts& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// I/O failure (missing file, unwritable path).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plts::io

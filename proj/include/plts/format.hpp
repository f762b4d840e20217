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

namespace plts {

/// Rounds to 9 decimal places, the precision every output format uses.
double round_weight(double w);

/// Shortest decimal rendering of a weight rounded to 9 places:
/// 0.7 -> "0.7", 1 -> "1", 0.700000000001 -> "0.7".
std::string format_weight(double w);

}  // namespace plts

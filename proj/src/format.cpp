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

#include "plts/format.hpp"

#include <cmath>
#include <cstdio>

namespace plts {

double round_weight(double w) {
  const double r = std::round(w * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", round_weight(w));
  std::string s(buf);
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace plts

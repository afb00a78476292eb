// Copyright 2026 The coopgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopgap/coalition.hpp"

namespace coopgap {

std::vector<Player> Coalition::members() const {
  std::vector<Player> out;
  for (Mask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string to_string(Coalition s) {
  std::string out = "{";
  bool first = true;
  for (Player p : s.members()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace coopgap

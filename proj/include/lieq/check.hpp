// Copyright 2026 The lieq Authors
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

#ifndef LIEQ_CHECK_HPP_
#define LIEQ_CHECK_HPP_

#include <string>
#include <vector>

namespace lieq {

// One named pass/fail outcome with a short human-readable detail.
struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline bool all_ok(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.ok) return false;
  return true;
}

}  // namespace lieq

#endif  // LIEQ_CHECK_HPP_

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

#ifndef LIEQ_TOOLS_CLI_HPP_
#define LIEQ_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "lieq/check.hpp"
#include "lieq/io.hpp"

namespace lieq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultTruncation = 6;
inline constexpr const char* kTruncationEnv = "LIEQ_TRUNCATION";

// K from LIEQ_TRUNCATION, or the default. Throws InputError on a bad value.
int truncation_order();

std::string fnv1a_hex(const std::string& data);

struct RunReport {
  std::string command;
  io::Json params = io::Json::object();
  std::string digest_source;  // canonical inputs fed to the digest
  std::vector<Check> checks;
  double timing_ms = -1;  // emitted only when >= 0

  bool ok() const { return all_ok(checks); }
  io::Json to_json() const;
};

// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieq::cli

#endif  // LIEQ_TOOLS_CLI_HPP_

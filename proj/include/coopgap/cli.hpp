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

// The coopgap command-line surface. Every command writes a report to `out`,
// diagnostics to `err`, and returns the process exit code.

#ifndef COOPGAP_CLI_HPP_
#define COOPGAP_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coopgap/approximations.hpp"
#include "coopgap/game.hpp"
#include "coopgap/io.hpp"

namespace coopgap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNotExtendable = 3;
inline constexpr int kExitInvariant = 4;

// Predicates and extendability verdicts.
Json cmd_check(const GameFile& file);

enum class What { kVertices, kRays, kWitness };
What parse_what(const std::string& name);
// {"class", "what", "count", "games": [...]}. With dump set, the H- and
// V-representations behind the answer are written as text to *dump.
Json cmd_extensions(const GameFile& file, GameClass cls, What what, std::ostream* dump = nullptr);

// concept is "core", "shapley" or "tau"; cls is ignored for tau.
Json cmd_approx(const GameFile& file, const std::string& concept_name, GameClass cls);

// Rows for n = 1..n_max; n above 4 requires allow_long.
Json cmd_table1(int n_max, bool allow_long);
std::string format_table1(const Json& table);

struct OracleReport {
  Json report;
  bool pass = false;
};
// Samples extensions and checks that every sampled value lies inside the
// closed-form interval. corrupt_interval replaces each interval by one no
// sample can reach.
OracleReport cmd_oracle(const GameFile& file, Concept c, GameClass cls, std::size_t samples,
                        std::uint64_t seed, bool corrupt_interval = false);

// Full argv dispatch, exceptions mapped to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coopgap::cli

#endif  // COOPGAP_CLI_HPP_

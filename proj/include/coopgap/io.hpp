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

// Game files and JSON reports. Coalitions are sorted arrays of player
// indices, rationals are "p/q" strings, and every list is ordered by
// coalition mask.

#ifndef COOPGAP_IO_HPP_
#define COOPGAP_IO_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "coopgap/approximations.hpp"
#include "coopgap/game.hpp"
#include "coopgap/incomplete.hpp"
#include "coopgap/polyhedron.hpp"

namespace coopgap {

using Json = nlohmann::ordered_json;

struct GameFile {
  int n = 0;
  std::optional<std::vector<std::string>> players;
  std::optional<Player> center;
  // Known nonempty coalitions and their worths.
  std::map<Coalition, Rational> values;

  bool operator==(const GameFile&) const = default;
};

// Throws ValidationError on malformed documents.
GameFile parse_game_file(std::string_view text);
GameFile game_file_from_json(const Json& doc);
Json to_json(const GameFile& file);
// Canonical text: two-space indented JSON with a trailing newline.
std::string serialize_game_file(const GameFile& file);

GameFile game_file(const TUGame& game);
GameFile game_file(const PlayerCentered& g);
bool is_complete(const GameFile& file);
// Requires every nonempty coalition to be known.
TUGame to_game(const GameFile& file);
// Requires a center and the matching family of known coalitions.
PlayerCentered to_player_centered(const GameFile& file);
IncompleteGame to_incomplete(const GameFile& file);

Json to_json(Coalition s);
Json to_json(const Rational& x);
Json to_json(std::span<const Rational> x);
// {"n": .., "known": [..every nonempty coalition..], "values": [..]}
Json to_json(const TUGame& game);
Json to_json(const HPolyhedron& p);
Json to_json(const VRep& v);
Json to_json(const PlayerBound& b, Player k);
Json to_json(const SolutionBounds& b);

}  // namespace coopgap

#endif  // COOPGAP_IO_HPP_

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

#include "coopgap/io.hpp"

#include <set>
#include <utility>

#include "coopgap/errors.hpp"

namespace coopgap {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw ValidationError("game file: " + what); }

Coalition parse_coalition(const Json& members, int n) {
  if (!members.is_array()) invalid("each known coalition must be an array of player indices");
  Mask mask = 0;
  for (const Json& p : members) {
    if (!p.is_number_integer()) invalid("player indices must be integers");
    const auto j = p.get<long long>();
    if (j < 0 || j >= n) invalid("player index " + std::to_string(j) + " outside [0, n)");
    const Mask bit = Mask{1} << j;
    if (mask & bit) invalid("player " + std::to_string(j) + " repeated in a coalition");
    mask |= bit;
  }
  return Coalition(mask);
}

}  // namespace

GameFile game_file_from_json(const Json& doc) {
  if (!doc.is_object()) invalid("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "players" && key != "center" && key != "known" && key != "values") {
      invalid("unexpected field \"" + key + "\"");
    }
  }
  GameFile out;
  if (!doc.contains("n") || !doc["n"].is_number_integer()) invalid("\"n\" must be an integer");
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxPlayers) invalid("\"n\" must lie in [1, " + std::to_string(kMaxPlayers) + "]");
  out.n = static_cast<int>(n);

  if (doc.contains("players")) {
    const Json& names = doc["players"];
    if (!names.is_array() || names.size() != static_cast<std::size_t>(n)) {
      invalid("\"players\" must list exactly n names");
    }
    std::vector<std::string> list;
    for (const Json& name : names) {
      if (!name.is_string()) invalid("player names must be strings");
      list.push_back(name.get<std::string>());
    }
    out.players = std::move(list);
  }
  if (doc.contains("center")) {
    const Json& c = doc["center"];
    if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<long long>() >= n) {
      invalid("\"center\" must be a player index");
    }
    out.center = static_cast<Player>(c.get<long long>());
  }

  if (!doc.contains("known") || !doc["known"].is_array()) invalid("\"known\" must be an array");
  if (!doc.contains("values") || !doc["values"].is_array()) invalid("\"values\" must be an array");
  const Json& known = doc["known"];
  const Json& values = doc["values"];
  if (known.size() != values.size()) invalid("\"known\" and \"values\" differ in length");
  for (std::size_t r = 0; r < known.size(); ++r) {
    const Coalition s = parse_coalition(known[r], out.n);
    if (!values[r].is_string()) invalid("worths must be rational strings such as \"3/2\"");
    Rational worth = parse_rational(values[r].get<std::string>());
    if (s.is_empty()) {
      if (sgn(worth) != 0) invalid("the empty coalition must have worth 0");
      continue;
    }
    if (!out.values.emplace(s, std::move(worth)).second) {
      invalid("coalition " + to_string(s) + " listed twice");
    }
  }
  return out;
}

GameFile parse_game_file(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    invalid(std::string("not valid JSON: ") + e.what());
  }
  return game_file_from_json(doc);
}

Json to_json(Coalition s) {
  Json out = Json::array();
  for (Player p : s.members()) out.push_back(p);
  return out;
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(std::span<const Rational> x) {
  Json out = Json::array();
  for (const Rational& c : x) out.push_back(to_string(c));
  return out;
}

Json to_json(const GameFile& file) {
  Json out;
  out["n"] = file.n;
  if (file.players) out["players"] = *file.players;
  if (file.center) out["center"] = *file.center;
  Json known = Json::array();
  Json values = Json::array();
  for (const auto& [s, worth] : file.values) {
    known.push_back(to_json(s));
    values.push_back(to_string(worth));
  }
  out["known"] = std::move(known);
  out["values"] = std::move(values);
  return out;
}

std::string serialize_game_file(const GameFile& file) { return to_json(file).dump(2) + "\n"; }

GameFile game_file(const TUGame& game) {
  GameFile out;
  out.n = game.players();
  for (Mask m = 1; m < coalition_count(out.n); ++m) out.values.emplace(Coalition(m), game(Coalition(m)));
  return out;
}

GameFile game_file(const PlayerCentered& g) {
  GameFile out;
  out.n = g.players();
  out.center = g.center();
  for (Coalition s : g.known_nonempty()) out.values.emplace(s, g.value(s));
  return out;
}

bool is_complete(const GameFile& file) { return file.values.size() + 1 == coalition_count(file.n); }

TUGame to_game(const GameFile& file) {
  if (!is_complete(file)) invalid("a complete game must list every nonempty coalition");
  std::vector<Rational> values(coalition_count(file.n));
  for (const auto& [s, worth] : file.values) values[s.mask] = worth;
  return TUGame(file.n, std::move(values));
}

PlayerCentered to_player_centered(const GameFile& file) {
  if (!file.center) invalid("a player-centered game needs a \"center\"");
  return PlayerCentered(IncompleteGame(file.n, file.values), *file.center);
}

IncompleteGame to_incomplete(const GameFile& file) { return IncompleteGame(file.n, file.values); }

Json to_json(const TUGame& game) { return to_json(game_file(game)); }

Json to_json(const HPolyhedron& p) {
  auto rows = [](const std::vector<LinearRow>& list) {
    Json out = Json::array();
    for (const LinearRow& row : list) {
      Json r;
      r["coeffs"] = to_json(std::span<const Rational>(row.coeffs));
      r["rhs"] = to_string(row.rhs);
      out.push_back(std::move(r));
    }
    return out;
  };
  Json out;
  out["dim"] = p.dim();
  out["equalities"] = rows(p.equalities());
  out["inequalities"] = rows(p.inequalities());
  return out;
}

Json to_json(const VRep& v) {
  Json out;
  out["vertices"] = Json::array();
  for (const RationalVector& x : v.vertices) out["vertices"].push_back(to_json(std::span<const Rational>(x)));
  out["rays"] = Json::array();
  for (const RationalVector& r : v.rays) out["rays"].push_back(to_json(std::span<const Rational>(r)));
  return out;
}

Json to_json(const PlayerBound& b, Player k) {
  Json out;
  out["player"] = k;
  out["lo"] = to_string(b.interval.lo);
  out["hi"] = to_string(b.interval.hi);
  out["lo_witness"] = to_json(b.lo_witness);
  out["hi_witness"] = to_json(b.hi_witness);
  return out;
}

Json to_json(const SolutionBounds& b) {
  Json out;
  out["concept"] = std::string(to_string(b.concept_kind));
  out["class"] = std::string(to_string(b.cls));
  out["intervals"] = Json::array();
  for (std::size_t k = 0; k < b.per_player.size(); ++k) {
    out["intervals"].push_back(to_json(b.per_player[k], static_cast<Player>(k)));
  }
  return out;
}

}  // namespace coopgap

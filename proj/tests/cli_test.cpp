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

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "coopgap/cli.hpp"
#include "coopgap/errors.hpp"
#include "coopgap/io.hpp"
#include "support/generators.hpp"

namespace coopgap {
namespace {

constexpr const char* kG3 = R"({
  "n": 3,
  "players": [
    "1",
    "2",
    "3"
  ],
  "center": 0,
  "known": [
    [
      0
    ],
    [
      0,
      1
    ],
    [
      0,
      2
    ],
    [
      0,
      1,
      2
    ]
  ],
  "values": [
    "0",
    "1",
    "1",
    "3"
  ]
}
)";

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    char name[] = "/tmp/coopgap_cli_XXXXXX";
    const int fd = ::mkstemp(name);
    ::close(fd);
    path_ = name;
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(GameFileTest, CanonicalRoundTripIsBitIdentical) {
  EXPECT_EQ(serialize_game_file(parse_game_file(kG3)), kG3);
}

TEST(GameFileTest, RandomRoundTrip) {
  gen::Rng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(1, 5);
    GameFile f = game_file(gen::random_game(rng, n));
    if (trial % 2) f = game_file(gen::random_centered(rng, gen::random_game(rng, n)));
    const std::string text = serialize_game_file(f);
    EXPECT_EQ(parse_game_file(text), f);
    EXPECT_EQ(serialize_game_file(parse_game_file(text)), text);
  }
}

TEST(GameFileTest, NonCanonicalInputIsNormalised) {
  const GameFile f = parse_game_file(
      R"({"values": ["2/4", "0", "6/3"], "known": [[1, 0], [], [0]], "n": 2})");
  EXPECT_EQ(f.values.size(), 2u);
  EXPECT_EQ(f.values.at(Coalition::of({0, 1})), Rational(1, 2));
  EXPECT_EQ(serialize_game_file(f).find("\"1/2\"") != std::string::npos, true);
}

TEST(GameFileTest, Rejects) {
  for (const char* bad : {
           "not json",
           R"([1, 2])",
           R"({"n": 0, "known": [], "values": []})",
           R"({"n": 2, "known": [[0]], "values": []})",
           R"({"n": 2, "known": [[2]], "values": ["1"]})",
           R"({"n": 2, "known": [[0, 0]], "values": ["1"]})",
           R"({"n": 2, "known": [[0], [0]], "values": ["1", "2"]})",
           R"({"n": 2, "known": [[0]], "values": [1]})",
           R"({"n": 2, "known": [[0]], "values": ["1/x"]})",
           R"({"n": 2, "known": [[]], "values": ["1"]})",
           R"({"n": 2, "known": [], "values": [], "colour": "red"})",
           R"({"n": 2, "players": ["a"], "known": [], "values": []})",
           R"({"n": 2, "center": 5, "known": [], "values": []})",
       }) {
    EXPECT_THROW(parse_game_file(bad), ValidationError) << bad;
  }
}

TEST(GameFileTest, Conversions) {
  const GameFile f = parse_game_file(kG3);
  const PlayerCentered g = to_player_centered(f);
  EXPECT_EQ(g.center(), 0);
  EXPECT_EQ(game_file(g).values, f.values);
  EXPECT_FALSE(is_complete(f));
  EXPECT_THROW(to_game(f), ValidationError);
  GameFile no_center = f;
  no_center.center.reset();
  EXPECT_THROW(to_player_centered(no_center), ValidationError);
}

TEST(CliTest, CheckG3) {
  TempFile file(kG3);
  const Outcome r = invoke({"check", file.path()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  for (const auto& [name, verdict] : doc["predicates"].items()) EXPECT_TRUE(verdict.get<bool>()) << name;
  for (const auto& [name, verdict] : doc["extendable"].items()) EXPECT_TRUE(verdict.get<bool>()) << name;
}

TEST(CliTest, CheckCompleteAndGeneralGames) {
  TempFile complete(R"({"n": 2, "known": [[0], [1], [0, 1]], "values": ["1", "1", "3"]})");
  const Outcome a = invoke({"check", complete.path()});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(Json::parse(a.out)["classes"]["convex"].get<bool>());
  TempFile partial(R"({"n": 3, "known": [[0], [1], [0, 1]], "values": ["1", "1", "1"]})");
  const Outcome b = invoke({"check", partial.path()});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_FALSE(Json::parse(b.out)["convex_extendable"].get<bool>());
}

TEST(CliTest, ValidationFailures) {
  TempFile malformed(R"({"n": 3, "center": 0, "known": [[0]], "values": ["1/0"]})");
  EXPECT_EQ(invoke({"check", malformed.path()}).code, cli::kExitValidation);
  TempFile not_centered(R"({"n": 2, "center": 0, "known": [[0], [1]], "values": ["1", "1"]})");
  EXPECT_EQ(invoke({"check", not_centered.path()}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"check", "/nonexistent/game.json"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitValidation);
  TempFile file(kG3);
  EXPECT_EQ(invoke({"extensions", file.path(), "--class", "balanced"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"extensions", file.path(), "--what", "faces"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"table1", "--n-max", "5"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"table1", "--n-max", "0"}).code, cli::kExitValidation);
}

TEST(CliTest, Extensions) {
  TempFile file(kG3);
  const Outcome v = invoke({"extensions", file.path(), "--class", "positive", "--what", "vertices"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(Json::parse(v.out)["count"], 8);
  const Outcome r = invoke({"extensions", file.path(), "--class", "convex", "--what", "rays"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["count"], 3);
  const Outcome w = invoke({"extensions", file.path(), "--class", "superadditive", "--what", "witness"});
  ASSERT_EQ(w.code, 0) << w.err;
  const Json games = Json::parse(w.out)["games"];
  ASSERT_EQ(games.size(), 1u);
  EXPECT_EQ(game_file_from_json(games[0]), game_file(superadditive_witness(to_player_centered(parse_game_file(kG3)))));
  const Outcome d = invoke({"extensions", file.path(), "--class", "monotone", "--dump"});
  EXPECT_NE(d.err.find("H-representation"), std::string::npos);
}

TEST(CliTest, NotExtendable) {
  TempFile file(R"({"n": 2, "center": 0, "known": [[0], [0, 1]], "values": ["2", "1"]})");
  EXPECT_EQ(invoke({"extensions", file.path(), "--class", "positive"}).code, cli::kExitNotExtendable);
  EXPECT_EQ(invoke({"approx", file.path(), "--concept", "tau"}).code, cli::kExitNotExtendable);
  EXPECT_EQ(invoke({"extensions", file.path(), "--class", "superadditive", "--what", "witness"}).code, 0);
}

TEST(CliTest, ApproxShapley) {
  TempFile file(kG3);
  const Outcome r = invoke({"approx", file.path(), "--concept", "shapley", "--class", "positive"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  const char* want[3][2] = {{"0", "4/3"}, {"5/6", "3/2"}, {"5/6", "3/2"}};
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(doc["intervals"][k]["lo"], want[k][0]);
    EXPECT_EQ(doc["intervals"][k]["hi"], want[k][1]);
  }
  const Outcome e = invoke({"approx", file.path(), "--concept", "shapley", "--class", "monotone-convex"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_TRUE(Json::parse(e.out)["closed_form"].is_null());
  EXPECT_EQ(invoke({"approx", file.path(), "--concept", "shapley", "--class", "convex"}).code, cli::kExitValidation);
}

TEST(CliTest, ApproxCoreAndTau) {
  TempFile file(kG3);
  const Outcome c = invoke({"approx", file.path(), "--concept", "core", "--class", "positive"});
  ASSERT_EQ(c.code, 0) << c.err;
  const Json core = Json::parse(c.out);
  EXPECT_EQ(core["inner"]["vertices"], Json::parse(R"([["0","1","2"],["0","2","1"]])"));
  EXPECT_TRUE(core["outer"]["hrep"].contains("inequalities"));
  const Outcome t = invoke({"approx", file.path(), "--concept", "tau"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(Json::parse(t.out)["intervals"][0]["hi"], "9/7");
  EXPECT_EQ(invoke({"approx", file.path(), "--concept", "tau", "--class", "positive"}).code, cli::kExitValidation);
}

TEST(CliTest, Table1) {
  const Outcome r = invoke({"table1", "--n-max", "4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json rows = Json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3]["superadditive_rays"], 22);
  EXPECT_EQ(rows[3]["convex_rays"], 8);
  EXPECT_EQ(rows[3]["neg_unanimity_rays"], 3);
  EXPECT_EQ(rows[3]["es0_rays"], 7);
  const Outcome one = invoke({"table1", "--n-max", "1"});
  ASSERT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("rays(S^n)"), std::string::npos);
}

TEST(CliTest, OracleIsDeterministicAndDetectsCorruption) {
  TempFile file(kG3);
  const Outcome a = invoke({"oracle", file.path(), "--concept", "shapley", "--class", "positive", "--samples", "500", "--seed", "4"});
  const Outcome b = invoke({"oracle", file.path(), "--concept", "shapley", "--class", "positive", "--samples", "500", "--seed", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["result"], "PASS");
  const Outcome bad = invoke({"oracle", file.path(), "--samples", "20", "--corrupt-interval"});
  EXPECT_EQ(bad.code, cli::kExitInvariant);
  EXPECT_EQ(Json::parse(bad.out)["result"], "FAIL");
  EXPECT_EQ(invoke({"oracle", file.path(), "--concept", "tau", "--samples", "50"}).code, 0);
  EXPECT_EQ(invoke({"oracle", file.path(), "--samples", "0"}).code, cli::kExitValidation);
}

TEST(CliTest, CapacityErrorIsAValidationFailure) {
  TempFile file(kG3);
  ::setenv("COOPGAP_DIM_CAP", "1", 1);
  const Outcome r = invoke({"extensions", file.path(), "--class", "convex", "--what", "vertices"});
  ::unsetenv("COOPGAP_DIM_CAP");
  EXPECT_EQ(r.code, cli::kExitValidation);
}

}  // namespace
}  // namespace coopgap

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

#include "coopgap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "coopgap/errors.hpp"
#include "coopgap/extension_polytope.hpp"
#include "coopgap/extensions.hpp"
#include "coopgap/incomplete.hpp"
#include "coopgap/polyhedron.hpp"
#include "coopgap/solutions.hpp"

namespace coopgap::cli {
namespace {

constexpr int kDefaultSafeTableN = 4;
constexpr std::size_t kApproxSamples = 200;

void require_extendable(const PlayerCentered& g, GameClass cls) {
  if (!extendable(g, cls)) {
    throw NotExtendableError("the game has no " + std::string(to_string(cls)) + " extension");
  }
}

Json games_json(const std::vector<TUGame>& games) {
  Json out = Json::array();
  for (const TUGame& w : games) out.push_back(to_json(w));
  return out;
}

std::vector<TUGame> sorted_games(std::vector<TUGame> games) {
  std::sort(games.begin(), games.end(),
            [](const TUGame& a, const TUGame& b) { return to_coordinates(a) < to_coordinates(b); });
  return games;
}

Json core_json(const HPolyhedron& core, const TUGame& game) {
  Json out;
  out["game"] = to_json(game);
  out["hrep"] = to_json(core);
  out["vertices"] = to_json(vertex_enumeration(core))["vertices"];
  return out;
}

Json interval_json(const Interval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

Json cmd_check(const GameFile& file) {
  Json out;
  out["n"] = file.n;
  if (file.center) {
    const PlayerCentered g = to_player_centered(file);
    out["center"] = g.center();
    Json predicates;
    predicates["positive"] = is_positive_pc(g);
    predicates["convex"] = is_convex_pc(g);
    predicates["monotone"] = is_monotone_pc(g);
    predicates["superadditive"] = is_superadditive_pc(g);
    out["predicates"] = std::move(predicates);
    Json verdicts;
    for (GameClass cls : kAllGameClasses) {
      const bool verdict = extendable(g, cls);
      if (verdict != lp_feasible(build_extension_polytope(g, cls)).feasible) {
        throw InvariantError("extendability verdict for " + std::string(to_string(cls)) +
                             " disagrees with LP feasibility");
      }
      verdicts[std::string(to_string(cls))] = verdict;
    }
    out["extendable"] = std::move(verdicts);
    Json mobius = Json::object();
    Json known = Json::array();
    Json masses = Json::array();
    for (const auto& [s, m] : partial_mobius(g)) {
      known.push_back(to_json(s));
      masses.push_back(to_string(m));
    }
    mobius["known"] = std::move(known);
    mobius["values"] = std::move(masses);
    out["partial_mobius"] = std::move(mobius);
    return out;
  }
  if (is_complete(file)) {
    const TUGame game = to_game(file);
    Json classes;
    for (GameClass cls : kAllGameClasses) classes[std::string(to_string(cls))] = belongs_to(game, cls);
    out["classes"] = std::move(classes);
    out["core_nonempty"] = core_nonempty(game);
    out["shapley"] = to_json(std::span<const Rational>(shapley(game)));
    return out;
  }
  const IncompleteGame g = to_incomplete(file);
  out["convex_extendable"] = bk2018_feasible(g);
  return out;
}

What parse_what(const std::string& name) {
  if (name == "vertices") return What::kVertices;
  if (name == "rays") return What::kRays;
  if (name == "witness") return What::kWitness;
  throw ValidationError("--what must be vertices, rays or witness");
}

Json cmd_extensions(const GameFile& file, GameClass cls, What what, std::ostream* dump) {
  const PlayerCentered g = to_player_centered(file);
  require_extendable(g, cls);
  const HPolyhedron p = build_extension_polytope(g, cls);
  std::vector<TUGame> games;
  std::string what_name;
  switch (what) {
    case What::kVertices: {
      what_name = "vertices";
      if (cls == GameClass::kPositive) {
        games = enumerate_positive_vertices(g);
      } else if (cls == GameClass::kMonotone && g.unknown().size() <= 7) {
        games = enumerate_monotone_vertices(g);
      } else {
        const VRep v = vertex_enumeration(p);
        for (const RationalVector& x : v.vertices) games.push_back(from_coordinates(g.players(), x));
      }
      break;
    }
    case What::kRays: {
      what_name = "rays";
      if (cls == GameClass::kConvex || cls == GameClass::kSuperadditive) {
        for (const RationalVector& r : extreme_ray_enumeration(reduce_recession_cone(g, cls))) {
          games.push_back(lift_unknown(g.players(), g.center(), r));
        }
      } else {
        for (const RationalVector& r : vertex_enumeration(p).rays) {
          games.push_back(from_coordinates(g.players(), r));
        }
      }
      break;
    }
    case What::kWitness: {
      what_name = "witness";
      if (cls == GameClass::kSuperadditive) {
        games.push_back(superadditive_witness(g));
      } else if (cls == GameClass::kConvex) {
        games.push_back(from_coordinates(g.players(), lp_feasible(p).witness));
      } else {
        games.push_back(v0_v1(g).v1);
      }
      if (!belongs_to(games.front(), cls) || !p.contains_point(to_coordinates(games.front()))) {
        throw InvariantError("witness is not a " + std::string(to_string(cls)) + " extension");
      }
      break;
    }
  }
  if (what != What::kWitness) games = sorted_games(std::move(games));
  if (dump != nullptr) {
    *dump << "# H-representation (" << to_string(cls) << " extensions)\n" << format_hrep(p);
    if (what == What::kRays && (cls == GameClass::kConvex || cls == GameClass::kSuperadditive)) {
      *dump << "# reduced recession cone\n" << format_hrep(reduce_recession_cone(g, cls));
    }
    VRep v;
    for (const TUGame& w : games) {
      (what == What::kRays ? v.rays : v.vertices).push_back(to_coordinates(w));
    }
    *dump << "# V-representation\n" << format_vrep(v);
  }
  Json out;
  out["class"] = std::string(to_string(cls));
  out["what"] = what_name;
  out["count"] = games.size();
  out["games"] = games_json(games);
  return out;
}

Json cmd_approx(const GameFile& file, const std::string& concept_name, GameClass cls) {
  const PlayerCentered g = to_player_centered(file);
  Json out;
  out["concept"] = concept_name;
  if (concept_name == "core") {
    require_extendable(g, cls);
    const CoreBounds b = core_bounds(g, cls);
    out["class"] = std::string(to_string(cls));
    out["inner"] = b.inner ? core_json(*b.inner, *b.inner_game) : Json(nullptr);
    out["outer"] = core_json(b.outer, b.outer_game);
    return out;
  }
  const Concept c = parse_concept(concept_name);
  if (c == Concept::kTau) {
    if (cls != GameClass::kZeroNormalizedPositive) {
      throw ValidationError("tau bounds are available for the zero-normalized-positive class only");
    }
    require_extendable(g, cls);
    return to_json(tau_bounds(g));
  }
  require_extendable(g, cls);
  if (cls == GameClass::kMonotone || cls == GameClass::kPositive) return to_json(shapley_bounds(g, cls));
  if (cls == GameClass::kMonotoneSuperadditive || cls == GameClass::kMonotoneConvex) {
    const SolutionBounds e = empirical_bounds(g, cls, c, kApproxSamples, 0);
    out["class"] = std::string(to_string(cls));
    out["closed_form"] = nullptr;
    out["note"] = "no closed form; empirical bounds over sampled extensions";
    out["samples"] = kApproxSamples;
    out["intervals"] = Json::array();
    for (std::size_t k = 0; k < e.per_player.size(); ++k) {
      out["intervals"].push_back(to_json(e.per_player[k], static_cast<Player>(k)));
    }
    return out;
  }
  throw ValidationError("no Shapley bounds for the " + std::string(to_string(cls)) + " class");
}

Json cmd_table1(int n_max, bool allow_long) {
  if (n_max < 1) throw ValidationError("--n-max must be at least 1");
  if (n_max > kDefaultSafeTableN && !allow_long) {
    throw ValidationError("--n-max above 4 needs --allow-long");
  }
  Json rows = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    const RayCensus c = ray_census(n);
    Json row;
    row["n"] = n;
    row["superadditive_rays"] = c.superadditive_rays;
    row["convex_rays"] = c.convex_rays;
    row["neg_unanimity_rays"] = c.neg_unanimity_rays;
    row["es0_rays"] = c.es0_rays;
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = std::move(rows);
  return out;
}

std::string format_table1(const Json& table) {
  static const std::pair<const char*, const char*> kRows[] = {
      {"rays(S^n)", "superadditive_rays"},
      {"rays(C^n)", "convex_rays"},
      {"(N,-u_k)", "neg_unanimity_rays"},
      {"(N,e_S0)", "es0_rays"},
  };
  std::ostringstream os;
  os << std::left << std::setw(12) << "n";
  for (const Json& row : table["rows"]) os << std::right << std::setw(8) << row["n"].get<int>();
  os << '\n';
  for (const auto& [label, key] : kRows) {
    os << std::left << std::setw(12) << label;
    for (const Json& row : table["rows"]) os << std::right << std::setw(8) << row[key].get<std::size_t>();
    os << '\n';
  }
  return os.str();
}

OracleReport cmd_oracle(const GameFile& file, Concept c, GameClass cls, std::size_t samples,
                        std::uint64_t seed, bool corrupt_interval) {
  if (samples == 0) throw ValidationError("--samples must be positive");
  const PlayerCentered g = to_player_centered(file);
  require_extendable(g, cls);
  SolutionBounds closed;
  if (c == Concept::kTau) {
    if (cls != GameClass::kZeroNormalizedPositive) {
      throw ValidationError("the tau oracle needs the zero-normalized-positive class");
    }
    closed = tau_bounds(g);
  } else {
    closed = shapley_bounds(g, cls);
  }
  if (corrupt_interval) {
    for (PlayerBound& b : closed.per_player) {
      const Rational beyond = b.interval.hi + 1;
      b.interval = Interval{beyond, beyond};
    }
  }
  const SolutionBounds empirical = empirical_bounds(g, cls, c, samples, seed);
  OracleReport result;
  result.pass = true;
  Json players = Json::array();
  for (std::size_t k = 0; k < closed.per_player.size(); ++k) {
    const Interval& cf = closed.per_player[k].interval;
    const Interval& em = empirical.per_player[k].interval;
    const bool inside = cf.contains(em.lo) && cf.contains(em.hi);
    result.pass = result.pass && inside;
    Json row;
    row["player"] = k;
    row["closed_form"] = interval_json(cf);
    row["empirical"] = interval_json(em);
    row["inside"] = inside;
    players.push_back(std::move(row));
  }
  Json& r = result.report;
  r["concept"] = std::string(to_string(c));
  r["class"] = std::string(to_string(cls));
  r["samples"] = samples;
  r["seed"] = seed;
  r["players"] = std::move(players);
  r["result"] = result.pass ? "PASS" : "FAIL";
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of player-centered incomplete cooperative games", "coopgap"};
  app.require_subcommand(1);

  std::string path;
  std::string class_name;
  std::string what_name = "vertices";
  std::string concept_name = "shapley";
  bool dump = false;
  int n_max = kDefaultSafeTableN;
  bool allow_long = false;
  bool as_json = false;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  bool corrupt = false;

  auto* check = app.add_subcommand("check", "Class predicates and extendability verdicts");
  check->add_option("file", path, "Game file, or - for stdin")->required();

  auto* ext = app.add_subcommand("extensions", "Extreme games, extreme rays or a witness extension");
  ext->add_option("file", path, "Game file, or - for stdin")->required();
  ext->add_option("--class", class_name, "Game class (default: positive, or zero-normalized-positive for tau)");
  ext->add_option("--what", what_name, "vertices, rays or witness")->capture_default_str();
  ext->add_flag("--dump", dump, "Write the H- and V-representations to stderr");

  auto* approx = app.add_subcommand("approx", "Core, Shapley or tau bounds over the extensions");
  approx->add_option("file", path, "Game file, or - for stdin")->required();
  approx->add_option("--concept", concept_name, "core, shapley or tau")->capture_default_str();
  approx->add_option("--class", class_name, "Game class (default: positive, or zero-normalized-positive for tau)");

  auto* table = app.add_subcommand("table1", "Extreme-ray counts of the superadditive and convex cones");
  table->add_option("--n-max", n_max, "Largest player count")->capture_default_str();
  table->add_flag("--allow-long", allow_long, "Permit n above 4");
  table->add_flag("--json", as_json, "JSON instead of a text table");

  auto* oracle = app.add_subcommand("oracle", "Sampling cross-check of the closed-form intervals");
  oracle->add_option("file", path, "Game file, or - for stdin")->required();
  oracle->add_option("--concept", concept_name, "shapley or tau")->capture_default_str();
  oracle->add_option("--class", class_name, "Game class (default: positive, or zero-normalized-positive for tau)");
  oracle->add_option("--samples", samples, "Number of sampled extensions")->capture_default_str();
  oracle->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  oracle->add_flag("--corrupt-interval", corrupt)->group("");

  auto resolve_class = [&] {
    if (!class_name.empty()) return parse_game_class(class_name);
    return concept_name == "tau" ? GameClass::kZeroNormalizedPositive : GameClass::kPositive;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*table) {
      const Json t = cmd_table1(n_max, allow_long);
      out << (as_json ? t.dump(2) + "\n" : format_table1(t));
      return kExitOk;
    }
    const GameFile file = parse_game_file(read_input(path));
    if (*check) {
      out << cmd_check(file).dump(2) << '\n';
    } else if (*ext) {
      out << cmd_extensions(file, resolve_class(), parse_what(what_name), dump ? &err : nullptr)
                 .dump(2)
          << '\n';
    } else if (*approx) {
      out << cmd_approx(file, concept_name, resolve_class()).dump(2) << '\n';
    } else if (*oracle) {
      const OracleReport r =
          cmd_oracle(file, parse_concept(concept_name), resolve_class(), samples, seed, corrupt);
      out << r.report.dump(2) << '\n';
      if (!r.pass) {
        err << "oracle: a sampled value escaped the closed-form interval\n";
        return kExitInvariant;
      }
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NotExtendableError& e) {
    err << "not extendable: " << e.what() << '\n';
    return kExitNotExtendable;
  } catch (const InvariantError& e) {
    err << "invariant breach: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace coopgap::cli

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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coopgap/approximations.hpp"
#include "coopgap/cli.hpp"
#include "coopgap/errors.hpp"
#include "coopgap/extension_polytope.hpp"
#include "coopgap/extensions.hpp"
#include "coopgap/game.hpp"
#include "coopgap/incomplete.hpp"
#include "coopgap/polyhedron.hpp"
#include "coopgap/solutions.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; int and "p/q" strings
// are accepted on the way in.
namespace pybind11::detail {

template <>
struct type_caster<coopgap::Rational> {
  PYBIND11_TYPE_CASTER(coopgap::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (py::isinstance<py::float_>(src)) return false;
    const py::module_ fractions = py::module_::import("fractions");
    if (!py::isinstance<py::int_>(src) && !py::isinstance<py::str>(src) &&
        !py::isinstance(src, fractions.attr("Fraction"))) {
      return false;
    }
    value = coopgap::parse_rational(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const coopgap::Rational& r, return_value_policy, handle) {
    const py::module_ fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(coopgap::to_string(r)).release();
  }
};

template <>
struct type_caster<coopgap::Coalition> {
  PYBIND11_TYPE_CASTER(coopgap::Coalition, const_name("tuple[int, ...]"));

  bool load(handle src, bool) {
    if (!src || py::isinstance<py::str>(src) || !py::isinstance<py::iterable>(src)) return false;
    coopgap::Mask mask = 0;
    for (handle item : py::reinterpret_borrow<py::iterable>(src)) {
      if (!py::isinstance<py::int_>(item)) return false;
      const long p = item.cast<long>();
      if (p < 0 || p >= coopgap::kMaxPlayers) throw coopgap::ValidationError("player index out of range");
      mask |= coopgap::Mask{1} << p;
    }
    value = coopgap::Coalition(mask);
    return true;
  }

  static handle cast(const coopgap::Coalition& s, return_value_policy, handle) {
    py::tuple out(s.size());
    std::size_t j = 0;
    for (coopgap::Player p : s.members()) out[j++] = py::int_(p);
    return out.release();
  }
};

}  // namespace pybind11::detail

namespace coopgap {
namespace {

using Worths = std::map<Coalition, Rational>;

TUGame to_game(int n, const Worths& worths) {
  std::vector<Rational> values(coalition_count(n));
  for (Mask m = 1; m < values.size(); ++m) {
    const auto it = worths.find(Coalition(m));
    if (it == worths.end()) throw ValidationError("missing worth of " + to_string(Coalition(m)));
    values[m] = it->second;
  }
  for (const auto& [s, w] : worths) {
    if (s.is_empty() && sgn(w) != 0) throw ValidationError("the empty coalition must have worth 0");
    if (!s.subset_of(Coalition::grand(n))) throw ValidationError("coalition outside the player set");
  }
  return TUGame(n, std::move(values));
}

Worths to_worths(const SetFunction& v) {
  Worths out;
  for (Mask m = 1; m < coalition_count(v.players()); ++m) out.emplace(Coalition(m), v(Coalition(m)));
  return out;
}

std::vector<Worths> to_worths(const std::vector<TUGame>& games) {
  std::vector<Worths> out;
  for (const TUGame& g : games) out.push_back(to_worths(g));
  return out;
}

PlayerCentered centered(int n, Player center, const Worths& known) {
  Worths nonempty;
  for (const auto& [s, w] : known) {
    if (!s.is_empty()) nonempty.emplace(s, w);
  }
  return PlayerCentered::from_values(n, center, nonempty);
}

std::vector<std::pair<Rational, Rational>> intervals(const SolutionBounds& b) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const PlayerBound& p : b.per_player) out.emplace_back(p.interval.lo, p.interval.hi);
  return out;
}

py::dict core_dict(const CoreBounds& b) {
  py::dict out;
  out["outer"] = vertex_enumeration(b.outer).vertices;
  out["outer_game"] = to_worths(b.outer_game);
  if (b.inner) {
    out["inner"] = vertex_enumeration(*b.inner).vertices;
    out["inner_game"] = to_worths(*b.inner_game);
  } else {
    out["inner"] = py::none();
    out["inner_game"] = py::none();
  }
  return out;
}

}  // namespace
}  // namespace coopgap

PYBIND11_MODULE(_coopgap, m) {
  using namespace coopgap;
  m.doc() = "Exact analysis of player-centered incomplete cooperative games";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NotExtendableError>(m, "NotExtendableError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.attr("GAME_CLASSES") = [] {
    std::vector<std::string> names;
    for (GameClass cls : kAllGameClasses) names.emplace_back(to_string(cls));
    return names;
  }();

  // Complete games: dict from coalition tuples to worths.
  m.def("mobius", [](int n, const Worths& v) { return to_worths(mobius_forward(to_game(n, v))); },
        py::arg("n"), py::arg("worths"));
  m.def("mobius_inverse",
        [](int n, const Worths& mass) {
          const TUGame g = to_game(n, mass);
          return to_worths(mobius_inverse(MobiusVector(n, {g.by_mask().begin(), g.by_mask().end()})));
        },
        py::arg("n"), py::arg("mass"));
  m.def("belongs_to",
        [](int n, const Worths& v, const std::string& cls) { return belongs_to(to_game(n, v), parse_game_class(cls)); },
        py::arg("n"), py::arg("worths"), py::arg("cls"));
  m.def("shapley", [](int n, const Worths& v) { return shapley(to_game(n, v)); }, py::arg("n"), py::arg("worths"));
  m.def("tau", [](int n, const Worths& v) { return tau_convex(to_game(n, v)); }, py::arg("n"), py::arg("worths"));
  m.def("core_vertices", [](int n, const Worths& v) { return vertex_enumeration(core_hrep(to_game(n, v))).vertices; },
        py::arg("n"), py::arg("worths"));

  // Player-centered games: the known worths, keyed by coalitions containing center.
  m.def("extendable",
        [](int n, Player center, const Worths& known, const std::string& cls) {
          return extendable(centered(n, center, known), parse_game_class(cls));
        },
        py::arg("n"), py::arg("center"), py::arg("known"), py::arg("cls"));
  m.def("partial_mobius",
        [](int n, Player center, const Worths& known) { return partial_mobius(centered(n, center, known)); },
        py::arg("n"), py::arg("center"), py::arg("known"));
  m.def("positive_vertices",
        [](int n, Player center, const Worths& known) {
          return to_worths(enumerate_positive_vertices(centered(n, center, known)));
        },
        py::arg("n"), py::arg("center"), py::arg("known"));
  m.def("monotone_vertices",
        [](int n, Player center, const Worths& known) {
          return to_worths(enumerate_monotone_vertices(centered(n, center, known)));
        },
        py::arg("n"), py::arg("center"), py::arg("known"));
  m.def("extension_vertices",
        [](int n, Player center, const Worths& known, const std::string& cls) {
          const PlayerCentered g = centered(n, center, known);
          const VRep v = vertex_enumeration(build_extension_polytope(g, parse_game_class(cls)));
          std::vector<TUGame> games;
          for (const auto& x : v.vertices) games.push_back(from_coordinates(n, x));
          return to_worths(games);
        },
        py::arg("n"), py::arg("center"), py::arg("known"), py::arg("cls"));
  m.def("superadditive_witness",
        [](int n, Player center, const Worths& known) {
          return to_worths(superadditive_witness(centered(n, center, known)));
        },
        py::arg("n"), py::arg("center"), py::arg("known"));
  m.def("sample_extension",
        [](int n, Player center, const Worths& known, const std::string& cls, std::uint64_t seed) {
          return to_worths(sample_extension(centered(n, center, known), parse_game_class(cls), seed));
        },
        py::arg("n"), py::arg("center"), py::arg("known"), py::arg("cls"), py::arg("seed") = 0);
  m.def("shapley_bounds",
        [](int n, Player center, const Worths& known, const std::string& cls) {
          return intervals(shapley_bounds(centered(n, center, known), parse_game_class(cls)));
        },
        py::arg("n"), py::arg("center"), py::arg("known"), py::arg("cls") = "positive");
  m.def("tau_bounds",
        [](int n, Player center, const Worths& known) { return intervals(tau_bounds(centered(n, center, known))); },
        py::arg("n"), py::arg("center"), py::arg("known"));
  m.def("empirical_bounds",
        [](int n, Player center, const Worths& known, const std::string& cls, const std::string& concept_name,
           std::size_t samples, std::uint64_t seed) {
          return intervals(empirical_bounds(centered(n, center, known), parse_game_class(cls),
                                            parse_concept(concept_name), samples, seed));
        },
        py::arg("n"), py::arg("center"), py::arg("known"), py::arg("cls"), py::arg("concept") = "shapley",
        py::arg("samples") = 200, py::arg("seed") = 0);
  m.def("core_bounds",
        [](int n, Player center, const Worths& known, const std::string& cls) {
          return core_dict(core_bounds(centered(n, center, known), parse_game_class(cls)));
        },
        py::arg("n"), py::arg("center"), py::arg("known"), py::arg("cls") = "positive");

  m.def("ray_census",
        [](int n) {
          const RayCensus c = ray_census(n);
          py::dict out;
          out["superadditive_rays"] = c.superadditive_rays;
          out["convex_rays"] = c.convex_rays;
          out["neg_unanimity_rays"] = c.neg_unanimity_rays;
          out["es0_rays"] = c.es0_rays;
          return out;
        },
        py::arg("n"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}

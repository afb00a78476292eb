# Copyright 2026 The coopgap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact analysis of player-centered incomplete cooperative games.

Coalitions are tuples of player indices, worths are fractions.Fraction.
Complete games are dicts over every nonempty coalition; player-centered games
pass the worths of the coalitions that contain the center.
"""

from ._coopgap import (
    GAME_CLASSES,
    CapacityError,
    InvariantError,
    NotExtendableError,
    ValidationError,
    belongs_to,
    core_bounds,
    core_vertices,
    empirical_bounds,
    extendable,
    extension_vertices,
    mobius,
    mobius_inverse,
    monotone_vertices,
    partial_mobius,
    positive_vertices,
    ray_census,
    run_cli,
    sample_extension,
    shapley,
    shapley_bounds,
    superadditive_witness,
    tau,
    tau_bounds,
)

__all__ = [
    "GAME_CLASSES",
    "CapacityError",
    "InvariantError",
    "NotExtendableError",
    "ValidationError",
    "belongs_to",
    "core_bounds",
    "core_vertices",
    "empirical_bounds",
    "extendable",
    "extension_vertices",
    "mobius",
    "mobius_inverse",
    "monotone_vertices",
    "partial_mobius",
    "positive_vertices",
    "ray_census",
    "run_cli",
    "sample_extension",
    "shapley",
    "shapley_bounds",
    "superadditive_witness",
    "tau",
    "tau_bounds",
]

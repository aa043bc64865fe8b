# Copyright 2026 The nilsem Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Commutative nilpotent semigroups of full transformations.

Transformations are tuples of 1-based images: (5, 5, 1, 5, 5, 5) sends
point 3 to 1 and every other point to 5. compose(f, g) applies f first.
"""

from ._nilsem import (
    InvariantViolation,
    ParseError,
    PreconditionError,
    Semigroup,
    alpha,
    branching_lemmas_ok,
    certify_max,
    check_xi_inequalities,
    closure,
    compose,
    export_dot,
    max_null,
    nullify,
    parse,
    power,
    random_cn,
    rank,
    s_partition,
    tree_levels,
    words,
    xi,
)

__all__ = [
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "Semigroup",
    "alpha",
    "branching_lemmas_ok",
    "certify_max",
    "check_xi_inequalities",
    "closure",
    "compose",
    "export_dot",
    "max_null",
    "nullify",
    "parse",
    "power",
    "random_cn",
    "rank",
    "s_partition",
    "tree_levels",
    "words",
    "xi",
]

# Copyright 2025 Visionary Future
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

from .oracle import commutator_matrix, kernel_dimension, least_squares_solve
from .solver import check_solvable, commutator_map, solve, structural_decompositions, substitution_residual
from .types import (
    FAMILY_NOTE,
    IDENTITY_COEFF,
    RESIDUAL_NAMES,
    SKEW_SYMMETRY,
    V_SCALAR_CONSISTENCY,
    W_PATTERN_CONSISTENCY,
    CommutatorRHS,
    CommutatorSolution,
    SolvabilityReport,
)

__all__ = [
    "FAMILY_NOTE",
    "IDENTITY_COEFF",
    "RESIDUAL_NAMES",
    "SKEW_SYMMETRY",
    "V_SCALAR_CONSISTENCY",
    "W_PATTERN_CONSISTENCY",
    "CommutatorRHS",
    "CommutatorSolution",
    "SolvabilityReport",
    "check_solvable",
    "commutator_map",
    "commutator_matrix",
    "kernel_dimension",
    "least_squares_solve",
    "solve",
    "structural_decompositions",
    "substitution_residual",
]

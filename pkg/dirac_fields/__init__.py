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

__version__ = "0.1.0"

from .classification import (
    HermiticityClass,
    SymmetryClass,
    classify_hermiticity,
    classify_symmetry,
    hermiticity_criterion,
    symmetry_criterion,
)
from .common.exceptions import SpinorFieldError
from .commutator import CommutatorRHS, check_solvable, commutator_map, solve
from .conversion import OperatorDecomposition, decompose, operator_basis, reconstruct
from .frames import FrameChange, FrameContext, apply_frame_change, canonical_context
from .identities import IdentityReport, run_all

__all__ = [
    "CommutatorRHS",
    "FrameChange",
    "FrameContext",
    "HermiticityClass",
    "IdentityReport",
    "OperatorDecomposition",
    "SpinorFieldError",
    "SymmetryClass",
    "__version__",
    "apply_frame_change",
    "canonical_context",
    "check_solvable",
    "classify_hermiticity",
    "classify_symmetry",
    "commutator_map",
    "decompose",
    "hermiticity_criterion",
    "operator_basis",
    "reconstruct",
    "run_all",
    "solve",
    "symmetry_criterion",
]

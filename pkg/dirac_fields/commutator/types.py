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

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field

from ..common.exceptions import DimensionError
from ..conversion import OperatorDecomposition, decompose
from ..frames import FrameContext
from ..linalg import CMatrix4, as_matrix4, freeze

IDENTITY_COEFF = "identity_coeff"
SKEW_SYMMETRY = "skew_symmetry"
V_SCALAR_CONSISTENCY = "v_scalar_consistency"
W_PATTERN_CONSISTENCY = "w_pattern_consistency"

RESIDUAL_NAMES = (IDENTITY_COEFF, SKEW_SYMMETRY, V_SCALAR_CONSISTENCY, W_PATTERN_CONSISTENCY)

FAMILY_NOTE = "general solution F = F0 + u·1"


@dataclass(frozen=True, eq=False)
class CommutatorRHS:
    """Right-hand sides ``V_0..V_3`` of ``[F, γ_m] = V_m`` with their decompositions.

    Build instances with :meth:`from_operators` so that ``decs`` always
    matches ``v_ops`` in the frame pair they were decomposed in.
    """

    v_ops: NDArray[np.complex128]
    decs: Tuple[OperatorDecomposition, ...]

    def __post_init__(self) -> None:
        ops = np.stack([as_matrix4(op, name=f"V_{m}") for m, op in enumerate(self.v_ops)])
        if ops.shape != (4, 4, 4) or len(self.decs) != 4:
            raise DimensionError(
                "a commutator right-hand side needs exactly four operators",
                details={"operators": ops.shape[0], "decompositions": len(self.decs)},
            )
        object.__setattr__(self, "v_ops", freeze(ops))
        object.__setattr__(self, "decs", tuple(self.decs))

    @classmethod
    def from_operators(cls, v_ops: Sequence[Any], ctx: FrameContext) -> "CommutatorRHS":
        ops = [as_matrix4(op, name=f"V_{m}") for m, op in enumerate(v_ops)]
        return cls(v_ops=np.array(ops), decs=tuple(decompose(op, ctx) for op in ops))

    @classmethod
    def zeros(cls, ctx: FrameContext) -> "CommutatorRHS":
        return cls.from_operators(np.zeros((4, 4, 4), dtype=np.complex128), ctx)

    def max_abs(self) -> float:
        return max(dec.max_abs() for dec in self.decs)


class SolvabilityReport(BaseModel):
    """Outcome of the solvability test for a commutator system."""

    model_config = ConfigDict(frozen=True)

    solvable: bool = Field(..., description="True iff every residual is within tolerance")
    residuals: Dict[str, float] = Field(..., description="Relative residual of each solvability condition")
    tolerance: float = Field(..., description="Threshold the residuals were compared against")
    recovered: Optional[OperatorDecomposition] = Field(
        None, description="Decomposition of the particular solution with u = 0, when solvable"
    )


@dataclass(frozen=True, eq=False)
class CommutatorSolution:
    """Particular solution ``F0`` (trace-free) of a solvable commutator system."""

    f0: CMatrix4
    decomposition: OperatorDecomposition
    substitution_residual: float
    family_note: str = FAMILY_NOTE

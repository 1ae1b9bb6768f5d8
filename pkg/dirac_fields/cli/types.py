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

"""Documents exchanged by the command line and the HTTP surface.

Complex numbers are ``[re, im]`` pairs, matrices are four rows of four
entries (row = first index), and every document names its ``kind``.
"""

from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from ..classification import HermiticityVerdict, SymmetryVerdict

ComplexPair = Tuple[float, float]
ComplexRow = Annotated[List[ComplexPair], Field(min_length=4, max_length=4)]
ComplexMatrix = Annotated[List[ComplexRow], Field(min_length=4, max_length=4)]
ComplexVector = Annotated[List[ComplexPair], Field(min_length=4, max_length=4)]
RealRow = Annotated[List[float], Field(min_length=4, max_length=4)]
RealMatrix = Annotated[List[RealRow], Field(min_length=4, max_length=4)]


class _Document(BaseModel):
    model_config = ConfigDict(allow_inf_nan=False, extra="forbid", frozen=True)


class OperatorDocument(_Document):
    kind: Literal["operator"] = "operator"
    matrix: ComplexMatrix = Field(..., description="Operator components F^a_b")
    note: Optional[str] = Field(None, description="Free-text annotation, e.g. the solution family")


class DecompositionDocument(_Document):
    kind: Literal["decomposition"] = "decomposition"
    u: ComplexPair
    v: ComplexPair
    u_cov: ComplexVector
    v_cov: ComplexVector
    w: ComplexMatrix = Field(..., description="Antisymmetric w_pq, both triangles")


class RhsDocument(_Document):
    kind: Literal["rhs"] = "rhs"
    operators: Annotated[List[ComplexMatrix], Field(min_length=4, max_length=4)] = Field(
        ..., description="V_0..V_3"
    )


class FrameChangeDocument(_Document):
    kind: Literal["frame-change"] = "frame-change"
    spatial: RealMatrix = Field(..., description="L, columns are the new spatial frame vectors")
    spinor: ComplexMatrix = Field(..., description="S, columns are the new spinor frame vectors")


MatrixDocument = Annotated[
    Union[OperatorDocument, DecompositionDocument, RhsDocument, FrameChangeDocument],
    Field(discriminator="kind"),
]

matrix_document_adapter: TypeAdapter = TypeAdapter(MatrixDocument)


class IdentitySummaryLine(BaseModel):
    """One ``verify`` output line: an identity aggregated over every checked context."""

    model_config = ConfigDict(populate_by_name=True)

    name: str
    residual: float = Field(..., description="Largest residual over all contexts")
    tolerance: float = Field(..., description="Tolerance applied to the named frame")
    passed: bool = Field(..., alias="pass")
    contexts: int
    failures: int


class VerifySummary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: bool = Field(..., alias="pass")
    identities: int
    contexts: int
    trials: int
    seed: int
    frame: str


class ClassificationReport(BaseModel):
    symmetry: SymmetryVerdict
    hermiticity: HermiticityVerdict
    criteria: Dict[str, str] = Field(..., description="Decomposition-level classifications")
    criteria_agree: bool


class ObstructionReport(BaseModel):
    solvable: bool
    residuals: Dict[str, float]
    tolerance: float

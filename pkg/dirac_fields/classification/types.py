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

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class SymmetryClass(str, Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew"
    MIXED = "mixed"


class HermiticityClass(str, Enum):
    HERMITIAN = "hermitian"
    ANTIHERMITIAN = "antihermitian"
    MIXED = "mixed"


class SymmetryVerdict(BaseModel):
    """Symmetry of an operator with respect to the spinor metric ``d``."""

    model_config = ConfigDict(frozen=True)

    symmetric_residual: float = Field(..., description="Relative residual of Fᵀd − dF")
    skew_residual: float = Field(..., description="Relative residual of Fᵀd + dF")
    classification: SymmetryClass


class HermiticityVerdict(BaseModel):
    """Hermiticity of an operator with respect to the Dirac form ``D``."""

    model_config = ConfigDict(frozen=True)

    hermitian_residual: float = Field(..., description="Relative residual of D F̄ − FᵀD")
    antihermitian_residual: float = Field(..., description="Relative residual of D F̄ + FᵀD")
    classification: HermiticityClass

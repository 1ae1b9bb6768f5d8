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

from pydantic import BaseModel, ConfigDict, Field


class IdentityReport(BaseModel):
    """Outcome of one identity check on one frame context."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    name: str = Field(..., description="Identity identifier, e.g. 'clifford'")
    residual: float = Field(..., description="Largest entrywise residual")
    tolerance: float = Field(..., description="Threshold the residual was compared against")
    passed: bool = Field(..., alias="pass", description="Whether residual <= tolerance")

    @classmethod
    def evaluate(cls, name: str, residual: float, tolerance: float) -> "IdentityReport":
        return cls(name=name, residual=residual, tolerance=tolerance, passed=residual <= tolerance)

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

from dataclasses import dataclass, replace
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import GetCoreSchemaHandler
from pydantic_core import core_schema

from ..common.constants import SKEW_TOLERANCE
from ..common.exceptions import DimensionError, NonSkewError
from ..linalg import CMatrix4, CVector4, as_matrix4, as_scalar, as_vector4, freeze, max_abs

# Positions of the 16 expansion coefficients, in operator_basis order.
SCALAR_SLOT = 0
CHIRAL_SLOT = 1
VECTOR_SLOTS = slice(2, 6)
CHIRAL_VECTOR_SLOTS = slice(6, 10)
PAIR_SLOTS = slice(10, 16)
PAIR_INDICES = [(p, q) for p in range(4) for q in range(p + 1, 4)]


@dataclass(frozen=True, eq=False)
class OperatorDecomposition:
    """Spatial data ``(u, v, u_k, v_k, w_pq)`` of a spin-operator.

    ``F = u 1 + v H + Σ γ^k u_k + Σ H γ^k v_k + Σ γ^p γ^q w_pq`` with ``w``
    antisymmetric; both triangles of ``w`` are stored.

    Raises:
        NonSkewError: When ``w + wᵀ`` exceeds the skew tolerance.
    """

    u: complex
    v: complex
    u_cov: CVector4
    v_cov: CVector4
    w: CMatrix4

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", as_scalar(self.u, name="u"))
        object.__setattr__(self, "v", as_scalar(self.v, name="v"))
        object.__setattr__(self, "u_cov", freeze(as_vector4(self.u_cov, name="u_cov")))
        object.__setattr__(self, "v_cov", freeze(as_vector4(self.v_cov, name="v_cov")))

        w = freeze(as_matrix4(self.w, name="w"))
        skew_residual = max_abs(w + w.T)
        if skew_residual > SKEW_TOLERANCE * max(1.0, max_abs(w)):
            raise NonSkewError(
                f"w is not antisymmetric: max |w + wᵀ| = {skew_residual:.3e}",
                details={"residual": skew_residual},
            )
        object.__setattr__(self, "w", w)

    @classmethod
    def __get_pydantic_core_schema__(cls, source: Any, handler: GetCoreSchemaHandler) -> core_schema.CoreSchema:
        return core_schema.is_instance_schema(cls)

    @classmethod
    def zeros(cls) -> "OperatorDecomposition":
        return cls(u=0, v=0, u_cov=np.zeros(4), v_cov=np.zeros(4), w=np.zeros((4, 4)))

    @classmethod
    def from_coefficients(cls, coefficients: Any) -> "OperatorDecomposition":
        """Inverse of :meth:`coefficients`."""
        c = np.asarray(coefficients, dtype=np.complex128)
        if c.shape != (16,):
            raise DimensionError(f"expected 16 coefficients, got shape {c.shape}", details={"shape": c.shape})
        w = np.zeros((4, 4), dtype=np.complex128)
        for value, (p, q) in zip(c[PAIR_SLOTS], PAIR_INDICES):
            w[p, q] = value / 2
            w[q, p] = -value / 2
        return cls(
            u=c[SCALAR_SLOT],
            v=c[CHIRAL_SLOT],
            u_cov=c[VECTOR_SLOTS],
            v_cov=c[CHIRAL_VECTOR_SLOTS],
            w=w,
        )

    def coefficients(self) -> NDArray[np.complex128]:
        """The 16 coefficients over ``operator_basis``; pair slots hold ``2 w_pq`` for p < q."""
        pairs = [2 * self.w[p, q] for p, q in PAIR_INDICES]
        return np.concatenate([[self.u, self.v], self.u_cov, self.v_cov, pairs])

    def without_scalar(self) -> "OperatorDecomposition":
        return replace(self, u=0j)

    def max_abs(self) -> float:
        return max(abs(self.u), abs(self.v), max_abs(self.u_cov), max_abs(self.v_cov), max_abs(self.w))

    def max_abs_diff(self, other: "OperatorDecomposition") -> float:
        return max(
            abs(self.u - other.u),
            abs(self.v - other.v),
            max_abs(self.u_cov - other.u_cov),
            max_abs(self.v_cov - other.v_cov),
            max_abs(self.w - other.w),
        )

    def __add__(self, other: "OperatorDecomposition") -> "OperatorDecomposition":
        return OperatorDecomposition(
            u=self.u + other.u,
            v=self.v + other.v,
            u_cov=self.u_cov + other.u_cov,
            v_cov=self.v_cov + other.v_cov,
            w=self.w + other.w,
        )

    def scaled(self, factor: complex) -> "OperatorDecomposition":
        return OperatorDecomposition(
            u=factor * self.u,
            v=factor * self.v,
            u_cov=factor * self.u_cov,
            v_cov=factor * self.v_cov,
            w=factor * self.w,
        )

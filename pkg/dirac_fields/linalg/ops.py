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

from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from ..common.constants import SINGULAR_BASIS_TOLERANCE
from ..common.exceptions import DimensionError, SingularBasisError
from .types import CMatrix4


def mat_mul(a: CMatrix4, b: CMatrix4) -> CMatrix4:
    return a @ b


def trace(a: CMatrix4) -> complex:
    return complex(np.trace(a))


def commutator(a: CMatrix4, b: CMatrix4) -> CMatrix4:
    """Return ``ab - ba``."""
    return a @ b - b @ a


def anticommutator(a: CMatrix4, b: CMatrix4) -> CMatrix4:
    """Return ``ab + ba``."""
    return a @ b + b @ a


def max_abs_diff(a: NDArray, b: NDArray) -> float:
    """Largest entrywise modulus of ``a - b``; the residual metric used everywhere."""
    diff = np.asarray(a) - np.asarray(b)
    if diff.size == 0:
        return 0.0
    return float(np.max(np.abs(diff)))


def max_abs(a: NDArray) -> float:
    arr = np.asarray(a)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def solve_linear_16(basis: Sequence[CMatrix4], target: CMatrix4) -> NDArray[np.complex128]:
    """Expand *target* over 16 basis matrices.

    Args:
        basis: Sixteen 4x4 matrices, expected to be linearly independent.
        target: Matrix to expand.

    Returns:
        Coefficients ``c`` with ``sum(c[i] * basis[i]) == target``.

    Raises:
        DimensionError: When the basis does not hold exactly 16 matrices.
        SingularBasisError: When the Gram matrix of the basis is rank-deficient.
    """
    if len(basis) != 16:
        raise DimensionError(f"expected 16 basis matrices, got {len(basis)}", details={"count": len(basis)})

    columns = np.stack([np.asarray(m, dtype=np.complex128).reshape(16) for m in basis], axis=1)
    gram = columns.conj().T @ columns
    singular_values = np.linalg.svd(gram, compute_uv=False)
    if singular_values[-1] <= SINGULAR_BASIS_TOLERANCE * max(singular_values[0], 1.0):
        raise SingularBasisError(
            "basis matrices are linearly dependent",
            details={"smallest_singular_value": float(singular_values[-1])},
        )

    return np.linalg.solve(columns, np.asarray(target, dtype=np.complex128).reshape(16))

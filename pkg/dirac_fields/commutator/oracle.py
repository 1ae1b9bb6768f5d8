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

"""Least-squares view of the commutator equations over the full 16-dimensional
operator space, independent of the structural solver."""

import logging
from typing import Tuple

import numpy as np
from numpy.typing import NDArray

from ..common.constants import SINGULAR_BASIS_TOLERANCE
from ..frames import FrameContext
from ..linalg import CMatrix4, max_abs
from .types import CommutatorRHS

logger = logging.getLogger(__name__)


def commutator_matrix(ctx: FrameContext) -> NDArray[np.complex128]:
    """Matrix of ``F ↦ ([F, γ_0], …, [F, γ_3])``, shape ``(64, 16)``.

    Column ``4a + b`` is the image of the matrix unit ``E_ab``; rows stack the
    row-major entries of the four commutators.
    """
    columns = []
    for a in range(4):
        for b in range(4):
            unit = np.zeros((4, 4), dtype=np.complex128)
            unit[a, b] = 1.0
            columns.append(np.concatenate([(unit @ g - g @ unit).reshape(16) for g in ctx.gamma_lower]))
    return np.stack(columns, axis=1)


def least_squares_solve(rhs: CommutatorRHS, ctx: FrameContext) -> Tuple[CMatrix4, float]:
    """Minimum-norm least-squares solution of the 64 scalar commutator equations.

    Returns:
        ``(F, residual)`` where the residual is ``max |M f − b|``. The minimum-norm
        solution is orthogonal to the unit operator, so ``tr F = 0``.
    """
    matrix = commutator_matrix(ctx)
    target = np.asarray(rhs.v_ops).reshape(64)
    solution, *_ = np.linalg.lstsq(matrix, target, rcond=None)
    residual = max_abs(matrix @ solution - target)
    logger.debug("Least-squares commutator residual %.3e", residual)
    return solution.reshape(4, 4), residual


def kernel_dimension(ctx: FrameContext, tol: float = SINGULAR_BASIS_TOLERANCE) -> int:
    """Dimension of the space of operators commuting with every ``γ_m``; 1 in every frame."""
    singular_values = np.linalg.svd(commutator_matrix(ctx), compute_uv=False)
    return int(np.sum(singular_values <= tol * singular_values[0]))

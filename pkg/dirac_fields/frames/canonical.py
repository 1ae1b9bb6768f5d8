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

"""Basic fields in a canonically orthonormal chiral spinor frame paired with
its positively polarized right orthonormal spatial frame."""

from itertools import combinations, product
from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from ..linalg import freeze

MINKOWSKI = freeze(np.diag([1.0, -1.0, -1.0, -1.0]))

SPINOR_METRIC_LOWER = freeze(
    np.array(
        [
            [0, 1, 0, 0],
            [-1, 0, 0, 0],
            [0, 0, 0, -1],
            [0, 0, 1, 0],
        ],
        dtype=np.complex128,
    )
)

SPINOR_METRIC_UPPER = freeze(
    np.array(
        [
            [0, -1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, -1, 0],
        ],
        dtype=np.complex128,
    )
)

CHIRALITY = freeze(np.diag([1, 1, -1, -1]).astype(np.complex128))

DIRAC_FORM = freeze(
    np.array(
        [
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
        ],
        dtype=np.complex128,
    )
)

GAMMA_UPPER = freeze(
    np.array(
        [
            [
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [1, 0, 0, 0],
                [0, 1, 0, 0],
            ],
            [
                [0, 0, 0, -1],
                [0, 0, -1, 0],
                [0, 1, 0, 0],
                [1, 0, 0, 0],
            ],
            [
                [0, 0, 0, 1j],
                [0, 0, -1j, 0],
                [0, -1j, 0, 0],
                [1j, 0, 0, 0],
            ],
            [
                [0, 0, -1, 0],
                [0, 0, 0, 1],
                [1, 0, 0, 0],
                [0, -1, 0, 0],
            ],
        ],
        dtype=np.complex128,
    )
)


def permutation_parity(indices: Sequence[int]) -> int:
    """Sign of the permutation *indices*; 0 when an index repeats."""
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for i, j in combinations(range(len(indices)), 2) if indices[i] > indices[j])
    return -1 if inversions % 2 else 1


def _build_levi_civita() -> NDArray[np.float64]:
    epsilon = np.zeros((4, 4, 4, 4))
    for index in product(range(4), repeat=4):
        epsilon[index] = permutation_parity(index)
    return freeze(epsilon)


LEVI_CIVITA = _build_levi_civita()


def levi_civita() -> NDArray[np.float64]:
    """Rank-4 Levi-Civita symbol with ε_0123 = +1 (read-only)."""
    return LEVI_CIVITA

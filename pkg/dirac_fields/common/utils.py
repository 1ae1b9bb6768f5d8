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

"""Seeded sampling helpers shared by the CLI, the HTTP surface and the tests.

All randomness flows through :func:`make_rng`, so one seed reproduces the
same sequence of frames and operators on every platform.
"""

import logging
from typing import Optional

import numpy as np

from ..conversion.types import OperatorDecomposition
from ..frames.types import FrameChange
from ..linalg import CMatrix4
from .constants import DEFAULT_SEED, RANDOM_FRAME_MIN_DETERMINANT

logger = logging.getLogger(__name__)

MAX_REDRAWS = 1000


def make_rng(seed: Optional[int] = DEFAULT_SEED) -> np.random.Generator:
    """Return a PCG64 generator seeded through ``SeedSequence``."""
    return np.random.default_rng(seed)


def _uniform_complex(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, size=shape) + 1j * rng.uniform(-1.0, 1.0, size=shape)


def random_frame_change(
    rng: np.random.Generator,
    min_det: float = RANDOM_FRAME_MIN_DETERMINANT,
    max_condition: Optional[float] = None,
) -> FrameChange:
    """Draw a frame change with entries uniform in [-1, 1].

    The spinor part has independent uniform real and imaginary parts. A draw
    is rejected and repeated when either determinant has modulus below
    *min_det*, or when *max_condition* is given and either matrix has a
    larger 2-norm condition number.

    Raises:
        RuntimeError: When no acceptable draw appears within ``MAX_REDRAWS`` attempts.
    """
    for attempt in range(MAX_REDRAWS):
        spatial = rng.uniform(-1.0, 1.0, size=(4, 4))
        spinor = _uniform_complex(rng, (4, 4))
        if abs(np.linalg.det(spatial)) < min_det or abs(np.linalg.det(spinor)) < min_det:
            continue
        if max_condition is not None and max(np.linalg.cond(spatial), np.linalg.cond(spinor)) > max_condition:
            continue
        if attempt:
            logger.debug("Random frame change accepted after %d redraws", attempt)
        return FrameChange(spatial=spatial, spinor=spinor)

    raise RuntimeError(f"no frame change with |det| >= {min_det} after {MAX_REDRAWS} draws")


def random_operator(rng: np.random.Generator) -> CMatrix4:
    """A 4x4 complex matrix with real and imaginary parts uniform in [-1, 1]."""
    return _uniform_complex(rng, (4, 4))


def random_antisymmetric(rng: np.random.Generator) -> CMatrix4:
    a = _uniform_complex(rng, (4, 4))
    return a - a.T


def random_decomposition(rng: np.random.Generator) -> OperatorDecomposition:
    """A decomposition with every coefficient uniform in the unit square."""
    u, v = _uniform_complex(rng, 2)
    return OperatorDecomposition(
        u=complex(u),
        v=complex(v),
        u_cov=_uniform_complex(rng, 4),
        v_cov=_uniform_complex(rng, 4),
        w=random_antisymmetric(rng),
    )

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
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from ..common.constants import MIN_FRAME_DETERMINANT
from ..common.exceptions import SingularFrameChangeError
from ..linalg import CMatrix4, RMatrix4, as_matrix4, as_real_matrix4, freeze


class Orientation(Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def sign(self) -> int:
        return 1 if self is Orientation.RIGHT else -1


@dataclass(frozen=True, eq=False)
class MetricComponents:
    """Spacetime metric: ``lower`` holds g_ij, ``upper`` holds g^ij."""

    lower: RMatrix4
    upper: RMatrix4


@dataclass(frozen=True, eq=False)
class VolumeTensor:
    """Volume tensor ω in both index positions, indexed ``[i, j, k, m]``."""

    lower: NDArray[np.float64]
    upper: NDArray[np.float64]
    orientation: Orientation


@dataclass(frozen=True, eq=False)
class FrameChange:
    """A spatial frame change ``L`` paired with a spinor frame change ``S``.

    Columns of each matrix express the new frame vectors in the canonical
    frame. The two are independent inputs; no spin-group pairing between
    them is enforced.
    """

    spatial: RMatrix4
    spinor: CMatrix4

    def __post_init__(self) -> None:
        spatial = freeze(as_real_matrix4(self.spatial, name="spatial frame change"))
        spinor = freeze(as_matrix4(self.spinor, name="spinor frame change"))

        det_spatial = float(np.linalg.det(spatial))
        det_spinor = complex(np.linalg.det(spinor))
        if abs(det_spatial) <= MIN_FRAME_DETERMINANT or abs(det_spinor) <= MIN_FRAME_DETERMINANT:
            raise SingularFrameChangeError(
                f"frame change is not invertible: |det L| = {abs(det_spatial):.3e}, |det S| = {abs(det_spinor):.3e}",
                details={"det_spatial": det_spatial, "det_spinor": abs(det_spinor)},
            )

        object.__setattr__(self, "spatial", spatial)
        object.__setattr__(self, "spinor", spinor)

    @classmethod
    def identity(cls) -> "FrameChange":
        return cls(spatial=np.eye(4), spinor=np.eye(4, dtype=np.complex128))

    @property
    def orientation(self) -> Orientation:
        return Orientation.RIGHT if np.linalg.det(self.spatial) > 0 else Orientation.LEFT

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.spatial, np.eye(4)) and np.array_equal(self.spinor, np.eye(4)))


@dataclass(frozen=True, eq=False)
class FrameContext:
    """Every coordinate presentation of the basic fields in one frame pair.

    ``gamma_upper[k]`` is the matrix of γ^k and ``gamma_lower[k]`` that of
    γ_k; spinor indices run over rows (upper) and columns (lower).
    """

    change: FrameChange
    metric: MetricComponents
    volume: VolumeTensor
    gamma_upper: NDArray[np.complex128]
    gamma_lower: NDArray[np.complex128]
    chirality: CMatrix4
    chirality_conj: CMatrix4
    spinor_metric_lower: CMatrix4
    spinor_metric_upper: CMatrix4
    spinor_metric_conj_lower: CMatrix4
    spinor_metric_conj_upper: CMatrix4
    dirac_form: CMatrix4

    @property
    def is_canonical(self) -> bool:
        return self.change.is_identity

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

"""Fixed-size array aliases and their validating constructors.

Component arrays keep the first index as the row and the second as the
column. Spinor indices are stored 0..3.
"""

from typing import Any

import numpy as np
from numpy.typing import NDArray

from ..common.constants import DIMENSION
from ..common.exceptions import DimensionError, NonFiniteValueError

CMatrix4 = NDArray[np.complex128]
CVector4 = NDArray[np.complex128]
RMatrix4 = NDArray[np.float64]


def _check_finite(arr: NDArray[Any], name: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValueError(f"{name} contains NaN or Inf", details={"name": name})


def freeze(arr: NDArray[Any]) -> NDArray[Any]:
    """Mark an array read-only and return it."""
    arr.flags.writeable = False
    return arr


def as_scalar(value: Any, name: str = "scalar") -> complex:
    """Convert *value* to a finite Python complex."""
    result = complex(value)
    if not (np.isfinite(result.real) and np.isfinite(result.imag)):
        raise NonFiniteValueError(f"{name} is not finite: {result}", details={"name": name})
    return result


def as_matrix4(value: Any, name: str = "matrix") -> CMatrix4:
    """Copy *value* into a finite 4x4 complex array.

    Raises:
        DimensionError: When the shape is not (4, 4).
        NonFiniteValueError: When an entry is NaN or Inf.
    """
    arr = np.array(value, dtype=np.complex128)
    if arr.shape != (DIMENSION, DIMENSION):
        raise DimensionError(f"{name} must be 4x4, got shape {arr.shape}", details={"shape": arr.shape})
    _check_finite(arr, name)
    return arr


def as_real_matrix4(value: Any, name: str = "matrix") -> RMatrix4:
    """Copy *value* into a finite 4x4 real array."""
    arr = np.array(value)
    if np.iscomplexobj(arr):
        if np.any(arr.imag != 0):
            raise DimensionError(f"{name} must be real", details={"name": name})
        arr = arr.real
    arr = np.array(arr, dtype=np.float64)
    if arr.shape != (DIMENSION, DIMENSION):
        raise DimensionError(f"{name} must be 4x4, got shape {arr.shape}", details={"shape": arr.shape})
    _check_finite(arr, name)
    return arr


def as_vector4(value: Any, name: str = "vector") -> CVector4:
    """Copy *value* into a finite length-4 complex array."""
    arr = np.array(value, dtype=np.complex128)
    if arr.shape != (DIMENSION,):
        raise DimensionError(f"{name} must have length 4, got shape {arr.shape}", details={"shape": arr.shape})
    _check_finite(arr, name)
    return arr


def identity4() -> CMatrix4:
    return np.eye(DIMENSION, dtype=np.complex128)


def zeros4() -> CMatrix4:
    return np.zeros((DIMENSION, DIMENSION), dtype=np.complex128)

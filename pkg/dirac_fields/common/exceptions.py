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

from typing import Any, Dict, Optional


class SpinorFieldError(Exception):
    """Base class for all errors raised by the spinor-field calculus."""

    code = "SpinorFieldError"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Args:
            message: Human-readable error description.
            details: Extra diagnostic values (residuals, determinants, shapes).
        """
        self.details = details or {}
        super().__init__(message)


class DimensionError(SpinorFieldError):
    """An array does not have the fixed 4x4 / length-4 shape."""

    code = "DimensionError"


class NonFiniteValueError(SpinorFieldError):
    """An input value contains NaN or Inf."""

    code = "NonFiniteValue"


class SingularBasisError(SpinorFieldError):
    """The 16 basis matrices handed to the linear solver are not independent."""

    code = "SingularBasis"


class SingularFrameChangeError(SpinorFieldError):
    """A spatial or spinor frame change is not invertible."""

    code = "SingularFrameChange"


class NonSkewError(SpinorFieldError):
    """The w-component of a decomposition is not antisymmetric."""

    code = "NonSkewW"


class StructuralMismatchError(SpinorFieldError):
    """Direct and structural evaluation of the commutator map disagree."""

    code = "StructuralMismatch"


class MatrixFileError(SpinorFieldError):
    """A matrix document could not be parsed or has the wrong kind."""

    code = "MatrixFileError"

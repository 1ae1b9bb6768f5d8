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

from .ops import anticommutator, commutator, mat_mul, max_abs, max_abs_diff, solve_linear_16, trace
from .types import (
    CMatrix4,
    CVector4,
    RMatrix4,
    as_matrix4,
    as_real_matrix4,
    as_scalar,
    as_vector4,
    freeze,
    identity4,
    zeros4,
)

__all__ = [
    "CMatrix4",
    "CVector4",
    "RMatrix4",
    "anticommutator",
    "as_matrix4",
    "as_real_matrix4",
    "as_scalar",
    "as_vector4",
    "commutator",
    "freeze",
    "identity4",
    "mat_mul",
    "max_abs",
    "max_abs_diff",
    "solve_linear_16",
    "trace",
    "zeros4",
]

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

from .classifier import (
    D_sesquilinear,
    classify_hermiticity,
    classify_symmetry,
    d_bilinear,
    gamma_pair,
    hermitian_adjoint,
    hermiticity_criterion,
    metric_transpose,
    split_gamma_pair,
    split_gamma_pair_hermitian,
    symmetry_criterion,
)
from .types import HermiticityClass, HermiticityVerdict, SymmetryClass, SymmetryVerdict

__all__ = [
    "D_sesquilinear",
    "HermiticityClass",
    "HermiticityVerdict",
    "SymmetryClass",
    "SymmetryVerdict",
    "classify_hermiticity",
    "classify_symmetry",
    "d_bilinear",
    "gamma_pair",
    "hermitian_adjoint",
    "hermiticity_criterion",
    "metric_transpose",
    "split_gamma_pair",
    "split_gamma_pair_hermitian",
    "symmetry_criterion",
]

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

from .checks import (
    IDENTITY_CHECKS,
    check_chirality_anticommute,
    check_chirality_product,
    check_chirality_square,
    check_clifford,
    check_dirac_form,
    check_pair_commute,
    check_product_identities,
    check_spinor_metric,
    check_traces,
    check_triple_anticommute,
    check_volume_tensor,
    default_tolerance,
    run_all,
)
from .types import IdentityReport

__all__ = [
    "IDENTITY_CHECKS",
    "IdentityReport",
    "check_chirality_anticommute",
    "check_chirality_product",
    "check_chirality_square",
    "check_clifford",
    "check_dirac_form",
    "check_pair_commute",
    "check_product_identities",
    "check_spinor_metric",
    "check_traces",
    "check_triple_anticommute",
    "check_volume_tensor",
    "default_tolerance",
    "run_all",
]

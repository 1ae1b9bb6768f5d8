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

from .canonical import (
    CHIRALITY,
    DIRAC_FORM,
    GAMMA_UPPER,
    LEVI_CIVITA,
    MINKOWSKI,
    SPINOR_METRIC_LOWER,
    SPINOR_METRIC_UPPER,
    levi_civita,
    permutation_parity,
)
from .context import apply_frame_change, canonical_context, gamma5, lower_gamma, raise_volume
from .types import FrameChange, FrameContext, MetricComponents, Orientation, VolumeTensor

__all__ = [
    "CHIRALITY",
    "DIRAC_FORM",
    "GAMMA_UPPER",
    "LEVI_CIVITA",
    "MINKOWSKI",
    "SPINOR_METRIC_LOWER",
    "SPINOR_METRIC_UPPER",
    "FrameChange",
    "FrameContext",
    "MetricComponents",
    "Orientation",
    "VolumeTensor",
    "apply_frame_change",
    "canonical_context",
    "gamma5",
    "levi_civita",
    "lower_gamma",
    "permutation_parity",
    "raise_volume",
]

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

# Residual tolerances
CANONICAL_TOLERANCE = 1e-12
FRAME_TOLERANCE = 1e-9
CLASSIFICATION_TOLERANCE = 1e-10
ROUND_TRIP_TOLERANCE = 1e-10
SKEW_TOLERANCE = 1e-12
STRUCTURAL_TOLERANCE = 1e-10
SOLVER_TOLERANCE = 1e-9

# Linear-algebra guards
SINGULAR_BASIS_TOLERANCE = 1e-10
MIN_FRAME_DETERMINANT = 1e-10
RANDOM_FRAME_MIN_DETERMINANT = 0.1

# CLI defaults
DEFAULT_TRIALS = 100
DEFAULT_SEED = 0
DEFAULT_TOLERANCE = FRAME_TOLERANCE

DIMENSION = 4

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

"""Shared fixtures: the canonical context and seeded random frame contexts."""

from typing import List

import numpy as np
import pytest

from dirac_fields.common.utils import make_rng, random_frame_change
from dirac_fields.frames import FrameContext, apply_frame_change, canonical_context

RANDOM_TRIALS = 100


@pytest.fixture(scope="session")
def canonical() -> FrameContext:
    return canonical_context()


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(12345)


@pytest.fixture(scope="session")
def random_contexts() -> List[FrameContext]:
    """Frame changes with entries uniform in [-1, 1], redrawn when |det| < 0.1."""
    generator = make_rng(2025)
    return [apply_frame_change(random_frame_change(generator)) for _ in range(RANDOM_TRIALS)]


@pytest.fixture(scope="session")
def contexts(canonical, random_contexts) -> List[FrameContext]:
    """The canonical context followed by every random one."""
    return [canonical, *random_contexts]

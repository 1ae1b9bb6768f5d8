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

"""Construction of frame contexts: the canonical one and its images under
arbitrary invertible changes of the spatial and spinor frames."""

import logging
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from ..linalg import CMatrix4, freeze
from .canonical import (
    CHIRALITY,
    DIRAC_FORM,
    GAMMA_UPPER,
    LEVI_CIVITA,
    MINKOWSKI,
    SPINOR_METRIC_LOWER,
    SPINOR_METRIC_UPPER,
)
from .types import FrameChange, FrameContext, MetricComponents, Orientation, VolumeTensor

logger = logging.getLogger(__name__)


def raise_volume(lower: NDArray[np.float64], metric: MetricComponents) -> NDArray[np.float64]:
    """Raise all four indices of a rank-4 tensor with ``g^``.

    Args:
        lower: Array indexed ``[p, q, r, s]`` with lower indices.
        metric: Metric whose ``upper`` part performs the contraction.

    Returns:
        ``ω^{ijkm} = Σ ω_pqrs g^pi g^qj g^rk g^sm``.
    """
    g_up = metric.upper
    return np.einsum("pqrs,pi,qj,rk,sm->ijkm", np.asarray(lower), g_up, g_up, g_up, g_up)


def _lower_spatial(gamma_upper: NDArray[np.complex128], metric_lower: NDArray[np.float64]) -> NDArray[np.complex128]:
    return np.einsum("kq,qab->kab", metric_lower, gamma_upper)


def lower_gamma(context: FrameContext) -> NDArray[np.complex128]:
    """Return ``γ_k = Σ_q g_kq γ^q`` for the context, shape ``(4, 4, 4)``."""
    return _lower_spatial(context.gamma_upper, context.metric.lower)


def gamma5(context: FrameContext) -> CMatrix4:
    """Physics-convention γ⁵, which equals ``-H`` in every frame pair."""
    return -np.array(context.chirality)


def _volume(metric: MetricComponents, orientation: Orientation) -> VolumeTensor:
    # plus for right frames; the raised form is -sign * sqrt(-det g^) * ε
    lower = orientation.sign * np.sqrt(-np.linalg.det(metric.lower)) * LEVI_CIVITA
    upper = -orientation.sign * np.sqrt(-np.linalg.det(metric.upper)) * LEVI_CIVITA
    return VolumeTensor(lower=freeze(lower), upper=freeze(upper), orientation=orientation)


def _build(change: FrameChange) -> FrameContext:
    L = change.spatial
    S = change.spinor
    L_inv = np.linalg.inv(L)
    S_inv = np.linalg.inv(S)
    S_bar = S.conj()
    S_inv_bar = S_inv.conj()

    metric = MetricComponents(
        lower=freeze(L.T @ MINKOWSKI @ L),
        upper=freeze(L_inv @ MINKOWSKI @ L_inv.T),
    )
    gamma_upper = np.einsum("kj,ab,jbc,cd->kad", L_inv, S_inv, GAMMA_UPPER, S)
    gamma_lower = _lower_spatial(gamma_upper, metric.lower)

    return FrameContext(
        change=change,
        metric=metric,
        volume=_volume(metric, change.orientation),
        gamma_upper=freeze(gamma_upper),
        gamma_lower=freeze(gamma_lower),
        chirality=freeze(S_inv @ CHIRALITY @ S),
        chirality_conj=freeze(S_inv_bar @ CHIRALITY @ S_bar),
        spinor_metric_lower=freeze(S.T @ SPINOR_METRIC_LOWER @ S),
        spinor_metric_upper=freeze(S_inv @ SPINOR_METRIC_UPPER @ S_inv.T),
        spinor_metric_conj_lower=freeze(S_bar.T @ SPINOR_METRIC_LOWER @ S_bar),
        spinor_metric_conj_upper=freeze(S_inv_bar @ SPINOR_METRIC_UPPER @ S_inv_bar.T),
        dirac_form=freeze(S.T @ DIRAC_FORM @ S_bar),
    )


@lru_cache(maxsize=1)
def canonical_context() -> FrameContext:
    """The canonically orthonormal chiral context.

    Every matrix equals its printed canonical value exactly; the context is
    built once and shared, which is safe because all of its arrays are
    read-only.
    """
    identity = FrameChange.identity()
    return FrameContext(
        change=identity,
        metric=MetricComponents(lower=MINKOWSKI, upper=MINKOWSKI),
        volume=_volume(MetricComponents(lower=MINKOWSKI, upper=MINKOWSKI), Orientation.RIGHT),
        gamma_upper=GAMMA_UPPER,
        gamma_lower=freeze(_lower_spatial(GAMMA_UPPER, MINKOWSKI)),
        chirality=CHIRALITY,
        chirality_conj=CHIRALITY,
        spinor_metric_lower=SPINOR_METRIC_LOWER,
        spinor_metric_upper=SPINOR_METRIC_UPPER,
        spinor_metric_conj_lower=SPINOR_METRIC_LOWER,
        spinor_metric_conj_upper=SPINOR_METRIC_UPPER,
        dirac_form=DIRAC_FORM,
    )


def apply_frame_change(change: FrameChange) -> FrameContext:
    """Transform every basic field into the frame pair described by *change*.

    Lower spatial indices contract with ``L`` and upper ones with ``L⁻¹``;
    spinor indices do the same with ``S`` and ``S⁻¹``, and barred spinor
    indices use their complex conjugates.

    Args:
        change: Validated spatial and spinor frame change.

    Returns:
        The transformed :class:`FrameContext`. An identity change returns
        :func:`canonical_context`.
    """
    if change.is_identity:
        return canonical_context()

    context = _build(change)
    logger.debug(
        "Applied frame change: det L = %.6g, |det S| = %.6g, orientation = %s",
        float(np.linalg.det(change.spatial)),
        float(abs(np.linalg.det(change.spinor))),
        change.orientation.value,
    )
    return context

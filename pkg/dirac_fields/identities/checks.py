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

"""Residual checks for the algebraic identities satisfied by the basic fields.

Every check returns an :class:`IdentityReport` whose residual is the largest
entrywise modulus over all free spatial indices.
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..common.constants import CANONICAL_TOLERANCE, FRAME_TOLERANCE
from ..frames import LEVI_CIVITA, FrameContext, raise_volume
from ..linalg import identity4, max_abs
from .types import IdentityReport

logger = logging.getLogger(__name__)

Tensor = NDArray[np.complex128]


def default_tolerance(ctx: FrameContext) -> float:
    return CANONICAL_TOLERANCE if ctx.is_canonical else FRAME_TOLERANCE


def _report(name: str, raw: float, ctx: FrameContext, tol: Optional[float]) -> IdentityReport:
    tolerance = default_tolerance(ctx) if tol is None else tol
    residual = float(raw)
    report = IdentityReport.evaluate(name, residual, tolerance)
    if not report.passed:
        logger.debug("Identity %s failed: residual %.3e > %.3e", name, residual, tolerance)
    return report


# --- products ---


def _left(a: Tensor, b: NDArray) -> Tensor:
    """``a @ b[k]`` for each k."""
    return np.einsum("ab,kbc->kac", a, b)


def _right(b: NDArray, a: Tensor) -> Tensor:
    """``b[k] @ a`` for each k."""
    return np.einsum("kab,bc->kac", b, a)


def _pairs(a: Tensor, b: Tensor) -> Tensor:
    """``a[p] @ b[q]`` indexed ``[p, q]``."""
    return np.einsum("pab,qbc->pqac", a, b)


def _triples(a: Tensor, b: Tensor, c: Tensor) -> Tensor:
    return np.einsum("pab,qbc,rcd->pqrad", a, b, c)


def _scalar_field(coeff: NDArray, unit: Tensor) -> Tensor:
    """``coeff[p, q] * unit`` as a ``[p, q, a, b]`` array."""
    return np.einsum("pq,ab->pqab", coeff, unit)


def _pair_rhs(g: NDArray, unit: Tensor, a: Tensor, b: Tensor, volume: NDArray) -> Tensor:
    """``unit g^pq − (i/2) Σ a_r b_s ω^{rspq}``."""
    return _scalar_field(g, unit) - 0.5j * np.einsum("rsab,rspq->pqab", _pairs(a, b), volume)


def _triple_rhs(g: NDArray, single: Tensor, dual: Tensor, volume: NDArray) -> Tensor:
    """``g^pq x^r + g^qr x^p − g^pr x^q + i Σ_s ω^{pqrs} y_s``."""
    return (
        np.einsum("pq,rab->pqrab", g, single)
        + np.einsum("qr,pab->pqrab", g, single)
        - np.einsum("pr,qab->pqrab", g, single)
        + 1j * np.einsum("pqrs,sab->pqrab", volume, dual)
    )


# --- checks ---


def check_chirality_square(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """``H² = 1`` and ``H̄² = 1``."""
    unit = identity4()
    raw = max(
        max_abs(ctx.chirality @ ctx.chirality - unit),
        max_abs(ctx.chirality_conj @ ctx.chirality_conj - unit),
    )
    return _report("chirality_square", raw, ctx, tol)


def check_clifford(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """Anticommutators of the γ-operators in all three index placements."""
    unit = identity4()
    up, low = ctx.gamma_upper, ctx.gamma_lower

    def anti(a: Tensor, b: Tensor) -> Tensor:
        return _pairs(a, b) + np.einsum("qpab->pqab", _pairs(b, a))

    raw = max(
        max_abs(anti(up, up) - 2 * _scalar_field(ctx.metric.upper, unit)),
        max_abs(anti(up, low) - 2 * _scalar_field(np.eye(4), unit)),
        max_abs(anti(low, low) - 2 * _scalar_field(ctx.metric.lower, unit)),
    )
    return _report("clifford", raw, ctx, tol)


def check_chirality_product(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """H as the fully antisymmetrized quadruple γ product, in both index placements.

    In the canonical context this also checks ``H = iγ⁰γ¹γ²γ³ = −iγ₀γ₁γ₂γ₃``.
    """
    up, low = ctx.gamma_upper, ctx.gamma_lower
    lower_sum = np.einsum(
        "pqkm,pab,qbc,kcd,mde->ae", ctx.volume.lower, up, up, up, up, optimize=True
    )
    upper_sum = np.einsum(
        "pqkm,pab,qbc,kcd,mde->ae", ctx.volume.upper, low, low, low, low, optimize=True
    )
    residuals = [
        max_abs(ctx.chirality - 1j * lower_sum / 24),
        max_abs(ctx.chirality - 1j * upper_sum / 24),
    ]
    if ctx.is_canonical:
        residuals.append(max_abs(ctx.chirality - 1j * (up[0] @ up[1] @ up[2] @ up[3])))
        residuals.append(max_abs(ctx.chirality + 1j * (low[0] @ low[1] @ low[2] @ low[3])))
    return _report("chirality_product", max(residuals), ctx, tol)


def check_chirality_anticommute(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """``{H, γ^k} = 0`` and ``{H, γ_k} = 0``."""
    h = ctx.chirality
    raw = max(max_abs(_left(h, g) + _right(g, h)) for g in (ctx.gamma_upper, ctx.gamma_lower))
    return _report("chirality_anticommute", raw, ctx, tol)


def check_pair_commute(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """``[H, γ^p γ^q] = 0`` and its lower-index form."""
    h = ctx.chirality
    raw = 0.0
    for g in (ctx.gamma_upper, ctx.gamma_lower):
        pairs = _pairs(g, g)
        raw = max(raw, max_abs(np.einsum("ab,pqbc->pqac", h, pairs) - np.einsum("pqab,bc->pqac", pairs, h)))
    return _report("pair_commute", raw, ctx, tol)


def check_triple_anticommute(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """``{H, γ^p γ^q γ^r} = 0`` and its lower-index form."""
    h = ctx.chirality
    raw = 0.0
    for g in (ctx.gamma_upper, ctx.gamma_lower):
        triples = _triples(g, g, g)
        raw = max(
            raw,
            max_abs(np.einsum("ab,pqrbc->pqrac", h, triples) + np.einsum("pqrab,bc->pqrac", triples, h)),
        )
    return _report("triple_anticommute", raw, ctx, tol)


def check_product_identities(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """Reduction of double and triple γ products to at most one γ factor.

    Covers the chirality-weighted pair products, the unit-operator form of the
    pair products, the triple products with their chirality-weighted
    variants, and the mixed triple ``γ^p γ^q γ_r``, each in upper and lower
    index placement where both exist.
    """
    unit = identity4()
    h = ctx.chirality
    up, low = ctx.gamma_upper, ctx.gamma_lower
    h_up, h_low = _left(h, up), _left(h, low)
    g_up, g_low = ctx.metric.upper, ctx.metric.lower
    w_up, w_low = ctx.volume.upper, ctx.volume.lower

    pair_up, pair_low = _pairs(up, up), _pairs(low, low)
    triple_up, triple_low = _triples(up, up, up), _triples(low, low, low)

    checks: List[Tuple[Tensor, Tensor]] = [
        # H γγ reduced with ω
        (np.einsum("ab,pqbc->pqac", h, pair_up), _pair_rhs(g_up, h, low, low, w_up)),
        (np.einsum("ab,pqbc->pqac", h, pair_low), _pair_rhs(g_low, h, up, up, w_low)),
        # γγ through H γγ
        (pair_up, _pair_rhs(g_up, unit, h_low, low, w_up)),
        (pair_low, _pair_rhs(g_low, unit, h_up, up, w_low)),
        # triple products
        (triple_up, _triple_rhs(g_up, up, h_low, w_up)),
        (triple_low, _triple_rhs(g_low, low, h_up, w_low)),
        (np.einsum("ab,pqrbc->pqrac", h, triple_up), _triple_rhs(g_up, h_up, low, w_up)),
        (np.einsum("ab,pqrbc->pqrac", h, triple_low), _triple_rhs(g_low, h_low, up, w_low)),
    ]

    mixed = _triples(up, up, low)
    delta = np.eye(4)
    mixed_rhs = (
        np.einsum("pq,rab->pqrab", g_up, low)
        + np.einsum("qr,pab->pqrab", delta, up)
        - np.einsum("pr,qab->pqrab", delta, up)
        + 1j * np.einsum("pqmn,mr,nab->pqrab", w_up, g_low, h_low)
    )
    checks.append((mixed, mixed_rhs))

    raw = max(max_abs(lhs - rhs) for lhs, rhs in checks)
    return _report("product_identities", raw, ctx, tol)


def check_traces(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """Traces of every γ-product family, of ``1`` and of ``H``."""
    h = ctx.chirality
    up, low = ctx.gamma_upper, ctx.gamma_lower
    h_up, h_low = _left(h, up), _left(h, low)
    g_up, g_low = ctx.metric.upper, ctx.metric.lower
    delta = np.eye(4)

    def tr(t: Tensor) -> Tensor:
        return np.trace(t, axis1=-2, axis2=-1)

    vanishing = [
        tr(up),
        tr(low),
        tr(h_up),
        tr(h_low),
        tr(_pairs(h_up, up)),
        tr(_pairs(h_low, low)),
        tr(_pairs(h_up, low)),
        tr(_triples(up, up, up)),
        tr(_triples(low, low, low)),
        tr(_triples(up, up, low)),
        tr(_triples(h_up, up, up)),
        tr(_triples(h_low, low, low)),
        np.array([np.trace(h)]),
    ]
    residuals = [max_abs(t) for t in vanishing]
    residuals.extend(
        [
            max_abs(tr(_pairs(up, up)) - 4 * g_up),
            max_abs(tr(_pairs(low, low)) - 4 * g_low),
            max_abs(tr(_pairs(up, low)) - 4 * delta),
            abs(np.trace(identity4()) - 4),
        ]
    )

    quadruple = np.einsum("pab,qbc,rcd,sda->pqrs", up, up, low, low, optimize=True)
    expected = 4 * (
        np.einsum("pq,rs->pqrs", g_up, g_low)
        + np.einsum("qr,ps->pqrs", delta, delta)
        - np.einsum("pr,qs->pqrs", delta, delta)
    )
    residuals.append(max_abs(quadruple - expected))
    return _report("traces", max(residuals), ctx, tol)


def check_spinor_metric(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """``d`` and ``d̄`` are antisymmetric and their index placements are mutually inverse."""
    unit = identity4()
    raw = 0.0
    for lower, upper in (
        (ctx.spinor_metric_lower, ctx.spinor_metric_upper),
        (ctx.spinor_metric_conj_lower, ctx.spinor_metric_conj_upper),
    ):
        raw = max(raw, max_abs(lower + lower.T), max_abs(upper + upper.T), max_abs(lower @ upper - unit))
    return _report("spinor_metric", raw, ctx, tol)


def check_dirac_form(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """``D`` is invariant under the conjugation involution, i.e. Hermitian as a matrix."""
    raw = max_abs(ctx.dirac_form - ctx.dirac_form.conj().T)
    return _report("dirac_form", raw, ctx, tol)


def _antisymmetry_residual(tensor: NDArray) -> float:
    return max(
        max_abs(tensor + np.swapaxes(tensor, axis, axis + 1)) for axis in range(tensor.ndim - 1)
    )


def check_volume_tensor(ctx: FrameContext, tol: Optional[float] = None) -> IdentityReport:
    """Total antisymmetry of ω, its orientation-signed normalization and index raising."""
    sign = ctx.volume.orientation.sign
    lower, upper = ctx.volume.lower, ctx.volume.upper
    norm_lower = np.sqrt(abs(np.linalg.det(ctx.metric.lower)))
    norm_upper = np.sqrt(abs(np.linalg.det(ctx.metric.upper)))
    raw = max(
        _antisymmetry_residual(lower),
        _antisymmetry_residual(upper),
        max_abs(lower - sign * norm_lower * LEVI_CIVITA),
        max_abs(upper - raise_volume(lower, ctx.metric)),
        max_abs(upper + sign * norm_upper * LEVI_CIVITA),
    )
    return _report("volume_tensor", raw, ctx, tol)


IDENTITY_CHECKS: List[Callable[[FrameContext, Optional[float]], IdentityReport]] = [
    check_chirality_square,
    check_clifford,
    check_chirality_product,
    check_chirality_anticommute,
    check_pair_commute,
    check_triple_anticommute,
    check_product_identities,
    check_traces,
    check_spinor_metric,
    check_dirac_form,
    check_volume_tensor,
]


def run_all(ctx: FrameContext, tol: Optional[float] = None) -> List[IdentityReport]:
    """Run every identity check on *ctx*, always in the same order."""
    reports = [check(ctx, tol) for check in IDENTITY_CHECKS]
    failed = [r.name for r in reports if not r.passed]
    if failed:
        logger.info("Identity checks failed: %s", ", ".join(failed))
    return reports

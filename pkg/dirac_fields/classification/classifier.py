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

"""Symmetry with respect to the spinor metric and Hermiticity with respect to
the Dirac form, at matrix level and at decomposition level."""

import logging
from typing import Tuple

import numpy as np

from ..common.constants import CLASSIFICATION_TOLERANCE
from ..conversion import OperatorDecomposition
from ..frames import FrameContext
from ..linalg import CMatrix4, CVector4, as_matrix4, as_vector4, identity4, max_abs
from .types import HermiticityClass, HermiticityVerdict, SymmetryClass, SymmetryVerdict

logger = logging.getLogger(__name__)


def d_bilinear(psi: CVector4, phi: CVector4, ctx: FrameContext) -> complex:
    """``d(ψ, φ) = Σ d_ab ψ^a φ^b``."""
    return complex(as_vector4(psi, "psi") @ ctx.spinor_metric_lower @ as_vector4(phi, "phi"))


def D_sesquilinear(psi: CVector4, phi: CVector4, ctx: FrameContext) -> complex:
    """``D(ψ, φ) = Σ D_{a b̄} conj(ψ^b) φ^a``; antilinear in the first argument."""
    return complex(as_vector4(phi, "phi") @ ctx.dirac_form @ as_vector4(psi, "psi").conj())


# --- matrix level ---


def _relative(residual: float, f: CMatrix4, form: CMatrix4) -> float:
    return residual / max(1.0, max_abs(f) * max_abs(form))


def metric_transpose(f: CMatrix4, ctx: FrameContext) -> CMatrix4:
    """Transpose of *f* with respect to ``d``: ``d⁻¹ Fᵀ d``."""
    d = ctx.spinor_metric_lower
    return np.linalg.solve(d, f.T @ d)


def hermitian_adjoint(f: CMatrix4, ctx: FrameContext) -> CMatrix4:
    """Adjoint of *f* with respect to ``D``: ``(Dᵀ)⁻¹ F^H Dᵀ``."""
    d_t = ctx.dirac_form.T
    return np.linalg.solve(d_t, f.conj().T @ d_t)


def classify_symmetry(
    f: CMatrix4, ctx: FrameContext, tol: float = CLASSIFICATION_TOLERANCE
) -> SymmetryVerdict:
    """Classify *f* as symmetric (``Fᵀd = dF``), skew (``Fᵀd = −dF``) or mixed.

    Residuals are divided by ``max(1, max|F| · max|d|)``.
    """
    f = as_matrix4(f, name="operator")
    d = ctx.spinor_metric_lower
    left, right = f.T @ d, d @ f
    symmetric = _relative(max_abs(left - right), f, d)
    skew = _relative(max_abs(left + right), f, d)

    if symmetric <= tol:
        classification = SymmetryClass.SYMMETRIC
    elif skew <= tol:
        classification = SymmetryClass.SKEW
    else:
        classification = SymmetryClass.MIXED
    return SymmetryVerdict(symmetric_residual=symmetric, skew_residual=skew, classification=classification)


def classify_hermiticity(
    f: CMatrix4, ctx: FrameContext, tol: float = CLASSIFICATION_TOLERANCE
) -> HermiticityVerdict:
    """Classify *f* as Hermitian (``D F̄ = FᵀD``), anti-Hermitian or mixed."""
    f = as_matrix4(f, name="operator")
    big_d = ctx.dirac_form
    left, right = big_d @ f.conj(), f.T @ big_d
    hermitian = _relative(max_abs(left - right), f, big_d)
    antihermitian = _relative(max_abs(left + right), f, big_d)

    if hermitian <= tol:
        classification = HermiticityClass.HERMITIAN
    elif antihermitian <= tol:
        classification = HermiticityClass.ANTIHERMITIAN
    else:
        classification = HermiticityClass.MIXED
    return HermiticityVerdict(
        hermitian_residual=hermitian, antihermitian_residual=antihermitian, classification=classification
    )


# --- decomposition level ---


def symmetry_criterion(dec: OperatorDecomposition, tol: float = CLASSIFICATION_TOLERANCE) -> SymmetryClass:
    """Symmetric iff ``u_k = 0`` and ``w = 0``; skew iff ``u = v = 0`` and ``v_k = 0``.

    Thresholds are relative to ``max(1, largest coefficient)``.
    """
    bound = tol * max(1.0, dec.max_abs())
    if max(max_abs(dec.u_cov), max_abs(dec.w)) <= bound:
        return SymmetryClass.SYMMETRIC
    if max(abs(dec.u), abs(dec.v), max_abs(dec.v_cov)) <= bound:
        return SymmetryClass.SKEW
    return SymmetryClass.MIXED


def hermiticity_criterion(dec: OperatorDecomposition, tol: float = CLASSIFICATION_TOLERANCE) -> HermiticityClass:
    """Hermitian iff ``u``, ``u_k``, ``v_k`` are real while ``v`` and ``w`` are imaginary.

    Anti-Hermitian swaps every real and imaginary condition.
    """
    bound = tol * max(1.0, dec.max_abs())
    real_parts = (dec.u, dec.u_cov, dec.v_cov)
    imaginary_parts = (dec.v, dec.w)

    def largest(values, part) -> float:
        return max(max_abs(part(np.asarray(value))) for value in values)

    if max(largest(real_parts, np.imag), largest(imaginary_parts, np.real)) <= bound:
        return HermiticityClass.HERMITIAN
    if max(largest(real_parts, np.real), largest(imaginary_parts, np.imag)) <= bound:
        return HermiticityClass.ANTIHERMITIAN
    return HermiticityClass.MIXED


# --- splits of γ pairs ---


def gamma_pair(p: int, q: int, ctx: FrameContext, lower: bool = False) -> CMatrix4:
    gamma = ctx.gamma_lower if lower else ctx.gamma_upper
    return gamma[p] @ gamma[q]


def split_gamma_pair(p: int, q: int, ctx: FrameContext, lower: bool = False) -> Tuple[CMatrix4, CMatrix4]:
    """Symmetric and skew parts of ``γ^p γ^q`` (or ``γ_p γ_q`` when *lower*).

    ``(γ^p γ^q)_sym = 1 g^pq`` and
    ``(γ^p γ^q)_skew = −(i/2) Σ H γ_r γ_s ω^{rspq}``; the lower form swaps
    every index placement.
    """
    if lower:
        metric, volume, gamma = ctx.metric.lower, ctx.volume.lower, ctx.gamma_upper
    else:
        metric, volume, gamma = ctx.metric.upper, ctx.volume.upper, ctx.gamma_lower
    sym_part = metric[p, q] * identity4()
    skew_part = -0.5j * ctx.chirality @ np.einsum("rab,sbc,rs->ac", gamma, gamma, volume[:, :, p, q])
    return sym_part, skew_part


def split_gamma_pair_hermitian(
    p: int, q: int, ctx: FrameContext, lower: bool = False
) -> Tuple[CMatrix4, CMatrix4]:
    """Hermitian and anti-Hermitian parts of ``γ^p γ^q``, via ``½(F ± F†)``."""
    product = gamma_pair(p, q, ctx, lower)
    adjoint = hermitian_adjoint(product, ctx)
    return 0.5 * (product + adjoint), 0.5 * (product - adjoint)

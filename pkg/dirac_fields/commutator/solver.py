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

"""Commutator equations ``[F, γ_m] = V_m``: the structural forward map, the
solvability test and the solver for the trace-free particular solution."""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from ..common.constants import SOLVER_TOLERANCE, STRUCTURAL_TOLERANCE
from ..common.exceptions import StructuralMismatchError
from ..conversion import OperatorDecomposition, reconstruct
from ..frames import FrameContext
from ..linalg import max_abs
from .types import (
    IDENTITY_COEFF,
    SKEW_SYMMETRY,
    V_SCALAR_CONSISTENCY,
    W_PATTERN_CONSISTENCY,
    CommutatorRHS,
    CommutatorSolution,
    SolvabilityReport,
)

logger = logging.getLogger(__name__)


def _w_pattern(u_cov: np.ndarray, metric_lower: np.ndarray) -> np.ndarray:
    """``u_p g_qm − u_q g_pm`` indexed ``[m, p, q]``."""
    return np.einsum("p,qm->mpq", u_cov, metric_lower) - np.einsum("q,pm->mpq", u_cov, metric_lower)


def structural_decompositions(dec: OperatorDecomposition, ctx: FrameContext) -> Tuple[OperatorDecomposition, ...]:
    """Decompositions of ``[F, γ_m]`` predicted term by term from those of ``F``.

    The unit coefficient vanishes, the H coefficient is ``2 v_m``, the
    ``γ^k`` coefficients are ``4 w_km``, the ``Hγ^k`` coefficients are
    ``2 v g_mk`` and the pair coefficients follow ``u_p g_qm − u_q g_pm``.
    """
    g = ctx.metric.lower
    pattern = _w_pattern(dec.u_cov, g)
    return tuple(
        OperatorDecomposition(
            u=0,
            v=2 * dec.v_cov[m],
            u_cov=4 * dec.w[:, m],
            v_cov=2 * dec.v * g[m, :],
            w=pattern[m],
        )
        for m in range(4)
    )


def commutator_map(
    dec: OperatorDecomposition, ctx: FrameContext, tol: float = STRUCTURAL_TOLERANCE
) -> CommutatorRHS:
    """Compute ``V_m = [F, γ_m]`` for ``F = reconstruct(dec)``.

    The matrix commutators are decomposed and compared against
    :func:`structural_decompositions`.

    Raises:
        StructuralMismatchError: When the two evaluations differ by more than *tol*
            relative to the largest coefficient of *dec*.
    """
    f = reconstruct(dec, ctx)
    v_ops = [f @ gamma - gamma @ f for gamma in ctx.gamma_lower]
    rhs = CommutatorRHS.from_operators(v_ops, ctx)

    expected = structural_decompositions(dec, ctx)
    mismatch = max(actual.max_abs_diff(predicted) for actual, predicted in zip(rhs.decs, expected))
    mismatch /= max(1.0, dec.max_abs())
    if mismatch > tol:
        logger.warning("Structural and direct commutator evaluations differ by %.3e", mismatch)
        raise StructuralMismatchError(
            f"direct and structural commutator decompositions differ by {mismatch:.3e}",
            details={"mismatch": mismatch, "tolerance": tol},
        )
    return rhs


def check_solvable(rhs: CommutatorRHS, ctx: FrameContext, tol: float = SOLVER_TOLERANCE) -> SolvabilityReport:
    """Test whether ``[F, γ_m] = V_m`` has a solution.

    The system is solvable iff the unit coefficients of every ``V_m`` vanish,
    the ``γ^k`` coefficients ``ũ_mk`` are antisymmetric, the ``Hγ^k``
    coefficients are ``2 v g_mk`` for one scalar ``v`` and the pair
    coefficients follow ``u_p g_qm − u_q g_pm`` for one covector ``u_p``.
    The scalars are recovered by contraction:
    ``v = Σ ṽ_mk g^km / 8``, ``u_p = Σ w̃_mpq g^qm / 3``,
    ``v_m = ṽ_m / 2`` and ``w_km = ũ_mk / 4``.

    Args:
        rhs: Right-hand sides with their decompositions.
        ctx: Frame context the decompositions were taken in.
        tol: Threshold on each raw coefficient residual.

    Returns:
        A :class:`SolvabilityReport`; ``recovered`` is set only when solvable.
    """
    g_low, g_up = ctx.metric.lower, ctx.metric.upper
    unit_coeffs = np.array([dec.u for dec in rhs.decs])
    chiral_coeffs = np.array([dec.v for dec in rhs.decs])
    vector_coeffs = np.array([dec.u_cov for dec in rhs.decs])
    chiral_vector_coeffs = np.array([dec.v_cov for dec in rhs.decs])
    pair_coeffs = np.array([dec.w for dec in rhs.decs])

    v = np.einsum("mk,km->", chiral_vector_coeffs, g_up) / 8
    u_cov = np.einsum("mpq,qm->p", pair_coeffs, g_up) / 3
    v_cov = chiral_coeffs / 2
    w = (vector_coeffs.T - vector_coeffs) / 8

    residuals: Dict[str, float] = {
        IDENTITY_COEFF: max_abs(unit_coeffs),
        SKEW_SYMMETRY: max_abs(vector_coeffs + vector_coeffs.T),
        V_SCALAR_CONSISTENCY: max_abs(chiral_vector_coeffs - 2 * v * g_low),
        W_PATTERN_CONSISTENCY: max_abs(pair_coeffs - _w_pattern(u_cov, g_low)),
    }
    solvable = all(value <= tol for value in residuals.values())

    recovered: Optional[OperatorDecomposition] = None
    if solvable:
        recovered = OperatorDecomposition(u=0, v=v, u_cov=u_cov, v_cov=v_cov, w=w)
    else:
        failed = {name: value for name, value in residuals.items() if value > tol}
        logger.debug("Commutator system not solvable: %s", failed)

    return SolvabilityReport(solvable=solvable, residuals=residuals, tolerance=tol, recovered=recovered)


def substitution_residual(f: np.ndarray, rhs: CommutatorRHS, ctx: FrameContext) -> float:
    """``max_m |[F, γ_m] − V_m|`` over all entries."""
    return max(max_abs(f @ gamma - gamma @ f - v) for gamma, v in zip(ctx.gamma_lower, rhs.v_ops))


def solve(
    rhs: CommutatorRHS, ctx: FrameContext, tol: float = SOLVER_TOLERANCE
) -> Tuple[Optional[CommutatorSolution], SolvabilityReport]:
    """Solve ``[F, γ_m] = V_m`` for the particular solution with ``u = 0``.

    Every solution is ``F0 + u·1`` for an arbitrary scalar ``u``.

    Returns:
        ``(solution, report)``; ``solution`` is None when the system is not solvable.

    Raises:
        StructuralMismatchError: When a system reported solvable fails the
            substitution check by more than ``10 * tol``.
    """
    report = check_solvable(rhs, ctx, tol)
    if not report.solvable or report.recovered is None:
        return None, report

    f0 = reconstruct(report.recovered, ctx)
    residual = substitution_residual(f0, rhs, ctx)
    logger.debug("Commutator solution substitution residual %.3e", residual)
    if residual > 10 * tol:
        logger.warning("Recovered solution does not satisfy the commutator system: residual %.3e", residual)
        raise StructuralMismatchError(
            f"recovered solution fails substitution with residual {residual:.3e}",
            details={"residual": residual, "tolerance": 10 * tol},
        )

    return CommutatorSolution(f0=f0, decomposition=report.recovered, substitution_residual=residual), report

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

"""Conversion between spin-operators and their spatial tensor data."""

from typing import List

import numpy as np

from ..frames import FrameContext
from ..linalg import CMatrix4, as_matrix4, identity4
from .types import PAIR_INDICES, OperatorDecomposition


def reconstruct(dec: OperatorDecomposition, ctx: FrameContext) -> CMatrix4:
    """Assemble ``F`` from its decomposition in the frame pair *ctx*.

    Args:
        dec: Spatial data; its ``w`` is antisymmetric by construction.
        ctx: Frame context supplying ``H`` and ``γ^k``.

    Returns:
        ``u 1 + v H + Σ γ^k u_k + Σ H γ^k v_k + Σ_pq γ^p γ^q w_pq``.
    """
    gamma = ctx.gamma_upper
    vector_part = np.einsum("k,kab->ab", dec.u_cov, gamma)
    chiral_vector_part = ctx.chirality @ np.einsum("k,kab->ab", dec.v_cov, gamma)
    pair_part = np.einsum("pq,pab,qbc->ac", dec.w, gamma, gamma)
    return dec.u * identity4() + dec.v * ctx.chirality + vector_part + chiral_vector_part + pair_part


def decompose(f: CMatrix4, ctx: FrameContext) -> OperatorDecomposition:
    """Extract the spatial data of *f* by trace formulas.

    ``u = ¼ tr F``, ``v = ¼ tr(HF)``, ``u_k = ¼ tr(γ_k F)``,
    ``v_k = ¼ tr(γ_k H F)`` and
    ``w_pq = (tr(γ_q γ_p F) − tr(γ_p γ_q F)) / 16``, which is exactly
    antisymmetric.
    """
    f = as_matrix4(f, name="operator")
    h = ctx.chirality
    low = ctx.gamma_lower

    u = np.trace(f) / 4
    v = np.trace(h @ f) / 4
    u_cov = np.einsum("kab,ba->k", low, f) / 4
    v_cov = np.einsum("kab,bc,ca->k", low, h, f) / 4
    a = np.einsum("qab,pbc,ca->pq", low, low, f)
    w = (a - a.T) / 16
    return OperatorDecomposition(u=u, v=v, u_cov=u_cov, v_cov=v_cov, w=w)


def operator_basis(ctx: FrameContext) -> List[CMatrix4]:
    """The 16 operators ``1, H, γ^k, Hγ^k, ½[γ^p, γ^q]`` (p < q) spanning all of End(S)."""
    gamma = ctx.gamma_upper
    h = ctx.chirality
    basis = [identity4(), np.array(h)]
    basis.extend(np.array(gamma[k]) for k in range(4))
    basis.extend(h @ gamma[k] for k in range(4))
    basis.extend(0.5 * (gamma[p] @ gamma[q] - gamma[q] @ gamma[p]) for p, q in PAIR_INDICES)
    return basis

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

"""
Dirac Fields: FastAPI entry point for Vercel.

Design principles:
- Stateless: every request carries its operators and optional frame change; nothing is stored.
- Same documents as the CLI: request bodies embed the JSON matrix documents unchanged.
- Bounded: verification runs at most MAX_VERIFY_TRIALS random frames per request.
"""

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from dirac_fields import __version__
from dirac_fields.cli.main import classify_operator, verify_frame
from dirac_fields.cli.matrix_file import (
    decomposition_to_document,
    document_to_decomposition,
    document_to_frame_change,
    document_to_operator,
    operator_to_document,
    rhs_document_to_operators,
)
from dirac_fields.cli.types import (
    ClassificationReport,
    DecompositionDocument,
    FrameChangeDocument,
    IdentitySummaryLine,
    OperatorDocument,
    RhsDocument,
    VerifySummary,
)
from dirac_fields.common.constants import (
    CLASSIFICATION_TOLERANCE,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    SOLVER_TOLERANCE,
)
from dirac_fields.common.exceptions import SpinorFieldError
from dirac_fields.commutator import FAMILY_NOTE, CommutatorRHS, solve
from dirac_fields.conversion import decompose, reconstruct
from dirac_fields.frames import FrameContext, apply_frame_change, canonical_context

MAX_VERIFY_TRIALS = 100

app = FastAPI(
    title="Dirac Fields API",
    description="Spin-operator conversion, classification and commutator solving. Stateless.",
    version=__version__,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


class FrameRequest(BaseModel):
    frame: Optional[FrameChangeDocument] = Field(
        default=None, description="Frame change relative to the canonical pair; omitted means canonical"
    )


class OperatorRequest(FrameRequest):
    operator: OperatorDocument


class DecompositionRequest(FrameRequest):
    decomposition: DecompositionDocument


class ClassifyRequest(OperatorRequest):
    tol: float = Field(default=CLASSIFICATION_TOLERANCE, ge=0, description="Classification tolerance")


class SolveRequest(FrameRequest):
    rhs: RhsDocument
    tol: float = Field(default=SOLVER_TOLERANCE, ge=0, description="Solvability tolerance")


class VerifyRequest(FrameRequest):
    trials: int = Field(default=10, ge=0, le=MAX_VERIFY_TRIALS, description="Random frame changes")
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    tol: float = Field(default=DEFAULT_TOLERANCE, ge=0)


class SolveResponse(BaseModel):
    solvable: bool
    solution: Optional[OperatorDocument] = None
    residuals: dict
    tolerance: float


class VerifyResponse(BaseModel):
    identities: List[IdentitySummaryLine]
    summary: VerifySummary


def _context(frame: Optional[FrameChangeDocument]) -> FrameContext:
    if frame is None:
        return canonical_context()
    return apply_frame_change(document_to_frame_change(frame))


def _bad_request(e: SpinorFieldError) -> HTTPException:
    return HTTPException(status_code=400, detail=f"{e.code}: {e}")


# ---------------------------------------------------------------------------
# Health
# ---------------------------------------------------------------------------


@app.get("/api/health", tags=["meta"])
def health():
    """Liveness probe."""
    return {"status": "ok", "version": __version__}


# ---------------------------------------------------------------------------
# Conversion
# ---------------------------------------------------------------------------


@app.post("/api/decompose", response_model=DecompositionDocument, tags=["conversion"])
def decompose_operator(req: OperatorRequest):
    """Spatial data (u, v, u_k, v_k, w_pq) of an operator."""
    try:
        ctx = _context(req.frame)
        return decomposition_to_document(decompose(document_to_operator(req.operator), ctx))
    except SpinorFieldError as e:
        raise _bad_request(e)


@app.post("/api/reconstruct", response_model=OperatorDocument, tags=["conversion"])
def reconstruct_operator(req: DecompositionRequest):
    """Operator assembled from its spatial data."""
    try:
        ctx = _context(req.frame)
        return operator_to_document(reconstruct(document_to_decomposition(req.decomposition), ctx))
    except SpinorFieldError as e:
        raise _bad_request(e)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@app.post("/api/classify", response_model=ClassificationReport, tags=["classification"])
def classify(req: ClassifyRequest):
    """Symmetry (spinor metric) and Hermiticity (Dirac form) verdicts."""
    try:
        ctx = _context(req.frame)
        return classify_operator(document_to_operator(req.operator), ctx, req.tol)
    except SpinorFieldError as e:
        raise _bad_request(e)


# ---------------------------------------------------------------------------
# Commutator equations
# ---------------------------------------------------------------------------


@app.post("/api/solve", response_model=SolveResponse, tags=["commutator"])
def solve_commutator(req: SolveRequest):
    """
    Solve [F, γ_m] = V_m.

    An unsolvable system is a normal response with ``solvable = false`` and the
    residual of each solvability condition.
    """
    try:
        ctx = _context(req.frame)
        rhs = CommutatorRHS.from_operators(rhs_document_to_operators(req.rhs), ctx)
        solution, report = solve(rhs, ctx, req.tol)
    except SpinorFieldError as e:
        raise _bad_request(e)

    return SolveResponse(
        solvable=solution is not None,
        solution=operator_to_document(solution.f0, note=FAMILY_NOTE) if solution is not None else None,
        residuals=report.residuals,
        tolerance=report.tolerance,
    )


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@app.post("/api/verify", response_model=VerifyResponse, tags=["identities"])
def verify(req: VerifyRequest):
    """Certify every algebraic identity in the given frame and in seeded random frames."""
    try:
        ctx = _context(req.frame)
    except SpinorFieldError as e:
        raise _bad_request(e)

    label = "canonical" if req.frame is None else "request"
    lines, summary = verify_frame(ctx, label, req.trials, req.seed, req.tol)
    return VerifyResponse(identities=lines, summary=summary)

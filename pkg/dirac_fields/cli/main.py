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

"""``dirac-fields`` command line: verify, decompose, reconstruct, classify, solve.

Results go to stdout as JSON lines; diagnostics go to stderr. Exit codes are
0 on success, 1 when a verdict is negative (identity failure, unsolvable
system) and 2 on input errors.
"""

import argparse
import logging
import sys
from typing import Callable, List, Optional, TextIO, Tuple

from ..classification import classify_hermiticity, classify_symmetry, hermiticity_criterion, symmetry_criterion
from ..common.constants import (
    CLASSIFICATION_TOLERANCE,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    DEFAULT_TRIALS,
    FRAME_TOLERANCE,
    SOLVER_TOLERANCE,
)
from ..common.exceptions import SpinorFieldError, StructuralMismatchError
from ..common.utils import make_rng, random_frame_change
from ..commutator import FAMILY_NOTE, CommutatorRHS, solve
from ..conversion import decompose, reconstruct
from ..frames import FrameContext, apply_frame_change, canonical_context
from ..identities import IdentityReport, run_all
from ..linalg import CMatrix4
from .matrix_file import (
    decomposition_to_document,
    document_to_decomposition,
    document_to_frame_change,
    document_to_operator,
    operator_to_document,
    read_document,
    rhs_document_to_operators,
    serialize_document,
)
from .types import (
    ClassificationReport,
    DecompositionDocument,
    FrameChangeDocument,
    IdentitySummaryLine,
    ObstructionReport,
    OperatorDocument,
    RhsDocument,
    VerifySummary,
)

logger = logging.getLogger(__name__)

CANONICAL_FRAME = "canonical"

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def load_context(frame: str) -> FrameContext:
    """``canonical`` or the path of a frame-change document."""
    if frame == CANONICAL_FRAME:
        return canonical_context()
    return apply_frame_change(document_to_frame_change(read_document(frame, FrameChangeDocument)))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def aggregate_reports(runs: List[List[IdentityReport]], tolerance: float) -> List[IdentitySummaryLine]:
    """Collapse per-context reports into one line per identity, in check order."""
    lines = []
    for column in zip(*runs):
        failures = sum(1 for report in column if not report.passed)
        lines.append(
            IdentitySummaryLine(
                name=column[0].name,
                residual=max(report.residual for report in column),
                tolerance=tolerance,
                passed=failures == 0,
                contexts=len(column),
                failures=failures,
            )
        )
    return lines


def verify_frame(
    ctx: FrameContext, frame: str, trials: int, seed: int, tol: float
) -> Tuple[List[IdentitySummaryLine], VerifySummary]:
    """Run every identity on *ctx* and on *trials* seeded random frame changes.

    The named context is held to *tol*; random contexts to ``max(tol, FRAME_TOLERANCE)``.
    """
    contexts: List[Tuple[FrameContext, float]] = [(ctx, tol)]
    rng = make_rng(seed)
    trial_tol = max(tol, FRAME_TOLERANCE)
    for _ in range(trials):
        contexts.append((apply_frame_change(random_frame_change(rng)), trial_tol))

    lines = aggregate_reports([run_all(c, t) for c, t in contexts], tol)
    summary = VerifySummary(
        passed=all(line.passed for line in lines),
        identities=len(lines),
        contexts=len(contexts),
        trials=trials,
        seed=seed,
        frame=frame,
    )
    return lines, summary


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    lines, summary = verify_frame(load_context(args.frame), args.frame, args.trials, args.seed, args.tol)
    for line in lines:
        out.write(serialize_document(line))
    out.write(serialize_document(summary))

    passed = summary.passed
    if not passed:
        logger.warning("Identity verification failed: %s", ", ".join(line.name for line in lines if not line.passed))
    return EXIT_OK if passed else EXIT_VERDICT


def cmd_decompose(args: argparse.Namespace, out: TextIO) -> int:
    ctx = load_context(args.frame)
    f = document_to_operator(read_document(args.input, OperatorDocument))
    out.write(serialize_document(decomposition_to_document(decompose(f, ctx))))
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace, out: TextIO) -> int:
    ctx = load_context(args.frame)
    dec = document_to_decomposition(read_document(args.input, DecompositionDocument))
    out.write(serialize_document(operator_to_document(reconstruct(dec, ctx))))
    return EXIT_OK


def classify_operator(f: CMatrix4, ctx: FrameContext, tol: float) -> ClassificationReport:
    """Matrix-level verdicts plus the decomposition-level criteria and whether they agree."""
    symmetry = classify_symmetry(f, ctx, tol)
    hermiticity = classify_hermiticity(f, ctx, tol)
    dec = decompose(f, ctx)
    criteria = {
        "symmetry": symmetry_criterion(dec, tol).value,
        "hermiticity": hermiticity_criterion(dec, tol).value,
    }
    agree = criteria["symmetry"] == symmetry.classification.value and (
        criteria["hermiticity"] == hermiticity.classification.value
    )
    if not agree:
        logger.warning("Matrix-level and coefficient-level classifications disagree: %s", criteria)

    return ClassificationReport(symmetry=symmetry, hermiticity=hermiticity, criteria=criteria, criteria_agree=agree)


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    ctx = load_context(args.frame)
    f = document_to_operator(read_document(args.input, OperatorDocument))
    out.write(serialize_document(classify_operator(f, ctx, args.tol)))
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    ctx = load_context(args.frame)
    operators = rhs_document_to_operators(read_document(args.input, RhsDocument))
    solution, report = solve(CommutatorRHS.from_operators(operators, ctx), ctx, args.tol)

    if solution is None:
        out.write(
            serialize_document(
                ObstructionReport(solvable=False, residuals=report.residuals, tolerance=report.tolerance)
            )
        )
        return EXIT_VERDICT

    out.write(serialize_document(operator_to_document(solution.f0, note=FAMILY_NOTE)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _non_negative_int(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def _non_negative_float(value: str) -> float:
    number = float(value)
    if not number >= 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative tolerance, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-fields",
        description="Operator-field calculus of the Dirac spinor bundle at a point.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Diagnostics level on stderr (default: WARNING).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_frame(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--frame",
            default=CANONICAL_FRAME,
            help="'canonical' or the path of a frame-change document (default: canonical).",
        )

    def add_tol(sub: argparse.ArgumentParser, default: float) -> None:
        sub.add_argument("--tol", type=_non_negative_float, default=default, help=f"Tolerance (default: {default}).")

    verify = subparsers.add_parser("verify", help="Certify every algebraic identity in a frame and random frames.")
    add_frame(verify)
    verify.add_argument("--trials", type=_non_negative_int, default=DEFAULT_TRIALS, help="Random frame changes.")
    verify.add_argument("--seed", type=_non_negative_int, default=DEFAULT_SEED, help="PRNG seed.")
    add_tol(verify, DEFAULT_TOLERANCE)
    verify.set_defaults(handler=cmd_verify)

    for name, handler, help_text in (
        ("decompose", cmd_decompose, "Operator document -> decomposition document."),
        ("reconstruct", cmd_reconstruct, "Decomposition document -> operator document."),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("input", help="Input document path, or '-' for stdin.")
        add_frame(sub)
        sub.set_defaults(handler=handler)

    classify = subparsers.add_parser("classify", help="Symmetry and Hermiticity of an operator.")
    classify.add_argument("input", help="Operator document path, or '-' for stdin.")
    add_frame(classify)
    add_tol(classify, CLASSIFICATION_TOLERANCE)
    classify.set_defaults(handler=cmd_classify)

    solve_parser = subparsers.add_parser("solve", help="Solve [F, γ_m] = V_m for an rhs document.")
    solve_parser.add_argument("input", help="Rhs document path, or '-' for stdin.")
    add_frame(solve_parser)
    add_tol(solve_parser, SOLVER_TOLERANCE)
    solve_parser.set_defaults(handler=cmd_solve)

    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("dirac_fields").setLevel(level)


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Run the command line with *argv* and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else EXIT_OK

    configure_logging(args.log_level)
    handler: Callable[[argparse.Namespace, TextIO], int] = args.handler
    try:
        return handler(args, out or sys.stdout)
    except StructuralMismatchError as e:
        logger.error("Internal consistency check failed: %s (%s)", e, e.details)
        print(f"{e.code}: {e}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except SpinorFieldError as e:
        logger.debug("Input error details: %s", e.details)
        print(f"{e.code}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    raise SystemExit(run())


__all__ = ["aggregate_reports", "build_parser", "classify_operator", "load_context", "main", "run", "verify_frame"]

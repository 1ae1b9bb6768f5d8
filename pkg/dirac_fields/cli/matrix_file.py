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

"""Reading and writing matrix documents, and their conversion to domain values.

Floats are written with Python's shortest round-trip representation, so
``parse(serialize(x))`` reproduces every finite double bit for bit.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Type, TypeVar, Union

import numpy as np
from pydantic import BaseModel, ValidationError

from ..common.exceptions import MatrixFileError
from ..conversion import OperatorDecomposition
from ..frames import FrameChange
from ..linalg import CMatrix4
from .types import (
    DecompositionDocument,
    FrameChangeDocument,
    MatrixDocument,
    OperatorDocument,
    RhsDocument,
    matrix_document_adapter,
)

logger = logging.getLogger(__name__)

DocumentT = TypeVar("DocumentT", bound=BaseModel)

STDIN = "-"


def parse_document(text: str) -> MatrixDocument:
    """Parse a matrix document of any kind.

    Raises:
        MatrixFileError: When the text is not JSON or does not match a document kind.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(f"invalid JSON: {e}", details={"position": e.pos}) from e

    try:
        return matrix_document_adapter.validate_python(payload)
    except ValidationError as e:
        raise MatrixFileError(
            f"malformed matrix document: {e.error_count()} validation error(s)",
            details={"errors": e.errors(include_url=False)},
        ) from e


def serialize_document(document: BaseModel) -> str:
    """Render *document* as one newline-terminated JSON line."""
    return json.dumps(document.model_dump(mode="json", by_alias=True, exclude_none=True), allow_nan=False) + "\n"


def _read_stdin() -> str:
    buffer = getattr(sys.stdin, "buffer", None)
    if buffer is None:
        return sys.stdin.read()
    return buffer.read().decode("utf-8")


def read_text(path: Union[str, Path]) -> str:
    """Read UTF-8 text from *path*, or from stdin when *path* is ``-``.

    Raises:
        MatrixFileError: When the file cannot be read or is not valid UTF-8.
    """
    try:
        if str(path) == STDIN:
            return _read_stdin()
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise MatrixFileError(
            f"{path} is not valid UTF-8: {e.reason} at byte {e.start}",
            details={"path": str(path), "position": e.start},
        ) from e
    except OSError as e:
        raise MatrixFileError(f"cannot read {path}: {e.strerror}", details={"path": str(path)}) from e


def read_document(path: Union[str, Path], expected: Type[DocumentT]) -> DocumentT:
    """Read *path* (``-`` for stdin) and require a document of type *expected*."""
    document = parse_document(read_text(path))
    if not isinstance(document, expected):
        expected_kind = expected.model_fields["kind"].default
        raise MatrixFileError(
            f"expected a '{expected_kind}' document, got '{document.kind}'",
            details={"expected": expected_kind, "actual": document.kind},
        )
    logger.debug("Read %s document from %s", document.kind, path)
    return document


# --- conversions ---


def _pair(value: complex) -> List[float]:
    return [float(value.real), float(value.imag)]


def _complex(pair: Sequence[float]) -> complex:
    return complex(pair[0], pair[1])


def _matrix_rows(matrix: Any) -> List[List[List[float]]]:
    return [[_pair(complex(entry)) for entry in row] for row in np.asarray(matrix)]


def _matrix(rows: Sequence[Sequence[Sequence[float]]]) -> CMatrix4:
    return np.array([[_complex(entry) for entry in row] for row in rows], dtype=np.complex128)


def _vector(entries: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array([_complex(entry) for entry in entries], dtype=np.complex128)


def operator_to_document(matrix: CMatrix4, note: Optional[str] = None) -> OperatorDocument:
    return OperatorDocument(matrix=_matrix_rows(matrix), note=note)


def document_to_operator(document: OperatorDocument) -> CMatrix4:
    return _matrix(document.matrix)


def decomposition_to_document(dec: OperatorDecomposition) -> DecompositionDocument:
    return DecompositionDocument(
        u=_pair(dec.u),
        v=_pair(dec.v),
        u_cov=[_pair(complex(x)) for x in dec.u_cov],
        v_cov=[_pair(complex(x)) for x in dec.v_cov],
        w=_matrix_rows(dec.w),
    )


def document_to_decomposition(document: DecompositionDocument) -> OperatorDecomposition:
    """Build the decomposition; a non-antisymmetric ``w`` raises ``NonSkewError``."""
    return OperatorDecomposition(
        u=_complex(document.u),
        v=_complex(document.v),
        u_cov=_vector(document.u_cov),
        v_cov=_vector(document.v_cov),
        w=_matrix(document.w),
    )


def operators_to_rhs_document(operators: Sequence[CMatrix4]) -> RhsDocument:
    return RhsDocument(operators=[_matrix_rows(op) for op in operators])


def rhs_document_to_operators(document: RhsDocument) -> List[CMatrix4]:
    return [_matrix(op) for op in document.operators]


def frame_change_to_document(change: FrameChange) -> FrameChangeDocument:
    return FrameChangeDocument(
        spatial=[[float(x) for x in row] for row in change.spatial],
        spinor=_matrix_rows(change.spinor),
    )


def document_to_frame_change(document: FrameChangeDocument) -> FrameChange:
    """Build the frame change; a singular matrix raises ``SingularFrameChangeError``."""
    return FrameChange(spatial=np.array(document.spatial, dtype=np.float64), spinor=_matrix(document.spinor))

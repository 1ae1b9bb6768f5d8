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

from .main import build_parser, load_context, main, run
from .matrix_file import (
    decomposition_to_document,
    document_to_decomposition,
    document_to_frame_change,
    document_to_operator,
    frame_change_to_document,
    operator_to_document,
    operators_to_rhs_document,
    parse_document,
    read_document,
    rhs_document_to_operators,
    serialize_document,
)
from .types import (
    DecompositionDocument,
    FrameChangeDocument,
    MatrixDocument,
    OperatorDocument,
    RhsDocument,
)

__all__ = [
    "DecompositionDocument",
    "FrameChangeDocument",
    "MatrixDocument",
    "OperatorDocument",
    "RhsDocument",
    "build_parser",
    "decomposition_to_document",
    "document_to_decomposition",
    "document_to_frame_change",
    "document_to_operator",
    "frame_change_to_document",
    "load_context",
    "main",
    "operator_to_document",
    "operators_to_rhs_document",
    "parse_document",
    "read_document",
    "rhs_document_to_operators",
    "run",
    "serialize_document",
]

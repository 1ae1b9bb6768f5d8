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

"""Unit tests for matrix documents: parsing, serialization and conversions."""

import io
import json

import numpy as np
import pytest

from dirac_fields.cli.matrix_file import (
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
from dirac_fields.cli.types import DecompositionDocument, FrameChangeDocument, OperatorDocument, RhsDocument
from dirac_fields.common.exceptions import MatrixFileError, NonSkewError, SingularFrameChangeError
from dirac_fields.common.utils import random_decomposition, random_frame_change, random_operator

ZERO_ROW = [[0.0, 0.0]] * 4


def _operator_payload(rows=None, **extra):
    payload = {"kind": "operator", "matrix": rows if rows is not None else [ZERO_ROW] * 4}
    payload.update(extra)
    return payload


def _bits(array: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(array).view(np.uint64)


# ---------------------------------------------------------------------------
# Round trips
# ---------------------------------------------------------------------------
class TestRoundTrip:
    def test_operator_is_bit_exact(self, rng):
        matrix = random_operator(rng)
        matrix[0, 0] = complex(-0.0, 5e-324)
        matrix[1, 2] = complex(1e308, -1e-308)
        matrix[3, 3] = complex(0.1, 1 / 3)
        parsed = parse_document(serialize_document(operator_to_document(matrix)))
        assert isinstance(parsed, OperatorDocument)
        assert np.array_equal(_bits(document_to_operator(parsed)), _bits(matrix))

    def test_decomposition(self, rng):
        dec = random_decomposition(rng)
        parsed = parse_document(serialize_document(decomposition_to_document(dec)))
        assert isinstance(parsed, DecompositionDocument)
        assert document_to_decomposition(parsed).max_abs_diff(dec) == 0

    def test_rhs(self, rng):
        operators = [random_operator(rng) for _ in range(4)]
        parsed = parse_document(serialize_document(operators_to_rhs_document(operators)))
        assert isinstance(parsed, RhsDocument)
        for original, restored in zip(operators, rhs_document_to_operators(parsed)):
            assert np.array_equal(original, restored)

    def test_frame_change(self, rng):
        change = random_frame_change(rng)
        parsed = parse_document(serialize_document(frame_change_to_document(change)))
        assert isinstance(parsed, FrameChangeDocument)
        restored = document_to_frame_change(parsed)
        assert np.array_equal(restored.spatial, change.spatial)
        assert np.array_equal(restored.spinor, change.spinor)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------
class TestSerialize:
    def test_single_line_with_kind(self):
        text = serialize_document(operator_to_document(np.eye(4)))
        assert text.endswith("\n") and text.count("\n") == 1
        payload = json.loads(text)
        assert payload["kind"] == "operator"
        assert payload["matrix"][0][0] == [1.0, 0.0]
        assert "note" not in payload

    def test_note_is_written(self):
        payload = json.loads(serialize_document(operator_to_document(np.eye(4), note="general solution")))
        assert payload["note"] == "general solution"


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------
class TestParseErrors:
    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            json.dumps(_operator_payload(rows=[ZERO_ROW] * 3)),
            json.dumps(_operator_payload(rows=[[[0.0, 0.0]] * 3] * 4)),
            json.dumps(_operator_payload(rows=[[[0.0]] * 4] * 4)),
            json.dumps(_operator_payload(unexpected=1)),
            json.dumps({"kind": "tensor", "matrix": [ZERO_ROW] * 4}),
            json.dumps({"matrix": [ZERO_ROW] * 4}),
            '{"kind": "operator", "matrix": [[[NaN, 0.0], [0, 0], [0, 0], [0, 0]], '
            '[[0, 0], [0, 0], [0, 0], [0, 0]], [[0, 0], [0, 0], [0, 0], [0, 0]], [[0, 0], [0, 0], [0, 0], [0, 0]]]}',
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(MatrixFileError) as exc_info:
            parse_document(text)
        assert exc_info.value.code == "MatrixFileError"

    def test_non_skew_w(self):
        document = decomposition_to_document(random_decomposition(np.random.default_rng(0)))
        payload = document.model_dump(mode="json")
        payload["w"][0][1] = [5.0, 0.0]
        with pytest.raises(NonSkewError):
            document_to_decomposition(parse_document(json.dumps(payload)))

    def test_singular_frame_change(self):
        document = FrameChangeDocument(spatial=[[0.0] * 4] * 4, spinor=[[[1.0, 0.0]] * 4] * 4)
        with pytest.raises(SingularFrameChangeError):
            document_to_frame_change(document)


# ---------------------------------------------------------------------------
# read_document
# ---------------------------------------------------------------------------
class TestReadDocument:
    def test_reads_file(self, tmp_path):
        path = tmp_path / "identity.json"
        path.write_text(serialize_document(operator_to_document(np.eye(4))), encoding="utf-8")
        document = read_document(path, OperatorDocument)
        assert np.array_equal(document_to_operator(document), np.eye(4))

    def test_kind_mismatch(self, tmp_path):
        path = tmp_path / "identity.json"
        path.write_text(serialize_document(operator_to_document(np.eye(4))), encoding="utf-8")
        with pytest.raises(MatrixFileError, match="expected a 'decomposition' document"):
            read_document(path, DecompositionDocument)

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatrixFileError) as exc_info:
            read_document(tmp_path / "missing.json", OperatorDocument)
        assert exc_info.value.details["path"].endswith("missing.json")

    def test_reads_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(serialize_document(operator_to_document(2 * np.eye(4)))))
        document = read_document("-", OperatorDocument)
        assert np.array_equal(document_to_operator(document), 2 * np.eye(4))

    def test_reads_binary_stdin(self, monkeypatch):
        payload = serialize_document(operator_to_document(np.eye(4))).encode("utf-8")
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(payload), encoding="latin-1"))
        document = read_document("-", OperatorDocument)
        assert np.array_equal(document_to_operator(document), np.eye(4))

    def test_invalid_utf8_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_bytes(b"\xff\xfe{}")
        with pytest.raises(MatrixFileError, match="not valid UTF-8") as exc_info:
            read_document(path, OperatorDocument)
        assert exc_info.value.details["position"] == 0

    def test_invalid_utf8_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"{\"kind\": \"\xc3\x28\"}"), encoding="utf-8"))
        with pytest.raises(MatrixFileError, match="not valid UTF-8") as exc_info:
            read_document("-", OperatorDocument)
        assert exc_info.value.details["path"] == "-"

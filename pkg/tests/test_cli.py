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

"""Tests for the dirac-fields command line."""

import importlib
import io
import json
import logging
from typing import List, Tuple

import numpy as np
import pytest

from dirac_fields.cli.main import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, EXIT_OK, EXIT_VERDICT, run
from dirac_fields.cli.matrix_file import (
    decomposition_to_document,
    frame_change_to_document,
    operator_to_document,
    operators_to_rhs_document,
    serialize_document,
)
from dirac_fields.common.exceptions import StructuralMismatchError
from dirac_fields.common.utils import make_rng, random_decomposition, random_frame_change, random_operator
from dirac_fields.commutator import FAMILY_NOTE, IDENTITY_COEFF, commutator_map
from dirac_fields.conversion import OperatorDecomposition, reconstruct
from dirac_fields.frames import GAMMA_UPPER, apply_frame_change, canonical_context
from dirac_fields.identities import IDENTITY_CHECKS

PIPELINE_FILES = 50
FRAME_SEED = 5


def invoke(argv: List[str]) -> Tuple[int, List[dict]]:
    out = io.StringIO()
    code = run(argv, out=out)
    return code, [json.loads(line) for line in out.getvalue().splitlines()]


def matrix_from(payload: dict) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in payload["matrix"]])


def decomposition(**fields) -> OperatorDecomposition:
    base = {"u": 0, "v": 0, "u_cov": np.zeros(4), "v_cov": np.zeros(4), "w": np.zeros((4, 4))}
    base.update(fields)
    return OperatorDecomposition(**base)


def random_frame():
    return random_frame_change(make_rng(FRAME_SEED))


@pytest.fixture
def write_document(tmp_path):
    counter = iter(range(1_000_000))

    def _write(document) -> str:
        path = tmp_path / f"document_{next(counter)}.json"
        text = json.dumps(document) + "\n" if isinstance(document, dict) else serialize_document(document)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def frame_file(write_document):
    return write_document(frame_change_to_document(random_frame()))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------
class TestVerify:
    def test_canonical(self):
        code, lines = invoke(["verify", "--frame", "canonical", "--trials", "3"])
        assert code == EXIT_OK
        summary = lines[-1]
        assert summary["pass"] is True
        assert summary == {
            "pass": True,
            "identities": len(IDENTITY_CHECKS),
            "contexts": 4,
            "trials": 3,
            "seed": 0,
            "frame": "canonical",
        }
        assert all(line["pass"] and line["failures"] == 0 for line in lines[:-1])

    def test_canonical_with_zero_tolerance(self):
        code, lines = invoke(["verify", "--trials", "0", "--tol", "0"])
        assert code == EXIT_OK
        assert lines[-1]["contexts"] == 1
        assert all(line["residual"] == 0 for line in lines[:-1])

    def test_frame_file(self, frame_file):
        code, lines = invoke(["verify", "--frame", frame_file, "--trials", "2", "--seed", "9"])
        assert code == EXIT_OK
        assert lines[-1]["frame"] == frame_file

    def test_deterministic(self):
        assert invoke(["verify", "--trials", "2", "--seed", "4"]) == invoke(["verify", "--trials", "2", "--seed", "4"])

    def test_failure_exit_code(self, frame_file):
        code, lines = invoke(["verify", "--frame", frame_file, "--trials", "0", "--tol", "1e-30"])
        assert code == EXIT_VERDICT
        assert lines[-1]["pass"] is False

    def test_singular_frame_file(self, tmp_path, capsys):
        path = tmp_path / "singular.json"
        spinor = [[[1.0, 0.0]] * 4] * 4
        path.write_text(
            json.dumps({"kind": "frame-change", "spatial": np.eye(4).tolist(), "spinor": spinor}), encoding="utf-8"
        )
        assert run(["verify", "--frame", str(path), "--trials", "0"], out=io.StringIO()) == EXIT_INPUT_ERROR
        assert "SingularFrameChange" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# decompose / reconstruct
# ---------------------------------------------------------------------------
class TestDecomposeReconstruct:
    def test_identity(self, write_document):
        code, (dec,) = invoke(["decompose", write_document(operator_to_document(np.eye(4)))])
        assert code == EXIT_OK
        assert dec["kind"] == "decomposition"
        assert dec["u"] == [1.0, 0.0]
        assert dec["v"] == [0.0, 0.0]

    def test_gamma0(self, write_document):
        _, (dec,) = invoke(["decompose", write_document(operator_to_document(GAMMA_UPPER[0]))])
        assert dec["u_cov"] == [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]

    def test_reconstruct_identity(self, write_document):
        code, (op,) = invoke(["reconstruct", write_document(decomposition_to_document(decomposition(u=1)))])
        assert code == EXIT_OK
        assert np.array_equal(matrix_from(op), np.eye(4))

    def test_reconstruct_gamma0(self, write_document):
        document = decomposition_to_document(decomposition(u_cov=[1, 0, 0, 0]))
        _, (op,) = invoke(["reconstruct", write_document(document)])
        assert np.array_equal(matrix_from(op), GAMMA_UPPER[0])

    @pytest.mark.parametrize("frame", ["canonical", "file"])
    def test_pipeline(self, write_document, frame_file, frame):
        frame_arg = frame_file if frame == "file" else "canonical"
        rng = make_rng(8)
        for _ in range(PIPELINE_FILES):
            f = random_operator(rng)
            _, (dec,) = invoke(["decompose", write_document(operator_to_document(f)), "--frame", frame_arg])
            _, (op,) = invoke(["reconstruct", write_document(dec), "--frame", frame_arg])
            assert np.max(np.abs(matrix_from(op) - f)) <= 1e-10

    def test_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(serialize_document(operator_to_document(np.eye(4)))))
        code, (dec,) = invoke(["decompose", "-"])
        assert code == EXIT_OK
        assert dec["u"] == [1.0, 0.0]

    def test_wrong_kind(self, write_document, capsys):
        path = write_document(operator_to_document(np.eye(4)))
        assert run(["reconstruct", path], out=io.StringIO()) == EXIT_INPUT_ERROR
        assert "MatrixFileError" in capsys.readouterr().err

    def test_non_skew_w(self, tmp_path, capsys):
        payload = decomposition_to_document(decomposition(u=1)).model_dump(mode="json")
        payload["w"][1][2] = [1.0, 0.0]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        assert run(["reconstruct", str(path)], out=io.StringIO()) == EXIT_INPUT_ERROR
        assert "NonSkewW" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert run(["decompose", str(tmp_path / "missing.json")], out=io.StringIO()) == EXIT_INPUT_ERROR
        assert "MatrixFileError" in capsys.readouterr().err

    def test_invalid_utf8_file(self, tmp_path, capsys):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"kind": "operator", "note": "\xff\xfe"}\n')
        assert run(["decompose", str(path)], out=io.StringIO()) == EXIT_INPUT_ERROR
        assert "not valid UTF-8" in capsys.readouterr().err

    def test_invalid_utf8_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"\xff\xfe{}\n"), encoding="utf-8"))
        assert run(["decompose", "-"], out=io.StringIO()) == EXIT_INPUT_ERROR
        assert "MatrixFileError" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------
class TestClassify:
    @pytest.mark.parametrize(
        "matrix, symmetry, hermiticity",
        [
            (np.eye(4), "symmetric", "hermitian"),
            (np.diag([1, 1, -1, -1]), "symmetric", "antihermitian"),
            (GAMMA_UPPER[0], "skew", "hermitian"),
        ],
    )
    def test_examples(self, write_document, matrix, symmetry, hermiticity):
        code, (report,) = invoke(["classify", write_document(operator_to_document(matrix))])
        assert code == EXIT_OK
        assert report["symmetry"]["classification"] == symmetry
        assert report["hermiticity"]["classification"] == hermiticity
        assert report["criteria"] == {"symmetry": symmetry, "hermiticity": hermiticity}
        assert report["criteria_agree"] is True

    def test_random_operators_agree(self, write_document, frame_file):
        rng = make_rng(13)
        for frame in ("canonical", frame_file):
            for _ in range(5):
                path = write_document(operator_to_document(random_operator(rng)))
                _, (report,) = invoke(["classify", path, "--frame", frame])
                assert report["criteria_agree"] is True

    def test_structured_operator_in_random_frame(self, write_document, frame_file):
        ctx = apply_frame_change(random_frame())
        dec = decomposition(u=0.5, v=-0.75j, v_cov=[1.0, -0.5, 0.25, 0.8])
        path = write_document(operator_to_document(reconstruct(dec, ctx)))
        code, (report,) = invoke(["classify", path, "--frame", frame_file])
        assert code == EXIT_OK
        assert report["symmetry"]["classification"] == "symmetric"
        assert report["hermiticity"]["classification"] == "hermitian"
        assert report["criteria"] == {"symmetry": "symmetric", "hermiticity": "hermitian"}
        assert report["criteria_agree"] is True

    def test_negative_tolerance_rejected(self, write_document):
        path = write_document(operator_to_document(np.eye(4)))
        assert run(["classify", path, "--tol", "-1"], out=io.StringIO()) == EXIT_INPUT_ERROR


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------
class TestSolve:
    def test_zero_rhs(self, write_document):
        path = write_document(operators_to_rhs_document(np.zeros((4, 4, 4))))
        code, (solution,) = invoke(["solve", path])
        assert code == EXIT_OK
        assert solution["note"] == FAMILY_NOTE
        assert np.array_equal(matrix_from(solution), np.zeros((4, 4)))

    def test_recovers_decomposition(self, write_document):
        dec = random_decomposition(make_rng(17))
        rhs = commutator_map(dec, canonical_context())
        code, (solution,) = invoke(["solve", write_document(operators_to_rhs_document(rhs.v_ops))])
        assert code == EXIT_OK
        expected = reconstruct(dec.without_scalar(), canonical_context())
        assert np.max(np.abs(matrix_from(solution) - expected)) <= 1e-9

    def test_identity_polluted(self, write_document):
        operators = np.zeros((4, 4, 4), dtype=np.complex128)
        operators[1] = np.eye(4)
        code, (report,) = invoke(["solve", write_document(operators_to_rhs_document(operators))])
        assert code == EXIT_VERDICT
        assert report["solvable"] is False
        assert report["residuals"][IDENTITY_COEFF] == pytest.approx(1.0)

    def test_internal_mismatch_has_its_own_exit_code(self, write_document, monkeypatch, caplog, capsys):
        def failing_solve(rhs, ctx, tol):
            raise StructuralMismatchError("recovered solution fails substitution", details={"residual": 1.0})

        monkeypatch.setattr(importlib.import_module("dirac_fields.cli.main"), "solve", failing_solve)
        path = write_document(operators_to_rhs_document(np.zeros((4, 4, 4))))
        with caplog.at_level(logging.ERROR, logger="dirac_fields"):
            assert run(["solve", path], out=io.StringIO()) == EXIT_INTERNAL_ERROR
        assert "StructuralMismatch" in capsys.readouterr().err
        assert any(record.levelno == logging.ERROR for record in caplog.records)


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------
class TestArguments:
    def test_help(self, capsys):
        assert run(["--help"]) == EXIT_OK
        assert "verify" in capsys.readouterr().out

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["unknown"],
            ["verify", "--trials", "-1"],
            ["verify", "--tol", "abc"],
            ["decompose"],
        ],
    )
    def test_usage_errors(self, argv):
        assert run(argv, out=io.StringIO()) == EXIT_INPUT_ERROR

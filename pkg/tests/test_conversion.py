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

"""Unit tests for conversion between operators and their spatial data."""

import numpy as np
import pytest

from dirac_fields.common.constants import FRAME_TOLERANCE, ROUND_TRIP_TOLERANCE
from dirac_fields.common.exceptions import DimensionError, NonFiniteValueError, NonSkewError
from dirac_fields.common.utils import make_rng, random_decomposition, random_operator
from dirac_fields.conversion import OperatorDecomposition, decompose, operator_basis, reconstruct
from dirac_fields.linalg import identity4, max_abs, max_abs_diff, solve_linear_16

ROUND_TRIPS = 200


def _only(**fields) -> OperatorDecomposition:
    base = {"u": 0, "v": 0, "u_cov": np.zeros(4), "v_cov": np.zeros(4), "w": np.zeros((4, 4))}
    base.update(fields)
    return OperatorDecomposition(**base)


# ---------------------------------------------------------------------------
# OperatorDecomposition
# ---------------------------------------------------------------------------
class TestOperatorDecomposition:
    def test_rejects_symmetric_w(self):
        with pytest.raises(NonSkewError) as exc_info:
            _only(w=np.eye(4))
        assert exc_info.value.code == "NonSkewW"

    def test_accepts_antisymmetric_w(self):
        w = np.zeros((4, 4))
        w[0, 1], w[1, 0] = 2.0, -2.0
        dec = _only(w=w)
        assert dec.w[0, 1] == 2.0
        assert not dec.w.flags.writeable

    @pytest.mark.parametrize("field, value", [("u_cov", np.zeros(3)), ("w", np.zeros((4, 3)))])
    def test_rejects_bad_shapes(self, field, value):
        with pytest.raises(DimensionError):
            _only(**{field: value})

    def test_coefficients_round_trip(self, rng):
        dec = random_decomposition(rng)
        assert OperatorDecomposition.from_coefficients(dec.coefficients()).max_abs_diff(dec) < 1e-15

    def test_coefficient_layout(self):
        w = np.zeros((4, 4))
        w[1, 3], w[3, 1] = 0.5, -0.5
        coefficients = _only(u=1, v=2, u_cov=[3, 0, 0, 0], w=w).coefficients()
        assert coefficients[0] == 1 and coefficients[1] == 2 and coefficients[2] == 3
        assert coefficients[14] == 1.0

    def test_from_coefficients_rejects_wrong_length(self):
        with pytest.raises(DimensionError):
            OperatorDecomposition.from_coefficients(np.zeros(15))

    def test_arithmetic(self, rng):
        a, b = random_decomposition(rng), random_decomposition(rng)
        total = a + b.scaled(2j)
        assert abs(total.u - (a.u + 2j * b.u)) < 1e-15
        assert max_abs(total.w - (a.w + 2j * b.w)) < 1e-15
        assert a.without_scalar().u == 0
        assert a.without_scalar().v == a.v

    def test_zeros(self):
        assert OperatorDecomposition.zeros().max_abs() == 0


# ---------------------------------------------------------------------------
# reconstruct
# ---------------------------------------------------------------------------
class TestReconstruct:
    def test_unit_scalar(self, canonical):
        assert np.array_equal(reconstruct(_only(u=1), canonical), identity4())

    def test_vector_part_is_gamma0(self, canonical):
        assert np.array_equal(reconstruct(_only(u_cov=[1, 0, 0, 0]), canonical), canonical.gamma_upper[0])

    def test_agrees_with_basis_expansion(self, canonical, rng):
        basis = operator_basis(canonical)
        for _ in range(10):
            dec = random_decomposition(rng)
            expected = sum(c * b for c, b in zip(dec.coefficients(), basis))
            assert max_abs_diff(reconstruct(dec, canonical), expected) < 1e-12
            assert np.allclose(solve_linear_16(basis, expected), dec.coefficients(), atol=1e-10)

    def test_basis_is_complete(self, contexts):
        for ctx in contexts:
            stacked = np.array([b.reshape(16) for b in operator_basis(ctx)])
            assert np.linalg.matrix_rank(stacked) == 16


# ---------------------------------------------------------------------------
# decompose
# ---------------------------------------------------------------------------
class TestDecompose:
    def test_identity(self, canonical):
        dec = decompose(identity4(), canonical)
        assert dec.max_abs_diff(_only(u=1)) == 0

    def test_chirality(self, canonical):
        dec = decompose(canonical.chirality, canonical)
        assert dec.max_abs_diff(_only(v=1)) == 0

    def test_gamma_pair(self, canonical):
        g = canonical.gamma_upper
        dec = decompose(g[0] @ g[1], canonical)
        expected_w = np.zeros((4, 4))
        expected_w[0, 1], expected_w[1, 0] = 0.5, -0.5
        assert dec.max_abs_diff(_only(w=expected_w)) < 1e-15

    def test_w_is_exactly_antisymmetric(self, rng, contexts):
        for ctx in contexts:
            w = decompose(random_operator(rng), ctx).w
            assert np.array_equal(w, -w.T)

    def test_rejects_non_finite(self, canonical):
        bad = np.eye(4, dtype=np.complex128)
        bad[2, 2] = np.nan
        with pytest.raises(NonFiniteValueError) as exc_info:
            decompose(bad, canonical)
        assert exc_info.value.code == "NonFiniteValue"


# ---------------------------------------------------------------------------
# Round trips and covariance
# ---------------------------------------------------------------------------
class TestRoundTrips:
    def test_decompose_after_reconstruct(self, contexts):
        rng = make_rng(11)
        for trial in range(ROUND_TRIPS):
            ctx = contexts[trial % len(contexts)]
            dec = random_decomposition(rng)
            recovered = decompose(reconstruct(dec, ctx), ctx)
            assert recovered.max_abs_diff(dec) <= ROUND_TRIP_TOLERANCE, trial

    def test_reconstruct_after_decompose(self, contexts):
        rng = make_rng(12)
        for trial in range(ROUND_TRIPS):
            ctx = contexts[trial % len(contexts)]
            f = random_operator(rng)
            assert max_abs_diff(reconstruct(decompose(f, ctx), ctx), f) <= ROUND_TRIP_TOLERANCE, trial

    def test_decompose_is_linear(self, contexts, rng):
        alpha, beta = 0.3 - 1.2j, 2.0 + 0.5j
        for ctx in contexts:
            f, g = random_operator(rng), random_operator(rng)
            combined = decompose(alpha * f + beta * g, ctx)
            separate = decompose(f, ctx).scaled(alpha) + decompose(g, ctx).scaled(beta)
            assert combined.max_abs_diff(separate) <= ROUND_TRIP_TOLERANCE

    def test_frame_covariance(self, canonical, random_contexts, rng):
        for ctx in random_contexts:
            L, S = ctx.change.spatial, ctx.change.spinor
            f = random_operator(rng)
            original = decompose(f, canonical)
            moved = decompose(np.linalg.solve(S, f @ S), ctx)
            tol = FRAME_TOLERANCE
            assert abs(moved.u - original.u) <= tol
            assert abs(moved.v - original.v) <= tol
            assert max_abs(moved.u_cov - L.T @ original.u_cov) <= tol
            assert max_abs(moved.v_cov - L.T @ original.v_cov) <= tol
            assert max_abs(moved.w - L.T @ original.w @ L) <= tol

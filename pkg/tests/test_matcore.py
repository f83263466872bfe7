import json
from fractions import Fraction

import numpy as np
import pytest

from matrixlie.errors import ShapeError
from matrixlie.matcore import (
    Tolerance,
    approx_eq,
    cmat,
    frobenius_norm,
    matrix_from_json,
    matrix_to_json,
    rational_nullspace,
    rational_rank,
    rational_solve,
    reye,
    rmat,
    rzeros,
)


def test_frobenius_norm_basic():
    assert frobenius_norm(np.zeros((2, 2))) == 0
    assert abs(frobenius_norm(np.eye(2)) - np.sqrt(2)) < 1e-15
    # upper-bounds the operator norm (which is 3 for this diagonal)
    assert abs(frobenius_norm(np.diag([3.0, 1.0])) - np.sqrt(10)) < 1e-15
    assert frobenius_norm(np.diag([3.0, 1.0])) >= 3


def test_frobenius_norm_submultiplicative():
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        B = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert frobenius_norm(A @ B) <= frobenius_norm(A) * frobenius_norm(B) + 1e-12
        assert frobenius_norm(A + B) <= frobenius_norm(A) + frobenius_norm(B) + 1e-12


def test_approx_eq():
    I = np.eye(2)
    assert approx_eq(I, I)
    B = I.copy()
    B[0, 1] = 1e-12
    assert approx_eq(I, B)
    assert not approx_eq(I, 2 * I)
    with pytest.raises(ShapeError):
        approx_eq(I, np.eye(3))


def test_approx_eq_symmetric_with_abs_only():
    rng = np.random.default_rng(1)
    tol = Tolerance(abs=1e-6, rel=0.0)
    for _ in range(10):
        A = rng.standard_normal((2, 2))
        B = A + rng.standard_normal((2, 2)) * 1e-7
        assert approx_eq(A, B, tol) == approx_eq(B, A, tol)
        assert approx_eq(A, A, tol)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(abs=-1)
    with pytest.raises(ValueError):
        Tolerance(rel=float("inf"))


def test_rational_rank():
    assert rational_rank(reye(3)) == 3
    assert rational_rank(rzeros(3, 3)) == 0
    assert rational_rank(rmat([[1, 2], [2, 4]])) == 1


def test_rational_nullspace():
    assert rational_nullspace(reye(2)) == []
    assert len(rational_nullspace(rzeros(2, 2))) == 2
    (v,) = rational_nullspace(rmat([[1, -1]]))
    assert v[0, 0] == v[1, 0] != 0


def test_rank_nullity_and_exact_kernel():
    rng = np.random.default_rng(2)
    for _ in range(20):
        M = rmat(rng.integers(-3, 4, size=(3, 4)).tolist())
        vs = rational_nullspace(M)
        assert rational_rank(M) + len(vs) == 4
        for v in vs:
            prod = M @ v
            assert all(x == 0 for x in prod.flat)


def test_rational_solve():
    A = rmat([[2, 1], [1, 3]])
    b = rmat([[1], [0]])
    x = rational_solve(A, b)
    assert all(p == q for p, q in zip((A @ x).flat, b.flat))
    # inconsistent system
    assert rational_solve(rmat([[1, 1], [1, 1]]), rmat([[1], [2]])) is None


def test_json_round_trip_complex():
    A = cmat([[1, 2j], [3 + 4j, -1]])
    B = matrix_from_json(json.loads(json.dumps(matrix_to_json(A))))
    assert np.array_equal(A, B)


def test_json_round_trip_rational():
    A = rmat([[Fraction(1, 3), 2], [0, Fraction(-5, 7)]])
    B = matrix_from_json(json.loads(json.dumps(matrix_to_json(A))))
    assert all(p == q for p, q in zip(A.flat, B.flat))


def test_json_real_omits_im():
    assert "im" not in matrix_to_json(np.eye(2))

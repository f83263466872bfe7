from fractions import Fraction

import numpy as np
import pytest

from matrixlie.errors import DomainError, ShapeError
from matrixlie.expmlog import mat_exp
from matrixlie.groups import (
    euclidean_embed,
    is_member,
    metric_g,
    o11_component,
    parse_group,
    polar_decompose_sl,
    su2_matrix,
    symplectic_J,
)
from matrixlie.matcore import Tolerance, frobenius_norm, rmat

TIGHT = Tolerance(abs=1e-15, rel=0.0)


def rotation(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def boost(t):
    c, s = np.cosh(t), np.sinh(t)
    return np.array([[c, s], [s, c]])


def test_rotation_in_so2():
    assert is_member(rotation(0.7), "SO(2)")
    assert is_member(rotation(0.7), "O(2)")
    assert is_member(rotation(0.7), "SL(2,R)")


def test_boost_in_so11():
    assert is_member(boost(0.3), "SO(1,1)")
    assert is_member(boost(0.3), "O(1,1)")


def test_det_one_not_orthogonal():
    A = np.diag([2.0, 0.5])
    assert not is_member(A, "SO(2)")
    assert is_member(A, "SL(2,R)")


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        is_member(np.eye(2), "SO(3)")


def test_real_groups_reject_complex():
    assert not is_member(np.eye(2) * (1 + 0.5j) / abs(1 + 0.5j), "O(2)")


def test_orthogonal_det_pm_one():
    rng = np.random.default_rng(8)
    for _ in range(10):
        M = rng.standard_normal((3, 3))
        Q, _ = np.linalg.qr(M)
        assert is_member(Q, "O(3)", Tolerance(abs=1e-9, rel=0))
        assert abs(abs(np.linalg.det(Q)) - 1) <= 1e-10


def test_su2_matrix():
    assert np.array_equal(su2_matrix(1, 0), np.eye(2))
    assert np.array_equal(su2_matrix(0, 1), np.array([[0, -1], [1, 0]]))
    U = su2_matrix((1 + 1j) / 2, (1 - 1j) / 2)
    assert is_member(U, "SU(2)", Tolerance(abs=1e-12, rel=0))
    with pytest.raises(DomainError):
        su2_matrix(1, 1)


def test_su2_members_have_canonical_form():
    rng = np.random.default_rng(9)
    for _ in range(10):
        v = rng.standard_normal(4)
        v /= np.linalg.norm(v)
        U = su2_matrix(v[0] + 1j * v[1], v[2] + 1j * v[3])
        V = su2_matrix(U[0, 0], U[1, 0])
        assert frobenius_norm(U - V) <= 1e-14


def test_metric_and_symplectic_matrices():
    assert np.array_equal(metric_g(3, 1), np.diag([1.0, 1, 1, -1]))
    assert np.array_equal(symplectic_J(1), np.array([[0, 1], [-1, 0]]))
    g = metric_g(1, 1)
    assert np.array_equal(g @ g, np.eye(2))


def test_euclidean_embed_homomorphism_exact():
    R1 = rmat([[0, -1], [1, 0]])
    R2 = rmat([[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]])
    x1 = [Fraction(1), Fraction(2)]
    x2 = [Fraction(-1, 3), Fraction(5)]
    lhs = euclidean_embed(R1, x1) @ euclidean_embed(R2, x2)
    rhs = euclidean_embed(R1 @ R2, np.array(x1, dtype=object) + R1 @ np.array(x2, dtype=object))
    assert all(p == q for p, q in zip(lhs.flat, rhs.flat))


def test_euclidean_embed_identity_and_inverse():
    E = euclidean_embed(np.eye(2), [0, 0])
    assert np.array_equal(np.asarray(E, dtype=complex), np.eye(3))
    x = np.array([1.5, -2.0])
    A = np.asarray(euclidean_embed(np.eye(2), x), dtype=complex)
    B = np.asarray(euclidean_embed(np.eye(2), -x), dtype=complex)
    assert np.allclose(np.linalg.inv(A), B)


def test_euclidean_members():
    E = euclidean_embed(rotation(0.4), [1.0, 2.0])
    assert is_member(np.asarray(E, dtype=complex), "E(2)")


def test_polar_orthogonal_input():
    Q = rotation(1.1)
    R, H = polar_decompose_sl(Q)
    assert frobenius_norm(R - Q) <= 1e-10
    assert frobenius_norm(H - np.eye(2)) <= 1e-10


def test_polar_diagonal():
    A = np.diag([2.0, 0.5])
    R, H = polar_decompose_sl(A)
    assert frobenius_norm(R - np.eye(2)) <= 1e-10
    assert frobenius_norm(H - A) <= 1e-10


def test_polar_random_sl2():
    rng = np.random.default_rng(10)
    for _ in range(10):
        A = rng.standard_normal((2, 2))
        if np.linalg.det(A) < 0:
            A[[0, 1]] = A[[1, 0]]
        A /= np.sqrt(np.linalg.det(A))
        R, H = polar_decompose_sl(A)
        assert frobenius_norm(R @ H - A) <= 1e-10
        assert frobenius_norm(R.real.T @ R.real - np.eye(2)) <= 1e-10
        assert frobenius_norm(H - H.T) <= 1e-10
        assert abs(np.linalg.det(R) - 1) <= 1e-9
        assert abs(np.linalg.det(H) - 1) <= 1e-9
        # positive definiteness by quadratic-form sampling
        for _ in range(20):
            x = rng.standard_normal(2)
            x /= np.linalg.norm(x)
            assert (x @ H.real @ x) > 0


def test_polar_singular_rejected():
    with pytest.raises(DomainError):
        polar_decompose_sl(np.zeros((2, 2)))


def test_o11_components():
    B = boost(0.5)
    flip = np.diag([1.0, -1.0])
    assert o11_component(B) == 1
    assert o11_component(-B) == 2
    assert o11_component(B @ flip) == 3
    assert o11_component(-B @ flip) == 4
    with pytest.raises(DomainError):
        o11_component(np.diag([2.0, 0.5]))


def test_group_closure_under_product_and_inverse():
    rng = np.random.default_rng(11)
    from matrixlie.liealg import random_algebra_element

    for gname, aname in [("SO(3)", "so(3)"), ("SU(2)", "su(2)"), ("Sp(1,R)", "sp(1,R)")]:
        A = mat_exp(random_algebra_element(aname, rng), TIGHT)
        B = mat_exp(random_algebra_element(aname, rng), TIGHT)
        tol = Tolerance(abs=1e-9, rel=0)
        assert is_member(A @ B, gname, tol)
        assert is_member(np.linalg.inv(A), gname, tol)


def test_parse_group_grammar():
    assert parse_group("SO(3)").family == "SO"
    assert parse_group("O(3,1)").k == 1
    assert parse_group("Sp(2,R)").family == "SpR"
    assert parse_group("Sp(2)").family == "Sp"
    assert parse_group("SL(2,C)").field == "C"
    assert parse_group("Heis").family == "Heis"
    with pytest.raises(ValueError):
        parse_group("XO(3)")

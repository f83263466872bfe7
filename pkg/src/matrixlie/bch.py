"""Baker-Campbell-Hausdorff in three forms.

* closed form X + Y + [X,Y]/2, exact when X and Y commute with [X,Y];
* the commutator series through third order;
* numerical evaluation of the integral formula
  Z = X + int_0^1 g(e^(ad X) e^(t ad Y))(Y) dt
  with ad materialized as a concrete matrix in a chosen basis.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import DomainError, OutOfDomainError, ShapeError
from .expmlog import mat_exp
from .liealg import Basis, ad_matrix, bracket, gl_basis
from .matcore import Tolerance, frobenius_norm, is_rational, to_complex

__all__ = ["bch_heisenberg", "bch_series", "g_operator", "bch_integral"]


def _is_zero(M, tol_abs=1e-12) -> bool:
    if is_rational(M):
        return all(x == 0 for x in M.flat)
    return frobenius_norm(M) <= tol_abs


def bch_heisenberg(X, Y):
    """Z with e^X e^Y = e^Z when X, Y commute with their commutator.

    Z = X + Y + [X,Y]/2; exact for rational inputs.
    """
    C = bracket(X, Y)
    if not (_is_zero(bracket(X, C)) and _is_zero(bracket(Y, C))):
        raise DomainError("inputs must commute with their commutator")
    half = Fraction(1, 2) if is_rational(X) else 0.5
    return X + Y + half * C


def bch_series(X, Y, order: int = 3):
    """Partial BCH sum: X+Y, then +[X,Y]/2, then +/-[.,[X,Y]]/12 terms."""
    if order not in (1, 2, 3):
        raise ValueError("order must be 1, 2, or 3")
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise ShapeError(f"need equal square shapes, got {X.shape}, {Y.shape}")
    exact = is_rational(X)
    half = Fraction(1, 2) if exact else 0.5
    twelfth = Fraction(1, 12) if exact else 1.0 / 12.0
    Z = X + Y
    if order >= 2:
        C = bracket(X, Y)
        Z = Z + half * C
    if order >= 3:
        Z = Z + twelfth * bracket(X, C) - twelfth * bracket(Y, C)
    return Z


def g_operator(M: np.ndarray, terms: int = 30) -> np.ndarray:
    """g(M) for g(z) = 1 + sum_{n>=1} (-1)^(n+1) / (n(n+1)) (z-1)^n.

    Requires ||M - I|| < 1, unless M - I is nilpotent (then the series
    terminates exactly).
    """
    exact = is_rational(M)
    n = M.shape[0]
    if M.shape[1] != n:
        raise ShapeError("g_operator needs a square matrix")
    if exact:
        from .matcore import rdot, reye

        B = M - reye(n)
        P = B.copy()
        for _ in range(n - 1):
            P = rdot(P, B)
        nilpotent = all(x == 0 for x in P.flat)
        if not nilpotent and frobenius_norm(B) >= 1.0:
            raise OutOfDomainError("||M - I|| >= 1 and M - I is not nilpotent")
        G = reye(n)
        P = reye(n)
        for m in range(1, terms + 1):
            P = rdot(P, B)
            if all(x == 0 for x in P.flat):
                break
            G = G + Fraction((-1) ** (m + 1), m * (m + 1)) * P
        return G
    M = np.asarray(M, dtype=complex)
    B = M - np.eye(n)
    nilpotent = frobenius_norm(np.linalg.matrix_power(B, n)) <= 1e-12
    if not nilpotent and frobenius_norm(B) >= 1.0:
        raise OutOfDomainError("||M - I|| >= 1 and M - I is not nilpotent")
    G = np.eye(n, dtype=complex)
    P = np.eye(n, dtype=complex)
    for m in range(1, terms + 1):
        P = P @ B
        G = G + ((-1) ** (m + 1)) / (m * (m + 1)) * P
    return G


def _coords_in_basis(Y, basis: Basis) -> np.ndarray:
    """Least-squares-free exact coordinates are overkill here; the bases
    used (full gl(n), su(2), sl(3)) are orthogonal-ish and small, so a
    dense complex solve is adequate for the floating route."""
    cols = np.column_stack([np.asarray(b, dtype=complex).reshape(-1) for b in basis.elements])
    y = np.asarray(Y, dtype=complex).reshape(-1)
    coords, residual, *_ = np.linalg.lstsq(cols, y, rcond=None)
    if frobenius_norm((cols @ coords - y).reshape(1, -1)) > 1e-9 * (1 + np.linalg.norm(y)):
        raise DomainError("Y does not lie in the span of the basis")
    return coords


def bch_integral(
    X,
    Y,
    quad_points: int = 64,
    terms: int = 30,
    basis: Basis | None = None,
) -> np.ndarray:
    """Z = X + int_0^1 g(e^(ad X) e^(t ad Y))(Y) dt by composite Simpson.

    ad X and ad Y are materialized in `basis` (default: the full
    elementary basis of gl(n)).  Every quadrature node must satisfy
    ||e^(ad X) e^(t ad Y) - I|| < 1 or an out-of-domain error is raised.
    """
    X = to_complex(X) if is_rational(X) else np.asarray(X, dtype=complex)
    Y = to_complex(Y) if is_rational(Y) else np.asarray(Y, dtype=complex)
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise ShapeError(f"need equal square shapes, got {X.shape}, {Y.shape}")
    n = X.shape[0]
    if basis is None:
        basis = gl_basis(n)
    adX = np.asarray(ad_matrix(X, basis), dtype=complex)
    adY = np.asarray(ad_matrix(Y, basis), dtype=complex)
    y = _coords_in_basis(Y, basis)
    tight = Tolerance(abs=1e-15, rel=0.0)
    EadX = mat_exp(adX, tight)
    d = len(basis)

    def integrand(t: float) -> np.ndarray:
        M = EadX @ mat_exp(t * adY, tight)
        if frobenius_norm(M - np.eye(d)) >= 1.0:
            raise OutOfDomainError(
                f"||e^(adX) e^(t adY) - I|| >= 1 at quadrature node t = {t}"
            )
        return g_operator(M, terms) @ y

    # composite Simpson: quad_points panels, each sampled at its
    # endpoints and midpoint
    h = 1.0 / quad_points
    total = np.zeros(d, dtype=complex)
    left = integrand(0.0)
    for i in range(quad_points):
        a = i * h
        mid = integrand(a + h / 2)
        right = integrand(a + h)
        total = total + (h / 6) * (left + 4 * mid + right)
        left = right
    Z = X.copy()
    for c, b in zip(total, basis.elements):
        Z = Z + c * np.asarray(b, dtype=complex)
    return Z

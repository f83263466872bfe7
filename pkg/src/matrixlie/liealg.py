"""Lie algebras: membership, bracket, ad/Ad, structure constants.

Algebras are named by lowercase strings mirroring the group names:
"su(2)", "sl(3,C)", "so(3,1)", "sp(1,R)", "heis", "e(3)", "p(3,1)".

ad and structure constants are always materialized in an explicit basis
and solved exactly: floating entries are dyadic rationals, so converting
them to fractions and running exact Gaussian elimination gives exact
coordinates whenever the bracket truly lies in the span.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ClosureError, DomainError, ShapeError
from .expmlog import mat_exp
from .groups import is_member, metric_g, parse_group, symplectic_J
from .matcore import (
    DEFAULT_TOL,
    Tolerance,
    is_rational,
    rational_solve,
    rzeros,
    to_complex,
)

__all__ = [
    "AlgebraId",
    "parse_algebra",
    "in_algebra",
    "bracket",
    "Basis",
    "su2_basis",
    "so3_basis",
    "gl_basis",
    "heis_basis",
    "sl2_basis",
    "ad_matrix",
    "Ad_apply",
    "structure_constants",
    "u_decompose",
    "algebra_membership_via_exp",
    "random_algebra_element",
]


@dataclass(frozen=True)
class AlgebraId:
    family: str  # gl, sl, so, soC, soK, u, su, spR, spC, sp, heis, e, p
    n: int
    k: int = 0
    field: str = "R"

    @property
    def matrix_dim(self) -> int:
        if self.family == "soK":
            return self.n + self.k
        if self.family in ("spR", "spC", "sp"):
            return 2 * self.n
        if self.family == "heis":
            return 3
        if self.family == "e":
            return self.n + 1
        if self.family == "p":
            return self.n + self.k + 1
        return self.n


_ALG_RE = re.compile(r"^([a-z]+)\((\d+)(?:,(\d+|[RC]))?(?:,([RC]))?\)$")


def parse_algebra(s: str) -> AlgebraId:
    """Parse an algebra name like "su(2)", "sl(3,C)", "so(3,1)", "heis"."""
    if s == "heis":
        return AlgebraId("heis", 3)
    m = _ALG_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse algebra name {s!r}")
    name, n, second, third = m.group(1), int(m.group(2)), m.group(3), m.group(4)
    field = "R"
    k = 0
    if second in ("R", "C"):
        field = second
    elif second is not None:
        k = int(second)
        if third in ("R", "C"):
            field = third
    if name in ("gl", "sl"):
        return AlgebraId(name, n, field=field)
    if name in ("u", "su"):
        return AlgebraId(name, n, field="C")
    if name == "so":
        if k > 0:
            return AlgebraId("soK", n, k=k)
        return AlgebraId("soC", n, field="C") if field == "C" else AlgebraId("so", n)
    if name == "sp":
        if second is None:
            return AlgebraId("sp", n, field="C")
        return AlgebraId("spR", n) if field == "R" else AlgebraId("spC", n, field="C")
    if name == "e":
        return AlgebraId("e", n)
    if name == "p":
        return AlgebraId("p", n, k=1)
    raise ValueError(f"cannot parse algebra name {s!r}")


def _is_real(X, tol):
    return bool(np.all(np.abs(X.imag) <= tol.abs))


def _close(A, B, tol):
    return bool(np.all(np.abs(A - B) <= tol.abs + tol.rel * np.abs(B)))


def in_algebra(X: np.ndarray, a, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Test the defining linear condition of algebra a on X, within tol."""
    if isinstance(a, str):
        a = parse_algebra(a)
    X = to_complex(X) if is_rational(X) else np.asarray(X, dtype=complex)
    d = a.matrix_dim
    if X.shape != (d, d):
        raise ShapeError(f"{a.family} with n={a.n} needs a {d}x{d} matrix, got {X.shape}")
    fam = a.family
    tr = np.trace(X)
    if fam == "gl":
        return a.field == "C" or _is_real(X, tol)
    if fam == "sl":
        return abs(tr) <= tol.abs and (a.field == "C" or _is_real(X, tol))
    if fam == "so":
        return _is_real(X, tol) and _close(X.T, -X, tol)
    if fam == "soC":
        return _close(X.T, -X, tol)
    if fam == "soK":
        g = metric_g(a.n, a.k)
        return _is_real(X, tol) and _close(g @ X.T @ g, -X, tol)
    if fam == "u":
        return _close(X.conj().T, -X, tol)
    if fam == "su":
        return _close(X.conj().T, -X, tol) and abs(tr) <= tol.abs
    if fam == "spR":
        J = symplectic_J(a.n)
        return _is_real(X, tol) and _close(J @ X.T @ J, X, tol)
    if fam == "spC":
        J = symplectic_J(a.n)
        return _close(J @ X.T @ J, X, tol)
    if fam == "sp":
        J = symplectic_J(a.n)
        return _close(J @ X.T @ J, X, tol) and _close(X.conj().T, -X, tol)
    if fam == "heis":
        return _is_real(X, tol) and all(
            abs(X[i, j]) <= tol.abs for i in range(3) for j in range(i + 1)
        )
    if fam == "e":
        n = a.n
        bottom_ok = bool(np.all(np.abs(X[n, :]) <= tol.abs))
        return _is_real(X, tol) and bottom_ok and _close(X[:n, :n].T, -X[:n, :n], tol)
    if fam == "p":
        n, k = a.n, a.k
        m = n + k
        g = metric_g(n, k)
        bottom_ok = bool(np.all(np.abs(X[m, :]) <= tol.abs))
        return _is_real(X, tol) and bottom_ok and _close(
            g @ X[:m, :m].T @ g, -X[:m, :m], tol
        )
    raise ValueError(f"unhandled family {fam}")


def bracket(X, Y):
    """The commutator [X, Y] = XY - YX (exact for rational inputs)."""
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise ShapeError(f"bracket needs equal square shapes, got {X.shape}, {Y.shape}")
    return X @ Y - Y @ X


@dataclass(frozen=True)
class Basis:
    """An ordered, labeled basis of a matrix Lie algebra."""

    algebra: str
    labels: tuple
    elements: tuple

    def __post_init__(self):
        assert len(self.labels) == len(self.elements)

    def __len__(self):
        return len(self.elements)


# su(2): brackets cycle [E1,E2]=E3, [E2,E3]=E1, [E3,E1]=E2
E1 = np.array([[0.5j, 0], [0, -0.5j]], dtype=complex)
E2 = np.array([[0, 0.5], [-0.5, 0]], dtype=complex)
E3 = np.array([[0, 0.5j], [0.5j, 0]], dtype=complex)

# so(3): ad E_i in the basis above equals F_i
F1 = np.array([[0, 0, 0], [0, 0, -1], [0, 1, 0]], dtype=complex)
F2 = np.array([[0, 0, 1], [0, 0, 0], [-1, 0, 0]], dtype=complex)
F3 = np.array([[0, -1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)


def su2_basis() -> Basis:
    return Basis("su(2)", ("E1", "E2", "E3"), (E1, E2, E3))


def so3_basis() -> Basis:
    return Basis("so(3)", ("F1", "F2", "F3"), (F1, F2, F3))


def sl2_basis() -> Basis:
    """H = diag(1,-1), X = E_12, Y = E_21 — the standard sl(2) triple."""
    H = np.array([[1, 0], [0, -1]], dtype=complex)
    X = np.array([[0, 1], [0, 0]], dtype=complex)
    Y = np.array([[0, 0], [1, 0]], dtype=complex)
    return Basis("sl(2,C)", ("H", "X", "Y"), (H, X, Y))


def gl_basis(n: int) -> Basis:
    """The n^2 elementary matrices E_ij, row-major order."""
    labels = []
    elems = []
    for i in range(n):
        for j in range(n):
            M = np.zeros((n, n), dtype=complex)
            M[i, j] = 1
            labels.append(f"E{i + 1}{j + 1}")
            elems.append(M)
    return Basis(f"gl({n},C)", tuple(labels), tuple(elems))


def heis_basis() -> Basis:
    """Generators of the strictly-upper-triangular 3x3 algebra."""
    X = np.zeros((3, 3), dtype=complex)
    X[0, 1] = 1
    Y = np.zeros((3, 3), dtype=complex)
    Y[1, 2] = 1
    Z = np.zeros((3, 3), dtype=complex)
    Z[0, 2] = 1
    return Basis("heis", ("X", "Y", "Z"), (X, Y, Z))


def _to_exact_parts(M) -> tuple:
    """Split a matrix into exact rational real/imaginary parts.

    Floating entries are dyadic rationals, so Fraction(entry) is exact.
    """
    if is_rational(M):
        n, m = M.shape
        re = M
        im = rzeros(n, m)
        return re, im
    M = np.asarray(M, dtype=complex)
    n, m = M.shape
    re = rzeros(n, m)
    im = rzeros(n, m)
    for i in range(n):
        for j in range(m):
            re[i, j] = Fraction(float(M[i, j].real))
            im[i, j] = Fraction(float(M[i, j].imag))
    return re, im


def _exact_coords(target, elements):
    """Exact coordinates of target in span(elements), or None.

    Handles complex coefficients by solving the doubled real system with
    unknowns (Re c_j, Im c_j).
    """
    n = target.shape[0]
    d = len(elements)
    A = rzeros(2 * n * n, 2 * d)
    for j, B in enumerate(elements):
        bre, bim = _to_exact_parts(B)
        for i in range(n):
            for l in range(n):
                row = i * n + l
                A[row, j] = bre[i, l]
                A[row, d + j] = -bim[i, l]
                A[n * n + row, j] = bim[i, l]
                A[n * n + row, d + j] = bre[i, l]
    tre, tim = _to_exact_parts(target)
    b = rzeros(2 * n * n, 1)
    for i in range(n):
        for l in range(n):
            b[i * n + l, 0] = tre[i, l]
            b[n * n + i * n + l, 0] = tim[i, l]
    x = rational_solve(A, b)
    if x is None:
        return None
    return [(x[j, 0], x[d + j, 0]) for j in range(d)]


def _coords_to_scalars(coords, rational_ok: bool):
    """Fraction pairs -> Fractions (if all real) or complex numbers."""
    if all(c[1] == 0 for c in coords):
        if rational_ok:
            return [c[0] for c in coords]
        return [float(c[0]) for c in coords]
    return [complex(c[0]) + 1j * complex(c[1]) for c in coords]


def ad_matrix(X, basis: Basis):
    """The matrix of ad X = [X, .] in the given basis.

    Column j holds the exact coordinates of [X, basis_j]; a bracket
    outside the span raises ClosureError.
    """
    d = len(basis)
    cols = []
    any_complex = False
    for b in basis.elements:
        coords = _exact_coords(bracket(X, b), basis.elements)
        if coords is None:
            raise ClosureError("bracket leaves the span of the basis")
        any_complex = any_complex or any(c[1] != 0 for c in coords)
        cols.append(coords)
    if is_rational(X) and not any_complex:
        M = rzeros(d, d)
        for j, coords in enumerate(cols):
            for i in range(d):
                M[i, j] = coords[i][0]
        return M
    M = np.zeros((d, d), dtype=complex)
    for j, coords in enumerate(cols):
        for i in range(d):
            M[i, j] = complex(coords[i][0]) + 1j * complex(coords[i][1])
    return M


def Ad_apply(A: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Ad A (X) = A X A^-1."""
    A = np.asarray(A, dtype=complex)
    X = np.asarray(X, dtype=complex)
    if A.shape != X.shape or A.shape[0] != A.shape[1]:
        raise ShapeError(f"Ad needs equal square shapes, got {A.shape}, {X.shape}")
    if abs(np.linalg.det(A)) < 1e-13:
        raise DomainError("Ad requires an invertible matrix")
    return A @ X @ np.linalg.inv(A)


def structure_constants(basis: Basis) -> np.ndarray:
    """Exact rationals c[i][j][k] with [X_i, X_j] = sum_k c_ijk X_k.

    Skew in (i,j) and Jacobi-consistent by construction; raises
    ClosureError if a bracket leaves the span, DomainError if any
    coefficient is not real.
    """
    d = len(basis)
    c = np.empty((d, d, d), dtype=object)
    c[:] = Fraction(0)
    for i in range(d):
        for j in range(i + 1, d):
            coords = _exact_coords(
                bracket(basis.elements[i], basis.elements[j]), basis.elements
            )
            if coords is None:
                raise ClosureError("bracket leaves the span of the basis")
            for k, (re, im) in enumerate(coords):
                if im != 0:
                    raise DomainError("structure constants are not real rational")
                c[i, j, k] = re
                c[j, i, k] = -re
    return c


def u_decompose(X: np.ndarray):
    """Split X = X1 + i X2 with X1, X2 both skew-adjoint (in u(n))."""
    X = np.asarray(X, dtype=complex)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise ShapeError("u_decompose needs a square matrix")
    X1 = (X - X.conj().T) / 2
    X2 = (X + X.conj().T) / 2j
    return X1, X2


def algebra_membership_via_exp(
    X: np.ndarray, g, samples=(-1.0, -0.3, 0.3, 1.0), tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Sampled stand-in for "e^(tX) in G for all real t".

    Checks group membership of e^(tX) at each sampled t.  Necessarily
    incomplete (finitely many t); in_algebra is the authoritative test.
    """
    if isinstance(g, str):
        g = parse_group(g)
    X = np.asarray(X, dtype=complex)
    d = g.matrix_dim
    if X.shape != (d, d):
        raise ShapeError(f"need a {d}x{d} matrix, got {X.shape}")
    tight = Tolerance(abs=1e-15, rel=0.0)
    return all(is_member(mat_exp(t * X, tight), g, tol) for t in samples)


def random_algebra_element(a, rng, scale: float = 0.5) -> np.ndarray:
    """Draw a random element of the named algebra (for property tests)."""
    if isinstance(a, str):
        a = parse_algebra(a)
    d = a.matrix_dim
    fam = a.family

    def rand(n, m, cplx):
        M = rng.standard_normal((n, m)) * scale
        if cplx:
            M = M + 1j * rng.standard_normal((n, m)) * scale
        return M.astype(complex)

    if fam == "gl":
        return rand(d, d, a.field == "C")
    if fam == "sl":
        M = rand(d, d, a.field == "C")
        return M - np.trace(M) / d * np.eye(d)
    if fam == "so":
        M = rand(d, d, False)
        return M - M.T
    if fam == "soC":
        M = rand(d, d, True)
        return M - M.T
    if fam == "soK":
        g = metric_g(a.n, a.k)
        M = rand(d, d, False)
        return g @ (M - M.T)
    if fam == "u":
        M = rand(d, d, True)
        return (M - M.conj().T) / 2
    if fam == "su":
        M = rand(d, d, True)
        M = (M - M.conj().T) / 2
        return M - np.trace(M) / d * np.eye(d)
    if fam in ("spR", "spC"):
        J = symplectic_J(a.n)
        M = rand(d, d, fam == "spC")
        return J @ (M + M.T) / 2
    if fam == "sp":
        n = a.n
        A = rand(n, n, True)
        A = (A - A.conj().T) / 2
        B = rand(n, n, True)
        B = (B + B.T) / 2
        X = np.zeros((d, d), dtype=complex)
        X[:n, :n] = A
        X[:n, n:] = B
        X[n:, :n] = -B.conj()
        X[n:, n:] = A.conj()
        return X
    if fam == "heis":
        X = np.zeros((3, 3), dtype=complex)
        X[0, 1], X[0, 2], X[1, 2] = rng.standard_normal(3) * scale
        return X
    if fam == "e":
        n = a.n
        M = rand(n, n, False)
        X = np.zeros((d, d), dtype=complex)
        X[:n, :n] = M - M.T
        X[:n, n] = rng.standard_normal(n) * scale
        return X
    if fam == "p":
        n, k = a.n, a.k
        m = n + k
        g = metric_g(n, k)
        M = rand(m, m, False)
        X = np.zeros((d, d), dtype=complex)
        X[:m, :m] = g @ (M - M.T)
        X[:m, m] = rng.standard_normal(m) * scale
        return X
    raise ValueError(f"unhandled family {fam}")

"""Dense matrix carriers and the primitives everything else builds on.

Two carriers are used throughout the package:

* complex floating matrices: plain ``numpy`` arrays of ``complex128``;
* exact rational matrices: ``numpy`` object arrays whose entries are
  ``fractions.Fraction`` (never rounded, always in lowest terms).

This module provides the norm/comparison primitives for the floating
carrier and exact rank/nullspace/solve primitives for the rational one,
plus the JSON interchange format used by the CLI and test fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ShapeError

__all__ = [
    "Tolerance",
    "cmat",
    "frobenius_norm",
    "approx_eq",
    "rmat",
    "rzeros",
    "reye",
    "rdot",
    "is_rational",
    "to_complex",
    "to_rational",
    "rational_rref",
    "rational_rank",
    "rational_nullspace",
    "rational_solve",
    "rational_inverse",
    "matrix_to_json",
    "matrix_from_json",
]


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair used by every floating comparison."""

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if not (self.abs >= 0 and self.rel >= 0):
            raise ValueError("tolerances must be nonnegative")
        if not (np.isfinite(self.abs) and np.isfinite(self.rel)):
            raise ValueError("tolerances must be finite")


DEFAULT_TOL = Tolerance()


def cmat(rows) -> np.ndarray:
    """Build a complex matrix from nested lists (or pass an array through)."""
    A = np.asarray(rows, dtype=complex)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def frobenius_norm(M: np.ndarray) -> float:
    """sqrt of the sum of squared entry moduli.

    Submultiplicative and an upper bound for the operator norm, so every
    norm-based convergence precondition stated for the operator norm
    remains sufficient when checked with this norm.
    """
    if is_rational(M):
        M = to_complex(M)
    return float(np.linalg.norm(np.asarray(M, dtype=complex), "fro"))


def approx_eq(A, B, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Entrywise |A_ij - B_ij| <= tol.abs + tol.rel * |B_ij|."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    return bool(np.all(np.abs(A - B) <= tol.abs + tol.rel * np.abs(B)))


# ---------------------------------------------------------------------------
# exact rational matrices


def rmat(rows) -> np.ndarray:
    """Build an exact rational matrix (object array of Fraction)."""
    data = [[Fraction(x) for x in row] for row in rows]
    A = np.empty((len(data), len(data[0])), dtype=object)
    for i, row in enumerate(data):
        if len(row) != A.shape[1]:
            raise ShapeError("ragged rows")
        for j, x in enumerate(row):
            A[i, j] = x
    return A


def rzeros(rows: int, cols: int) -> np.ndarray:
    A = np.empty((rows, cols), dtype=object)
    A[:] = Fraction(0)
    return A


def reye(n: int) -> np.ndarray:
    A = rzeros(n, n)
    for i in range(n):
        A[i, i] = Fraction(1)
    return A


def rdot(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact matrix product of rational matrices."""
    if A.shape[1] != B.shape[0]:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    return np.dot(A, B)


def is_rational(M) -> bool:
    return isinstance(M, np.ndarray) and M.dtype == object


def to_complex(M: np.ndarray) -> np.ndarray:
    """Rational matrix -> complex floating matrix."""
    return np.array([[complex(x) for x in row] for row in M], dtype=complex)


def to_rational(M: np.ndarray) -> np.ndarray:
    """Real floating matrix -> exact rational matrix (floats are dyadic, so
    the conversion is exact with respect to the stored values)."""
    M = np.asarray(M)
    if np.iscomplexobj(M) and np.any(M.imag != 0):
        raise ValueError("cannot convert a matrix with nonzero imaginary part")
    return rmat([[Fraction(float(np.real(x))) for x in row] for row in M])


def rational_rref(M: np.ndarray):
    """Reduced row echelon form by exact Gaussian elimination.

    Returns (R, pivots) where pivots[i] is the column of the leading 1 in
    row i of R.
    """
    R = M.copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if R[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            R[[r, pivot]] = R[[pivot, r]]
        R[r] = R[r] / R[r, c]
        for i in range(rows):
            if i != r and R[i, c] != 0:
                R[i] = R[i] - R[i, c] * R[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rational_rank(M: np.ndarray) -> int:
    """Exact rank of a rational matrix."""
    _, pivots = rational_rref(M)
    return len(pivots)


def rational_nullspace(M: np.ndarray) -> list[np.ndarray]:
    """Exact basis of the right nullspace, as column vectors.

    len(result) == cols - rational_rank(M), and M @ v == 0 exactly for
    every returned v.
    """
    R, pivots = rational_rref(M)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = rzeros(cols, 1)
        v[f, 0] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p, 0] = -R[i, f]
        basis.append(v)
    return basis


def rational_solve(A: np.ndarray, b: np.ndarray):
    """Exact solution of A x = b, or None if the system is inconsistent.

    When the solution is underdetermined an arbitrary particular solution
    (free variables set to zero) is returned.
    """
    rows, cols = A.shape
    aug = np.empty((rows, cols + b.shape[1]), dtype=object)
    aug[:, :cols] = A
    aug[:, cols:] = b
    R, pivots = rational_rref(aug)
    if any(p >= cols for p in pivots):
        return None
    x = rzeros(cols, b.shape[1])
    for i, p in enumerate(pivots):
        x[p] = R[i, cols:]
    return x


def rational_inverse(A: np.ndarray) -> np.ndarray:
    """Exact inverse of a square rational matrix."""
    n = A.shape[0]
    if A.shape[1] != n:
        raise ShapeError("inverse requires a square matrix")
    x = rational_solve(A, reye(n))
    if x is None or rational_rank(A) != n:
        raise ValueError("matrix is singular")
    return x


# ---------------------------------------------------------------------------
# JSON interchange
#
# Complex: { "rows": r, "cols": c, "re": [...], "im": [...] } ("im" optional).
# Rational: { "rows": r, "cols": c, "num": [...], "den": [...] }.
# All entry lists are row-major.


def matrix_to_json(M: np.ndarray) -> dict:
    rows, cols = M.shape
    if is_rational(M):
        flat = [M[i, j] for i in range(rows) for j in range(cols)]
        return {
            "rows": rows,
            "cols": cols,
            "num": [int(x.numerator) for x in flat],
            "den": [int(x.denominator) for x in flat],
        }
    M = np.asarray(M, dtype=complex)
    out = {
        "rows": rows,
        "cols": cols,
        "re": [float(M[i, j].real) for i in range(rows) for j in range(cols)],
    }
    if np.any(M.imag != 0):
        out["im"] = [float(M[i, j].imag) for i in range(rows) for j in range(cols)]
    return out


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    if "num" in obj:
        num, den = obj["num"], obj["den"]
        if len(num) != rows * cols or len(den) != rows * cols:
            raise ShapeError("entry count does not match rows*cols")
        return rmat(
            [
                [Fraction(num[i * cols + j], den[i * cols + j]) for j in range(cols)]
                for i in range(rows)
            ]
        )
    re = obj["re"]
    im = obj.get("im", [0.0] * (rows * cols))
    if len(re) != rows * cols or len(im) != rows * cols:
        raise ShapeError("entry count does not match rows*cols")
    return cmat(
        [
            [re[i * cols + j] + 1j * im[i * cols + j] for j in range(cols)]
            for i in range(rows)
        ]
    )

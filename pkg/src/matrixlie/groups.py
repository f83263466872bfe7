"""Matrix Lie groups: identifiers, membership predicates, constructors.

Groups are named by strings like "SO(3)", "SU(2)", "O(3,1)", "Sp(2,R)",
"SL(2,C)", "Heis", "E(3)", "P(3,1)".  Membership is always tested
against the defining algebraic identity within a tolerance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, ShapeError
from .matcore import DEFAULT_TOL, Tolerance, frobenius_norm

__all__ = [
    "GroupId",
    "parse_group",
    "is_member",
    "su2_matrix",
    "metric_g",
    "symplectic_J",
    "euclidean_embed",
    "polar_decompose_sl",
    "o11_component",
]

# family -> (has k parameter, field fixed to)
_FAMILIES = {
    "GL",
    "SL",
    "O",
    "SO",
    "U",
    "SU",
    "OC",  # complex orthogonal O(n,C)
    "SOC",
    "OK",  # generalized orthogonal O(n,k)
    "SOK",
    "SpR",
    "SpC",
    "Sp",  # compact symplectic
    "Heis",
    "E",
    "P",
}


@dataclass(frozen=True)
class GroupId:
    family: str
    n: int
    k: int = 0
    field: str = "R"  # "R" or "C"

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.k > 0 and self.family not in ("OK", "SOK", "P"):
            raise ValueError("k parameter only applies to generalized-orthogonal families")

    @property
    def matrix_dim(self) -> int:
        """Ambient square-matrix size for members of this group."""
        if self.family in ("OK", "SOK"):
            return self.n + self.k
        if self.family in ("SpR", "SpC", "Sp"):
            return 2 * self.n
        if self.family == "Heis":
            return 3
        if self.family == "E":
            return self.n + 1
        if self.family == "P":
            return self.n + self.k + 1
        return self.n


_GROUP_RE = re.compile(r"^([A-Za-z]+)\((\d+)(?:,(\d+|[RC]))?(?:,([RC]))?\)$")


def parse_group(s: str) -> GroupId:
    """Parse a group name like "SO(3)", "O(3,1)", "Sp(2,R)", "Heis"."""
    if s == "Heis":
        return GroupId("Heis", 3)
    m = _GROUP_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse group name {s!r}")
    name, n, second, third = m.group(1), int(m.group(2)), m.group(3), m.group(4)
    field = "R"
    k = 0
    if second in ("R", "C"):
        field = second
    elif second is not None:
        k = int(second)
        if third in ("R", "C"):
            field = third
    if name == "GL":
        return GroupId("GL", n, field=field)
    if name == "SL":
        return GroupId("SL", n, field=field)
    if name == "U":
        return GroupId("U", n, field="C")
    if name == "SU":
        return GroupId("SU", n, field="C")
    if name == "O":
        if k > 0:
            return GroupId("OK", n, k=k)
        return GroupId("OC", n, field="C") if field == "C" else GroupId("O", n)
    if name == "SO":
        if k > 0:
            return GroupId("SOK", n, k=k)
        return GroupId("SOC", n, field="C") if field == "C" else GroupId("SO", n)
    if name == "Sp":
        if second is None:
            return GroupId("Sp", n, field="C")
        return GroupId("SpR", n) if field == "R" else GroupId("SpC", n, field="C")
    if name == "E":
        return GroupId("E", n)
    if name == "P":
        return GroupId("P", n, k=1)
    raise ValueError(f"cannot parse group name {s!r}")


def metric_g(n: int, k: int) -> np.ndarray:
    """diag(1,...,1, -1,...,-1) with n plus signs and k minus signs."""
    return np.diag([1.0] * n + [-1.0] * k).astype(complex)


def symplectic_J(n: int) -> np.ndarray:
    """The 2n x 2n block matrix [[0, I],[-I, 0]]."""
    J = np.zeros((2 * n, 2 * n), dtype=complex)
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


def _is_real(A, tol):
    return bool(np.all(np.abs(A.imag) <= tol.abs))


def _close(A, B, tol):
    return bool(np.all(np.abs(A - B) <= tol.abs + tol.rel * np.abs(B)))


def is_member(A: np.ndarray, g, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Test the defining algebraic condition of group g on A, within tol."""
    if isinstance(g, str):
        g = parse_group(g)
    A = np.asarray(A, dtype=complex)
    d = g.matrix_dim
    if A.shape != (d, d):
        raise ShapeError(f"{g.family} with n={g.n} needs a {d}x{d} matrix, got {A.shape}")
    I = np.eye(d)
    det = complex(np.linalg.det(A))
    fam = g.family
    if fam == "GL":
        ok = abs(det) > tol.abs
        return ok and (g.field == "C" or _is_real(A, tol))
    if fam == "SL":
        ok = abs(det - 1) <= tol.abs + tol.rel
        return ok and (g.field == "C" or _is_real(A, tol))
    if fam == "O":
        return _is_real(A, tol) and _close(A.T @ A, I, tol)
    if fam == "SO":
        return _is_real(A, tol) and _close(A.T @ A, I, tol) and abs(det - 1) <= tol.abs + tol.rel
    if fam == "U":
        return _close(A.conj().T @ A, I, tol)
    if fam == "SU":
        return _close(A.conj().T @ A, I, tol) and abs(det - 1) <= tol.abs + tol.rel
    if fam == "OC":
        return _close(A.T @ A, I, tol)
    if fam == "SOC":
        return _close(A.T @ A, I, tol) and abs(det - 1) <= tol.abs + tol.rel
    if fam in ("OK", "SOK"):
        met = metric_g(g.n, g.k)
        ok = _is_real(A, tol) and _close(A.T @ met @ A, met, tol)
        if fam == "SOK":
            ok = ok and abs(det - 1) <= tol.abs + tol.rel
        return ok
    if fam == "SpR":
        J = symplectic_J(g.n)
        return _is_real(A, tol) and _close(A.T @ J @ A, J, tol)
    if fam == "SpC":
        J = symplectic_J(g.n)
        return _close(A.T @ J @ A, J, tol)
    if fam == "Sp":
        J = symplectic_J(g.n)
        return _close(A.T @ J @ A, J, tol) and _close(A.conj().T @ A, I, tol)
    if fam == "Heis":
        upper = _is_real(A, tol) and all(abs(A[i, i] - 1) <= tol.abs for i in range(3))
        return upper and all(abs(A[i, j]) <= tol.abs for i in range(3) for j in range(i))
    if fam == "E":
        n = g.n
        R = A[:n, :n]
        bottom_ok = _close(A[n, :], np.eye(n + 1)[n], tol)
        return (
            _is_real(A, tol)
            and bottom_ok
            and _close(R.T @ R, np.eye(n), tol)
        )
    if fam == "P":
        n, k = g.n, g.k
        m = n + k
        R = A[:m, :m]
        met = metric_g(n, k)
        bottom_ok = _close(A[m, :], np.eye(m + 1)[m], tol)
        return _is_real(A, tol) and bottom_ok and _close(R.T @ met @ R, met, tol)
    raise ValueError(f"unhandled family {fam}")


def su2_matrix(alpha: complex, beta: complex) -> np.ndarray:
    """[[a, -conj b],[b, conj a]] for |a|^2 + |b|^2 = 1 — the general SU(2) element."""
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1) > 1e-12:
        raise DomainError("|alpha|^2 + |beta|^2 must equal 1")
    return np.array(
        [[alpha, -np.conj(beta)], [beta, np.conj(alpha)]], dtype=complex
    )


def euclidean_embed(R: np.ndarray, x) -> np.ndarray:
    """Embed a rigid motion {x, R} as the (n+1)x(n+1) block matrix [[R, x],[0, 1]].

    This is a homomorphism: embed(R1,x1) @ embed(R2,x2) = embed(R1 R2, x1 + R1 x2).
    """
    R = np.asarray(R)
    x = np.asarray(x).reshape(-1)
    n = R.shape[0]
    if R.shape != (n, n) or x.shape != (n,):
        raise ShapeError(f"need n x n rotation and length-n vector, got {R.shape}, {x.shape}")
    E = np.zeros((n + 1, n + 1), dtype=R.dtype if R.dtype == object else complex)
    E[:n, :n] = R
    E[:n, n] = x
    E[n, n] = 1
    return E


def polar_decompose_sl(A: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """A = R H with R orthogonal, H symmetric positive-definite (A real, invertible).

    The orthogonal factor is found by the Newton iteration
    R <- (R + R^-T)/2, then H = R^T A.
    """
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError("polar decomposition needs a square matrix")
    if np.any(np.abs(A.imag) > tol.abs):
        raise DomainError("matrix must be real")
    A = A.real
    if abs(np.linalg.det(A)) <= tol.abs:
        raise DomainError("matrix is singular")
    R = A.copy()
    for _ in range(100):
        R_next = (R + np.linalg.inv(R).T) / 2
        if frobenius_norm(R_next - R) < tol.abs:
            R = R_next
            break
        R = R_next
    else:
        raise ConvergenceError("polar Newton iteration did not converge in 100 steps")
    H = R.T @ A
    return R.astype(complex), H.astype(complex)


def o11_component(A: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> int:
    """Which of the four connected pieces of O(1,1) the matrix lies in.

    1: A11 > 0, det > 0 (identity component, pure boosts)
    2: A11 < 0, det > 0
    3: A11 > 0, det < 0
    4: A11 < 0, det < 0
    """
    if not is_member(A, GroupId("OK", 1, k=1), tol):
        raise DomainError("matrix is not in O(1,1)")
    A = np.asarray(A, dtype=complex)
    det = np.linalg.det(A).real
    a11 = A[0, 0].real
    if det > 0:
        return 1 if a11 > 0 else 2
    return 3 if a11 > 0 else 4

"""sl(3,C): basis, roots, weights, highest-weight irreps, Weyl group.

The irreducible with highest weight (m1, m2) is constructed inside the
tensor product of m1 copies of the standard representation and m2
copies of its dual, as the closure of the top weight vector under all
eight generators.  All arithmetic is exact rational, and every closure
vector is a weight vector by construction, so weight multiplicities are
read off combinatorially.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, LieError
from .liealg import Basis
from .matcore import (
    rational_rref,
    rational_solve,
    rmat,
    rzeros,
)
from .repcore import Representation

__all__ = [
    "sl3_basis",
    "sl3_roots",
    "Root",
    "is_higher",
    "sl3_standard_rep",
    "sl3_antifundamental_rep",
    "sl3_highest_weight_irrep",
    "sl3_dim_formula",
    "weyl_elements",
    "weyl_act",
    "weyl_invariance_check",
    "weight_table",
    "weight_table_csv",
]

_LABELS = ("H1", "H2", "X1", "X2", "X3", "Y1", "Y2", "Y3")


def _basis_matrices():
    H1 = rmat([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    H2 = rmat([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
    X1 = rmat([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    X2 = rmat([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    X3 = rmat([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    Y1 = rmat([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    Y2 = rmat([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    Y3 = rmat([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    return (H1, H2, X1, X2, X3, Y1, Y2, Y3)


def sl3_basis() -> Basis:
    """The eight-matrix basis H1, H2, X1..X3, Y1..Y3."""
    return Basis("sl(3,C)", _LABELS, _basis_matrices())


@dataclass(frozen=True)
class Root:
    weight: tuple
    vector_label: str


def sl3_roots() -> list:
    """The six roots, paired with their root vectors."""
    return [
        Root((2, -1), "X1"),
        Root((-1, 2), "X2"),
        Root((1, 1), "X3"),
        Root((-2, 1), "Y1"),
        Root((1, -2), "Y2"),
        Root((-1, -1), "Y3"),
    ]


def is_higher(mu1, mu2) -> bool:
    """mu1 >= mu2 in the simple-root order: mu1 - mu2 = a(2,-1) + b(-1,2)
    with a >= 0 and b >= 0 (a, b may be non-integers)."""
    d1 = mu1[0] - mu2[0]
    d2 = mu1[1] - mu2[1]
    a = Fraction(2 * d1 + d2, 3)
    b = Fraction(d1 + 2 * d2, 3)
    return a >= 0 and b >= 0


def sl3_standard_rep() -> Representation:
    """Generators are the basis matrices themselves; weights (1,0), (-1,1), (0,-1)."""
    return Representation(
        "sl(3,C)",
        _LABELS,
        _basis_matrices(),
        {0: (1, 0), 1: (-1, 1), 2: (0, -1)},
    )


def sl3_antifundamental_rep() -> Representation:
    """pi(Z) = -Z^T on C^3; weights (-1,0), (1,-1), (0,1)."""
    gens = tuple(-(Z.T).copy() for Z in _basis_matrices())
    return Representation(
        "sl(3,C)", _LABELS, gens, {0: (-1, 0), 1: (1, -1), 2: (0, 1)}
    )


def sl3_dim_formula(m1: int, m2: int) -> int:
    """(m1+1)(m2+1)(m1+m2+2)/2 — dimension of the (m1, m2) irreducible."""
    if m1 < 0 or m2 < 0:
        raise ValueError("m1, m2 must be nonnegative integers")
    return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) // 2


class _Closure:
    """Exact row-reduced span bookkeeping: add vectors, track rank."""

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows = []  # reduced rows
        self.pivots = []

    def _reduce(self, v):
        v = v.copy()
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                v = v - v[p] * row
        return v

    def add(self, v) -> bool:
        """Reduce v against the current span; True if it was new."""
        v = self._reduce(v)
        nz = next((i for i in range(self.ambient) if v[i] != 0), None)
        if nz is None:
            return False
        v = v / v[nz]
        for i, row in enumerate(self.rows):
            if row[nz] != 0:
                self.rows[i] = row - row[nz] * v
        self.rows.append(v)
        self.pivots.append(nz)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def _apply_factorwise(gen_per_factor, vec_support, n_factors):
    """Apply sum_f I x..x g_f x..x I to a sparse vector.

    vec_support: dict mapping index tuple -> Fraction.
    gen_per_factor: list of 3x3 rational matrices, one per tensor factor.
    Returns a new sparse dict.
    """
    out = {}
    for idx, coeff in vec_support.items():
        for f in range(n_factors):
            g = gen_per_factor[f]
            col = idx[f]
            for row in range(3):
                if g[row, col] != 0:
                    new_idx = idx[:f] + (row,) + idx[f + 1 :]
                    out[new_idx] = out.get(new_idx, Fraction(0)) + coeff * g[row, col]
    return {k: v for k, v in out.items() if v != 0}


def sl3_highest_weight_irrep(m1: int, m2: int, cap: int = 6):
    """The irreducible with highest weight (m1, m2), plus its weight multiset.

    Built as the cyclic closure of e1^(x)m1 (x) e3'^(x)m2 inside
    (standard)^(x)m1 (x) (dual)^(x)m2, in exact rational arithmetic.
    Returns (Representation with weight annotations, weight multiset dict).
    """
    if m1 < 0 or m2 < 0:
        raise ValueError("m1, m2 must be nonnegative integers")
    if m1 + m2 > cap:
        raise LieError(
            f"m1 + m2 = {m1 + m2} exceeds the cap {cap} (ambient 3^(m1+m2))"
        )
    N = m1 + m2
    std = _basis_matrices()
    antifund = tuple(-(Z.T).copy() for Z in std)
    factor_gens = [std] * m1 + [antifund] * m2
    factor_weights = [{0: (1, 0), 1: (-1, 1), 2: (0, -1)}] * m1 + [
        {0: (-1, 0), 1: (1, -1), 2: (0, 1)}
    ] * m2

    if N == 0:
        gens = tuple(rzeros(1, 1) for _ in _LABELS)
        rep = Representation("sl(3,C)", _LABELS, gens, {0: (0, 0)})
        return rep, {(0, 0): 1}

    def tensor_weight(idx):
        w1 = sum(factor_weights[f][idx[f]][0] for f in range(N))
        w2 = sum(factor_weights[f][idx[f]][1] for f in range(N))
        return (w1, w2)

    def flat(idx):
        r = 0
        for i in idx:
            r = 3 * r + i
        return r

    ambient = 3**N
    # top vector: e1 in each standard factor, e3 in each dual factor
    top = tuple([0] * m1 + [2] * m2)

    closure = _Closure(ambient)
    basis_vectors = []  # sparse dicts
    basis_weights = []

    def try_add(support):
        if not support:
            return False
        dense = rzeros(ambient, 1)[:, 0]
        for idx, c in support.items():
            dense[flat(idx)] = c
        if closure.add(dense):
            ws = {tensor_weight(idx) for idx in support}
            assert len(ws) == 1, "closure vector is not a weight vector"
            basis_vectors.append(support)
            basis_weights.append(ws.pop())
            return True
        return False

    try_add({top: Fraction(1)})
    frontier = [0]
    while frontier:
        new_frontier = []
        for vi in frontier:
            for gi in range(8):
                per_factor = [factor_gens[f][gi] for f in range(N)]
                img = _apply_factorwise(per_factor, basis_vectors[vi], N)
                if try_add(img):
                    new_frontier.append(len(basis_vectors) - 1)
        frontier = new_frontier

    d = closure.rank
    # dense column matrix of the closure basis, for exact restriction
    V = rzeros(ambient, d)
    for j, support in enumerate(basis_vectors):
        for idx, c in support.items():
            V[flat(idx), j] = c

    gens = []
    for gi in range(8):
        per_factor = [factor_gens[f][gi] for f in range(N)]
        B = rzeros(ambient, d)
        for j in range(d):
            img = _apply_factorwise(per_factor, basis_vectors[j], N)
            for idx, c in img.items():
                B[flat(idx), j] = c
        G = rational_solve(V, B)
        assert G is not None, "generator image left the invariant subspace"
        gens.append(G)

    weights = {j: basis_weights[j] for j in range(d)}
    rep = Representation("sl(3,C)", _LABELS, tuple(gens), weights)
    mult = {}
    for w in basis_weights:
        mult[w] = mult.get(w, 0) + 1
    return rep, mult


# --- Weyl group ------------------------------------------------------------

_WEYL_MATRICES = [
    rmat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    rmat([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
    rmat([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
    rmat([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
    rmat([[0, 0, -1], [0, -1, 0], [-1, 0, 0]]),
    rmat([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
]

_WEYL_ACTIONS = [
    lambda m1, m2: (m1, m2),
    lambda m1, m2: (-m1 - m2, m1),
    lambda m1, m2: (m2, -m1 - m2),
    lambda m1, m2: (-m1, m1 + m2),
    lambda m1, m2: (-m2, -m1),
    lambda m1, m2: (m1 + m2, -m2),
]


@dataclass(frozen=True)
class WeylElement:
    index: int
    matrix: np.ndarray


def weyl_elements() -> list:
    """The six signed permutations whose adjoint action permutes weights."""
    return [WeylElement(i, _WEYL_MATRICES[i]) for i in range(6)]


def weyl_act(w: WeylElement, mu) -> tuple:
    """Action on weights: w0 identity, w1 (m1,m2) -> (-m1-m2, m1), etc."""
    return _WEYL_ACTIONS[w.index](mu[0], mu[1])


def weyl_invariance_check(mult: dict) -> bool:
    """Whether the weight multiset is invariant under all six actions."""
    for w in weyl_elements():
        for mu, m in mult.items():
            if mult.get(weyl_act(w, mu), 0) != m:
                return False
    return True


def weight_table(mult: dict) -> list:
    """Rows (m1, m2, multiplicity), lexicographically descending."""
    return [
        (mu[0], mu[1], mult[mu])
        for mu in sorted(mult, reverse=True)
    ]


def weight_table_csv(mult: dict) -> str:
    lines = ["m1,m2,multiplicity"]
    for m1, m2, c in weight_table(mult):
        lines.append(f"{m1},{m2},{c}")
    return "\n".join(lines) + "\n"

"""Representation values and structural constructions.

A Representation is a labeled family of generator matrices (one per
basis symbol of the algebra) acting on a common d-dimensional space,
optionally annotated with a weight per basis vector.  Direct sum,
tensor product, and dual preserve the homomorphism property; the tensor
index convention is row-major, index = i1 * d2 + i2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError, ShapeError
from .liealg import Basis, bracket, structure_constants
from .matcore import (
    frobenius_norm,
    is_rational,
    matrix_from_json,
    matrix_to_json,
    rzeros,
)

__all__ = [
    "Representation",
    "verify_relations",
    "direct_sum",
    "tensor_product",
    "dual",
    "rep_to_json",
    "rep_from_json",
]


@dataclass(frozen=True)
class Representation:
    algebra: str
    labels: tuple
    generators: tuple
    weights: dict | None = None  # basis index -> weight (int or tuple)

    def __post_init__(self):
        d = self.generators[0].shape[0]
        assert all(g.shape == (d, d) for g in self.generators)
        assert len(self.labels) == len(self.generators)

    @property
    def dim(self) -> int:
        return self.generators[0].shape[0]

    def generator(self, label: str):
        return self.generators[self.labels.index(label)]


def verify_relations(rep: Representation, basis: Basis, tol_abs: float = 1e-10) -> bool:
    """Check pi([b_i, b_j]) = [pi(b_i), pi(b_j)] for all basis pairs.

    Uses the exact structure constants of the basis; exact for rational
    representations, within tol_abs in Frobenius norm for floating ones.
    """
    if len(rep.generators) != len(basis):
        raise ShapeError("generator count does not match basis size")
    c = structure_constants(basis)
    d = len(basis)
    exact = all(is_rational(g) for g in rep.generators)
    for i in range(d):
        for j in range(i + 1, d):
            lhs = bracket(rep.generators[i], rep.generators[j])
            if exact:
                rhs = rzeros(rep.dim, rep.dim)
            else:
                rhs = np.zeros((rep.dim, rep.dim), dtype=complex)
            for k in range(d):
                if c[i, j, k] != 0:
                    coeff = c[i, j, k] if exact else float(c[i, j, k])
                    rhs = rhs + coeff * rep.generators[k]
            if exact:
                if any(x != 0 for x in (lhs - rhs).flat):
                    return False
            elif frobenius_norm(lhs - rhs) > tol_abs:
                return False
    return True


def _check_compatible(r1: Representation, r2: Representation):
    if r1.algebra != r2.algebra or r1.labels != r2.labels:
        raise DomainError("representations are of different algebras")


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    """Block-diagonal sum; weight annotations concatenate."""
    _check_compatible(r1, r2)
    d1, d2 = r1.dim, r2.dim
    exact = is_rational(r1.generators[0]) and is_rational(r2.generators[0])
    gens = []
    for g1, g2 in zip(r1.generators, r2.generators):
        if exact:
            g = rzeros(d1 + d2, d1 + d2)
        else:
            g = np.zeros((d1 + d2, d1 + d2), dtype=complex)
        g[:d1, :d1] = g1
        g[d1:, d1:] = g2
        gens.append(g)
    weights = None
    if r1.weights is not None and r2.weights is not None:
        weights = dict(r1.weights)
        weights.update({d1 + i: w for i, w in r2.weights.items()})
    return Representation(r1.algebra, r1.labels, tuple(gens), weights)


def _kron(A, B):
    """Kronecker product, exact for rational operands."""
    if is_rational(A) or is_rational(B):
        ra, ca = A.shape
        rb, cb = B.shape
        out = rzeros(ra * rb, ca * cb)
        for i in range(ra):
            for j in range(ca):
                if A[i, j] != 0:
                    out[i * rb : (i + 1) * rb, j * cb : (j + 1) * cb] = A[i, j] * B
        return out
    return np.kron(A, B)


def _eye_like(d, exact):
    if exact:
        from .matcore import reye

        return reye(d)
    return np.eye(d, dtype=complex)


def tensor_product(r1: Representation, r2: Representation) -> Representation:
    """Generators pi1(b) (x) I + I (x) pi2(b); weights add factorwise."""
    _check_compatible(r1, r2)
    d1, d2 = r1.dim, r2.dim
    exact = is_rational(r1.generators[0]) and is_rational(r2.generators[0])
    I1 = _eye_like(d1, exact)
    I2 = _eye_like(d2, exact)
    gens = tuple(
        _kron(g1, I2) + _kron(I1, g2)
        for g1, g2 in zip(r1.generators, r2.generators)
    )
    weights = None
    if r1.weights is not None and r2.weights is not None:
        weights = {}
        for i1, w1 in r1.weights.items():
            for i2, w2 in r2.weights.items():
                if isinstance(w1, tuple):
                    w = tuple(a + b for a, b in zip(w1, w2))
                else:
                    w = w1 + w2
                weights[i1 * d2 + i2] = w
    return Representation(r1.algebra, r1.labels, gens, weights)


def dual(rep: Representation) -> Representation:
    """Generators -(pi(b))^T; weights negate.  dual(dual(r)) == r."""
    gens = tuple(-g.T.copy() for g in rep.generators)
    weights = None
    if rep.weights is not None:
        weights = {
            i: tuple(-a for a in w) if isinstance(w, tuple) else -w
            for i, w in rep.weights.items()
        }
    return Representation(rep.algebra, rep.labels, gens, weights)


def rep_to_json(rep: Representation) -> dict:
    out = {
        "algebra": rep.algebra,
        "labels": list(rep.labels),
        "dim": rep.dim,
        "generators": [matrix_to_json(g) for g in rep.generators],
    }
    if rep.weights is not None:
        out["weights"] = {
            str(i): list(w) if isinstance(w, tuple) else w
            for i, w in sorted(rep.weights.items())
        }
    return out


def rep_from_json(obj: dict) -> Representation:
    weights = None
    if "weights" in obj:
        weights = {
            int(i): tuple(w) if isinstance(w, list) else w
            for i, w in obj["weights"].items()
        }
    return Representation(
        obj["algebra"],
        tuple(obj["labels"]),
        tuple(matrix_from_json(g) for g in obj["generators"]),
        weights,
    )

"""Descriptors of compact group actions on R^n.

A group is given in one of three finite forms: a finite matrix group by
generators, a torus by an integer weight matrix acting on complex block
coordinates, or a connected group by Lie-algebra generator matrices.
Each form reduces "fixed by the group" to a finite family of exact linear
constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    QMatrix,
    Subspace,
    common_nullspace,
    rank,
)

DEFAULT_GROUP_CAP = 100_000


class GroupNotFiniteError(RuntimeError):
    """Generated closure exceeded the enumeration cap."""


@dataclass(frozen=True)
class FiniteMatrixAction:
    """Finite group acting by invertible rational matrices."""

    dim: int
    generators: tuple[QMatrix, ...]
    cap: int = DEFAULT_GROUP_CAP

    def __post_init__(self):
        for g in self.generators:
            if g.rows != self.dim or g.cols != self.dim:
                raise ValueError("generator shape mismatch")
            if rank(g) != self.dim:
                raise ValueError("generator is not invertible")


@dataclass(frozen=True)
class TorusAction:
    """k-torus acting on C^m = R^{2m}; column j of `weights` drives block j.

    Real coordinates (x_{2j}, x_{2j+1}) are the real and imaginary part of
    the j-th complex coordinate; rotations are counterclockwise.
    """

    weights: tuple[tuple[int, ...], ...]  # k rows, m columns

    def __post_init__(self):
        if not self.weights:
            raise ValueError("torus needs at least one weight row")
        m = len(self.weights[0])
        if any(len(r) != m for r in self.weights):
            raise ValueError("ragged weight matrix")
        if m == 0:
            raise ValueError("torus acting on zero-dimensional space")

    @property
    def torus_dim(self) -> int:
        return len(self.weights)

    @property
    def blocks(self) -> int:
        return len(self.weights[0])

    @property
    def dim(self) -> int:
        return 2 * self.blocks

    def infinitesimal_generators(self) -> list[QMatrix]:
        """One block-diagonal generator per torus coordinate: weight * J."""
        out = []
        for row in self.weights:
            n = self.dim
            rows = [[Fraction(0)] * n for _ in range(n)]
            for j, w in enumerate(row):
                rows[2 * j][2 * j + 1] = Fraction(-w)
                rows[2 * j + 1][2 * j] = Fraction(w)
            out.append(QMatrix.from_rows(rows))
        return out


@dataclass(frozen=True)
class ConnectedLieAction:
    """Connected group given by matrices spanning its Lie algebra in End(V)."""

    dim: int
    lie_generators: tuple[QMatrix, ...]
    check_closure: bool = True

    def __post_init__(self):
        for g in self.lie_generators:
            if g.rows != self.dim or g.cols != self.dim:
                raise ValueError("Lie generator shape mismatch")
        if self.check_closure:
            span = Subspace.from_vectors(
                self.dim * self.dim, [g.vec() for g in self.lie_generators]
            )
            for a in self.lie_generators:
                for b in self.lie_generators:
                    br = a @ b - b @ a
                    if not span.contains(br.vec()):
                        raise ValueError(
                            "generators are not closed under the bracket"
                        )


GroupAction = FiniteMatrixAction | TorusAction | ConnectedLieAction


def action_dim(g: GroupAction) -> int:
    return g.dim


def enumerate_group(g: FiniteMatrixAction) -> list[QMatrix]:
    """Full element list by breadth-first closure; deterministic order."""
    if not isinstance(g, FiniteMatrixAction):
        raise TypeError("enumerate_group needs a finite matrix action")
    ident = QMatrix.identity(g.dim)
    seen = {ident.entries: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for el in frontier:
            for gen in g.generators:
                prod = el @ gen
                if prod.entries not in seen:
                    if len(seen) >= g.cap:
                        raise GroupNotFiniteError(
                            "group not finite under cap %d" % g.cap
                        )
                    seen[prod.entries] = prod
                    nxt.append(prod)
        frontier = nxt
    return list(seen.values())


def _conjugation_operator(g: QMatrix) -> QMatrix:
    """Matrix of X -> g X g^{-1} on row-major vec(X)."""
    ginv = g.inverse()
    return kron(g, ginv.transpose())


def kron(a: QMatrix, b: QMatrix) -> QMatrix:
    """Kronecker product; with row-major vec, vec(A X B) = (A kron B^T) vec X."""
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                for l in range(b.cols):
                    row.append(a.entries[i][j] * b.entries[k][l])
            rows.append(row)
    return QMatrix.from_rows(rows)


def conjugation_matrix(g: QMatrix) -> QMatrix:
    return _conjugation_operator(g)


def commutator_operator(xi: QMatrix) -> QMatrix:
    """Matrix of X -> xi X - X xi on row-major vec(X)."""
    n = xi.rows
    ident = QMatrix.identity(n)
    return kron(xi, ident) - kron(ident, xi.transpose())


def invariance_constraints(g: GroupAction) -> list[QMatrix]:
    """Operators on vec(End(V)) whose joint kernel is End(V)^H."""
    n = action_dim(g)
    ident_op = QMatrix.identity(n * n)
    if isinstance(g, FiniteMatrixAction):
        return [_conjugation_operator(gen) - ident_op for gen in g.generators]
    if isinstance(g, TorusAction):
        return [commutator_operator(j) for j in g.infinitesimal_generators()]
    return [commutator_operator(xi) for xi in g.lie_generators]


def fixed_vectors(g: GroupAction) -> Subspace:
    """V^H as a subspace of R^n."""
    n = action_dim(g)
    ident = QMatrix.identity(n)
    if isinstance(g, FiniteMatrixAction):
        ops = [gen - ident for gen in g.generators]
    elif isinstance(g, TorusAction):
        ops = g.infinitesimal_generators()
    else:
        ops = list(g.lie_generators)
    if not ops:
        return Subspace.full(n)
    return common_nullspace(ops)


def check_no_trivial_summand(g: GroupAction) -> bool:
    """Whether V^H = 0."""
    return fixed_vectors(g).dim == 0


def reynolds_average(g: FiniteMatrixAction, t: QMatrix) -> QMatrix:
    """(1/|G|) sum over the group of g T g^{-1} on End(V)."""
    elems = enumerate_group(g)
    n = t.rows
    acc = QMatrix.zeros(n, n)
    for el in elems:
        acc = acc + (el @ t @ el.inverse())
    return acc.scale(Fraction(1, len(elems)))

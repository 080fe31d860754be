"""The commutant End(V)^H: center, commutator ideal, abelianization, and the
(m, l) classification of its simple factors.

The exact path never decomposes V: it classifies via the minimal polynomial
of a generic central element, whose real roots count real-or-quaternionic
factors and whose conjugate pairs count complex factors.  An independent
floating-point splitting oracle is provided for cross-checks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    QMatrix,
    Subspace,
    common_nullspace,
    count_real_roots,
    minimal_polynomial,
    squarefree_part,
)
from .symmetry import (
    FiniteMatrixAction,
    GroupAction,
    action_dim,
    check_no_trivial_summand,
    enumerate_group,
    invariance_constraints,
)


class TrivialSummandError(ValueError):
    """The action has nonzero fixed vectors, violating V^H = 0."""


class GenericityError(RuntimeError):
    """Random central elements failed to be generic within the retry budget."""


@dataclass(frozen=True)
class MatrixAlgebra:
    """Unital associative subalgebra of End(R^n) given by a rational basis."""

    ambient_dim: int
    basis: tuple[QMatrix, ...]
    contains_identity: bool = True

    def __post_init__(self):
        n2 = self.ambient_dim * self.ambient_dim
        span = Subspace.from_vectors(n2, [b.vec() for b in self.basis])
        if span.dim != len(self.basis):
            raise ValueError("algebra basis is linearly dependent")
        for a in self.basis:
            for b in self.basis:
                if not span.contains((a @ b).vec()):
                    raise ValueError("basis is not closed under multiplication")
        if self.contains_identity:
            if not span.contains(QMatrix.identity(self.ambient_dim).vec()):
                raise ValueError("identity not in algebra span")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def span(self) -> Subspace:
        n2 = self.ambient_dim * self.ambient_dim
        return Subspace.from_vectors(n2, [b.vec() for b in self.basis])

    def element(self, coords) -> QMatrix:
        n = self.ambient_dim
        acc = QMatrix.zeros(n, n)
        for c, b in zip(coords, self.basis):
            acc = acc + b.scale(c)
        return acc


@dataclass(frozen=True)
class MLClassification:
    """Counts of simple factors: m total, l of complex type."""

    m: int
    l: int
    center_dim: int
    abelianization_dim: int
    schur_types: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.center_dim != self.m + self.l:
            raise ValueError("center_dim must equal m + l")
        if self.abelianization_dim != self.m + self.l:
            raise ValueError("abelianization_dim must equal m + l")
        if not (self.m >= self.l >= 0):
            raise ValueError("need m >= l >= 0")


def compute_commutant(g: GroupAction, allow_trivial_summand: bool = False) -> MatrixAlgebra:
    """Basis of {X : X commutes with the action}, as a MatrixAlgebra."""
    if not allow_trivial_summand and not check_no_trivial_summand(g):
        raise TrivialSummandError(
            "action has nonzero fixed vectors; pass allow_trivial_summand=True "
            "to compute anyway"
        )
    n = action_dim(g)
    constraints = invariance_constraints(g)
    if not constraints:
        sol = Subspace.full(n * n)
    else:
        sol = common_nullspace(constraints)
    basis = tuple(QMatrix.from_vec(v, n, n) for v in sol.basis)
    return MatrixAlgebra(n, basis)


def full_matrix_algebra(n: int) -> MatrixAlgebra:
    basis = []
    for i in range(n):
        for j in range(n):
            rows = [[Fraction(1) if (r, c) == (i, j) else Fraction(0) for c in range(n)]
                    for r in range(n)]
            basis.append(QMatrix.from_rows(rows))
    return MatrixAlgebra(n, tuple(basis))


def center(a: MatrixAlgebra) -> Subspace:
    """Center of A as a subspace of vec(End(V))."""
    d = a.dim
    n2 = a.ambient_dim ** 2
    if d == 0:
        return Subspace.zero(n2)
    # one operator per basis element b: coefficients c -> [sum c_i b_i, b]
    ops = []
    for b in a.basis:
        block = [(bi @ b - b @ bi).vec() for bi in a.basis]
        ops.append(QMatrix.from_rows(list(zip(*block))))
    coeff_kernel = common_nullspace(ops)
    vecs = [a.element(c).vec() for c in coeff_kernel.basis]
    return Subspace.from_vectors(n2, vecs)


def commutator_ideal(a: MatrixAlgebra) -> Subspace:
    """Span of all brackets of basis elements (= [A, A] by bilinearity)."""
    n2 = a.ambient_dim ** 2
    vecs = []
    for x, y in itertools.combinations(a.basis, 2):
        vecs.append((x @ y - y @ x).vec())
    return Subspace.from_vectors(n2, vecs)


def abelianization(a: MatrixAlgebra) -> tuple[int, list[QMatrix]]:
    """(dimension, representative basis) of A / [A, A]."""
    derived = commutator_ideal(a)
    span = a.span()
    reps = derived.complement_in(span)
    dim = a.dim - derived.dim
    assert dim == len(reps)
    n = a.ambient_dim
    return dim, [QMatrix.from_vec(v, n, n) for v in reps]


@dataclass(frozen=True)
class CenterSplitReport:
    """Outcome of checking A = Z(A) + [A,A] with Z(A) meeting [A,A] in 0."""

    passed: bool
    center_dim: int
    derived_dim: int
    algebra_dim: int
    intersection_dim: int
    sum_dim: int

    @property
    def failures(self) -> list[str]:
        out = []
        if self.intersection_dim != 0:
            out.append("Z(A) meets [A,A] in dimension %d" % self.intersection_dim)
        if self.sum_dim != self.algebra_dim:
            out.append(
                "Z(A) + [A,A] has dimension %d < dim A = %d"
                % (self.sum_dim, self.algebra_dim)
            )
        return out


def verify_center_splits(a: MatrixAlgebra) -> CenterSplitReport:
    """Check that the center maps isomorphically onto the abelianization.

    Holds whenever A is the commutant of a compact action; may legitimately
    fail for other algebras (e.g. upper-triangular matrices).
    """
    z = center(a)
    d = commutator_ideal(a)
    inter = z.intersection(d)
    total = z.sum(d)
    return CenterSplitReport(
        passed=(inter.dim == 0 and total.dim == a.dim),
        center_dim=z.dim,
        derived_dim=d.dim,
        algebra_dim=a.dim,
        intersection_dim=inter.dim,
        sum_dim=total.dim,
    )


def classify_ml(
    a: MatrixAlgebra,
    seed: int = 0,
    max_retries: int = 20,
    coeff_range: int = 10,
) -> MLClassification:
    """(m, l) via the minimal polynomial of a generic central element.

    A generic z in Z(A) ~ R^{m-l} x C^l has squarefree minimal polynomial of
    degree m + l with m - l real roots and l conjugate pairs.
    """
    z = center(a)
    n = a.ambient_dim
    if z.dim == 0:
        raise ValueError("zero algebra has no classification")
    rng = random.Random(seed)
    rng_range = coeff_range
    for _ in range(max_retries):
        coords = [rng.randint(-rng_range, rng_range) for _ in z.basis]
        zmat = QMatrix.zeros(n, n)
        for c, v in zip(coords, z.basis):
            zmat = zmat + QMatrix.from_vec(v, n, n).scale(c)
        p = squarefree_part(minimal_polynomial(zmat))
        if p.degree == 0:
            rng_range *= 2
            continue
        if p.degree < z.dim:
            # possibly non-generic, but for z.dim to be reachable we need
            # degree m + l; retry with wider coefficients
            rng_range *= 2
            continue
        real, pairs = count_real_roots(p)
        m = real + pairs
        l = pairs
        if real + 2 * pairs != z.dim:
            rng_range *= 2
            continue
        derived = commutator_ideal(a)
        ab_dim = a.dim - derived.dim
        return MLClassification(
            m=m, l=l, center_dim=z.dim, abelianization_dim=ab_dim
        )
    raise GenericityError(
        "non-generic central elements after %d retries; bump coefficient range"
        % max_retries
    )


# ---------------------------------------------------------------------------
# floating-point splitting oracle (finite groups only)


@dataclass(frozen=True)
class IsotypicBlock:
    multiplicity: int
    irreducible_dim: int
    schur_type: str  # "R", "C" or "H"


class IllConditionedSplitError(RuntimeError):
    """A numerical rank decision fell inside the tolerance band."""


def schur_split_oracle(
    g: FiniteMatrixAction,
    seed: int = 0,
    eig_tol: float = 1e-8,
    rank_tol: float = 1e-9,
) -> list[IsotypicBlock]:
    """Independent numeric decomposition into isotypic blocks.

    Splits V by eigenspaces of Reynolds-averaged random symmetric operators,
    recursing until each summand has commutant dimension 1, 2 or 4, then
    groups isomorphic summands by a nonzero-equivariant-hom test.
    Diagnostics only; cross-checks classify_ml.
    """
    import numpy as np

    raw = [np.array([[float(x) for x in row] for row in el.entries])
           for el in enumerate_group(g)]
    n = g.dim
    # orthogonalize the representation: average the Gram matrix and change
    # coordinates so every element becomes orthogonal
    gram = sum(e.T @ e for e in raw) / len(raw)
    lchol = np.linalg.cholesky(gram)
    linv_t = np.linalg.inv(lchol.T)
    elems = [lchol.T @ e @ linv_t for e in raw]
    rng = np.random.default_rng(seed)

    def _nullity(mat):
        s = np.linalg.svd(mat, compute_uv=False)
        scale = max(1.0, s[0])
        small = s < rank_tol * scale
        border = np.logical_and(s >= rank_tol * scale, s < 10 * rank_tol * scale)
        if border.any():
            raise IllConditionedSplitError("rank decision near tolerance; re-randomize")
        return mat.shape[1] - int((~small).sum())

    def _constraint(basis):
        k = basis.shape[1]
        rows = []
        for e in elems:
            r = basis.T @ e @ basis
            rows.append(np.kron(r, np.eye(k)) - np.kron(np.eye(k), r.T))
        return np.vstack(rows), k

    def commutant_dim(basis):
        # dim of equivariant endomorphisms of the subspace spanned by basis cols
        mat, _ = _constraint(basis)
        return _nullity(mat)

    def sym_commutant_dim(basis):
        # dim of equivariant *symmetric* endomorphisms; equals 1 exactly when
        # the summand is irreducible (the action is orthogonal here)
        mat, k = _constraint(basis)
        cols = []
        for i in range(k):
            for j in range(i, k):
                v = np.zeros((k, k))
                v[i, j] = v[j, i] = 1.0
                cols.append(v.reshape(-1))
        return _nullity(mat @ np.array(cols).T)

    def split(basis):
        k = basis.shape[1]
        # Reynolds-average a random symmetric operator on the summand
        x = rng.standard_normal((k, k))
        x = x + x.T
        avg = np.zeros((k, k))
        for e in elems:
            r = basis.T @ e @ basis  # orthogonal restricted action
            avg += r.T @ x @ r
        avg = avg / len(elems)
        w, v = np.linalg.eigh(avg)
        # cluster eigenvalues
        scale = max(1.0, np.abs(w).max())
        clusters = []
        for i, val in enumerate(w):
            if clusters and abs(val - w[clusters[-1][-1]]) < eig_tol * scale:
                clusters[-1].append(i)
            else:
                clusters.append([i])
        if len(clusters) == 1:
            return [basis]
        out = []
        for cl in clusters:
            sub = basis @ v[:, cl]
            # re-orthonormalize
            q, _ = np.linalg.qr(sub)
            out.append(q)
        return out

    # recursively split until each summand is irreducible
    pending = [np.eye(n)]
    leaves = []
    guard = 0
    while pending:
        guard += 1
        if guard > 20 * n + 40:
            raise IllConditionedSplitError("splitting did not terminate")
        basis = pending.pop()
        if sym_commutant_dim(basis) == 1:
            leaves.append(basis)
            continue
        parts = split(basis)
        if len(parts) == 1:
            # random operator failed to split; retry is built into the loop
            pending.append(basis)
            continue
        pending.extend(parts)

    # group leaves into isotypic blocks via a nonzero equivariant hom test
    blocks: list[list] = []
    for leaf in leaves:
        placed = False
        for blk in blocks:
            rep = blk[0]
            x = rng.standard_normal((rep.shape[1], leaf.shape[1]))
            hom = np.zeros_like(x)
            for e in elems:
                hom += (rep.T @ e @ rep) @ x @ (leaf.T @ e @ leaf).T
            hom /= len(elems)
            if np.linalg.norm(hom) > 1e-6:
                blk.append(leaf)
                placed = True
                break
        if not placed:
            blocks.append([leaf])

    out = []
    type_names = {1: "R", 2: "C", 4: "H"}
    for blk in blocks:
        cd = commutant_dim(blk[0])
        out.append(
            IsotypicBlock(
                multiplicity=len(blk),
                irreducible_dim=blk[0].shape[1],
                schur_type=type_names[cd],
            )
        )
    return sorted(out, key=lambda b: (b.irreducible_dim, b.schur_type, b.multiplicity))

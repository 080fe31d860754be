"""Exact linear algebra over the rationals.

Everything in here is built on :class:`fractions.Fraction`, so there are no
tolerances anywhere: ranks, kernels and root counts are exact.  All objects
are immutable; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

try:
    # gmpy2.mpq is drop-in compatible with Fraction and much faster
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

_RATIONAL = (type(Q(0)), Fraction, int)


def _q(x):
    """Coerce ints, strings like '2/3' and rationals to the exact type."""
    if isinstance(x, Fraction):
        # go through integers: Fraction internals may be foreign int types
        return Q(int(x.numerator), int(x.denominator))
    if isinstance(x, _RATIONAL):
        return Q(x)
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations: %r" % (x,))
    return Q(str(x))


@dataclass(frozen=True)
class QMatrix:
    """Immutable matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "QMatrix":
        data = tuple(tuple(_q(x) for x in row) for row in rows)
        if data:
            w = len(data[0])
            if any(len(r) != w for r in data):
                raise ValueError("ragged rows")
        return QMatrix(data)

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(rows: int, cols: int) -> "QMatrix":
        return QMatrix(tuple(tuple(Q(0) for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(
            tuple(
                tuple((a + b) if b else a for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(
            tuple(
                tuple((a - b) if b else a for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "QMatrix":
        return self.scale(Q(-1))

    def scale(self, c) -> "QMatrix":
        c = _q(c)
        return QMatrix(tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        # skip zero entries: most matrices here are sparse
        zero = Q(0)
        out_cols = other.cols
        out = []
        for row in self.entries:
            acc = [zero] * out_cols
            for k, a in enumerate(row):
                if a:
                    brow = other.entries[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return QMatrix(tuple(out))

    def mul_vec(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if self.cols != len(v):
            raise ValueError("shape mismatch in matrix-vector product")
        zero = Q(0)
        out = []
        for row in self.entries:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.rows)), Q(0))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def vec(self) -> tuple[Fraction, ...]:
        """Row-major flattening."""
        return tuple(a for r in self.entries for a in r)

    @staticmethod
    def from_vec(v: Sequence, rows: int, cols: int) -> "QMatrix":
        if len(v) != rows * cols:
            raise ValueError("length mismatch")
        return QMatrix.from_rows(
            [v[i * cols : (i + 1) * cols] for i in range(rows)]
        )

    def inverse(self) -> "QMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of non-square matrix")
        aug = [list(self.entries[i]) + [Q(1) if j == i else Q(0) for j in range(n)]
               for i in range(n)]
        red, _ = _rref_rows(aug)
        # pivots may fall in the augmented block if the left block is singular
        for i in range(n):
            if any(red[i][j] != (1 if j == i else 0) for j in range(n)):
                raise ValueError("matrix is singular")
        return QMatrix.from_rows([row[n:] for row in red])


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], int]:
    """In-place Gauss-Jordan; returns (rows, rank)."""
    if not rows:
        return rows, 0
    nrows, ncols = len(rows), len(rows[0])
    piv = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(piv, nrows):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[piv], rows[pivot_row] = rows[pivot_row], rows[piv]
        inv = 1 / rows[piv][col]
        rows[piv] = [x * inv for x in rows[piv]]
        for r in range(nrows):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
        piv += 1
        if piv == nrows:
            break
    return rows, piv


def rref(m: QMatrix) -> tuple[QMatrix, int]:
    """Reduced row-echelon form and rank."""
    rows = [list(r) for r in m.entries]
    red, rank = _rref_rows(rows)
    return QMatrix.from_rows(red), rank


class SparseRREF:
    """Incremental reduced row-echelon basis with sparse rows.

    Rows are dicts {col: coeff}, kept normalized (pivot coefficient 1) and
    mutually reduced, ordered by pivot column.  Much faster than dense
    elimination when vectors are sparse, which all the large systems here are.
    """

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows: list[tuple[int, dict]] = []  # (pivot_col, row)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after elimination against the current rows."""
        v = {c: x for c, x in vec.items() if x != 0}
        for pc, row in self.rows:
            c = v.get(pc)
            if c:
                for col, val in row.items():
                    nv = v.get(col, Q(0)) - c * val
                    if nv:
                        v[col] = nv
                    else:
                        v.pop(col, None)
        return v

    def insert(self, vec: dict) -> bool:
        """Add vec to the span; returns True if the rank increased."""
        v = self.reduce(vec)
        if not v:
            return False
        pc = min(v)
        inv = 1 / v[pc]
        newrow = {c: x * inv for c, x in v.items()}
        for _, row in self.rows:
            c = row.get(pc)
            if c:
                for col, val in newrow.items():
                    nv = row.get(col, Q(0)) - c * val
                    if nv:
                        row[col] = nv
                    else:
                        row.pop(col, None)
        self.rows.append((pc, newrow))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def dense_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for _, row in self.rows:
            dense = [Q(0)] * self.ambient
            for c, x in row.items():
                dense[c] = x
            out.append(tuple(dense))
        return tuple(out)

    @staticmethod
    def from_dense(ambient: int, vectors) -> "SparseRREF":
        s = SparseRREF(ambient)
        for v in vectors:
            s.insert({i: _q(x) for i, x in enumerate(v) if x != 0})
        return s


def rank(m: QMatrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n, canonicalized: basis rows are in RREF.

    Equality of subspaces is literal equality of the canonical bases.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        engine = SparseRREF(ambient_dim)
        for v in vectors:
            v = list(v)
            if len(v) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
            engine.insert({i: _q(x) for i, x in enumerate(v) if x != 0})
        return Subspace(ambient_dim, engine.dense_basis())

    def _engine(self) -> "SparseRREF":
        cached = getattr(self, "_engine_cache", None)
        if cached is None:
            cached = SparseRREF.from_dense(self.ambient_dim, self.basis)
            object.__setattr__(self, "_engine_cache", cached)
        return cached

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.from_vectors(
            ambient_dim, QMatrix.identity(ambient_dim).entries
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        vec = list(v)
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length != ambient dimension")
        return self._engine().contains(
            {i: _q(x) for i, x in enumerate(vec) if x != 0}
        )

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of v in the canonical basis; raises if v is outside."""
        vec = [_q(x) for x in v]
        sol = solve(QMatrix.from_rows(self.basis).transpose(), vec)
        if sol is None:
            raise ValueError("vector not in subspace")
        return sol

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # coefficient vectors (a, b) with a·U = b·W: kernel of [U^T | -W^T]
        ut = QMatrix.from_rows(self.basis).transpose()
        wt = QMatrix.from_rows(other.basis).transpose()
        stacked = QMatrix.from_rows(
            [list(ru) + [-x for x in rw] for ru, rw in zip(ut.entries, wt.entries)]
        )
        ker = nullspace(stacked)
        d = self.dim
        vecs = []
        for coef in ker.basis:
            a = coef[:d]
            vecs.append(
                [
                    sum(c * b[j] for c, b in zip(a, self.basis))
                    for j in range(self.ambient_dim)
                ]
            )
        return Subspace.from_vectors(self.ambient_dim, vecs)

    def complement_in(self, bigger: "Subspace") -> list[tuple[Fraction, ...]]:
        """Vectors of `bigger` extending a basis of self to one of bigger."""
        self._check(bigger)
        if not bigger.contains_subspace(self):
            raise ValueError("self is not contained in the bigger subspace")
        engine = SparseRREF.from_dense(self.ambient_dim, self.basis)
        out = []
        for cand in bigger.basis:
            if engine.insert({i: x for i, x in enumerate(cand) if x != 0}):
                out.append(cand)
        return out


def solve(m: QMatrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of M x = b, or None if inconsistent."""
    bvec = [_q(x) for x in b]
    if len(bvec) != m.rows:
        raise ValueError("rhs length mismatch")
    aug = [list(m.entries[i]) + [bvec[i]] for i in range(m.rows)]
    red, _ = _rref_rows(aug)
    n = m.cols
    x = [Q(0)] * n
    for row in red:
        lead = next((j for j in range(n) if row[j] != 0), None)
        if lead is None:
            if row[n] != 0:
                return None
            continue
        x[lead] = row[n]
    # verify (free variables set to 0 may not satisfy non-reduced systems)
    if m.mul_vec(x) != tuple(bvec):
        return None
    return tuple(x)


def nullspace(m: QMatrix) -> Subspace:
    """Canonical basis of {v : M v = 0}."""
    red, rk = rref(m)
    n = m.cols
    lead_cols = []
    for row in red.entries[:rk]:
        lead_cols.append(next(j for j in range(n) if row[j] != 0))
    free_cols = [j for j in range(n) if j not in lead_cols]
    basis = []
    for fc in free_cols:
        v = [Q(0)] * n
        v[fc] = Q(1)
        for i, lc in enumerate(lead_cols):
            v[lc] = -red.entries[i][fc]
        basis.append(v)
    return Subspace.from_vectors(n, basis)


def common_nullspace(mats: Sequence[QMatrix]) -> Subspace:
    """Joint kernel of a family of operators with equal column count.

    Computed by intersecting kernels one operator at a time: after the first
    kernel, each operator is restricted to the (usually much smaller) current
    kernel before elimination.
    """
    if not mats:
        raise ValueError("empty operator family has no defined ambient")
    cols = mats[0].cols
    for m in mats:
        if m.cols != cols:
            raise ValueError("ambient dimension mismatch")
    kernel: Subspace | None = None
    for m in mats:
        if kernel is None:
            kernel = nullspace(m)
        else:
            if kernel.dim == 0:
                break
            restricted = m @ QMatrix.from_rows(kernel.basis).transpose()
            coords = nullspace(restricted)
            vecs = []
            for coef in coords.basis:
                vecs.append(
                    [
                        sum(c * b[j] for c, b in zip(coef, kernel.basis))
                        for j in range(cols)
                    ]
                )
            kernel = Subspace.from_vectors(cols, vecs)
    assert kernel is not None
    return kernel


# ---------------------------------------------------------------------------
# univariate polynomials


@dataclass(frozen=True)
class QPolynomial:
    """Univariate polynomial with exact rational coefficients, low to high."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable) -> "QPolynomial":
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return QPolynomial(tuple(cs))

    @staticmethod
    def zero() -> "QPolynomial":
        return QPolynomial(())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        x = _q(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Q(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Q(0)] * (n - len(other.coeffs))
        return QPolynomial.from_coeffs([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + other.scale(Q(-1))

    def scale(self, c) -> "QPolynomial":
        c = _q(c)
        return QPolynomial.from_coeffs([c * a for a in self.coeffs])

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero() or other.is_zero():
            return QPolynomial.zero()
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial.from_coeffs(out)

    def monic(self) -> "QPolynomial":
        return self.scale(1 / self.leading)

    def derivative(self) -> "QPolynomial":
        return QPolynomial.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def divmod(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Q(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d = other.degree
        lead = other.leading
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            f = r[-1] / lead
            shift = len(r) - 1 - d
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
            r.pop()
        return QPolynomial.from_coeffs(q), QPolynomial.from_coeffs(r)

    def evaluate_matrix(self, m: QMatrix) -> QMatrix:
        n = m.rows
        acc = QMatrix.zeros(n, n)
        for c in reversed(self.coeffs):
            acc = acc @ m + QMatrix.identity(n).scale(c)
        return acc


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(p: QPolynomial) -> QPolynomial:
    if p.is_zero():
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    q, r = p.divmod(g)
    assert r.is_zero()
    return q.monic()


def minimal_polynomial(m: QMatrix) -> QPolynomial:
    """Monic least-degree p with p(M) = 0, via the first Krylov dependence."""
    n = m.rows
    if n != m.cols:
        raise ValueError("minimal polynomial of non-square matrix")
    powers = [QMatrix.identity(n)]
    while True:
        # look for a dependence among I, M, ..., M^k with M^k having
        # coefficient 1: solve stack of lower powers against -M^k
        k = len(powers)
        powers.append(powers[-1] @ m)
        cols = QMatrix.from_rows([p.vec() for p in powers[:k]]).transpose()
        target = [-x for x in powers[k].vec()]
        sol = solve(cols, target)
        if sol is not None:
            return QPolynomial.from_coeffs(list(sol) + [Q(1)])
        if k > n:
            raise AssertionError("no minimal polynomial found below n+1")


def sturm_sequence(p: QPolynomial) -> list[QPolynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        _, r = seq[-2].divmod(seq[-1])
        seq.append(r.scale(Q(-1)))
    seq.pop()
    return seq


def _sign_at_inf(p: QPolynomial, positive: bool) -> int:
    if p.is_zero():
        return 0
    s = 1 if p.leading > 0 else -1
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def count_real_roots(p: QPolynomial) -> tuple[int, int]:
    """(distinct real roots, complex conjugate pairs) of a squarefree p.

    Uses Sturm's theorem over (-inf, inf) with exact sign evaluation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0, 0
    g = poly_gcd(p, p.derivative())
    if g.degree > 0:
        raise ValueError("polynomial is not squarefree")
    seq = sturm_sequence(p)
    at_neg = _variations([_sign_at_inf(q, positive=False) for q in seq])
    at_pos = _variations([_sign_at_inf(q, positive=True) for q in seq])
    real = at_neg - at_pos
    pairs, rem = divmod(p.degree - real, 2)
    if rem:
        raise AssertionError("parity violation in root count")
    return real, pairs


def count_real_roots_in_interval(p: QPolynomial, a, b) -> int:
    """Distinct real roots of squarefree p in the half-open interval (a, b]."""
    a, b = _q(a), _q(b)
    seq = sturm_sequence(p)

    def sgn(x):
        return [0 if q(x) == 0 else (1 if q(x) > 0 else -1) for q in seq]

    return _variations(sgn(a)) - _variations(sgn(b))


# ---------------------------------------------------------------------------
# integer lattices


def _hnf_columns(w: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column-style Hermite reduction: returns (H, U) with W U = H, U unimodular,
    and the zero columns of H pushed to the right."""
    rows = len(w)
    cols = len(w[0]) if rows else 0
    h = [list(r) for r in w]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col(j):
        return [h[i][j] for i in range(rows)]

    def addmul(dst, src, f):
        for i in range(rows):
            h[i][dst] += f * h[i][src]
        for i in range(cols):
            u[i][dst] += f * u[i][src]

    def swap(a, b):
        for i in range(rows):
            h[i][a], h[i][b] = h[i][b], h[i][a]
        for i in range(cols):
            u[i][a], u[i][b] = u[i][b], u[i][a]

    pivot_col = 0
    for r in range(rows):
        if pivot_col >= cols:
            break
        # euclidean elimination along row r among columns >= pivot_col
        while True:
            nz = [j for j in range(pivot_col, cols) if h[r][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(h[r][j]))
            swap(pivot_col, jmin)
            done = True
            for j in range(pivot_col + 1, cols):
                if h[r][j] != 0:
                    f = -(h[r][j] // h[r][pivot_col])
                    addmul(j, pivot_col, f)
                    if h[r][j] != 0:
                        done = False
            if done:
                break
        if h[r][pivot_col] != 0:
            pivot_col += 1
    return h, u


def integer_kernel_saturated(w: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of the lattice {a in Z^n : W a = 0}.

    The result is saturated by construction: it is a basis of
    ker_Q(W) intersected with Z^n, obtained from a unimodular column
    reduction of W.
    """
    rows = [list(map(int, r)) for r in w]
    if not rows:
        raise ValueError("empty weight matrix")
    cols = len(rows[0])
    h, u = _hnf_columns(rows)
    out = []
    for j in range(cols):
        if all(h[i][j] == 0 for i in range(len(rows))):
            out.append(tuple(u[i][j] for i in range(cols)))
    return out


def hermite_row_basis(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite basis of the lattice spanned by the given vectors."""
    if not vectors:
        return []
    n = len(vectors[0])
    ht, _ = _hnf_columns([[int(v[i]) for v in vectors] for i in range(n)])
    out = []
    for j in range(len(vectors)):
        colv = tuple(ht[i][j] for i in range(n))
        if any(x != 0 for x in colv):
            out.append(colv)
    return out


def lattice_contains(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v lies in the integer span of the given lattice basis."""
    rows = hermite_row_basis(basis)
    rem = [int(x) for x in v]
    n = len(rem)
    for row in rows:
        piv = next((j for j in range(n) if row[j] != 0), None)
        if piv is None:
            continue
        if rem[piv] % row[piv] != 0:
            return False
        f = rem[piv] // row[piv]
        rem = [a - f * b for a, b in zip(rem, row)]
    return all(x == 0 for x in rem)


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)

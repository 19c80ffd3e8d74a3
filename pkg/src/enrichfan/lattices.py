"""Exact integer and rational linear algebra for small lattices.

Hot paths (membership solves, ranks) use hand-rolled fraction elimination;
integer normal forms (Smith, Hermite) come from sympy, which is fast enough
for the cold paths that need them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_decomp


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v) -> tuple:
    """Divide an integer vector by the gcd of its entries, keeping direction."""
    g = vector_gcd(v)
    if g == 0:
        raise ValueError("the zero vector has no primitive representative")
    return tuple(x // g for x in v)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def add_scaled(a, b, c):
    return tuple(x + c * y for x, y in zip(a, b))


def solve_columns(columns, target):
    """Solve ``sum(lam_i * columns[i]) == target`` exactly over the rationals.

    Returns the coefficient list, or None when the system is inconsistent.
    Raises ValueError if the columns are linearly dependent (solutions would
    not be unique).
    """
    k = len(columns)
    if k == 0:
        return [] if all(x == 0 for x in target) else None
    n = len(columns[0])
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if aug[r][k] != 0:
            return None
    return [aug[i][k] for i in range(k)]


def rank_of(vectors) -> int:
    """Rank over the rationals of a list of integer/rational row vectors."""
    rows = [list(map(Fraction, v)) for v in vectors if any(v)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def linearly_independent(vectors) -> bool:
    vectors = list(vectors)
    return rank_of(vectors) == len(vectors)


def _to_sympy(rows, ncols: int) -> Matrix:
    return Matrix(len(rows), ncols, [int(x) for row in rows for x in row])


def invariant_factors(rows, ncols: int) -> list:
    """Absolute diagonal entries of the Smith normal form, zeros dropped."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    d, _, _ = smith_normal_decomp(_to_sympy(rows, ncols), domain=ZZ)
    out = []
    for i in range(min(d.shape)):
        if d[i, i] != 0:
            out.append(abs(int(d[i, i])))
    return sorted(out)


def kernel_lattice(rows, ncols: int) -> list:
    """Basis of the saturated lattice ``{c : sum_i c_i * rows[i] = 0}``.

    Writing D = S*M*T with S, T unimodular, the kernel is spanned by the
    rows of S whose D-row vanishes.
    """
    m = len(rows)
    if m == 0:
        return []
    mat = _to_sympy(rows, ncols)
    d, s, _ = smith_normal_decomp(mat, domain=ZZ)
    basis = []
    for i in range(m):
        if i >= d.shape[1] or d[i, i] == 0:
            basis.append(tuple(int(x) for x in s.row(i)))
    return basis


def lattice_span_equal(rows1, rows2, ncols: int) -> bool:
    """Whether two integer row families span the same lattice (HNF compare)."""
    def hnf_of(rows):
        rows = [r for r in rows if any(r)]
        if not rows:
            return Matrix(0, 0, [])
        return hermite_normal_form(_to_sympy(rows, ncols).T)

    return hnf_of(rows1) == hnf_of(rows2)


def lattice_contains(rows, vec, ncols: int) -> bool:
    """Whether ``vec`` lies in the integer row span of ``rows``."""
    if not any(vec):
        return True
    return lattice_span_equal(list(rows), list(rows) + [tuple(vec)], ncols)


@dataclass(frozen=True)
class LatticeQuotient:
    """An integral surjection ``Z^labels -> Z^(n-r)`` with kernel a saturated sublattice.

    Built from the Smith decomposition D = S*M*T of the generator matrix M:
    the rows of T^-1 form a basis of Z^n adapted to the saturation, the
    coordinates of x in that basis are x*T, and the projection keeps the
    coordinates past the rank.
    """

    labels: tuple
    generators: tuple
    rank: int
    projection: tuple  # (n - r) rows of length n
    section: tuple  # (n - r) rows of length n, right inverse of the projection

    @staticmethod
    def from_generators(labels, generators) -> "LatticeQuotient":
        labels = tuple(labels)
        n = len(labels)
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if len(g) != n:
                raise ValueError("generator length does not match the ambient rank")
        nonzero = [g for g in gens if any(g)]
        if not nonzero:
            ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
            return LatticeQuotient(labels, tuple(gens), 0, ident, ident)
        mat = _to_sympy(nonzero, n)
        d, _, t = smith_normal_decomp(mat, domain=ZZ)
        r = sum(1 for i in range(min(d.shape)) if d[i, i] != 0)
        tinv = t.inv()
        projection = tuple(tuple(int(x) for x in t.col(j)) for j in range(r, n))
        section = tuple(tuple(int(x) for x in tinv.row(i)) for i in range(r, n))
        lq = LatticeQuotient(labels, tuple(gens), r, projection, section)
        for g in nonzero:
            assert all(x == 0 for x in lq.project(g))
        for i, s in enumerate(section):
            img = lq.project(s)
            assert img == tuple(1 if j == i else 0 for j in range(n - r))
        return lq

    @property
    def quotient_rank(self) -> int:
        return len(self.labels) - self.rank

    def project(self, vec) -> tuple:
        if len(vec) != len(self.labels):
            raise ValueError("vector length does not match the ambient rank")
        return tuple(dot(row, vec) for row in self.projection)

    def lift(self, vec) -> tuple:
        if len(vec) != self.quotient_rank:
            raise ValueError("vector length does not match the quotient rank")
        return tuple(
            sum(vec[i] * self.section[i][j] for i in range(len(vec)))
            for j in range(len(self.labels))
        )

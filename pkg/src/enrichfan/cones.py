"""Exact rational polyhedral cones and the cones attached to enriched structures.

Every cone produced here is simplicial and smooth: the rays are part of a
basis of the ambient lattice.  A cone carries both descriptions: primitive
integer rays of its closure, and halfspaces with a strict/weak flag each
(strict ones describe the relative interior, i.e. the open cone).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .enriched import EnrichedGraph
from .lattices import (
    dot,
    invariant_factors,
    linearly_independent,
    primitive,
    solve_columns,
)

GE = ">="
GT = ">"
EQ = "=="


@dataclass(frozen=True)
class Halfspace:
    """A homogeneous constraint ``coeffs . x  rel  0``."""

    coeffs: tuple
    rel: str

    def __post_init__(self):
        if self.rel not in (GE, GT, EQ):
            raise ValueError(f"unknown relation {self.rel!r}")

    def holds(self, x) -> bool:
        v = dot(self.coeffs, x)
        if self.rel == GE:
            return v >= 0
        if self.rel == GT:
            return v > 0
        return v == 0

    def weakened(self) -> "Halfspace":
        return Halfspace(self.coeffs, GE) if self.rel == GT else self


def _ray_sort_key(r):
    return tuple(r)


@dataclass(frozen=True)
class RationalCone:
    """A simplicial rational cone, possibly relatively open.

    ``rays`` always generate the closure; ``closed`` distinguishes the
    closed cone from its relative interior.  Halfspaces are optional and
    derived on demand; when present they cut out exactly the cone (strict
    flags included).
    """

    labels: tuple
    rays: tuple
    closed: bool = True
    halfspaces: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("duplicate rays")
        if self.rays and not linearly_independent(self.rays):
            raise ValueError("rays must be linearly independent (simplicial cones only)")

    @staticmethod
    def from_rays(labels, rays, closed: bool = True, halfspaces=None) -> "RationalCone":
        labels = tuple(labels)
        prim = sorted({primitive(r) for r in rays}, key=_ray_sort_key)
        return RationalCone(labels, tuple(prim), closed, tuple(halfspaces) if halfspaces else None)

    @property
    def dim(self) -> int:
        return len(self.rays)

    @property
    def ambient_rank(self) -> int:
        return len(self.labels)

    @property
    def ray_set(self) -> frozenset:
        return frozenset(self.rays)

    def closure(self) -> "RationalCone":
        if self.closed:
            return self
        hs = tuple(h.weakened() for h in self.halfspaces) if self.halfspaces else None
        return RationalCone(self.labels, self.rays, True, hs)

    def h_description(self) -> tuple:
        """Halfspaces cutting out the cone; computed from the rays if absent."""
        if self.halfspaces is not None:
            return self.halfspaces
        hs = _h_from_rays(self.labels, self.rays)
        if not self.closed:
            hs = tuple(Halfspace(h.coeffs, GT) if h.rel == GE else h for h in hs)
        return hs

    def coefficients_of(self, x):
        """Exact coordinates of ``x`` in the ray basis, or None outside the span."""
        if not self.rays:
            return [] if all(v == 0 for v in x) else None
        try:
            return solve_columns(self.rays, tuple(x))
        except ValueError:  # pragma: no cover - rays are independent by invariant
            raise

    def closure_contains(self, x) -> bool:
        lam = self.coefficients_of(x)
        return lam is not None and all(v >= 0 for v in lam)

    def interior_contains(self, x) -> bool:
        """Membership in the relative interior of the closure."""
        lam = self.coefficients_of(x)
        return lam is not None and all(v > 0 for v in lam)

    def contains(self, x) -> bool:
        """Membership in the cone as described (open cones: their interior)."""
        if self.halfspaces is not None:
            return all(h.holds(x) for h in self.halfspaces)
        return self.closure_contains(x) if self.closed else self.interior_contains(x)

    def is_face_of(self, other: "RationalCone") -> bool:
        return self.labels == other.labels and self.ray_set <= other.ray_set

    def faces(self) -> list:
        """All faces of the closed simplicial cone, as ray subsets."""
        out = []
        for k in range(len(self.rays) + 1):
            for sub in itertools.combinations(self.rays, k):
                out.append(RationalCone(self.labels, tuple(sorted(sub, key=_ray_sort_key))))
        return out

    def face_count(self) -> int:
        return 2 ** self.dim

    def is_smooth(self) -> bool:
        """Ray generators extend to a basis of the ambient lattice."""
        if not self.rays:
            return True
        facs = invariant_factors(self.rays, self.ambient_rank)
        return len(facs) == len(self.rays) and all(f == 1 for f in facs)

    def embedded(self, labels) -> "RationalCone":
        """Zero-extend the cone into a larger labeled ambient lattice."""
        labels = tuple(labels)
        pos = {lab: i for i, lab in enumerate(labels)}
        for lab in self.labels:
            if lab not in pos:
                raise ValueError(f"label {lab!r} missing from target ambient lattice")
        own = [pos[lab] for lab in self.labels]
        own_set = set(own)

        def put(vec):
            out = [0] * len(labels)
            for i, v in zip(own, vec):
                out[i] = v
            return tuple(out)

        rays = tuple(sorted((put(r) for r in self.rays), key=_ray_sort_key))
        hs = None
        if self.halfspaces is not None:
            hs = [Halfspace(put(h.coeffs), h.rel) for h in self.halfspaces]
            for i in range(len(labels)):
                if i not in own_set:
                    unit = tuple(1 if j == i else 0 for j in range(len(labels)))
                    hs.append(Halfspace(unit, EQ))
            hs = tuple(hs)
        return RationalCone(labels, rays, self.closed, hs)

    def __repr__(self):
        kind = "closed" if self.closed else "open"
        return f"RationalCone({kind}, dim={self.dim}, rays={list(self.rays)})"


@functools.lru_cache(maxsize=None)
def _h_from_rays(labels: tuple, rays: tuple) -> tuple:
    """Equalities spanning the annihilator of span(rays) plus facet inequalities.

    For a simplicial cone the facet functionals are the rows of the dual
    basis (R R^T)^-1 R, cleared to primitive integer vectors.
    """
    n = len(labels)
    if not rays:
        return tuple(
            Halfspace(tuple(1 if j == i else 0 for j in range(n)), EQ) for i in range(n)
        )
    k = len(rays)
    gram = [[Fraction(dot(rays[i], rays[j])) for j in range(k)] for i in range(k)]
    inv = _invert(gram)
    duals = []
    for i in range(k):
        row = [sum(inv[i][t] * rays[t][j] for t in range(k)) for j in range(n)]
        duals.append(_clear_denominators(row))
    eqs = []
    for basis_row in _rational_kernel_rows(rays, n):
        eqs.append(Halfspace(_clear_denominators(basis_row), EQ))
    return tuple(eqs) + tuple(Halfspace(d, GE) for d in duals)


def _invert(mat):
    k = len(mat)
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(k)] for i, row in enumerate(mat)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def _rational_kernel_rows(rows, ncols):
    """Basis of { y : row . y = 0 for all rows }, over the rationals."""
    mat = [list(map(Fraction, r)) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        lead = mat[rank][col]
        mat[rank] = [x / lead for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        y = [Fraction(0)] * ncols
        y[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            y[pc] = -mat[r][fc]
        basis.append(y)
    return basis


def _clear_denominators(row):
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive(tuple(int(x * den) for x in row))


def ray_generators(eg: EnrichedGraph) -> list:
    """Ray generators of the closed structure cone: indicator vectors of the
    irreducible upper sets."""
    labels = eg.graph.edge_labels
    out = []
    for t in eg.preorder.irreducible_upper_sets():
        out.append(tuple(1 if lab in t else 0 for lab in labels))
    return sorted(out, key=_ray_sort_key)


def _structure_halfspaces(eg: EnrichedGraph, strict: bool) -> tuple:
    """Constraints of the structure cone, generated from the quotient poset.

    Equalities inside classes, one inequality per Hasse cover, positivity
    on the root classes; transitivity makes these cut out the whole cone.
    """
    labels = eg.graph.edge_labels
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    q = eg.preorder.quotient()
    hs = []

    def diff(a, b):
        row = [0] * n
        row[pos[a]] += 1
        row[pos[b]] -= 1
        return tuple(row)

    for cls in q.classes:
        for a, b in zip(cls, cls[1:]):
            hs.append(Halfspace(diff(a, b), EQ))
    rel = GT if strict else GE
    for i, j in q.hasse:
        hs.append(Halfspace(diff(q.classes[j][0], q.classes[i][0]), rel))
    for i in q.roots():
        unit = tuple(1 if t == pos[q.classes[i][0]] else 0 for t in range(n))
        hs.append(Halfspace(unit, rel))
    return tuple(hs)


def structure_cone(eg: EnrichedGraph) -> RationalCone:
    """The relatively open cone of edge lengths realizing the structure:
    x_e < x_f exactly when e is strictly below f, equal on classes, all > 0."""
    return RationalCone(
        tuple(eg.graph.edge_labels),
        tuple(ray_generators(eg)),
        closed=False,
        halfspaces=_structure_halfspaces(eg, strict=True),
    )


def closed_structure_cone(eg: EnrichedGraph) -> RationalCone:
    return RationalCone(
        tuple(eg.graph.edge_labels),
        tuple(ray_generators(eg)),
        closed=True,
        halfspaces=_structure_halfspaces(eg, strict=False),
    )


def increment_matrix(eg: EnrichedGraph) -> tuple:
    """Integral change of coordinates from edge lengths to per-class increments.

    Returns ``(classes, rows)``: one row per equivalence class, mapping a
    length vector to the difference against the class's Hasse parent (the
    root classes keep their plain coordinate).  Restricted to the span of
    the structure cone this is an isomorphism onto Z^(number of classes),
    and it sends the open cone onto the strictly positive orthant.
    """
    labels = eg.graph.edge_labels
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    q = eg.preorder.quotient()
    parents = q.parents()
    rows = []
    for idx, cls in enumerate(q.classes):
        row = [0] * n
        row[pos[cls[0]]] += 1
        if idx in parents:
            row[pos[q.classes[parents[idx]][0]]] -= 1
        rows.append(tuple(row))
    return q.classes, tuple(rows)


def increment_coordinates(eg: EnrichedGraph, x) -> dict:
    """Apply :func:`increment_matrix` to a length vector given by edge label."""
    labels = eg.graph.edge_labels
    vec = [Fraction(x[lab]) for lab in labels]
    classes, rows = increment_matrix(eg)
    return {cls: dot(row, vec) for cls, row in zip(classes, rows)}


def lengths_from_increments(eg: EnrichedGraph, y) -> dict:
    """Inverse of :func:`increment_coordinates` on the structure subspace.

    ``y`` maps each class (tuple of labels) to a value; the length of an
    edge is the sum of increments along the Hasse path from its root class.
    """
    q = eg.preorder.quotient()
    parents = q.parents()
    totals = {}

    def total(idx):
        if idx not in totals:
            base = total(parents[idx]) if idx in parents else 0
            totals[idx] = base + y[q.classes[idx]]
        return totals[idx]

    out = {}
    for idx, cls in enumerate(q.classes):
        for lab in cls:
            out[lab] = total(idx)
    return out

"""The variety of enriched structures of a nodal curve, as combinatorial data.

For a biconnected dual graph the variety embeds into a product of
projective spaces, one factor per bond.  This module produces the bond
projections, the binomial and trinomial equations of the image, the
lattice-kernel certificate that those equations generate, and the
blowup-center schedule of the birational model over projective space.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .enriched import bond_minima, enriched_structures
from .errors import GuardExceededError, NotABondError, NotBiconnectedError
from .fans import good_contraction_sequence
from .graphs import (
    Bond,
    MultiGraph,
    biconnected_components,
    bonds,
    is_biconnected,
    label_key,
    sort_labels,
)
from .lattices import LatticeQuotient, kernel_lattice, lattice_span_equal


def _require_biconnected(g: MultiGraph):
    if not is_biconnected(g):
        raise NotBiconnectedError("this operation expects a biconnected graph; split into blocks first")


def variety_dimension(g: MultiGraph) -> int:
    """Edges minus the number of blocks carrying edges."""
    return g.n_edges - len(biconnected_components(g))


@dataclass(frozen=True)
class BondProjection:
    """Coordinate deletion onto a bond, with its projective quotient."""

    bond: Bond
    labels: tuple  # ambient edge labels
    matrix: tuple  # one 0/1 row per bond edge
    quotient: LatticeQuotient  # of the bond lattice by its all-ones vector

    def project(self, vec) -> tuple:
        return tuple(sum(r * v for r, v in zip(row, vec)) for row in self.matrix)

    def bond_edges(self) -> tuple:
        return sort_labels(self.bond.edges)


def bond_projection(g: MultiGraph, b: Bond) -> BondProjection:
    _require_biconnected(g)
    if b.graph != g or b.edges != g.cut_edges(b.side):
        raise NotABondError("not a bond of this graph")
    labels = g.edge_labels
    rows = []
    edge_order = sort_labels(b.edges)
    for e in edge_order:
        rows.append(tuple(1 if lab == e else 0 for lab in labels))
    quotient = LatticeQuotient.from_generators(edge_order, [tuple(1 for _ in edge_order)])
    return BondProjection(b, tuple(labels), tuple(rows), quotient)


def in_bond_sector(bp: BondProjection, minima, vec) -> bool:
    """Whether a projected vector satisfies ``0 <= x_e <= x_f`` for e in minima."""
    proj = bp.project(vec)
    coord = dict(zip(bp.bond_edges(), proj))
    return all(coord[e] >= 0 for e in coord) and all(
        coord[e] <= coord[f] for e in minima for f in coord
    )


def bond_projection_certificate(g: MultiGraph, b: Bond, max_edges: int = 8) -> bool:
    """Every structure cone projects into the sector of its bond minima."""
    from .cones import ray_generators

    bp = bond_projection(g, b)
    for eg in enriched_structures(g, max_edges):
        minima = bond_minima(eg, b)
        for ray in ray_generators(eg):
            if not in_bond_sector(bp, minima, ray):
                return False
    return True


@dataclass(frozen=True)
class LaurentRelation:
    """An exponent vector on (bond, edge) coordinate pairs, summing to zero
    within every bond."""

    terms: tuple  # ((bond_edges, edge, exponent), ...) canonically sorted

    def __post_init__(self):
        per_bond = {}
        for bond_edges, edge, exp in self.terms:
            if edge not in bond_edges:
                raise ValueError("exponent attached to an edge outside its bond")
            per_bond[bond_edges] = per_bond.get(bond_edges, 0) + exp
        if any(v != 0 for v in per_bond.values()):
            raise ValueError("exponents must sum to zero within each bond")

    @staticmethod
    def from_exponents(entries) -> "LaurentRelation":
        acc = {}
        for bond_edges, edge, exp in entries:
            key = (tuple(sort_labels(bond_edges)), edge)
            acc[key] = acc.get(key, 0) + exp
        terms = tuple(
            sorted(
                ((be, e, x) for (be, e), x in acc.items() if x != 0),
                key=lambda t: (tuple(map(label_key, t[0])), label_key(t[1])),
            )
        )
        return LaurentRelation(terms)

    def negate(self) -> "LaurentRelation":
        return LaurentRelation(tuple((be, e, -x) for be, e, x in self.terms))

    def canonical(self) -> "LaurentRelation":
        """Fix the overall sign: first exponent positive."""
        if self.terms and self.terms[0][2] < 0:
            return self.negate()
        return self

    def bonds_involved(self) -> tuple:
        return tuple(sorted({be for be, _, _ in self.terms}, key=lambda b: tuple(map(label_key, b))))

    def evaluate(self, point: dict) -> Fraction:
        """Product of x_e^exp over all terms; the relation holds at 1."""
        num = Fraction(1)
        for _, e, exp in self.terms:
            num *= Fraction(point[e]) ** exp
        return num

    def holds_at(self, point: dict) -> bool:
        return self.evaluate(point) == 1

    def rendered(self, bond_names: dict) -> str:
        lhs, rhs = [], []
        for be, e, exp in self.terms:
            name = bond_names[be]
            part = f"x_{e}^{name}" if abs(exp) == 1 else f"(x_{e}^{name})^{abs(exp)}"
            (lhs if exp > 0 else rhs).append(part)
        left = " ".join(lhs) or "1"
        right = " ".join(rhs) or "1"
        return f"{left} = {right}"


def _bond_sums(g: MultiGraph):
    """Triples (B1, B2, B3) of bond edge sets with B3 the disjoint-side sum."""
    bond_by_edges = {b.edges: b for b in bonds(g)}
    triples = set()
    for b1, b2 in itertools.combinations(bond_by_edges.values(), 2):
        for s1 in (b1.side, b1.complement_side):
            for s2 in (b2.side, b2.complement_side):
                if s1 & s2 or s1 | s2 == frozenset(g.vertices):
                    continue
                cut = g.cut_edges(s1 | s2)
                if cut in bond_by_edges and cut not in (b1.edges, b2.edges):
                    triples.add((b1.edges, b2.edges, cut))
    return triples


def equations(g: MultiGraph, max_edges: int = 8) -> list:
    """Binomial and trinomial defining relations of the bond-product image.

    Binomials: for bonds B1, B2 sharing two edges e1, e2, the cross ratio
    x_e1^B1 x_e2^B2 = x_e2^B1 x_e1^B2.  Trinomials: for B3 = B1 + B2 and
    e1 in B1 cap B3, e2 in B1 cap B2, e3 in B2 cap B3, the cycle
    x_e1^B1 x_e2^B2 x_e3^B3 = x_e2^B1 x_e3^B2 x_e1^B3.
    """
    _require_biconnected(g)
    if g.n_edges > max_edges:
        raise GuardExceededError(f"relation search capped at {max_edges} edges")
    if g.n_edges < 2:
        return []
    out = set()
    all_bonds = bonds(g)
    for b1, b2 in itertools.combinations(all_bonds, 2):
        common = b1.edges & b2.edges
        for e1, e2 in itertools.combinations(sort_labels(common), 2):
            rel = LaurentRelation.from_exponents(
                [(b1.edges, e1, 1), (b1.edges, e2, -1), (b2.edges, e2, 1), (b2.edges, e1, -1)]
            )
            out.add(rel.canonical())
    for be1, be2, be3 in _bond_sums(g):
        for e1 in sort_labels(be1 & be3):
            for e2 in sort_labels(be1 & be2):
                for e3 in sort_labels(be2 & be3):
                    rel = LaurentRelation.from_exponents(
                        [
                            (be1, e1, 1), (be1, e2, -1),
                            (be2, e2, 1), (be2, e3, -1),
                            (be3, e3, 1), (be3, e1, -1),
                        ]
                    )
                    out.add(rel.canonical())
    return sorted(out, key=_relation_key)


def _relation_key(rel: "LaurentRelation"):
    return tuple(
        (tuple(map(label_key, be)), label_key(e), x) for be, e, x in rel.terms
    )


def bond_names(g: MultiGraph) -> dict:
    """Stable display names B1, B2, ... for the bonds of ``g``."""
    return {
        b.edges if isinstance(b, Bond) else b: f"B{i + 1}"
        for i, b in enumerate(tuple(sort_labels(b.edges)) for b in bonds(g))
    }


def _dual_bases(g: MultiGraph):
    """Coordinates for the sum-zero functionals on each bond and on the edges.

    A sum-zero integer vector on a set S is written in the basis
    e - f0 (f0 the least element), giving |S| - 1 coordinates.
    """
    all_bonds = bonds(g)
    domain = []  # (bond_edges, edge) pairs indexing the domain basis
    for b in all_bonds:
        edges = sort_labels(b.edges)
        domain.extend(((frozenset(b.edges), e) for e in edges[1:]))
    labels = g.edge_labels
    cod = labels[1:]  # functional basis e - e0 on the edge lattice
    return all_bonds, domain, cod


def _dual_map_rows(g: MultiGraph):
    """Rows of the dual comparison map, one per domain basis element.

    The codomain basis drops the first edge: a sum-zero functional has
    coordinates (l_e) over the remaining edges.
    """
    _, domain, cod = _dual_bases(g)
    rows = []
    for bond_edges, e in domain:
        f0 = sort_labels(bond_edges)[0]
        func = {e: 1, f0: -1}  # the functional e* - f0*, extended by zero
        row = [func.get(lab, 0) for lab in cod]
        rows.append(tuple(row))
    return domain, rows


def relation_coordinates(g: MultiGraph, rel: LaurentRelation):
    """Coordinates of a relation in the bond-functional domain basis."""
    _, domain, _ = _dual_bases(g)
    index = {pair: i for i, pair in enumerate(domain)}
    vec = [0] * len(domain)
    for bond_edges, e, exp in rel.terms:
        fs = frozenset(bond_edges)
        f0 = sort_labels(fs)[0]
        if e != f0:
            vec[index[(fs, e)]] += exp
        # the f0 component is determined by the zero-sum constraint
    return tuple(vec)


def kernel_rank(g: MultiGraph) -> int:
    """sum over bonds of (|B| - 1), minus (|E| - 1)."""
    _require_biconnected(g)
    return sum(len(b.edges) - 1 for b in bonds(g)) - (g.n_edges - 1)


def relations_generate_kernel(g: MultiGraph, max_edges: int = 8) -> bool:
    """The emitted relations span the kernel lattice of the dual map.

    The kernel is computed independently by integer normal forms; the
    relation lattice must match it exactly.
    """
    _require_biconnected(g)
    if g.n_edges > max_edges:
        raise GuardExceededError(f"kernel check capped at {max_edges} edges")
    domain, rows = _dual_map_rows(g)
    kernel = kernel_lattice(rows, len(g.edge_labels) - 1)
    rels = [relation_coordinates(g, r) for r in equations(g)]
    if len(kernel) != kernel_rank(g):
        return False
    return lattice_span_equal(rels, kernel, len(domain))


def torus_point_check(g: MultiGraph, seed: int = 2024, trials: int = 100) -> bool:
    """Every emitted relation holds at random nonzero rational torus points.

    Coordinates avoid 0 and +-1, so perturbing any single exponent is
    guaranteed to break at least the perturbed product.
    """
    _require_biconnected(g)
    rels = equations(g)
    rng = random.Random(seed)
    for _ in range(trials):
        point = {}
        for e in g.edge_labels:
            num = rng.choice([n for n in range(-9, 10) if n not in (-1, 0, 1)])
            den = rng.randint(2, 9)
            while abs(num) == den:
                den = rng.randint(2, 9)
            point[e] = Fraction(num, den)
        for rel in rels:
            if not rel.holds_at(point):
                return False
    return True


def mutated_evaluate(rel: LaurentRelation, point: dict, index: int = 0, bump: int = 1) -> Fraction:
    """Negative control: the relation's product with one exponent bumped.

    Valid relations evaluate to 1; with coordinates away from 0 and +-1 the
    bumped product cannot be 1.
    """
    _, e, _ = rel.terms[index]
    return rel.evaluate(point) * Fraction(point[e]) ** bump


@dataclass(frozen=True)
class BlowupStage:
    cardinality: int
    centers: tuple  # (contracted_set, vanishing_coordinates) pairs


def blowup_schedule(g: MultiGraph, max_edges: int = 8) -> list:
    """Centers of the blowups of projective edge space, by contraction size.

    Stage k holds the size-k edge sets whose contraction stays biconnected;
    the center is the linear subspace where the surviving coordinates
    vanish.  Stages are nonempty and increase in cardinality.
    """
    _require_biconnected(g)
    if g.n_edges > max_edges:
        raise GuardExceededError(f"schedule capped at {max_edges} edges")
    stages = {}
    for s, gc in good_contraction_sequence(g, max_edges):
        if not s:
            continue
        stages.setdefault(len(s), []).append((sort_labels(s), sort_labels(gc.edge_labels)))
    return [
        BlowupStage(
            k,
            tuple(sorted(stages[k], key=lambda t: tuple(map(label_key, t[0])))),
        )
        for k in sorted(stages)
    ]

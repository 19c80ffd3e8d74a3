"""Fans of enriched structures: direct construction, star subdivision, quotients.

A fan is stored by its maximal cones only; all cones here are smooth and
simplicial, so faces are ray subsets and two cones agree exactly when
their ray sets do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cones import RationalCone, closed_structure_cone, structure_cone
from .enriched import EnrichedGraph, enriched_structures, generic_structures
from .errors import GuardExceededError, NotStronglyConvexError
from .graphs import MultiGraph, contract, is_biconnected, label_key, sort_labels
from .lattices import LatticeQuotient, linearly_independent, primitive


def _cone_key(cone: RationalCone):
    return cone.rays


@dataclass(frozen=True)
class Fan:
    """A fan given by its maximal cones (faces implicit)."""

    labels: tuple
    maximal: tuple

    @staticmethod
    def from_cones(labels, cones) -> "Fan":
        labels = tuple(labels)
        dedup = {}
        for c in cones:
            if c.labels != labels:
                raise ValueError("all cones must live in the fan's ambient lattice")
            dedup[c.rays] = c.closure()
        # drop cones that are faces of others
        keys = sorted(dedup, key=lambda r: (-len(r), r))
        kept = []
        for r in keys:
            if not any(set(r) < set(k.rays) for k in kept):
                kept.append(dedup[r])
        kept.sort(key=_cone_key)
        return Fan(labels, tuple(kept))

    @property
    def ambient_rank(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.maximal), default=0)

    def rays(self) -> tuple:
        return tuple(sorted({r for c in self.maximal for r in c.rays}))

    def all_ray_subsets(self) -> set:
        """Ray sets of every cone of the fan."""
        out = set()
        for c in self.maximal:
            for k in range(c.dim + 1):
                out.update(frozenset(s) for s in itertools.combinations(c.rays, k))
        return out

    def n_cones(self) -> int:
        return len(self.all_ray_subsets())

    def contains_cone(self, cone: RationalCone) -> bool:
        rs = cone.ray_set
        return any(rs <= c.ray_set for c in self.maximal)

    def support_contains(self, x) -> bool:
        return any(c.closure_contains(x) for c in self.maximal)

    def is_complete(self) -> bool:
        """Facet-pairing criterion for a pure simplicial fan.

        Complete iff every facet (one ray dropped) of every maximal cone is
        shared by exactly two maximal cones.
        """
        d = self.ambient_rank
        if any(c.dim != d for c in self.maximal):
            return False
        count = {}
        for c in self.maximal:
            for facet in itertools.combinations(c.rays, d - 1):
                count[frozenset(facet)] = count.get(frozenset(facet), 0) + 1
        return all(v == 2 for v in count.values())

    def __repr__(self):
        return f"Fan(rank={self.ambient_rank}, maximal={len(self.maximal)})"


def fan_equal(f1: Fan, f2: Fan) -> bool:
    """Equality as sets of maximal cones, under canonical ray sorting."""
    return f1.labels == f2.labels and {c.rays for c in f1.maximal} == {c.rays for c in f2.maximal}


def octant_fan(labels) -> Fan:
    """The fan of all faces of the nonnegative orthant."""
    labels = tuple(labels)
    n = len(labels)
    units = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return Fan.from_cones(labels, [RationalCone.from_rays(labels, units)] if n else [RationalCone(labels, ())])


def coordinate_cone(labels, subset) -> RationalCone:
    """The face of the orthant spanned by the unit vectors of ``subset``."""
    labels = tuple(labels)
    n = len(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    rays = [tuple(1 if j == pos[lab] else 0 for j in range(n)) for lab in subset]
    return RationalCone.from_rays(labels, rays) if rays else RationalCone(labels, ())


def fan_of_graph(g: MultiGraph, max_edges: int = 8) -> Fan:
    """The fan subdividing the orthant by the closed cones of the generic
    enriched structures on ``g``."""
    labels = g.edge_labels
    cones = [closed_structure_cone(eg) for eg in generic_structures(g, max_edges)]
    return Fan.from_cones(labels, cones)


@dataclass(frozen=True)
class Stratum:
    """One relatively open piece of the orthant stratification.

    Contracting ``contracted`` and imposing ``structure`` on the surviving
    edges describes all points whose zero set is exactly ``contracted``.
    """

    contracted: frozenset
    structure: EnrichedGraph
    open_cone: RationalCone
    closed_cone: RationalCone


def fan_strata(g: MultiGraph, max_edges: int = 8) -> list:
    """Every cone of the fan of ``g`` as an embedded stratum, each once."""
    if g.n_edges > max_edges:
        raise GuardExceededError(f"enumeration capped at {max_edges} edges")
    labels = g.edge_labels
    out = []
    for k in range(g.n_edges + 1):
        for sub in itertools.combinations(labels, k):
            s = frozenset(sub)
            gc = contract(g, s)
            for eg in enriched_structures(gc, max_edges):
                out.append(
                    Stratum(
                        s,
                        eg,
                        structure_cone(eg).embedded(labels),
                        closed_structure_cone(eg).embedded(labels),
                    )
                )
    return out


def locate_stratum(g: MultiGraph, x, max_edges: int = 8) -> Stratum:
    """The unique stratum whose relatively open cone contains ``x >= 0``."""
    from .enriched import locate

    zero = frozenset(e for e in g.edge_labels if Fraction(x[e]) == 0)
    positive = {e: x[e] for e in g.edge_labels if e not in zero}
    eg = locate(contract(g, zero), positive)
    return Stratum(
        zero,
        eg,
        structure_cone(eg).embedded(g.edge_labels),
        closed_structure_cone(eg).embedded(g.edge_labels),
    )


def star_subdivision(fan: Fan, tau: RationalCone) -> Fan:
    """Insert the ray summing tau's generators and rebuild the cones over tau.

    Star subdivision at a ray (or at the zero cone) regenerates the fan.
    Every cone containing tau must be smooth.
    """
    if not fan.contains_cone(tau):
        raise ValueError("tau is not a cone of the fan")
    if tau.dim <= 1:
        return fan
    u = primitive(tuple(sum(col) for col in zip(*tau.rays)))
    tau_rays = tau.ray_set
    new_cones = []
    for sigma in fan.maximal:
        if not tau_rays <= sigma.ray_set:
            new_cones.append(sigma)
            continue
        if not sigma.is_smooth():
            raise ValueError("star subdivision requires smooth cones around tau")
        for dropped in sorted(tau_rays):
            rays = [r for r in sigma.rays if r != dropped] + [u]
            new_cones.append(RationalCone.from_rays(fan.labels, rays))
    return Fan.from_cones(fan.labels, new_cones)


def good_contraction_sequence(g: MultiGraph, max_edges: int = 8) -> list:
    """All contractions of ``g`` with a biconnected target holding at least
    one edge, ordered by non-increasing target edge count.

    Returns ``(contracted_set, target_graph)`` pairs; ties are broken by the
    canonical order of the contracted sets.
    """
    if g.n_edges > max_edges:
        raise GuardExceededError(f"enumeration capped at {max_edges} edges")
    labels = g.edge_labels
    entries = []
    for k in range(g.n_edges):
        for sub in itertools.combinations(labels, k):
            s = frozenset(sub)
            gc = contract(g, s)
            if is_biconnected(gc):
                entries.append((s, gc))
    entries.sort(key=lambda t: (len(t[0]), tuple(map(label_key, sort_labels(t[0])))))
    return entries


def fan_by_star_subdivision(g: MultiGraph, max_edges: int = 8) -> Fan:
    """Build the fan of ``g`` from the orthant by star subdivisions.

    Subdivides at the coordinate cone of every biconnected contraction
    target, largest targets first.
    """
    labels = g.edge_labels
    fan = octant_fan(labels)
    for s, gc in good_contraction_sequence(g, max_edges):
        fan = star_subdivision(fan, coordinate_cone(labels, gc.edge_labels))
    return fan


def fan_product(f1: Fan, f2: Fan) -> Fan:
    """The product fan in the concatenated ambient lattice."""
    labels = f1.labels + f2.labels
    n1, n2 = len(f1.labels), len(f2.labels)
    cones = []
    for c1 in f1.maximal:
        for c2 in f2.maximal:
            rays = [r + (0,) * n2 for r in c1.rays] + [(0,) * n1 + r for r in c2.rays]
            cones.append(RationalCone.from_rays(labels, rays) if rays else RationalCone(labels, ()))
    return Fan.from_cones(labels, cones)


def graph_lattice_quotient(g: MultiGraph) -> LatticeQuotient:
    """Quotient of the edge lattice by the all-ones vector of every block."""
    from .graphs import biconnected_components

    labels = g.edge_labels
    gens = []
    for comp in biconnected_components(g):
        gens.append(tuple(1 if lab in comp.edge_labels else 0 for lab in labels))
    return LatticeQuotient.from_generators(labels, gens)


def quotient_fan(fan: Fan, lq: LatticeQuotient) -> Fan:
    """Image of a fan under a lattice quotient whose kernel is spanned by rays.

    Rays mapping to zero are dropped; the image of each cone must stay
    strongly convex (its surviving rays stay linearly independent).
    """
    if tuple(lq.labels) != fan.labels:
        raise ValueError("quotient must be defined on the fan's ambient lattice")
    qlabels = tuple(f"q{i}" for i in range(lq.quotient_rank))
    cones = []
    for c in fan.maximal:
        imgs = []
        for r in c.rays:
            img = lq.project(r)
            if any(img):
                imgs.append(primitive(img))
        if imgs and not linearly_independent(imgs):
            raise NotStronglyConvexError("projected cone contains a line")
        cones.append(RationalCone.from_rays(qlabels, imgs) if imgs else RationalCone(qlabels, ()))
    return Fan.from_cones(qlabels, cones)

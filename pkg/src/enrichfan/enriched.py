"""Enriched structures on graphs: validation, enumeration, specialization.

An enriched structure on a graph is a preorder on its edge set built
recursively: a biconnected graph must have a single equivalence class
below every edge whose contraction is again enriched, and on a graph with
separating vertices the structure restricts to each block with edges of
different blocks incomparable.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import GroundSetMismatchError, GuardExceededError, NotABondError, UnknownLabelError
from .graphs import Bond, MultiGraph, biconnected_components, bonds, contract, is_biconnected, label_key, sort_labels
from .preorders import Preorder


@dataclass(frozen=True)
class EnrichedGraph:
    """A graph together with an enriched structure on its edge set."""

    graph: MultiGraph
    preorder: Preorder

    def __post_init__(self):
        if self.preorder.ground != self.graph.edge_labels:
            raise GroundSetMismatchError("preorder ground set must equal the edge set")
        if not is_enriched(self.graph, self.preorder):
            raise ValueError("preorder is not an enriched structure on this graph")

    @property
    def rank(self) -> int:
        return self.preorder.rank

    def is_generic(self) -> bool:
        return self.preorder.is_partial_order()

    def contract_lower_set(self, s) -> "EnrichedGraph":
        s = frozenset(s)
        if not self.preorder.is_lower_set(s):
            raise ValueError("contraction set must be a lower set")
        rest = set(self.graph.edge_labels) - s
        return EnrichedGraph(contract(self.graph, s), self.preorder.restrict(rest))

    def relabel_edges(self, mapping) -> "EnrichedGraph":
        g = self.graph
        renamed = MultiGraph(g.vertices, {mapping[e]: g.ends(e) for e in g.edge_labels})
        return EnrichedGraph(renamed, self.preorder.relabel(mapping))


def is_enriched(g: MultiGraph, p: Preorder) -> bool:
    """Decide the recursive conditions for ``p`` to enrich ``g``."""
    if p.ground != g.edge_labels:
        raise GroundSetMismatchError("preorder ground set must equal the edge set")
    return _is_enriched(g, p)


def _is_enriched(g: MultiGraph, p: Preorder) -> bool:
    if g.n_edges <= 1:
        return True  # the only preorder on <= 1 label is the trivial one
    if is_biconnected(g):
        bottom = p.global_minima()
        if not bottom:
            return False
        rest = set(g.edge_labels) - bottom
        return _is_enriched(contract(g, bottom), p.restrict(rest))
    comps = biconnected_components(g)
    comp_of = {}
    for i, c in enumerate(comps):
        for e in c.edge_labels:
            comp_of[e] = i
    for a in g.edge_labels:
        for b in g.edge_labels:
            if comp_of[a] != comp_of[b] and a != b and p.comparable(a, b):
                return False
    return all(_is_enriched(c, p.restrict(c.edge_labels)) for c in comps)


@functools.lru_cache(maxsize=None)
def _structures(g: MultiGraph) -> tuple:
    """All enriched structures on ``g``, canonically ordered."""
    labels = g.edge_labels
    if len(labels) <= 1:
        return (Preorder.discrete(labels),)
    if is_biconnected(g):
        found = []
        for k in range(1, len(labels) + 1):
            for bottom in itertools.combinations(labels, k):
                bottom_set = frozenset(bottom)
                rest = [e for e in labels if e not in bottom_set]
                base = [(a, b) for a in bottom for b in labels if a != b]
                for q in _structures(contract(g, bottom_set)):
                    found.append(Preorder.from_relations(labels, base + q.pairs()))
        return tuple(sorted(found, key=lambda p: sorted(map(lambda t: (label_key(t[0]), label_key(t[1])), p.pairs()))))
    comps = biconnected_components(g)
    per_comp = [_structures(c) for c in comps]
    found = []
    for combo in itertools.product(*per_comp):
        pairs = [pair for q in combo for pair in q.pairs()]
        found.append(Preorder.from_relations(labels, pairs))
    return tuple(sorted(found, key=lambda p: sorted(map(lambda t: (label_key(t[0]), label_key(t[1])), p.pairs()))))


def enriched_structures(g: MultiGraph, max_edges: int = 8) -> list:
    """Every enriched structure on ``g``, each exactly once."""
    if g.n_edges > max_edges:
        raise GuardExceededError(f"enumeration capped at {max_edges} edges")
    return [EnrichedGraph(g, p) for p in _structures(g)]


def generic_structures(g: MultiGraph, max_edges: int = 8) -> list:
    return [eg for eg in enriched_structures(g, max_edges) if eg.is_generic()]


def canonical_structure(g: MultiGraph) -> EnrichedGraph:
    """All edges of each block equivalent, blocks incomparable."""
    pairs = []
    for c in biconnected_components(g):
        pairs.extend((a, b) for a in c.edge_labels for b in c.edge_labels if a != b)
    return EnrichedGraph(g, Preorder.from_relations(g.edge_labels, pairs))


def bond_minima(eg: EnrichedGraph, b: Bond) -> frozenset:
    """Edges of the bond lying below every edge of the bond.

    Nonempty for every bond of an enriched graph; this is the lower set the
    bond inherits from the structure.
    """
    if b.graph != eg.graph or b.edges != eg.graph.cut_edges(b.side):
        raise NotABondError("not a bond of this enriched graph")
    p = eg.preorder
    t = frozenset(e for e in b.edges if all(p.leq(e, f) for f in b.edges))
    if not t:
        raise ValueError("enriched structure admits no bond minimum; invariant broken")
    return t


def from_bond_collection(g: MultiGraph, t) -> EnrichedGraph:
    """The enriched structure generated by ``e ≼ e'`` for e in T_B, e' in B.

    ``t`` maps every bond of ``g`` (keyed by its frozen edge set or by a
    Bond) to a nonempty subset of that bond.
    """
    table = {}
    for key, val in t.items():
        edges = key.edges if isinstance(key, Bond) else frozenset(key)
        table[edges] = frozenset(val)
    pairs = []
    for b in bonds(g):
        if b.edges not in table:
            raise KeyError(f"missing entry for bond {sort_labels(b.edges)}")
        chosen = table[b.edges]
        if not chosen:
            raise ValueError(f"empty subset for bond {sort_labels(b.edges)}")
        if not chosen <= b.edges:
            raise UnknownLabelError("chosen subset must lie inside its bond")
        pairs.extend((e, f) for e in chosen for f in b.edges if e != f)
    return EnrichedGraph(g, Preorder.from_relations(g.edge_labels, pairs))


@dataclass(frozen=True)
class Specialization:
    """A coarsening move: contract a lower set, then possibly merge classes."""

    source: EnrichedGraph
    target: EnrichedGraph
    contracted: frozenset

    def __post_init__(self):
        src, tgt = self.source, self.target
        if not src.preorder.is_lower_set(self.contracted):
            raise ValueError("contracted set must be a lower set of the source")
        if tgt.graph != contract(src.graph, self.contracted):
            raise ValueError("target graph must be the stated contraction")
        rest = set(src.graph.edge_labels) - self.contracted
        if not tgt.preorder.contains(src.preorder.restrict(rest)):
            raise ValueError("target preorder must refine every surviving relation")

    def is_identity(self) -> bool:
        return not self.contracted and self.target.preorder == self.source.preorder

    def is_simple(self) -> bool:
        return not self.contracted and self.target.rank == self.source.rank - 1


def specializations(eg: EnrichedGraph, max_edges: int = 8) -> list:
    """All specializations of ``eg``, the identity included.

    A specialization is determined by the contracted lower set together
    with the coarsened structure on the contraction.
    """
    if eg.graph.n_edges > max_edges:
        raise GuardExceededError(f"enumeration capped at {max_edges} edges")
    out = []
    for s in eg.preorder.lower_sets():
        target_graph = contract(eg.graph, s)
        surviving = eg.preorder.restrict(set(eg.graph.edge_labels) - s)
        for cand in _structures(target_graph):
            if cand.contains(surviving):
                out.append(Specialization(eg, EnrichedGraph(target_graph, cand), frozenset(s)))
    return out


def simple_specialization(eg: EnrichedGraph, c1, c2) -> EnrichedGraph:
    """Merge two consecutive classes ``c1 < c2`` into one; rank drops by one.

    The merged relation is the transitive closure of the old one together
    with the equivalence of the two classes.
    """
    q = eg.preorder.quotient()
    i = q.class_index(min(c1, key=label_key))
    j = q.class_index(min(c2, key=label_key))
    if frozenset(q.classes[i]) != frozenset(c1) or frozenset(q.classes[j]) != frozenset(c2):
        raise UnknownLabelError("arguments must be whole equivalence classes")
    if not q.consecutive(i, j):
        raise ValueError("classes must be consecutive in the Hasse diagram")
    e1 = q.classes[i][0]
    e2 = q.classes[j][0]
    merged = EnrichedGraph(eg.graph, eg.preorder.with_pairs([(e2, e1)]))
    assert merged.rank == eg.rank - 1
    return merged


def class_inclusion(sp: Specialization) -> dict:
    """Injective map from target classes to source classes.

    A target class goes to the least source class among those meeting its
    target-equivalence bundle.
    """
    src_p = sp.source.preorder
    out = {}
    for cls in sp.target.preorder.classes():
        rep = min(cls, key=label_key)
        bundle = [e for e in sp.target.preorder.ground if sp.target.preorder.equiv(e, rep)]
        mins = [e for e in bundle if not any(src_p.lt(f, e) for f in bundle)]
        min_classes = {src_p.class_of(e) for e in mins}
        if len(min_classes) != 1:
            raise ValueError("no unique minimal source class; invariant broken")
        out[cls] = frozenset(min_classes.pop())
    if len(set(out.values())) != len(out):
        raise ValueError("class inclusion is not injective; invariant broken")
    return {frozenset(k): v for k, v in out.items()}


def locate(g: MultiGraph, x) -> EnrichedGraph:
    """The unique enriched structure whose open cone contains ``x``.

    ``x`` maps every edge to a strictly positive rational; the bottom class
    of each biconnected piece is the argmin set, and the rest recurses on
    the contraction.
    """
    if set(x) != set(g.edge_labels):
        raise UnknownLabelError("coordinate keys must be exactly the edge labels")
    values = {e: Fraction(x[e]) for e in g.edge_labels}
    for e, v in values.items():
        if v <= 0:
            raise ValueError(f"coordinate of {e!r} must be strictly positive")
    return EnrichedGraph(g, _locate(g, values))


def _locate(g: MultiGraph, values: dict) -> Preorder:
    labels = g.edge_labels
    if len(labels) <= 1:
        return Preorder.discrete(labels)
    if is_biconnected(g):
        lo = min(values[e] for e in labels)
        bottom = [e for e in labels if values[e] == lo]
        rest = [e for e in labels if values[e] > lo]
        q = _locate(contract(g, bottom), {e: values[e] for e in rest})
        base = [(a, b) for a in bottom for b in labels if a != b]
        return Preorder.from_relations(labels, base + q.pairs())
    pairs = []
    for c in biconnected_components(g):
        pairs.extend(_locate(c, {e: values[e] for e in c.edge_labels}).pairs())
    return Preorder.from_relations(labels, pairs)

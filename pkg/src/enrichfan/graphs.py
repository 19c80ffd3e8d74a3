"""Labeled multigraphs: contraction, blocks, bonds, weights and automorphisms.

Vertex ids and edge labels are opaque immutable ids (strings or ints).
Contraction never relabels an edge, so the edge set of a contracted graph
is literally a subset of the original's.  All values are immutable after
construction and every operation is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    DisconnectedGraphError,
    GuardExceededError,
    NonDisjointSidesError,
    NotABondError,
    UnknownEdgeError,
    UnknownVertexError,
)

Label = str | int


def label_key(x: Label):
    """Total order on mixed int/str ids: ints first, then strings."""
    if isinstance(x, bool):
        raise TypeError("booleans are not valid ids")
    if isinstance(x, int):
        return (0, x, "")
    return (1, 0, str(x))


def sort_labels(xs) -> tuple:
    return tuple(sorted(xs, key=label_key))


class MultiGraph:
    """A multigraph with loops and globally unique, stable edge labels."""

    __slots__ = ("_vertices", "_vset", "_labels", "_ends", "_adj", "_hash")

    def __init__(self, vertices, edges):
        """Build a graph from vertex ids and a ``label -> (u, v)`` mapping.

        ``edges`` may also be an iterable of ``(label, u, v)`` triples.
        ``u == v`` declares a loop.
        """
        vs = sort_labels(set(vertices))
        vset = frozenset(vs)
        items = edges.items() if isinstance(edges, dict) else [(e[0], (e[1], e[2])) for e in edges]
        ends = {}
        for label, (u, v) in items:
            if label in ends:
                raise ValueError(f"duplicate edge label {label!r}")
            if u not in vset:
                raise UnknownVertexError(u)
            if v not in vset:
                raise UnknownVertexError(v)
            ends[label] = tuple(sorted((u, v), key=label_key))
        adj = {v: [] for v in vs}
        for label, (u, v) in ends.items():
            adj[u].append((label, v))
            if u != v:
                adj[v].append((label, u))
        self._vertices = vs
        self._vset = vset
        self._labels = sort_labels(ends)
        self._ends = ends
        self._adj = {v: tuple(sorted(nb, key=lambda t: label_key(t[0]))) for v, nb in adj.items()}
        self._hash = hash((vs, tuple((e, ends[e]) for e in self._labels)))

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edge_labels(self) -> tuple:
        return self._labels

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._labels)

    def ends(self, label: Label) -> tuple:
        try:
            return self._ends[label]
        except KeyError:
            raise UnknownEdgeError(label) from None

    def has_vertex(self, v) -> bool:
        return v in self._vset

    def is_loop(self, label: Label) -> bool:
        u, v = self.ends(label)
        return u == v

    def loops(self) -> tuple:
        return tuple(e for e in self._labels if self.is_loop(e))

    def incident(self, v) -> tuple:
        """Edges at ``v`` as ``(label, other_end)`` pairs; loops appear once."""
        if v not in self._vset:
            raise UnknownVertexError(v)
        return self._adj[v]

    def valence(self, v) -> int:
        """Number of edge ends at ``v``; a loop contributes 2."""
        return sum(2 if w == v else 1 for _, w in self.incident(v))

    def parallel_count(self, u, v) -> int:
        """Number of non-loop edges joining ``u`` and ``v`` (or loops if u == v)."""
        pair = tuple(sorted((u, v), key=label_key))
        return sum(1 for e in self._labels if self._ends[e] == pair)

    def induced(self, vertex_subset) -> "MultiGraph":
        vs = frozenset(vertex_subset)
        unknown = vs - self._vset
        if unknown:
            raise UnknownVertexError(sorted(unknown, key=label_key)[0])
        edges = {e: uv for e, uv in self._ends.items() if uv[0] in vs and uv[1] in vs}
        return MultiGraph(vs, edges)

    def delete_edges(self, labels) -> "MultiGraph":
        labels = frozenset(labels)
        for e in labels:
            self.ends(e)
        return MultiGraph(self._vertices, {e: uv for e, uv in self._ends.items() if e not in labels})

    def connected_components(self) -> tuple:
        """Vertex sets of the connected components, canonically ordered."""
        seen = set()
        comps = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                v = stack.pop()
                for _, w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self._vertices) <= 1 or len(self.connected_components()) == 1

    def cut_edges(self, side) -> frozenset:
        """Edges with exactly one endpoint in ``side``."""
        side = frozenset(side)
        return frozenset(e for e, (u, v) in self._ends.items() if (u in side) != (v in side))

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._ends == other._ends

    def __hash__(self):
        return self._hash

    def __repr__(self):
        es = ", ".join(f"{e}:{u}-{v}" for e, (u, v) in sorted(self._ends.items(), key=lambda t: label_key(t[0])))
        return f"MultiGraph([{', '.join(map(str, self._vertices))}], {{{es}}})"


def contraction_classes(g: MultiGraph, s) -> dict:
    """Map each vertex of ``g`` to its representative in ``g/s``.

    The representative of a merged class is its smallest member id.
    """
    s = frozenset(s)
    for e in s:
        g.ends(e)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in s:
        u, v = g.ends(e)
        ru, rv = find(u), find(v)
        if ru != rv:
            keep, drop = sorted((ru, rv), key=label_key)
            parent[drop] = keep
    return {v: find(v) for v in g.vertices}


def contract(g: MultiGraph, s) -> MultiGraph:
    """The graph ``g/s``: contract every edge in ``s``, keeping all other labels.

    Loops in ``s`` are deleted.
    """
    s = frozenset(s)
    reps = contraction_classes(g, s)
    vertices = set(reps.values())
    edges = {e: (reps[u], reps[v]) for e, (u, v) in ((e, g.ends(e)) for e in g.edge_labels) if e not in s}
    return MultiGraph(vertices, edges)


def biconnected_components(g: MultiGraph) -> list:
    """The blocks of ``g`` as subgraphs; their edge sets partition ``E(g)``.

    Each loop together with its vertex is its own block.  Parallel edges
    are distinct, so a pair of them forms a cycle and lies in one block.
    Isolated vertices yield no block.
    """
    blocks = [[e] for e in g.loops()]
    adj = {v: [] for v in g.vertices}
    for e in g.edge_labels:
        u, v = g.ends(e)
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))
    disc, low = {}, {}
    used = set()
    edge_stack = []
    clock = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, entry, it = stack[-1]
            descended = False
            for e, w in it:
                if e in used:
                    continue
                used.add(e)
                edge_stack.append(e)
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(adj[w])))
                    descended = True
                    break
                low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == entry:
                            break
                    blocks.append(block)
        assert not edge_stack
    out = []
    for block in blocks:
        vs = set()
        for e in block:
            vs.update(g.ends(e))
        out.append(MultiGraph(vs, {e: g.ends(e) for e in block}))
    out.sort(key=lambda b: label_key(b.edge_labels[0]))
    return out


def is_biconnected(g: MultiGraph) -> bool:
    """Connected, at least one edge, loop-free, and a single block.

    A lone loop is *not* biconnected here: a loop belongs to no bond, so
    graphs with loops never qualify (a loop vertex with further edges is
    separating anyway).
    """
    if g.n_edges == 0 or not g.is_connected() or g.loops():
        return False
    return len(biconnected_components(g)) == 1


@dataclass(frozen=True)
class Bond:
    """A minimal cut ``E(V, V^c)`` with a distinguished side ``V``.

    Both sides must induce connected subgraphs.  Two bonds are equal when
    they share the graph, the side and the edge set; use :meth:`canonical`
    to identify complementary sides.
    """

    graph: MultiGraph
    side: frozenset
    edges: frozenset

    def __post_init__(self):
        g = self.graph
        side = self.side
        if not side <= frozenset(g.vertices):
            raise NotABondError("side contains unknown vertices")
        comp = frozenset(g.vertices) - side
        if not side or not comp:
            raise NotABondError("a bond needs a nontrivial vertex bipartition")
        if not g.induced(side).is_connected() or not g.induced(comp).is_connected():
            raise NotABondError("both sides of a bond must induce connected subgraphs")
        if self.edges != g.cut_edges(side):
            raise NotABondError("edge set does not match the cut of the given side")

    @staticmethod
    def from_side(g: MultiGraph, side) -> "Bond":
        side = frozenset(side)
        return Bond(g, side, g.cut_edges(side))

    @property
    def complement_side(self) -> frozenset:
        return frozenset(self.graph.vertices) - self.side

    def complement(self) -> "Bond":
        return Bond(self.graph, self.complement_side, self.edges)

    def canonical(self) -> "Bond":
        """The representative whose side contains the smallest vertex id."""
        v0 = self.graph.vertices[0]
        return self if v0 in self.side else self.complement()

    def sorted_edges(self) -> tuple:
        return sort_labels(self.edges)

    def __repr__(self):
        return f"Bond(side={{{', '.join(map(str, sort_labels(self.side)))}}}, edges={{{', '.join(map(str, self.sorted_edges()))}}})"


def bonds(g: MultiGraph) -> list:
    """All bonds of a connected graph, one canonical representative each.

    Enumerates vertex subsets containing the smallest vertex and keeps
    those whose two sides both induce connected subgraphs.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("bonds are defined for connected graphs")
    vs = g.vertices
    if len(vs) < 2:
        return []
    v0, rest = vs[0], vs[1:]
    found = []
    for k in range(len(rest)):
        for extra in itertools.combinations(rest, k):
            side = frozenset((v0,) + extra)
            comp = frozenset(vs) - side
            if not g.induced(side).is_connected():
                continue
            if not g.induced(comp).is_connected():
                continue
            found.append(Bond(g, side, g.cut_edges(side)))
    found.sort(key=lambda b: (tuple(map(label_key, b.sorted_edges())), tuple(map(label_key, sort_labels(b.side)))))
    return found


def bond_sum(b1: Bond, b2: Bond) -> Bond:
    """The cut ``E(V1 ∪ V2, V1^c ∩ V2^c)`` of two bonds with disjoint sides.

    Raises :class:`NonDisjointSidesError` when the sides overlap and
    :class:`NotABondError` when the resulting cut is not a bond.
    """
    if b1.graph != b2.graph:
        raise ValueError("bond sum needs bonds of the same graph")
    if b1.side & b2.side:
        raise NonDisjointSidesError("sides must be disjoint")
    return Bond.from_side(b1.graph, b1.side | b2.side)


def connected_partition(g: MultiGraph, vs) -> list:
    """Partition ``V(g)`` into connected blocks, one containing each given vertex.

    Every component of the complement joins the block of its smallest
    adjacent seed vertex, which makes the choice deterministic.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("connected_partition needs a connected graph")
    seeds = list(vs)
    if len(set(seeds)) != len(seeds):
        raise ValueError("seed vertices must be distinct")
    for v in seeds:
        if not g.has_vertex(v):
            raise UnknownVertexError(v)
    seed_set = frozenset(seeds)
    blocks = {v: {v} for v in seeds}
    rest = frozenset(g.vertices) - seed_set
    if rest:
        for comp in g.induced(rest).connected_components():
            touching = set()
            for e in g.edge_labels:
                u, w = g.ends(e)
                if u in comp and w in seed_set:
                    touching.add(w)
                if w in comp and u in seed_set:
                    touching.add(u)
            if not touching:
                raise DisconnectedGraphError("complement component sees no seed vertex")
            blocks[min(touching, key=label_key)] |= comp
    return [frozenset(blocks[v]) for v in seeds]


class WeightedGraph:
    """A multigraph with a nonnegative integer weight on every vertex."""

    __slots__ = ("graph", "_weights")

    def __init__(self, graph: MultiGraph, weights):
        w = dict(weights)
        if set(w) != set(graph.vertices):
            raise UnknownVertexError("weight function must be defined on exactly the vertex set")
        for v, x in w.items():
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"weight of {v!r} must be a nonnegative integer")
        self.graph = graph
        self._weights = w

    def weight(self, v) -> int:
        try:
            return self._weights[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    @property
    def weights(self) -> dict:
        return dict(self._weights)

    def total_weight(self) -> int:
        return sum(self._weights.values())

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.graph == other.graph and self._weights == other._weights

    def __hash__(self):
        return hash((self.graph, tuple(sorted(self._weights.items(), key=lambda t: label_key(t[0])))))

    def __repr__(self):
        ws = ", ".join(f"{v}:{w}" for v, w in sorted(self._weights.items(), key=lambda t: label_key(t[0])))
        return f"WeightedGraph({self.graph!r}, {{{ws}}})"


def first_betti_number(g: MultiGraph) -> int:
    return g.n_edges - g.n_vertices + len(g.connected_components())


def genus(wg: WeightedGraph) -> int:
    """Total weight plus the first Betti number of a connected graph."""
    if not wg.graph.is_connected():
        raise DisconnectedGraphError("genus is defined for connected graphs")
    return wg.total_weight() + wg.graph.n_edges - wg.graph.n_vertices + 1


def is_stable(wg: WeightedGraph) -> bool:
    """Every weight-0 vertex has valence at least 3 (loops count twice)."""
    return all(wg.weight(v) > 0 or wg.graph.valence(v) >= 3 for v in wg.graph.vertices)


def contract_weighted(wg: WeightedGraph, s) -> WeightedGraph:
    """Contract edges of a weighted graph with the genus-preserving rule.

    The merged vertex of a class C gets ``sum of weights + |s_C| - |C| + 1``
    where ``s_C`` is the contracted edges inside C; this adds 1 for every
    independent cycle collapsed (in particular +1 per contracted loop).
    """
    g = wg.graph
    s = frozenset(s)
    gc = contract(g, s)
    reps = contraction_classes(g, s)
    weights = {v: 0 for v in gc.vertices}
    class_size = {v: 0 for v in gc.vertices}
    for v in g.vertices:
        weights[reps[v]] += wg.weight(v)
        class_size[reps[v]] += 1
    for e in s:
        u, _ = g.ends(e)
        weights[reps[u]] += 1
    for v in gc.vertices:
        weights[v] -= class_size[v] - 1
    return WeightedGraph(gc, weights)


@dataclass(frozen=True)
class EdgePermutation:
    """A permutation of edge labels induced by a weighted-graph automorphism."""

    edge_map: tuple
    vertex_map: tuple = field(compare=False)

    def apply(self, label: Label) -> Label:
        for a, b in self.edge_map:
            if a == label:
                return b
        raise UnknownEdgeError(label)

    def as_dict(self) -> dict:
        return dict(self.edge_map)

    def apply_vertex(self, v):
        for a, b in self.vertex_map:
            if a == v:
                return b
        raise UnknownVertexError(v)

    def compose(self, other: "EdgePermutation") -> "EdgePermutation":
        """``self`` after ``other``."""
        om, sm = other.as_dict(), self.as_dict()
        ov, sv = dict(other.vertex_map), dict(self.vertex_map)
        return EdgePermutation(
            tuple(sorted(((a, sm[b]) for a, b in om.items()), key=lambda t: label_key(t[0]))),
            tuple(sorted(((a, sv[b]) for a, b in ov.items()), key=lambda t: label_key(t[0]))),
        )

    def inverse(self) -> "EdgePermutation":
        return EdgePermutation(
            tuple(sorted(((b, a) for a, b in self.edge_map), key=lambda t: label_key(t[0]))),
            tuple(sorted(((b, a) for a, b in self.vertex_map), key=lambda t: label_key(t[0]))),
        )

    def is_identity(self) -> bool:
        return all(a == b for a, b in self.edge_map)


def _vertex_bijections(wg1: WeightedGraph, wg2: WeightedGraph):
    """Weight- and incidence-preserving bijections V(wg1) -> V(wg2)."""
    g1, g2 = wg1.graph, wg2.graph
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return

    def signature(wg, v):
        g = wg.graph
        return (wg.weight(v), g.valence(v), g.parallel_count(v, v))

    vs1 = list(g1.vertices)
    cand = {v: [w for w in g2.vertices if signature(wg2, w) == signature(wg1, v)] for v in vs1}

    def extend(i, image):
        if i == len(vs1):
            yield dict(image)
            return
        v = vs1[i]
        for w in cand[v]:
            if w in image.values():
                continue
            ok = all(
                g1.parallel_count(v, u) == g2.parallel_count(w, x)
                for u, x in image.items()
            )
            if ok:
                image[v] = w
                yield from extend(i + 1, image)
                del image[v]

    yield from extend(0, {})


def _edge_extensions(g1: MultiGraph, g2: MultiGraph, vmap: dict):
    """All edge bijections over a vertex bijection, permuting parallel classes."""
    classes = {}
    for e in g1.edge_labels:
        u, v = g1.ends(e)
        classes.setdefault((u, v), []).append(e)
    keyed = sorted(classes.items(), key=lambda t: (label_key(t[0][0]), label_key(t[0][1])))
    target = {}
    for e in g2.edge_labels:
        target.setdefault(g2.ends(e), []).append(e)
    per_class = []
    for (u, v), src in keyed:
        img_pair = tuple(sorted((vmap[u], vmap[v]), key=label_key))
        dst = target.get(img_pair, [])
        if len(dst) != len(src):
            return
        src = sort_labels(src)
        per_class.append([tuple(zip(src, perm)) for perm in itertools.permutations(sort_labels(dst))])
    for combo in itertools.product(*per_class):
        pairs = tuple(sorted((p for group in combo for p in group), key=lambda t: label_key(t[0])))
        yield pairs


def weighted_isomorphisms(wg1: WeightedGraph, wg2: WeightedGraph) -> list:
    """All edge bijections induced by isomorphisms ``wg1 -> wg2``, deduplicated."""
    seen = {}
    for vmap in _vertex_bijections(wg1, wg2):
        for pairs in _edge_extensions(wg1.graph, wg2.graph, vmap):
            if pairs not in seen:
                seen[pairs] = tuple(sorted(vmap.items(), key=lambda t: label_key(t[0])))
    ordered = sorted(seen.items(), key=lambda kv: tuple((label_key(a), label_key(b)) for a, b in kv[0]))
    return [EdgePermutation(pairs, vmap) for pairs, vmap in ordered]


def automorphisms(wg: WeightedGraph, max_vertices: int = 12) -> list:
    """Aut of a weighted graph as its image in the symmetric group on edges.

    Brute force over weight-preserving vertex bijections, extended over all
    permutations of parallel edges and loops at a vertex; loop half-edge
    flips act trivially on labels and are not represented.
    """
    if wg.graph.n_vertices > max_vertices:
        raise GuardExceededError(f"automorphism search capped at {max_vertices} vertices")
    return weighted_isomorphisms(wg, wg)


def is_isomorphic(wg1: WeightedGraph, wg2: WeightedGraph) -> bool:
    for vmap in _vertex_bijections(wg1, wg2):
        for _ in _edge_extensions(wg1.graph, wg2.graph, vmap):
            return True
    return False

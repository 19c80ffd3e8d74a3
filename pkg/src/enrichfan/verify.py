"""Invariant suites over the built-in corpus, shared by the CLI and the tests.

Each check returns a list of failure strings (empty = pass) and the
runners log one PASS/FAIL line per check.  Where the library computes a
quantity two ways (direct fan vs star subdivisions, located cone vs
membership scan, emitted relations vs normal-form kernel), both routes run
here.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import corpus
from .cones import closed_structure_cone, ray_generators, structure_cone
from .enriched import (
    bond_minima,
    enriched_structures,
    from_bond_collection,
    locate,
    specializations,
)
from .fans import fan_by_star_subdivision, fan_equal, fan_of_graph, graph_lattice_quotient, quotient_fan
from .graphs import biconnected_components, bonds
from .moduli import check_unique_lifts, classify_cells, enumerate_cells, enumerate_stable_weighted_graphs
from .preorders import Preorder
from .toric import (
    blowup_schedule,
    equations,
    kernel_rank,
    mutated_evaluate,
    relations_generate_kernel,
    torus_point_check,
)


def _positive_points(labels, count, rng):
    return [
        {e: Fraction(rng.randint(1, 256), rng.randint(1, 64)) for e in labels}
        for _ in range(count)
    ]


def check_enriched_counts() -> list:
    failures = []
    got = len(enriched_structures(corpus.triangle()))
    if got != 13:
        failures.append(f"triangle structure count {got} != 13")
    got = sum(1 for eg in enriched_structures(corpus.triangle()) if eg.is_generic())
    if got != 6:
        failures.append(f"triangle generic count {got} != 6")
    got = len(enriched_structures(corpus.theta(3)))
    if got != 7:
        failures.append(f"theta3 structure count {got} != 7")
    got = sum(1 for eg in enriched_structures(corpus.theta(3)) if eg.is_generic())
    if got != 3:
        failures.append(f"theta3 generic count {got} != 3")
    g = corpus.doubled_triangle()
    printed = [
        [("e1", "e2"), ("e1", "e3"), ("e3", "e4")],
        [("e3", "e1"), ("e1", "e2"), ("e1", "e4")],
        [("e1", "e3"), ("e3", "e1"), ("e1", "e2"), ("e1", "e4")],
    ]
    structs = {eg.preorder for eg in enriched_structures(g)}
    for pairs in printed:
        if Preorder.from_relations(g.edge_labels, pairs) not in structs:
            failures.append(f"doubled_triangle misses the structure generated by {pairs}")
    return failures


def check_cover(seed: int, points_per_graph: int = 1000) -> list:
    failures = []
    rng = random.Random(seed)
    for name, g in corpus.corpus_graphs().items():
        cones = [(eg.preorder, structure_cone(eg)) for eg in enriched_structures(g)]
        grid = [tuple(map(Fraction, p)) for p in itertools.product([1, 2, 3, 4], repeat=g.n_edges)]
        sampled = [tuple(pt[e] for e in g.edge_labels) for pt in _positive_points(g.edge_labels, points_per_graph, rng)]
        for vec in grid + sampled:
            hits = [p for p, cone in cones if cone.contains(vec)]
            if len(hits) != 1:
                failures.append(f"{name}: point {vec} lies in {len(hits)} open cones")
                continue
            located = locate(g, dict(zip(g.edge_labels, vec)))
            if located.preorder != hits[0]:
                failures.append(f"{name}: locate disagrees with membership at {vec}")
    return failures


def check_rays_and_faces() -> list:
    failures = []
    for name, g in corpus.corpus_graphs().items():
        for eg in enriched_structures(g):
            rays = ray_generators(eg)
            expected = {
                tuple(1 if lab in t else 0 for lab in g.edge_labels)
                for t in eg.preorder.irreducible_upper_sets(brute_force=g.n_edges <= 4)
            }
            if set(rays) != expected:
                failures.append(f"{name}: ray set mismatch for {eg.preorder!r}")
            if len(rays) != eg.rank:
                failures.append(f"{name}: ray count != rank for {eg.preorder!r}")
            cone = closed_structure_cone(eg)
            if not cone.is_smooth():
                failures.append(f"{name}: cone not smooth for {eg.preorder!r}")
            if cone.face_count() != len(specializations(eg)):
                failures.append(f"{name}: face count != specialization count for {eg.preorder!r}")
    return failures


def check_star_pipeline() -> list:
    failures = []
    for name, g in corpus.corpus_graphs().items():
        direct = fan_of_graph(g)
        starred = fan_by_star_subdivision(g)
        if not fan_equal(direct, starred):
            failures.append(f"{name}: star pipeline disagrees with direct fan")
    if len(fan_of_graph(corpus.triangle()).maximal) != 6:
        failures.append("triangle fan should have 6 maximal cones")
    if len(fan_of_graph(corpus.theta(3)).maximal) != 3:
        failures.append("theta3 fan should have 3 maximal cones")
    return failures


def check_quotient_identities() -> list:
    failures = []
    for n in (2, 3, 4):
        g = corpus.theta(n)
        qf = quotient_fan(fan_of_graph(g), graph_lattice_quotient(g))
        rays = qf.rays()
        ok = (
            len(rays) == n
            and len(qf.maximal) == n
            and tuple(map(sum, zip(*rays))) == (0,) * (n - 1)
            and qf.is_complete()
        )
        if not ok:
            failures.append(f"theta{n}: quotient is not the projective fan")
    g = corpus.triangle()
    qf = quotient_fan(fan_of_graph(g), graph_lattice_quotient(g))
    if not (len(qf.rays()) == 6 and len(qf.maximal) == 6 and qf.is_complete()):
        failures.append("triangle: quotient is not the 6-ray hexagonal fan")
    stages = blowup_schedule(g)
    if len(stages) != 1 or stages[0].cardinality != 1 or len(stages[0].centers) != 3:
        failures.append("triangle: blowup schedule is not three coordinate points")
    if any(len(coords) != 2 for _, coords in stages[0].centers):
        failures.append("triangle: blowup centers are not points of the plane")
    dq = quotient_fan(fan_of_graph(corpus.dumbbell()), graph_lattice_quotient(corpus.dumbbell()))
    if dq.ambient_rank != 0:
        failures.append("dumbbell: quotient fan should be zero-dimensional")
    return failures


def check_kernel_and_torus(seed: int, trials: int = 100) -> list:
    failures = []
    rng = random.Random(seed)
    from .lattices import kernel_lattice
    from .toric import _dual_map_rows

    for name in corpus.BICONNECTED_CORPUS:
        g = corpus.CORPUS[name]()
        if g.n_edges > 5:
            continue
        if not relations_generate_kernel(g):
            failures.append(f"{name}: relations do not generate the kernel lattice")
        _, rows = _dual_map_rows(g)
        computed = len(kernel_lattice(rows, g.n_edges - 1))
        if computed != kernel_rank(g):
            failures.append(f"{name}: normal-form kernel rank {computed} != formula {kernel_rank(g)}")
        if not torus_point_check(g, seed=rng.randint(0, 10**6), trials=trials):
            failures.append(f"{name}: a relation failed at a torus point")
        rels = equations(g)
        if rels:
            point = {e: Fraction(3, 2) ** (i + 1) for i, e in enumerate(g.edge_labels)}
            for rel in rels:
                if mutated_evaluate(rel, point) == 1:
                    failures.append(f"{name}: a mutated relation still holds")
    return failures


def check_genus_two_moduli(seed: int, n_points: int = 500) -> list:
    failures = []
    graphs = enumerate_stable_weighted_graphs(2)
    if len(graphs) != 7:
        failures.append(f"{len(graphs)} stable weighted graphs at genus 2, expected 7")
    cells = enumerate_cells(2)
    if len(cells) != 9:
        failures.append(f"{len(cells)} cells at genus 2, expected 9")
    report = classify_cells(2)
    maximal = [c for c in cells if c.index in report.maximal]
    if len(maximal) != 2 or any(c.dim != 3 for c in maximal):
        failures.append("maximal cells are not two of dimension 3")
    if sorted(c.aut_order for c in maximal) != [2, 2]:
        failures.append("maximal cell automorphism orders are not [2, 2]")
    lift = check_unique_lifts(2, seed=seed, n_points=n_points)
    if lift.failures:
        failures.append(f"{len(lift.failures)} lift failures: {lift.failures[:3]}")
    return failures


def check_bond_round_trip() -> list:
    failures = []
    for name in corpus.BICONNECTED_CORPUS:
        g = corpus.CORPUS[name]()
        bs = bonds(g)
        for eg in enriched_structures(g):
            rebuilt = from_bond_collection(g, {b.edges: bond_minima(eg, b) for b in bs})
            if rebuilt.preorder != eg.preorder:
                failures.append(f"{name}: bond round trip broke {eg.preorder!r}")
    for g in (corpus.theta(3), corpus.triangle()):
        bs = bonds(g)
        pools = [
            [frozenset(c) for k in range(1, len(b.edges) + 1) for c in itertools.combinations(b.edges, k)]
            for b in bs
        ]
        for combo in itertools.product(*pools):
            try:
                from_bond_collection(g, dict(zip((b.edges for b in bs), combo)))
            except Exception as exc:
                failures.append(f"collection {combo} did not induce an enriched structure: {exc}")
    return failures


def check_block_partition() -> list:
    failures = []
    for name, g in corpus.corpus_graphs().items():
        blocks = [frozenset(c.edge_labels) for c in biconnected_components(g)]
        all_edges = sorted(e for b in blocks for e in b)
        if all_edges != sorted(g.edge_labels):
            failures.append(f"{name}: block edge sets do not partition the edges")
        for b in bonds(g):
            if sum(1 for blk in blocks if b.edges <= blk) != 1:
                failures.append(f"{name}: bond {sorted(b.edges)} not inside one block")
    return failures


NAMED_CHECKS = (
    ("enriched structure counts", check_enriched_counts, False),
    ("block and bond partition", check_block_partition, False),
    ("orthant cover by open cones", check_cover, True),
    ("rays, smoothness, faces", check_rays_and_faces, False),
    ("star subdivision pipeline", check_star_pipeline, False),
    ("quotient fan identities", check_quotient_identities, False),
    ("kernel lattice and torus points", check_kernel_and_torus, True),
    ("genus-2 moduli and unique lifts", check_genus_two_moduli, True),
    ("bond collection round trip", check_bond_round_trip, False),
)


def verify_all(seed: int = 20240, log=lambda *_: None) -> list:
    all_failures = []
    for name, fn, seeded in NAMED_CHECKS:
        failures = fn(seed) if seeded else fn()
        log(f"{'PASS' if not failures else 'FAIL'}  {name}")
        for f in failures:
            log(f"      {f}")
        all_failures.extend(failures)
    return all_failures


def verify_fan_for_graph(g, seed: int = 20240, max_edges: int = 8, log=lambda *_: None) -> list:
    """Fan invariants for a single graph: cover, rays/faces, pipeline equality."""
    failures = []
    rng = random.Random(seed)
    cones = [(eg.preorder, structure_cone(eg)) for eg in enriched_structures(g, max_edges)]
    for pt in _positive_points(g.edge_labels, 200, rng):
        vec = tuple(pt[e] for e in g.edge_labels)
        hits = [p for p, cone in cones if cone.contains(vec)]
        if len(hits) != 1 or locate(g, pt).preorder != hits[0]:
            failures.append(f"cover failed at {vec}")
    log(f"{'PASS' if not failures else 'FAIL'}  orthant cover (200 seeded points)")
    step = []
    for eg in enriched_structures(g, max_edges):
        cone = closed_structure_cone(eg)
        if len(cone.rays) != eg.rank or not cone.is_smooth():
            step.append(f"ray/smoothness failure for {eg.preorder!r}")
        if cone.face_count() != len(specializations(eg, max_edges)):
            step.append(f"face/specialization mismatch for {eg.preorder!r}")
    log(f"{'PASS' if not step else 'FAIL'}  rays, smoothness, faces")
    failures += step
    step = []
    if not fan_equal(fan_of_graph(g, max_edges), fan_by_star_subdivision(g, max_edges)):
        step.append("star pipeline disagrees with direct fan")
    log(f"{'PASS' if not step else 'FAIL'}  star subdivision pipeline")
    failures += step
    for f in failures:
        log(f"      {f}")
    return failures

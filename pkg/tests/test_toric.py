import random
from fractions import Fraction

import pytest

from enrichfan import corpus
from enrichfan.enriched import bond_minima
from enrichfan.errors import NotBiconnectedError
from enrichfan.fans import (
    coordinate_cone,
    fan_of_graph,
    graph_lattice_quotient,
    octant_fan,
    quotient_fan,
    star_subdivision,
)
from enrichfan.graphs import Bond, bonds
from enrichfan.lattices import lattice_contains
from enrichfan.toric import (
    blowup_schedule,
    bond_names,
    bond_projection,
    bond_projection_certificate,
    equations,
    kernel_rank,
    mutated_evaluate,
    relation_coordinates,
    relations_generate_kernel,
    torus_point_check,
    variety_dimension,
    _dual_map_rows,
)
from enrichfan.lattices import kernel_lattice


class TestBondProjection:
    def test_theta_identity(self):
        g = corpus.theta(3)
        (b,) = bonds(g)
        bp = bond_projection(g, b)
        assert bp.project((1, 2, 3)) == (1, 2, 3)

    def test_triangle_deletes_coordinate(self):
        g = corpus.triangle()
        b = next(x for x in bonds(g) if x.edges == frozenset({"a", "b"}))
        bp = bond_projection(g, b)
        assert bp.project((5, 7, 11)) == (5, 7)

    def test_certificates_hold(self):
        for name in ("theta3", "triangle", "doubled_triangle", "square"):
            g = corpus.CORPUS[name]()
            for b in bonds(g):
                assert bond_projection_certificate(g, b), name

    def test_doubled_triangle_p1_sector(self):
        from enrichfan.cones import ray_generators
        from enrichfan.preorders import Preorder
        from enrichfan.enriched import EnrichedGraph
        from enrichfan.toric import in_bond_sector

        g = corpus.doubled_triangle()
        p1 = EnrichedGraph(
            g,
            Preorder.from_relations(g.edge_labels, [("e1", "e2"), ("e1", "e3"), ("e3", "e4")]),
        )
        b = next(x for x in bonds(g) if x.edges == frozenset({"e3", "e4"}))
        bp = bond_projection(g, b)
        assert bond_minima(p1, b) == frozenset({"e3"})
        for ray in ray_generators(p1):
            assert in_bond_sector(bp, {"e3"}, ray)

    def test_rejects_non_biconnected(self):
        g = corpus.dumbbell()
        with pytest.raises(NotBiconnectedError):
            bond_projection(g, Bond.from_side(g, {"u"}))


class TestEquations:
    def test_theta_has_none(self):
        assert equations(corpus.theta(3)) == []
        assert equations(corpus.theta(4)) == []

    def test_triangle_single_trinomial(self):
        g = corpus.triangle()
        rels = equations(g)
        assert len(rels) == 1
        (rel,) = rels
        assert len(rel.bonds_involved()) == 3
        assert sorted(x for _, _, x in rel.terms) == [-1, -1, -1, 1, 1, 1]

    def test_doubled_triangle_relations(self):
        g = corpus.doubled_triangle()
        rels = equations(g)
        binomials = [r for r in rels if len(r.bonds_involved()) == 2]
        trinomials = [r for r in rels if len(r.bonds_involved()) == 3]
        assert len(binomials) == 1
        assert len(trinomials) == 2
        (b,) = binomials
        involved = {frozenset(t) for t in b.bonds_involved()}
        assert involved == {frozenset({"e1", "e2", "e3"}), frozenset({"e1", "e2", "e4"})}

    def test_rendered_strings(self):
        g = corpus.doubled_triangle()
        names = bond_names(g)
        for rel in equations(g):
            s = rel.rendered(names)
            assert "=" in s and "x_" in s

    def test_every_relation_in_kernel(self):
        for name in ("triangle", "doubled_triangle", "square"):
            g = corpus.CORPUS[name]()
            domain, rows = _dual_map_rows(g)
            kern = kernel_lattice(rows, g.n_edges - 1)
            for rel in equations(g):
                assert lattice_contains(kern, relation_coordinates(g, rel), len(domain)), name


class TestKernel:
    def test_ranks(self):
        assert kernel_rank(corpus.triangle()) == 1
        assert kernel_rank(corpus.doubled_triangle()) == 2
        assert kernel_rank(corpus.theta(3)) == 0
        assert kernel_rank(corpus.square()) == 3

    def test_generation_on_biconnected_corpus(self):
        for name in corpus.BICONNECTED_CORPUS:
            g = corpus.CORPUS[name]()
            assert relations_generate_kernel(g), name


class TestTorusPoints:
    def test_all_relations_hold(self):
        for name in ("triangle", "doubled_triangle", "square"):
            g = corpus.CORPUS[name]()
            assert torus_point_check(g, seed=99, trials=30), name

    def test_mutants_fail(self):
        rng = random.Random(4)
        for name in ("triangle", "doubled_triangle", "square"):
            g = corpus.CORPUS[name]()
            point = {}
            for e in g.edge_labels:
                num = rng.choice([n for n in range(2, 10)])
                point[e] = Fraction(num * rng.choice([-1, 1]), num + 1)
            for rel in equations(g):
                assert rel.holds_at(point)
                assert mutated_evaluate(rel, point) != 1


class TestBlowupSchedule:
    def test_triangle_three_points(self):
        stages = blowup_schedule(corpus.triangle())
        assert len(stages) == 1
        assert stages[0].cardinality == 1
        assert [s for s, _ in stages[0].centers] == [("a",), ("b",), ("c",)]
        # each center is a coordinate point of the projective plane: two
        # of the three coordinates vanish
        assert all(len(coords) == 2 for _, coords in stages[0].centers)

    def test_theta_empty(self):
        assert blowup_schedule(corpus.theta(3)) == []
        assert blowup_schedule(corpus.theta(4)) == []

    def test_square_two_stages(self):
        stages = blowup_schedule(corpus.square())
        assert [st.cardinality for st in stages] == [1, 2]
        assert len(stages[0].centers) == 4
        assert len(stages[1].centers) == 6

    def test_matches_good_sequence(self):
        from enrichfan.fans import good_contraction_sequence

        for name in ("triangle", "square", "doubled_triangle", "theta3"):
            g = corpus.CORPUS[name]()
            seq = {frozenset(s) for s, _ in good_contraction_sequence(g) if s}
            sched = {
                frozenset(s)
                for stage in blowup_schedule(g)
                for s, _ in stage.centers
            }
            assert seq == sched, name

    def test_quotient_star_pipeline_reproduces_quotient_fan(self):
        # the first star subdivision (at the full orthant) turns the affine
        # fan into projective space; blowing that up along the scheduled
        # centers must end at the quotient of the full fan
        for name in ("triangle", "square", "theta3", "theta4", "doubled_triangle"):
            g = corpus.CORPUS[name]()
            lq = graph_lattice_quotient(g)
            target = quotient_fan(fan_of_graph(g), lq)
            base = star_subdivision(
                octant_fan(g.edge_labels), coordinate_cone(g.edge_labels, g.edge_labels)
            )
            fan = quotient_fan(base, lq)
            for stage in blowup_schedule(g):
                for s, _ in stage.centers:
                    tau = coordinate_cone(g.edge_labels, tuple(e for e in g.edge_labels if e not in s))
                    qrays = []
                    for r in tau.rays:
                        img = lq.project(r)
                        if any(img):
                            qrays.append(img)
                    from enrichfan.cones import RationalCone

                    qtau = RationalCone.from_rays(fan.labels, qrays)
                    fan = star_subdivision(fan, qtau)
            from enrichfan.fans import fan_equal

            assert fan_equal(fan, target), name


class TestVarietyDimension:
    def test_values(self):
        assert variety_dimension(corpus.theta(3)) == 2
        assert variety_dimension(corpus.theta(4)) == 3
        assert variety_dimension(corpus.dumbbell()) == 0
        assert variety_dimension(corpus.triangle()) == 2
        assert variety_dimension(corpus.path(2)) == 0


class TestSingleEdge:
    def test_trivial_cases(self):
        g = corpus.single_edge()
        assert blowup_schedule(g) == []
        assert equations(g) == []
        assert kernel_rank(g) == 0
        assert relations_generate_kernel(g)


class TestRelationValidation:
    def test_edge_outside_bond_rejected(self):
        from enrichfan.toric import LaurentRelation

        with pytest.raises(ValueError):
            LaurentRelation(((("a", "b"), "z", 1), (("a", "b"), "a", -1)))

    def test_nonzero_bond_sum_rejected(self):
        from enrichfan.toric import LaurentRelation

        with pytest.raises(ValueError):
            LaurentRelation(((("a", "b"), "a", 1),))

    def test_from_exponents_cancels(self):
        from enrichfan.toric import LaurentRelation

        rel = LaurentRelation.from_exponents(
            [(("a", "b"), "a", 1), (("a", "b"), "a", -1)]
        )
        assert rel.terms == ()


class TestFiveEdgeGraph:
    def test_doubled_square_kernel_and_torus(self):
        from enrichfan.graphs import MultiGraph

        g = MultiGraph(
            [1, 2, 3, 4],
            {"a": (1, 2), "b": (2, 3), "c": (3, 4), "d": (4, 1), "e": (1, 2)},
        )
        assert relations_generate_kernel(g)
        assert torus_point_check(g, seed=5, trials=20)
        rels = equations(g)
        assert len(rels) == 10


class TestMixedLabelTypes:
    def test_int_and_str_labels_coexist(self):
        from enrichfan.graphs import MultiGraph

        g = MultiGraph(
            [1, "x", "y"],
            {1: (1, "x"), "b": (1, "y"), 2: ("x", "y"), "d": ("x", "y")},
        )
        assert len(equations(g)) == 3
        assert relations_generate_kernel(g)
        assert torus_point_check(g, seed=2, trials=10)
        assert len(blowup_schedule(g)) == 2

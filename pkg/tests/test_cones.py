import itertools
from fractions import Fraction

import pytest

from enrichfan import corpus
from enrichfan.cones import (
    RationalCone,
    closed_structure_cone,
    increment_coordinates,
    increment_matrix,
    lengths_from_increments,
    ray_generators,
    structure_cone,
)
from enrichfan.enriched import (
    EnrichedGraph,
    canonical_structure,
    enriched_structures,
    from_bond_collection,
    specializations,
)
from enrichfan.preorders import Preorder


def theta_generic():
    return from_bond_collection(corpus.theta(3), {frozenset("abc"): {"a"}})


def chain_triangle():
    g = corpus.triangle()
    return EnrichedGraph(g, Preorder.from_relations("abc", [("a", "b"), ("b", "c")]))


class TestRayGenerators:
    def test_chain(self):
        # labels sorted a, b, c; irreducible upper sets {c}, {b,c}, {a,b,c}
        rays = ray_generators(chain_triangle())
        assert set(rays) == {(0, 0, 1), (0, 1, 1), (1, 1, 1)}

    def test_theta_generic(self):
        rays = ray_generators(theta_generic())
        assert set(rays) == {(0, 1, 0), (0, 0, 1), (1, 1, 1)}

    def test_canonical_single_ray(self):
        rays = ray_generators(canonical_structure(corpus.theta(3)))
        assert rays == [(1, 1, 1)]

    def test_ray_count_is_rank_everywhere(self):
        for g in corpus.corpus_graphs().values():
            for eg in enriched_structures(g):
                assert len(ray_generators(eg)) == eg.rank


class TestStructureCone:
    def test_dimension_is_rank(self):
        for g in corpus.corpus_graphs().values():
            for eg in enriched_structures(g):
                assert structure_cone(eg).dim == eg.rank

    def test_open_membership(self):
        cone = structure_cone(theta_generic())
        assert cone.contains((1, 2, 4))  # labels a, b, c
        assert cone.contains((1, 3, 3))
        assert not cone.contains((2, 2, 3))  # x_a must be strictly smallest
        assert not cone.contains((0, 1, 1))  # strictly positive

    def test_closed_membership(self):
        cone = closed_structure_cone(theta_generic())
        assert cone.contains((2, 2, 3))
        assert cone.contains((0, 0, 0))
        assert not cone.contains((2, 1, 3))

    def test_halfspace_and_ray_descriptions_agree(self):
        samples = list(itertools.product([0, 1, 2, 3], repeat=3))
        for g in (corpus.theta(3), corpus.triangle()):
            for eg in enriched_structures(g):
                open_cone = structure_cone(eg)
                closed = closed_structure_cone(eg)
                for x in samples:
                    assert closed.contains(x) == closed.closure_contains(x)
                    assert open_cone.contains(x) == open_cone.interior_contains(x)

    def test_smoothness(self):
        for g in corpus.corpus_graphs().values():
            for eg in enriched_structures(g):
                assert closed_structure_cone(eg).is_smooth()

    def test_face_count_equals_specialization_count(self):
        for g in (corpus.theta(3), corpus.triangle(), corpus.doubled_triangle()):
            for eg in enriched_structures(g):
                cone = closed_structure_cone(eg)
                assert cone.face_count() == len(specializations(eg))

    def test_p3_dim_three(self):
        p3 = EnrichedGraph(
            corpus.doubled_triangle(),
            Preorder.from_relations(
                ("e1", "e2", "e3", "e4"),
                [("e1", "e3"), ("e3", "e1"), ("e1", "e2"), ("e1", "e4")],
            ),
        )
        assert structure_cone(p3).dim == 3


class TestRationalCone:
    def test_not_smooth_determinant_two(self):
        cone = RationalCone.from_rays(("x", "y"), [(1, 0), (1, 2)])
        assert not cone.is_smooth()

    def test_smooth_octant(self):
        cone = RationalCone.from_rays(("x", "y", "z"), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert cone.is_smooth()

    def test_positive_multiples_collapse_to_one_ray(self):
        cone = RationalCone.from_rays(("x", "y"), [(1, 0), (2, 0), (0, 1)])
        assert cone.rays == ((0, 1), (1, 0))

    def test_dependent_rays_rejected(self):
        with pytest.raises(ValueError):
            RationalCone.from_rays(("x", "y"), [(1, 0), (0, 1), (1, 1)])

    def test_h_description_from_rays(self):
        cone = RationalCone.from_rays(("x", "y", "z"), [(1, 1, 0), (0, 0, 1)])
        for x in itertools.product([-2, -1, 0, 1, 2], repeat=3):
            by_h = all(h.holds(x) for h in cone.h_description())
            assert by_h == cone.closure_contains(x)

    def test_faces_are_ray_subsets(self):
        cone = RationalCone.from_rays(("x", "y", "z"), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert len(cone.faces()) == 8
        assert all(f.is_face_of(cone) for f in cone.faces())

    def test_embedded(self):
        cone = RationalCone.from_rays(("b", "c"), [(1, 0), (0, 1)])
        big = cone.embedded(("a", "b", "c"))
        assert big.rays == ((0, 0, 1), (0, 1, 0))
        assert big.closure_contains((0, 1, 2))
        assert not big.closure_contains((1, 1, 2))


class TestIncrementCoordinates:
    def test_theta_example(self):
        eg = theta_generic()
        y = increment_coordinates(eg, {"a": 1, "b": 2, "c": 4})
        assert y == {("a",): 1, ("b",): 1, ("c",): 3}

    def test_round_trip_lengths(self):
        eg = theta_generic()
        y = {("a",): Fraction(1), ("b",): Fraction(2), ("c",): Fraction(3)}
        x = lengths_from_increments(eg, y)
        assert x == {"a": 1, "b": 3, "c": 4}
        assert increment_coordinates(eg, x) == y

    def test_canonical_rank_one(self):
        eg = canonical_structure(corpus.theta(3))
        classes, rows = increment_matrix(eg)
        assert len(rows) == 1
        assert sum(abs(v) for v in rows[0]) == 1

    def test_positive_orthant_image(self):
        # open-cone points map to strictly positive increments and back
        for g in (corpus.theta(3), corpus.triangle(), corpus.doubled_triangle()):
            for eg in enriched_structures(g):
                cone = structure_cone(eg)
                classes, _ = increment_matrix(eg)
                for y_vals in itertools.product([1, 2], repeat=len(classes)):
                    y = dict(zip(classes, map(Fraction, y_vals)))
                    x = lengths_from_increments(eg, y)
                    vec = tuple(x[lab] for lab in eg.graph.edge_labels)
                    assert cone.contains(vec)
                    assert increment_coordinates(eg, x) == y

"""From enriched structures to cones and fans, two ways.

Each enriched structure carves a relatively open cone out of the positive
orthant (lengths weakly increase along the preorder, strictly between
classes).  The closures tile the orthant; the same fan also arises from
the orthant by star subdivisions along biconnected contraction targets.
"""

from fractions import Fraction

from enrichfan import corpus
from enrichfan.cones import closed_structure_cone, increment_coordinates, ray_generators
from enrichfan.enriched import enriched_structures, locate
from enrichfan.fans import (
    fan_by_star_subdivision,
    fan_equal,
    fan_of_graph,
    good_contraction_sequence,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


g = corpus.triangle()
show("Cones of the 13 enriched structures on the triangle")
for eg in enriched_structures(g):
    rel = "; ".join(f"{a}≼{b}" for a, b in eg.preorder.pairs()) or "discrete (impossible here)"
    print(f"rank {eg.rank}: rays {ray_generators(eg)}   [{rel}]")

show("Point location: which open cone holds a length vector?")
for vec in [(2, 1, 1), (1, 2, 3), (5, 5, 5)]:
    eg = locate(g, dict(zip("abc", vec)))
    rel = "; ".join(f"{a}≼{b}" for a, b in eg.preorder.pairs())
    print(f"x = {vec}: {rel}")

show("Increment coordinates straighten each cone onto an orthant")
eg = locate(g, {"a": 1, "b": 2, "c": 4})
y = increment_coordinates(eg, {"a": 1, "b": 2, "c": 4})
print("lengths (1, 2, 4) ->", {" ~ ".join(map(str, k)): v for k, v in y.items()})

show("The fan, built directly and by star subdivisions")
direct = fan_of_graph(g)
print(f"direct: {len(direct.maximal)} maximal cones over rays {direct.rays()}")
seq = good_contraction_sequence(g)
print("good contraction sequence:", [sorted(s) for s, _ in seq])
starred = fan_by_star_subdivision(g)
print("star pipeline gives the same fan:", fan_equal(direct, starred))

show("Same comparison across the whole corpus")
for name, graph in corpus.corpus_graphs().items():
    d = fan_of_graph(graph)
    s = fan_by_star_subdivision(graph)
    print(f"{name:17s}: {len(d.maximal):3d} maximal cones, pipelines agree: {fan_equal(d, s)}")

show("Every closed cone is smooth and simplicial")
worst = max(
    (closed_structure_cone(eg) for eg in enriched_structures(corpus.square())),
    key=lambda c: c.dim,
)
print("a top cone of the square's fan:", worst)
print("smooth:", worst.is_smooth())

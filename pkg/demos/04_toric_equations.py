"""The toric variety of enriched structures: equations and blowup centers.

For a biconnected graph the variety sits inside a product of projective
spaces, one per bond, cut out by binomial and trinomial relations.  Its
fan is the quotient of the graph's fan, and it also arises from
projective space by blowing up coordinate centers.
"""

from enrichfan import corpus
from enrichfan.fans import fan_of_graph, graph_lattice_quotient, quotient_fan
from enrichfan.graphs import bonds
from enrichfan.toric import (
    blowup_schedule,
    bond_names,
    equations,
    kernel_rank,
    relations_generate_kernel,
    torus_point_check,
    variety_dimension,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


for name in ("theta3", "triangle", "doubled_triangle", "square"):
    g = corpus.CORPUS[name]()
    show(f"{name}: dimension {variety_dimension(g)}")
    names = bond_names(g)
    for be, label in names.items():
        print(f"  {label} = {{{', '.join(map(str, be))}}}")
    rels = equations(g)
    if not rels:
        print("  no relations: the variety is a projective space")
    for rel in rels:
        print("  " + rel.rendered(names))
    print(f"  kernel rank {kernel_rank(g)}; relations generate it: {relations_generate_kernel(g)}")
    print(f"  relations hold at 100 random torus points: {torus_point_check(g)}")

show("Blowup schedules over projective space")
for name in ("theta3", "triangle", "square"):
    g = corpus.CORPUS[name]()
    stages = blowup_schedule(g)
    if not stages:
        print(f"{name}: nothing to blow up; the variety is projective space itself")
    for st in stages:
        centers = ", ".join("{" + ",".join(map(str, s)) + "}" for s, _ in st.centers)
        print(f"{name}: contract size {st.cardinality} -> centers {centers}")

show("Quotient fans")
for n in (2, 3, 4):
    g = corpus.theta(n)
    qf = quotient_fan(fan_of_graph(g), graph_lattice_quotient(g))
    print(
        f"theta{n}: rank {qf.ambient_rank}, {len(qf.rays())} rays summing to zero, "
        f"{len(qf.maximal)} maximal cones, complete: {qf.is_complete()}"
    )
g = corpus.triangle()
qf = quotient_fan(fan_of_graph(g), graph_lattice_quotient(g))
print(
    f"triangle: rank {qf.ambient_rank}, {len(qf.rays())} rays, {len(qf.maximal)} cones "
    f"(the plane blown up at its three coordinate points)"
)

"""Acceptance suite: one check per headline claim, with hard time budgets.

Run with ``pytest -s tests/test_acceptance.py`` to see one PASS/FAIL line
per criterion.
"""

import time

from enrichfan.verify import (
    check_bond_round_trip,
    check_cover,
    check_enriched_counts,
    check_genus_two_moduli,
    check_kernel_and_torus,
    check_quotient_identities,
    check_rays_and_faces,
    check_star_pipeline,
)

SEED = 20240


def _run(number, label, budget_seconds, fn, *args):
    start = time.perf_counter()
    failures = fn(*args)
    elapsed = time.perf_counter() - start
    status = "PASS" if not failures and elapsed < budget_seconds else "FAIL"
    print(f"criterion {number} {status} ({elapsed:.2f}s / {budget_seconds}s): {label}")
    for f in failures:
        print(f"    {f}")
    assert not failures, f"criterion {number}: {failures[:5]}"
    assert elapsed < budget_seconds, f"criterion {number} exceeded {budget_seconds}s ({elapsed:.2f}s)"


def test_criterion_1_enriched_counts():
    _run(1, "enriched structure counts on the three-edge graphs", 1.0, check_enriched_counts)


def test_criterion_2_cover():
    _run(2, "integer grid and 1000 seeded points per graph lie in exactly one open cone", 30.0, check_cover, SEED)


def test_criterion_3_rays_and_faces():
    _run(3, "ray generators, rank, smoothness, face counts", 30.0, check_rays_and_faces)


def test_criterion_4_star_pipeline():
    _run(4, "star-subdivision fan equals the direct fan; 6 and 3 maximal cones", 10.0, check_star_pipeline)


def test_criterion_5_quotient_identities():
    _run(5, "quotient fans: projective spaces, the hexagonal surface, blowup points", 5.0, check_quotient_identities)


def test_criterion_6_kernel():
    _run(6, "kernel lattice generated by the emitted relations; torus points; mutants", 60.0, check_kernel_and_torus, SEED)


def test_criterion_7_genus_two_moduli():
    _run(7, "genus-2: 7 graphs, 9 cells, 2 maximal, unique lifts for 500 points", 60.0, check_genus_two_moduli, SEED)


def test_criterion_8_bond_round_trip():
    _run(8, "bond minima round trip and exhaustive bond collections", 30.0, check_bond_round_trip)

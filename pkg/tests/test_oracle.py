import random
from fractions import Fraction

import pytest

from causalgames.digraphs import (
    PolytopeClass,
    adjacency_vector,
    make_cycle,
    make_kefalopoda,
)
from causalgames.inequalities import (
    cycle_inequality,
    kefalopoda_inequality,
    lift,
    trivial_upper,
)
from causalgames.oracle import (
    brute_force_weak_membership,
    extremal_masks,
    hamiltonian_cycle_inequalities,
    hamiltonian_vertex_check,
    hull_membership,
    max_overlap,
    verify_facet,
    verify_lifted_facet,
    verify_validity,
)
from causalgames.reproduce import hamiltonian_fractional_point

Q = Fraction
DAG = PolytopeClass.DAG
SOURCE = PolytopeClass.SOURCE
NOT_STRONG = PolytopeClass.NOT_STRONG


def test_extremal_count_identity_n2_scan_vs_constructive():
    for cls, class_size in ((DAG, 3), (SOURCE, 3), (NOT_STRONG, 3)):
        scan = set(extremal_masks(2, cls, scan=True))
        built = set(extremal_masks(2, cls))
        assert scan == built
        assert len(scan) == class_size * 4


def test_extremal_count_n3_dag():
    assert sum(1 for _ in extremal_masks(3, DAG)) == 25 * 64


def test_validity_examples():
    assert verify_validity(kefalopoda_inequality(3, [1, 2, 0]), SOURCE, 3)
    assert verify_validity(cycle_inequality(4, 4), DAG, 4)
    # The cycle itself (outside the DAG class) breaks its own bound.
    ineq = cycle_inequality(4, 4)
    value = sum(w * x for w, x in zip(ineq.weights, adjacency_vector(make_cycle(4, 4))))
    assert value > ineq.bound


def test_facet_positive_and_negative():
    cert = verify_facet(kefalopoda_inequality(3, [1, 2, 0]), SOURCE, 3)
    assert cert.is_facet and cert.max_value == 2
    cert = verify_facet(trivial_upper(2, 0, 1), SOURCE, 2)
    assert cert.valid and not cert.is_facet
    # Certificates serialize with their evidence counts.
    obj = cert.to_json()
    assert obj["is_facet"] is False and obj["class"] == "source"


def test_max_overlap_examples():
    assert max_overlap(DAG, 2, make_cycle(2, 2)) == 1
    assert max_overlap(SOURCE, 3, make_kefalopoda(3, [1, 2, 0])) == 2
    assert max_overlap(DAG, 4, make_cycle(4, 3)) == 2


def test_verify_lifted_facet_rejects_trivial_base():
    with pytest.raises(ValueError):
        verify_lifted_facet(lift(trivial_upper(3, 0, 1)), SOURCE, 3)


def test_brute_force_examples():
    assert brute_force_weak_membership(3, [Q(0)] * 6)
    alpha = adjacency_vector(make_kefalopoda(3, [1, 2, 0]))
    assert not brute_force_weak_membership(3, alpha)
    assert not brute_force_weak_membership(4, hamiltonian_fractional_point())
    assert not brute_force_weak_membership(3, [Q(2)] + [Q(0)] * 5)


def test_brute_force_big_denominators_fall_back_to_exact_path():
    # A denominator too wide for the int64 grid still decides exactly.
    rng = random.Random(1)
    huge = 2**61 - 1
    q = [Q(rng.randrange(0, huge), huge) for _ in range(6)]
    from causalgames.decide import weak_source_digraph

    assert brute_force_weak_membership(3, q) == weak_source_digraph(3, q).accepted


def test_hamiltonian_inequality_count():
    for n in (3, 4, 5):
        ineqs = hamiltonian_cycle_inequalities(n)
        assert len(ineqs) == len(set(ineqs))
        import math

        assert len(ineqs) == math.factorial(n - 1)


def test_hamiltonian_vertex_examples():
    assert hamiltonian_vertex_check(4, hamiltonian_fractional_point())
    assert not hamiltonian_vertex_check(4, [Q(1, 2)] * 12)
    assert hamiltonian_vertex_check(4, [Q(0)] * 12)


def test_hull_membership_digraph_space():
    # Midpoint of the two single-arc source digraphs.
    assert hull_membership([Q(1, 2), Q(1, 2)], SOURCE, 2)
    # Both arcs at weight one is exactly the 2-cycle: strong, hence outside.
    assert not hull_membership([Q(1), Q(1)], SOURCE, 2)
    assert hull_membership([Q(1), Q(0)], SOURCE, 2)

import json
import random
import time
from fractions import Fraction

import pytest

from causalgames.correlations import CorrelationVector, deterministic_point_from_digraph
from causalgames.decide import (
    Decision,
    KefalopodaWitness,
    TrivialWitness,
    decision_to_json_str,
    weak_source_digraph,
    weakly_causal_correlations,
)
from causalgames.digraphs import adjacency_vector, enumerate_class, make_kefalopoda
from causalgames.digraphs import PolytopeClass
from causalgames.reproduce import hamiltonian_fractional_point

Q = Fraction


def test_zero_vector_accepted():
    d = weak_source_digraph(3, [Q(0)] * 6)
    assert d.accepted and d.score == 0 and d.witness is None


def test_kefalopoda_adjacency_rejected_with_witness():
    f = (1, 2, 0)
    d = weak_source_digraph(3, adjacency_vector(make_kefalopoda(3, f)))
    assert not d.accepted and d.score == 3
    assert isinstance(d.witness, KefalopodaWitness) and d.witness.f == f


def test_fractional_vertex_scores_four():
    d = weak_source_digraph(4, hamiltonian_fractional_point())
    assert not d.accepted and d.score == 4


def test_out_of_range_rejects_first_lex_coordinate():
    q = [Q(0), Q(2), Q(0), Q(-1), Q(0), Q(0)]
    d = weak_source_digraph(3, q)
    assert not d.accepted and d.score == 0
    assert d.witness == TrivialWitness(1, Q(2))


def test_boundary_score_accepts():
    # Per-receiver maxima sum to exactly n-1.
    n = 3
    q = [Q(2, 3)] * 6
    d = weak_source_digraph(n, q)
    assert d.accepted and d.score == 2


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        weak_source_digraph(3, [Q(0)] * 5)
    with pytest.raises(ValueError):
        weak_source_digraph(1, [])


def test_argmax_tie_breaks_to_smallest_sender():
    d = weak_source_digraph(4, [Q(1)] * 12)
    assert d.witness.f == (1, 0, 0, 0)


def test_correlations_with_equal_blocks_accept():
    rng = random.Random(9)
    for _ in range(20):
        block = tuple(Q(rng.randrange(0, 17), 16) for _ in range(6))
        p = CorrelationVector(3, block, block)
        d = weakly_causal_correlations(3, p)
        assert d.accepted and d.score == 0


def test_correlations_of_kefalopoda_reject_and_dag_accept():
    p = deterministic_point_from_digraph(make_kefalopoda(4, [1, 0, 0, 0]))
    assert not weakly_causal_correlations(4, p).accepted
    for d in enumerate_class(3, PolytopeClass.DAG):
        p = deterministic_point_from_digraph(d)
        assert weakly_causal_correlations(3, p).accepted


def test_monotone_in_each_entry():
    rng = random.Random(31)
    for _ in range(50):
        n = rng.randrange(3, 6)
        dd = n * (n - 1)
        q = [Q(rng.randrange(0, 65), 64) * Q(n - 1, n) for _ in range(dd)]
        if not weak_source_digraph(n, q).accepted:
            continue
        k = rng.randrange(dd)
        q[k] = q[k] * Q(rng.randrange(0, 8), 8)
        assert weak_source_digraph(n, q).accepted


def test_runtime_scales_politely():
    # One pass over the d coordinates: doubling n (4x d) should not blow up
    # by anything near the (n-1)^n cost of the naive scan.
    def cost(n):
        q = [Q(1, 3)] * (n * (n - 1))
        t0 = time.perf_counter()
        for _ in range(5):
            weak_source_digraph(n, q)
        return time.perf_counter() - t0

    small, large = cost(20), cost(40)
    assert large < 50 * max(small, 1e-4)


def test_decision_json():
    d = weak_source_digraph(3, adjacency_vector(make_kefalopoda(3, (1, 2, 0))))
    obj = json.loads(decision_to_json_str(d))
    assert obj == {
        "accepted": False,
        "score": "3",
        "witness": {"kind": "kefalopoda", "f": [1, 2, 0]},
    }
    d = weak_source_digraph(2, [Q(3, 2), Q(0)])
    assert json.loads(decision_to_json_str(d))["witness"] == {
        "kind": "trivial",
        "index": 0,
        "value": "3/2",
    }

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causalgames.correlations import (
    CorrelationVector,
    deterministic_point_from_digraph,
    flip,
    project_abs_diff,
)
from causalgames.digraphs import (
    adjacency_vector,
    all_digraphs,
    arc_pairs,
    is_kefalopoda,
    is_minimally_strong,
    make_cycle,
    make_kefalopoda,
)
from causalgames.inequalities import (
    DigraphInequality,
    cycle_inequality,
    evaluate,
    fence_inequality,
    hamiltonian_inequality,
    inequality_from_json,
    inequality_to_json,
    is_violated,
    kefalopoda_inequality,
    lift,
    min_strong_inequality,
    mobius_inequality,
    relabel,
    rotate,
    test_from_inequality as make_graphical_test,
    trivial_lower,
    trivial_upper,
    twisted_cylinder_inequality,
)

Q = Fraction


def test_bound_examples():
    assert kefalopoda_inequality(3, [1, 2, 0]).bound == 2
    assert mobius_inequality(6, 3).bound == 7
    assert twisted_cylinder_inequality().bound == 6


def test_bound_formulas_up_to_n12():
    for n in range(2, 13):
        for k in range(2, n + 1):
            assert make_graphical_test(cycle_inequality(n, k)).bound == 1 - Q(1, 2 * k)
        for k in range(2, n // 2 + 1):
            assert make_graphical_test(fence_inequality(n, k)).bound == \
                1 - Q(k - 1, 2 * k * k)
        for k in range(3, n // 2 + 1, 2):
            assert make_graphical_test(mobius_inequality(n, k)).bound == \
                1 - Q(k + 1, 12 * k)
        f = [(i + 1) % n for i in range(n)]
        assert make_graphical_test(kefalopoda_inequality(n, f)).bound == 1 - Q(1, 2 * n)
    # Minimally strong: 1 - 1/(2|A|).
    for d in all_digraphs(3):
        if is_minimally_strong(d):
            assert make_graphical_test(min_strong_inequality(d)).bound == \
                1 - Q(1, 2 * d.arc_count)


def test_mobius_bound_below_11_12_and_increasing():
    prev = None
    for k in range(3, 100, 2):
        t = make_graphical_test(mobius_inequality(2 * k, k)).bound if k <= 13 else \
            1 - Q(k + 1, 12 * k)
        assert t < Q(11, 12)
        if prev is not None:
            assert t > prev
        prev = t
    assert make_graphical_test(mobius_inequality(6, 3)).bound == Q(8, 9)


def test_min_strong_rejects_non_minimal():
    from causalgames.digraphs import make_twisted_cylinder

    with pytest.raises(ValueError):
        min_strong_inequality(make_twisted_cylinder())


def test_lift_structure():
    w = (Q(1), Q(0), Q(2), Q(0), Q(0), Q(0))
    ineq = DigraphInequality(w, Q(1))
    lifted = lift(ineq)
    assert lifted.weights == w + tuple(-x for x in w)
    assert lifted.bound == ineq.bound
    q = [Q(1, 3)] * 6
    assert evaluate(lifted, list(q) + [Q(0)] * 6) == evaluate(ineq, q)


def test_lifted_kefalopoda_violated_by_its_deterministic_point():
    f = [1, 2, 0]
    g = make_kefalopoda(3, f)
    lifted = lift(kefalopoda_inequality(3, f))
    p = deterministic_point_from_digraph(g)
    assert evaluate(lifted, p.as_vector()) == 3
    assert is_violated(lifted, p.as_vector())


def test_rotate_involution_and_identity():
    lifted = lift(kefalopoda_inequality(3, [1, 2, 0]))
    assert rotate(lifted, (1,) * 6) == lifted
    phi = (1, -1, 1, -1, -1, 1)
    assert rotate(rotate(lifted, phi), phi) == lifted


def test_rotation_matches_flipping():
    # Rotating the inequality by phi equals flipping the correlation at the
    # negative coordinates.
    rng = random.Random(17)
    n = 3
    pairs = arc_pairs(n)
    lifted = lift(kefalopoda_inequality(n, [2, 0, 1]))
    for _ in range(25):
        phi = tuple(rng.choice((1, -1)) for _ in range(6))
        p = CorrelationVector(
            n,
            tuple(Q(rng.randrange(0, 9), 8) for _ in range(6)),
            tuple(Q(rng.randrange(0, 9), 8) for _ in range(6)),
        )
        flipped = p
        for k, s in enumerate(phi):
            if s == -1:
                flipped = flip(flipped, *pairs[k])
        assert evaluate(rotate(lifted, phi), p.as_vector()) == \
            evaluate(lifted, flipped.as_vector())


def test_evaluate_examples():
    ineq = cycle_inequality(4, 3)
    assert not is_violated(ineq, [Q(0)] * 12)
    value = evaluate(ineq, adjacency_vector(make_cycle(4, 3)))
    assert value == 3 and is_violated(ineq, adjacency_vector(make_cycle(4, 3)))


def test_hamiltonian_is_kefalopoda_and_minimally_strong():
    for n in (3, 4, 5):
        g = hamiltonian_inequality(n).support_digraph(n)
        assert is_kefalopoda(g) is not None
        assert is_minimally_strong(g)


def test_relabel_orbit_preserves_values():
    rng = random.Random(23)
    ineq = kefalopoda_inequality(4, [1, 0, 0, 0])
    pairs = arc_pairs(4)
    for _ in range(20):
        perm = list(range(4))
        rng.shuffle(perm)
        q = [Q(rng.randrange(0, 5), 4) for _ in range(12)]
        moved = relabel(ineq, 4, perm)
        from causalgames.digraphs import arc_index

        q_perm = [Q(0)] * 12
        for k, (i, j) in enumerate(pairs):
            q_perm[arc_index(4, perm[i], perm[j])] = q[k]
        assert evaluate(moved, q_perm) == evaluate(ineq, q)


def test_test_from_inequality_preconditions():
    with pytest.raises(ValueError):
        make_graphical_test(trivial_upper(3, 0, 1))
    with pytest.raises(ValueError):
        make_graphical_test(trivial_lower(3, 0, 1))
    with pytest.raises(ValueError):
        make_graphical_test(DigraphInequality((Q(1, 2),) * 6, Q(1)))


@settings(deadline=None)
@given(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=16),
                min_size=12, max_size=12))
def test_lift_dominated_by_projection(entries):
    # For non-negative weights, the lifted value never exceeds the value of
    # the base inequality on the element-wise |p0 - p1| projection.
    p = CorrelationVector(3, tuple(entries[:6]), tuple(entries[6:]))
    ineq = kefalopoda_inequality(3, [1, 2, 0])
    assert evaluate(lift(ineq), p.as_vector()) <= evaluate(ineq, project_abs_diff(p))


def test_json_round_trip():
    ineq = mobius_inequality(6, 3)
    assert inequality_from_json(inequality_to_json(ineq)) == ineq
    lifted = rotate(lift(kefalopoda_inequality(3, [1, 2, 0])), (1, -1, 1, 1, -1, 1))
    assert inequality_from_json(inequality_to_json(lifted)) == lifted

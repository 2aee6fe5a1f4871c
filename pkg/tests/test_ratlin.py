from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causalgames.ratlin import (
    IncrementalRank,
    affine_rank,
    hull_feasible,
    matrix_rank,
    rat_parse,
    rat_str,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=64
)


def test_parse_examples():
    assert rat_parse("3/4") == Fraction(3, 4)
    assert rat_parse("2/4") == Fraction(1, 2)
    assert rat_parse("-0/7") == Fraction(0)
    assert rat_parse("-2") == Fraction(-2)


@pytest.mark.parametrize("bad", ["1/0", "x", "1.5", "1/2/3", "", "1 /2", "+3"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        rat_parse(bad)


@given(rationals)
def test_string_round_trip(r):
    assert rat_parse(rat_str(r)) == r


def test_affine_rank_examples():
    Q = Fraction
    assert affine_rank([(Q(0), Q(0)), (Q(1), Q(0)), (Q(0), Q(1))]) == 2
    assert affine_rank([(Q(5), Q(5))]) == 0
    assert affine_rank([(Q(0), Q(0)), (Q(1), Q(1)), (Q(2), Q(2))]) == 1


@given(
    st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=6),
    st.lists(rationals, min_size=3, max_size=3),
)
def test_affine_rank_translation_invariant(points, shift):
    shifted = [[a + b for a, b in zip(p, shift)] for p in points]
    assert affine_rank(shifted) == affine_rank(points)


@given(
    st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=2, max_size=6),
    st.randoms(use_true_random=False),
)
def test_affine_rank_permutation_invariant(points, rng):
    shuffled = list(points)
    rng.shuffle(shuffled)
    assert affine_rank(shuffled) == affine_rank(points)


def test_matrix_rank_matches_incremental():
    import random

    rng = random.Random(7)
    for _ in range(50):
        rows = [
            [Fraction(rng.randrange(-3, 4), rng.randrange(1, 4)) for _ in range(4)]
            for _ in range(rng.randrange(1, 6))
        ]
        tracker = IncrementalRank(4)
        for row in rows:
            tracker.add(row)
        assert tracker.rank == matrix_rank(rows)


def test_hull_one_dimensional():
    Q = Fraction
    segment = [(Q(0),), (Q(1),)]
    assert hull_feasible((Q(1, 2),), segment)
    assert not hull_feasible((Q(2),), segment)
    assert hull_feasible((Q(1),), segment)


def test_hull_triangle():
    Q = Fraction
    tri = [(Q(0), Q(0)), (Q(1), Q(0)), (Q(0), Q(1))]
    assert hull_feasible((Q(1, 3), Q(1, 3)), tri)
    assert not hull_feasible((Q(2, 3), Q(2, 3)), tri)


@settings(deadline=None)
@given(
    st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=5),
    st.lists(st.integers(min_value=0, max_value=10), min_size=5, max_size=5),
)
def test_hull_contains_explicit_convex_combinations(generators, raw):
    weights = [Fraction(w) for w in raw[: len(generators)]]
    if sum(weights) == 0:
        weights[0] = Fraction(1)
    total = sum(weights)
    lam = [w / total for w in weights]
    point = [
        sum(l * g[i] for l, g in zip(lam, generators)) for i in range(3)
    ]
    assert hull_feasible(point, generators)

"""Decide weak-causality membership three ways and watch them agree.

The weak polytope is cut out by the trivial bounds plus the (n-1)^n
kefalopoda inequalities.  The fast decision sums per-receiver maxima in
one pass; the brute force checks every inequality; the hull test solves
an exact linear feasibility problem over all source-digraph vertices.
"""

from fractions import Fraction
from random import Random

from causalgames import (
    brute_force_weak_membership,
    hull_membership,
    weak_source_digraph,
)
from causalgames.digraphs import PolytopeClass

n = 4
d = n * (n - 1)
rng = Random(7)

for trial in range(6):
    q = [Fraction(rng.randrange(0, 9), 8) for _ in range(d)]
    if trial % 2 == 0:
        q = [x * Fraction(n - 1, n) for x in q]
    decision = weak_source_digraph(n, q)
    brute = brute_force_weak_membership(n, q)
    hull = hull_membership(q, PolytopeClass.SOURCE, n)
    print(f"score {str(decision.score):>6}  fast={decision.accepted}  "
          f"brute={brute}  hull={hull}")
    assert decision.accepted == brute == hull
    if decision.witness is not None:
        print(f"  witness: {decision.witness}")

"""A fractional vertex showing Hamiltonian-cycle bounds are not enough.

At n=4, relaxing the weak polytope to just the trivial bounds plus all
Hamiltonian-cycle inequalities admits a vertex with half-integer
coordinates.  That vertex satisfies every Hamiltonian bound yet breaks a
2-cycle, a kefalopoda, and a minimally-strong inequality -- each by the
largest possible amount.
"""

from causalgames import evaluate, hamiltonian_vertex_check
from causalgames.digraphs import Digraph
from causalgames.inequalities import (
    cycle_inequality,
    kefalopoda_inequality,
    min_strong_inequality,
)
from causalgames.oracle import hamiltonian_cycle_inequalities
from causalgames.reproduce import hamiltonian_fractional_point

n = 4
q = hamiltonian_fractional_point()
print("point:", [str(x) for x in q])
print("vertex of the Hamiltonian relaxation:", hamiltonian_vertex_check(n, q))

values = [evaluate(ineq, q) for ineq in hamiltonian_cycle_inequalities(n)]
print(f"Hamiltonian-cycle values: max {max(values)} over {len(values)} cycles (bound 3)")

star = Digraph(n, frozenset({(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)}))
for label, ineq in [
    ("2-cycle", cycle_inequality(n, 2)),
    ("kefalopoda f=(1,0,0,0)", kefalopoda_inequality(n, (1, 0, 0, 0))),
    ("minimally-strong star", min_strong_inequality(star)),
]:
    print(f"{label}: value {evaluate(ineq, q)} > bound {ineq.bound}  (maximal violation)")

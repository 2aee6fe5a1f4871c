"""Linear inequalities over digraph and correlation coordinates.

A digraph-space inequality (w, c) states w . q <= c for length-d vectors q.
Lifting turns it into the correlation-space inequality ((w, -w), c), and a
sign vector phi in {-1,+1}^d rotates a lifted inequality coordinate-wise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import digraphs
from .correlations import GraphicalTest
from .digraphs import Digraph, adjacency_vector, arc_index, arc_pairs
from .ratlin import RatVector, parse_vector, rat_parse, rat_str, vector_str

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DigraphInequality:
    """Inequality weights . q <= bound over the d arc coordinates."""

    weights: RatVector
    bound: Fraction

    @property
    def dim(self) -> int:
        return len(self.weights)

    def is_nonnegative(self) -> bool:
        return all(w >= 0 for w in self.weights)

    def is_nontrivial(self) -> bool:
        """Two or more nonzero weights."""
        return sum(1 for w in self.weights if w) >= 2

    def support_digraph(self, n: int) -> Digraph:
        """Digraph of arcs with nonzero weight."""
        if n * (n - 1) != self.dim:
            raise ValueError("n inconsistent with weight dimension")
        pairs = arc_pairs(n)
        return Digraph(n, frozenset(pairs[k] for k, w in enumerate(self.weights) if w))


@dataclass(frozen=True)
class LiftedInequality:
    """Correlation-space inequality ((phi w, -phi w), c) over 2d coordinates."""

    base: DigraphInequality
    phi: Tuple[int, ...]

    def __post_init__(self):
        if len(self.phi) != self.base.dim:
            raise ValueError("sign vector dimension mismatch")
        if any(s not in (-1, 1) for s in self.phi):
            raise ValueError("sign entries must be -1 or +1")

    @property
    def dim(self) -> int:
        return 2 * self.base.dim

    @property
    def bound(self) -> Fraction:
        return self.base.bound

    @property
    def weights(self) -> RatVector:
        signed = tuple(s * w for s, w in zip(self.phi, self.base.weights))
        return signed + tuple(-w for w in signed)


def evaluate(ineq, vector: Sequence[Fraction]) -> Fraction:
    """Exact value weights . vector."""
    w = ineq.weights
    if len(w) != len(vector):
        raise ValueError(f"dimension mismatch: {len(w)} vs {len(vector)}")
    return sum((wi * vi for wi, vi in zip(w, vector)), ZERO)


def is_violated(ineq, vector: Sequence[Fraction]) -> bool:
    """Strict violation; saturation is legal membership."""
    return evaluate(ineq, vector) > ineq.bound


def lift(ineq: DigraphInequality) -> LiftedInequality:
    return LiftedInequality(ineq, (1,) * ineq.dim)


def rotate(lifted: LiftedInequality, phi: Sequence[int]) -> LiftedInequality:
    """Compose the sign vector element-wise; the bound is unchanged."""
    if len(phi) != lifted.base.dim:
        raise ValueError("sign vector dimension mismatch")
    return LiftedInequality(lifted.base, tuple(a * b for a, b in zip(lifted.phi, phi)))


def relabel(ineq: DigraphInequality, n: int, perm: Sequence[int]) -> DigraphInequality:
    """Inequality with weights permuted by the vertex relabeling perm."""
    if n * (n - 1) != ineq.dim:
        raise ValueError("n inconsistent with weight dimension")
    out = [ZERO] * ineq.dim
    for (i, j), w in zip(arc_pairs(n), ineq.weights):
        out[arc_index(n, perm[i], perm[j])] = w
    return DigraphInequality(tuple(out), ineq.bound)


# ---------------------------------------------------------------------------
# Named families

def _adjacency_inequality(d: Digraph, bound) -> DigraphInequality:
    return DigraphInequality(adjacency_vector(d), Fraction(bound))


def cycle_inequality(n: int, k: int) -> DigraphInequality:
    """(alpha(C_k^n), k-1); facet of the DAG polytope."""
    return _adjacency_inequality(digraphs.make_cycle(n, k), k - 1)


def fence_inequality(n: int, k: int) -> DigraphInequality:
    """(alpha(F_k^n), k^2-k+1); facet of the DAG polytope."""
    return _adjacency_inequality(digraphs.make_fence(n, k), k * k - k + 1)


def mobius_inequality(n: int, k: int) -> DigraphInequality:
    """(alpha(M_k^n), (5k-1)/2); facet of the DAG polytope (k odd)."""
    return _adjacency_inequality(digraphs.make_mobius(n, k), Fraction(5 * k - 1, 2))


def kefalopoda_inequality(n: int, f: Sequence[int]) -> DigraphInequality:
    """(alpha(kappa_f), n-1); facet of the source-digraph polytope."""
    return _adjacency_inequality(digraphs.make_kefalopoda(n, f), n - 1)


def min_strong_inequality(d: Digraph) -> DigraphInequality:
    """(alpha(G), |A(G)|-1) for a minimally strong G; not-strong facet."""
    if not digraphs.is_minimally_strong(d):
        raise ValueError("digraph is not minimally strong")
    return _adjacency_inequality(d, d.arc_count - 1)


def twisted_cylinder_inequality() -> DigraphInequality:
    """(alpha(T), 6) for the 4-party twisted cylinder."""
    return _adjacency_inequality(digraphs.make_twisted_cylinder(), 6)


def hamiltonian_inequality(n: int, order: Optional[Sequence[int]] = None) -> DigraphInequality:
    """(alpha(G), n-1) for a Hamiltonian cycle G visiting ``order``."""
    if order is None:
        order = list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of [n]")
    arcs = frozenset((order[i], order[(i + 1) % n]) for i in range(n))
    return _adjacency_inequality(Digraph(n, arcs), n - 1)


def trivial_lower(n: int, i: int, j: int) -> DigraphInequality:
    """(-1_{i,j}, 0): the coordinate is non-negative."""
    w = [ZERO] * (n * (n - 1))
    w[arc_index(n, i, j)] = Fraction(-1)
    return DigraphInequality(tuple(w), ZERO)


def trivial_upper(n: int, i: int, j: int) -> DigraphInequality:
    """(1_{i,j}, 1): the coordinate is at most one."""
    w = [ZERO] * (n * (n - 1))
    w[arc_index(n, i, j)] = ONE
    return DigraphInequality(tuple(w), ONE)


def test_from_inequality(ineq: DigraphInequality) -> GraphicalTest:
    """Graphical test with bound 1/2 + c / (2 |A|) on the support digraph.

    Requires 0/1 weights with at least two arcs.
    """
    if any(w not in (ZERO, ONE) for w in ineq.weights):
        raise ValueError("graphical tests need 0/1 weights")
    if not ineq.is_nontrivial():
        raise ValueError("graphical tests need a nontrivial inequality")
    arcs = sum(1 for w in ineq.weights if w)
    n = _n_from_dim(ineq.dim)
    game = ineq.support_digraph(n)
    return GraphicalTest(game, HALF + ineq.bound / (2 * arcs))


def _n_from_dim(dim: int) -> int:
    n = 2
    while n * (n - 1) < dim:
        n += 1
    if n * (n - 1) != dim:
        raise ValueError(f"{dim} is not of the form n(n-1)")
    return n


# ---------------------------------------------------------------------------
# Serialization

def inequality_to_json(ineq) -> dict:
    if isinstance(ineq, LiftedInequality):
        return {
            "dim": ineq.base.dim,
            "weights": vector_str(ineq.base.weights),
            "bound": rat_str(ineq.bound),
            "lifted": True,
            "phi": list(ineq.phi),
        }
    return {
        "dim": ineq.dim,
        "weights": vector_str(ineq.weights),
        "bound": rat_str(ineq.bound),
        "lifted": False,
    }


def inequality_from_json(obj: dict):
    base = DigraphInequality(parse_vector(obj["weights"]), rat_parse(obj["bound"]))
    if obj.get("lifted"):
        return LiftedInequality(base, tuple(obj.get("phi") or [1] * base.dim))
    return base


def save_inequality(ineq, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(inequality_to_json(ineq), fh)
        fh.write("\n")


def load_inequality(path: str):
    with open(path, encoding="utf-8") as fh:
        return inequality_from_json(json.load(fh))

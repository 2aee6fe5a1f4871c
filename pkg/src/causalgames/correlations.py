"""Single-output correlation vectors and graphical-game evaluation.

A correlation stores only the probabilities p(0|s,r,x); p(1|s,r,x) is the
complement.  Coordinates follow the lexicographic arc order, giving the
2d-dimensional representation (p0, p1) with d = n(n-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .digraphs import Digraph, arc_index, arc_pairs, digraph_from_json, digraph_to_json
from .ratlin import RatVector, parse_vector, rat_parse, rat_str, vector_str

ONE = Fraction(1)
ZERO = Fraction(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CorrelationVector:
    """Probabilities p(0|s,r,x) as a pair of length-d rational vectors."""

    n: int
    p0: RatVector
    p1: RatVector

    def __post_init__(self):
        d = self.n * (self.n - 1)
        if len(self.p0) != d or len(self.p1) != d:
            raise ValueError(f"expected vectors of length {d}")
        for x in (*self.p0, *self.p1):
            if not ZERO <= x <= ONE:
                raise ValueError(f"probability out of range: {x}")

    @property
    def d(self) -> int:
        return self.n * (self.n - 1)

    def entry(self, s: int, r: int, x: int) -> Fraction:
        """p(0|s,r,x)."""
        vec = self.p0 if x == 0 else self.p1
        return vec[arc_index(self.n, s, r)]

    def as_vector(self) -> RatVector:
        """The flat 2d-dimensional vector (p0, p1)."""
        return self.p0 + self.p1

    def is_deterministic(self) -> bool:
        return all(x in (ZERO, ONE) for x in self.p0 + self.p1)


@dataclass(frozen=True)
class GraphicalTest:
    """A game digraph together with a winning-probability bound."""

    game: Digraph
    bound: Fraction

    def __post_init__(self):
        if not self.game.arcs:
            raise ValueError("game must have at least one arc")
        if not ZERO <= self.bound <= ONE:
            raise ValueError(f"bound out of range: {self.bound}")


@dataclass(frozen=True)
class TestResult:
    passed: bool
    win: Fraction
    margin: Fraction  # win - bound; positive means violation


def signaling_digraph(p: CorrelationVector) -> Digraph:
    """Digraph with an arc where p(0|i,j,0) and p(0|i,j,1) differ.

    Defined for deterministic (0/1) correlations only.
    """
    if not p.is_deterministic():
        raise ValueError("signaling digraph requires a 0/1 correlation vector")
    pairs = arc_pairs(p.n)
    arcs = frozenset(pairs[k] for k in range(p.d) if p.p0[k] != p.p1[k])
    return Digraph(p.n, arcs)


def project_abs_diff(p: CorrelationVector) -> RatVector:
    """Element-wise |p0 - p1|, the projection into digraph space."""
    return tuple(abs(a - b) for a, b in zip(p.p0, p.p1))


def flip(p: CorrelationVector, s: int, r: int) -> CorrelationVector:
    """Complement both entries at (s, r): the receiver negates its output."""
    k = arc_index(p.n, s, r)
    p0 = list(p.p0)
    p1 = list(p.p1)
    p0[k] = ONE - p0[k]
    p1[k] = ONE - p1[k]
    return CorrelationVector(p.n, tuple(p0), tuple(p1))


def deterministic_point_from_digraph(d: Digraph) -> CorrelationVector:
    """The canonical deterministic point signaling exactly along d's arcs.

    p(0|s,r,x) = 1-x on arcs of d and 1 elsewhere: every receiver copies
    the sender's bit where an arc is present and outputs 0 otherwise.
    """
    dd = d.n * (d.n - 1)
    p0 = [ONE] * dd
    p1 = [ONE] * dd
    for i, j in d.arcs:
        p1[arc_index(d.n, i, j)] = ZERO
    return CorrelationVector(d.n, tuple(p0), tuple(p1))


def correlation_from_masks(n: int, m0: int, m1: int) -> CorrelationVector:
    """Deterministic correlation from two d-bit masks (bit k = entry k)."""
    d = n * (n - 1)
    p0 = tuple(ONE if m0 >> k & 1 else ZERO for k in range(d))
    p1 = tuple(ONE if m1 >> k & 1 else ZERO for k in range(d))
    return CorrelationVector(n, p0, p1)


def win_probability(p: CorrelationVector, g: Digraph) -> Fraction:
    """Chance the receiver outputs the sender's uniform bit on a uniform arc."""
    if not g.arcs:
        raise ValueError("game must have at least one arc")
    if g.n != p.n:
        raise ValueError("game and correlations disagree on n")
    total = ZERO
    for i, j in g.arcs:
        k = arc_index(g.n, i, j)
        total += p.p0[k] + (ONE - p.p1[k])
    return total / (2 * len(g.arcs))


def run_test(p: CorrelationVector, test: GraphicalTest) -> TestResult:
    """Pass iff the winning probability does not exceed the bound.

    Saturation counts as a pass.
    """
    win = win_probability(p, test.game)
    return TestResult(passed=win <= test.bound, win=win, margin=win - test.bound)


# ---------------------------------------------------------------------------
# Serialization

def correlation_to_json(p: CorrelationVector) -> dict:
    return {"n": p.n, "p0": vector_str(p.p0), "p1": vector_str(p.p1)}


def correlation_from_json(obj: dict) -> CorrelationVector:
    return CorrelationVector(int(obj["n"]), parse_vector(obj["p0"]), parse_vector(obj["p1"]))


def test_to_json(test: GraphicalTest) -> dict:
    return {"game": digraph_to_json(test.game), "bound": rat_str(test.bound)}


def test_from_json(obj: dict) -> GraphicalTest:
    return GraphicalTest(digraph_from_json(obj["game"]), rat_parse(obj["bound"]))


def save_correlation(p: CorrelationVector, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(correlation_to_json(p), fh)
        fh.write("\n")


def load_correlation(path: str) -> CorrelationVector:
    with open(path, encoding="utf-8") as fh:
        return correlation_from_json(json.load(fh))

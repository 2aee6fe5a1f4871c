"""Polynomial-time membership tests for weakly causal vectors and correlations.

The digraph-space test interprets the input as arc weights: the best
kefalopoda overlap decomposes as the sum over receivers of the maximum
incoming weight, so one pass over the d coordinates decides membership.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .correlations import CorrelationVector, project_abs_diff
from .digraphs import arc_index, arc_pairs
from .ratlin import rat_parse, rat_str

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TrivialWitness:
    """A coordinate outside [0, 1]."""

    index: int
    value: Fraction


@dataclass(frozen=True)
class KefalopodaWitness:
    """The predecessor map maximizing the kefalopoda overlap."""

    f: tuple


Witness = Union[TrivialWitness, KefalopodaWitness]


@dataclass(frozen=True)
class Decision:
    accepted: bool
    score: Fraction
    witness: Optional[Witness]

    def to_json(self) -> dict:
        w: Optional[dict] = None
        if isinstance(self.witness, TrivialWitness):
            w = {"kind": "trivial", "index": self.witness.index, "value": rat_str(self.witness.value)}
        elif isinstance(self.witness, KefalopodaWitness):
            w = {"kind": "kefalopoda", "f": list(self.witness.f)}
        return {"accepted": self.accepted, "score": rat_str(self.score), "witness": w}


def weak_source_digraph(n: int, q: Sequence[Fraction]) -> Decision:
    """Decide membership in the weak source-digraph polytope.

    Rejects on the first out-of-range coordinate (lex order).  Otherwise
    accumulates, per receiver, the maximum incoming weight; the input is a
    member iff that total is at most n-1.  Arg-max ties go to the smallest
    sender index.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    d = n * (n - 1)
    q = [Fraction(x) for x in q]
    if len(q) != d:
        raise ValueError(f"expected a vector of dimension {d}")
    for k, x in enumerate(q):
        if x < 0 or x > 1:
            return Decision(accepted=False, score=ZERO, witness=TrivialWitness(k, x))
    score = ZERO
    argmax: List[int] = []
    for r in range(n):
        best_s = None
        best = None
        for s in range(n):
            if s == r:
                continue
            w = q[arc_index(n, s, r)]
            if best is None or w > best:
                best, best_s = w, s
        score += best
        argmax.append(best_s)
    if score <= n - 1:
        return Decision(accepted=True, score=score, witness=None)
    return Decision(accepted=False, score=score, witness=KefalopodaWitness(tuple(argmax)))


def weakly_causal_correlations(n: int, p: CorrelationVector) -> Decision:
    """Project to |p0 - p1| and decide in digraph space."""
    if p.n != n:
        raise ValueError("correlation vector disagrees on n")
    return weak_source_digraph(n, project_abs_diff(p))


def decision_to_json_str(decision: Decision) -> str:
    return json.dumps(decision.to_json())

"""Desk-scale brute-force ground truth for validity, facets, and membership.

Everything in this module re-derives results by exhaustive enumeration: it
is deliberately independent of the closed-form bounds and the fast
membership algorithms, so the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import lcm
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .correlations import CorrelationVector, correlation_from_masks
from .digraphs import (
    Digraph,
    PolytopeClass,
    adjacency_vector,
    arc_index,
    enumerate_class_masks,
    from_mask,
    in_class,
)
from .inequalities import DigraphInequality, LiftedInequality, hamiltonian_inequality
from .ratlin import IncrementalRank, RatVector, hull_feasible, matrix_rank

ZERO = Fraction(0)
ONE = Fraction(1)

MAX_CORRELATION_SCAN_N = 3   # full {0,1}^(2d) scans
MAX_WEAK_BRUTE_N = 8         # (n-1)^n kefalopoda inequalities
MAX_HAMILTONIAN_N = 5        # (n-1)! Hamiltonian-cycle inequalities
MAX_HULL_CORRELATION_N = 3
MAX_HULL_DIGRAPH_N = 4


@dataclass(frozen=True)
class FacetCertificate:
    """Brute-force evidence that an inequality is (or is not) facet-defining."""

    inequality: Union[DigraphInequality, LiftedInequality]
    polytope_class: PolytopeClass
    n: int
    ambient_dim: int
    valid: bool
    max_value: Fraction
    saturating_count: int
    affine_rank_of_saturators: int

    @property
    def is_facet(self) -> bool:
        return self.valid and self.affine_rank_of_saturators == self.ambient_dim - 1

    def to_json(self) -> dict:
        from .inequalities import inequality_to_json
        from .ratlin import rat_str

        return {
            "inequality": inequality_to_json(self.inequality),
            "class": self.polytope_class.value,
            "n": self.n,
            "ambient_dim": self.ambient_dim,
            "valid": self.valid,
            "max_value": rat_str(self.max_value),
            "saturating_count": self.saturating_count,
            "affine_rank_of_saturators": self.affine_rank_of_saturators,
            "is_facet": self.is_facet,
        }


# ---------------------------------------------------------------------------
# Extremal-point enumeration

def extremal_masks(n: int, cls: PolytopeClass, scan: bool = False) -> Iterator[Tuple[int, int]]:
    """Mask pairs (m0, m1) of all 0/1 extremal correlations of the class.

    The default route constructs points as (m0, m0 xor alpha(D)) over class
    digraphs D; ``scan=True`` instead filters the full {0,1}^(2d) cube by
    the class predicate on the signaling digraph (independent cross-check,
    capped at n <= 3).
    """
    d = n * (n - 1)
    if scan:
        if n > MAX_CORRELATION_SCAN_N:
            raise ValueError(f"full correlation scan capped at n={MAX_CORRELATION_SCAN_N}")
        for m0 in range(1 << d):
            for m1 in range(1 << d):
                if in_class(from_mask(n, m0 ^ m1), cls):
                    yield (m0, m1)
        return
    for dmask in enumerate_class_masks(n, cls):
        for m0 in range(1 << d):
            yield (m0, m0 ^ dmask)


def enumerate_extremal_correlations(
    n: int, cls: PolytopeClass, scan: bool = False
) -> Iterator[CorrelationVector]:
    for m0, m1 in extremal_masks(n, cls, scan=scan):
        yield correlation_from_masks(n, m0, m1)


# ---------------------------------------------------------------------------
# Validity, tightness, and facet certificates over digraph space

def _mask_value(support: Sequence[Tuple[int, Fraction]], mask: int) -> Fraction:
    return sum((w for k, w in support if mask >> k & 1), ZERO)


def _support(weights: Sequence[Fraction]) -> List[Tuple[int, Fraction]]:
    return [(k, w) for k, w in enumerate(weights) if w]


def verify_facet(ineq: DigraphInequality, cls: PolytopeClass, n: int) -> FacetCertificate:
    """Stream all class digraphs; check validity and the saturating face rank.

    The saturating points are fed to an incremental rank tracker and skipped
    once the rank reaches the maximum d-1 a valid face can have; validity
    and the saturation count still use the full stream.
    """
    d = n * (n - 1)
    if len(ineq.weights) != d:
        raise ValueError("inequality dimension inconsistent with n")
    support = _support(ineq.weights)
    zeros_on_support = all(w in (ZERO, ONE) for _, w in support)
    smask = 0
    for k, _ in support:
        smask |= 1 << k
    bound = ineq.bound
    valid = True
    max_value: Optional[Fraction] = None
    sat_count = 0
    base_mask: Optional[int] = None
    tracker = IncrementalRank(d)
    for mask in enumerate_class_masks(n, cls):
        if zeros_on_support:
            value = Fraction((mask & smask).bit_count())
        else:
            value = _mask_value(support, mask)
        if max_value is None or value > max_value:
            max_value = value
        if value > bound:
            valid = False
        elif value == bound:
            sat_count += 1
            if base_mask is None:
                base_mask = mask
            elif tracker.rank < d - 1:
                row = [Fraction((mask >> k & 1) - (base_mask >> k & 1)) for k in range(d)]
                tracker.add(row)
    rank = tracker.rank if base_mask is not None else 0
    return FacetCertificate(
        inequality=ineq,
        polytope_class=cls,
        n=n,
        ambient_dim=d,
        valid=valid,
        max_value=max_value if max_value is not None else ZERO,
        saturating_count=sat_count,
        affine_rank_of_saturators=rank,
    )


def verify_validity(ineq: DigraphInequality, cls: PolytopeClass, n: int) -> bool:
    """True iff no class digraph violates the inequality."""
    support = _support(ineq.weights)
    bound = ineq.bound
    for mask in enumerate_class_masks(n, cls):
        if _mask_value(support, mask) > bound:
            return False
    return True


def max_overlap(cls: PolytopeClass, n: int, g: Digraph) -> int:
    """Best deterministic score: max over class members D of alpha(D).alpha(G)."""
    gmask = g.mask()
    best = 0
    full = gmask.bit_count()
    for mask in enumerate_class_masks(n, cls):
        v = (mask & gmask).bit_count()
        if v > best:
            best = v
            if best == full:
                break
    return best


def verify_lifted_facet(lifted: LiftedInequality, cls: PolytopeClass, n: int) -> FacetCertificate:
    """Facet certificate over the enumerated 2d-dimensional extremal set.

    The base inequality must be non-negative and nontrivial (the lifting
    construction is stated for exactly those).
    """
    if not lifted.base.is_nonnegative() or not lifted.base.is_nontrivial():
        raise ValueError("lifting requires a non-negative, nontrivial base inequality")
    d = n * (n - 1)
    if lifted.base.dim != d:
        raise ValueError("inequality dimension inconsistent with n")
    signed = [(k, s * w) for k, (s, w) in enumerate(zip(lifted.phi, lifted.base.weights)) if w]
    bound = lifted.bound
    valid = True
    max_value: Optional[Fraction] = None
    sat_count = 0
    base_pair: Optional[Tuple[int, int]] = None
    tracker = IncrementalRank(2 * d)
    for m0, m1 in extremal_masks(n, cls):
        value = sum((w * ((m0 >> k & 1) - (m1 >> k & 1)) for k, w in signed), ZERO)
        if max_value is None or value > max_value:
            max_value = value
        if value > bound:
            valid = False
        elif value == bound:
            sat_count += 1
            if base_pair is None:
                base_pair = (m0, m1)
            elif tracker.rank < 2 * d - 1:
                b0, b1 = base_pair
                row = [Fraction((m0 >> k & 1) - (b0 >> k & 1)) for k in range(d)]
                row += [Fraction((m1 >> k & 1) - (b1 >> k & 1)) for k in range(d)]
                tracker.add(row)
    rank = tracker.rank if base_pair is not None else 0
    return FacetCertificate(
        inequality=lifted,
        polytope_class=cls,
        n=n,
        ambient_dim=2 * d,
        valid=valid,
        max_value=max_value if max_value is not None else ZERO,
        saturating_count=sat_count,
        affine_rank_of_saturators=rank,
    )


# ---------------------------------------------------------------------------
# Weak membership by exhaustive kefalopoda scan

def brute_force_weak_membership(n: int, q: Sequence[Fraction]) -> bool:
    """Check the trivial bounds and every kefalopoda inequality directly.

    Scans all (n-1)^n fixed-point-free predecessor maps; independent of the
    per-vertex-maximum shortcut used by the fast decision algorithm.
    """
    if n > MAX_WEAK_BRUTE_N:
        raise ValueError(f"brute-force weak membership capped at n={MAX_WEAK_BRUTE_N}")
    d = n * (n - 1)
    q = [Fraction(x) for x in q]
    if len(q) != d:
        raise ValueError(f"expected a vector of dimension {d}")
    if any(x < 0 or x > 1 for x in q):
        return False
    bound = n - 1
    # Per receiver r, the weights of its candidate in-arcs s -> r.
    columns = [[q[arc_index(n, s, r)] for s in range(n) if s != r] for r in range(n)]
    scale = lcm(*(x.denominator for x in q)) if q else 1
    if scale.bit_length() + n.bit_length() < 60:
        cols = [np.array([int(x * scale) for x in col], dtype=np.int64) for col in columns]
        choices = np.stack(
            np.meshgrid(*[np.arange(n - 1)] * n, indexing="ij"), axis=-1
        ).reshape(-1, n)
        totals = sum(cols[r][choices[:, r]] for r in range(n))
        return int(totals.max()) <= bound * scale
    best = max(sum(combo) for combo in product(*columns))
    return best <= bound


# ---------------------------------------------------------------------------
# Hull membership and the Hamiltonian-cycle polytope

@lru_cache(maxsize=None)
def _correlation_generators(n: int, cls: PolytopeClass) -> Tuple[RatVector, ...]:
    return tuple(
        correlation_from_masks(n, m0, m1).as_vector() for m0, m1 in extremal_masks(n, cls)
    )


@lru_cache(maxsize=None)
def _digraph_generators(n: int, cls: PolytopeClass) -> Tuple[RatVector, ...]:
    return tuple(adjacency_vector(from_mask(n, m)) for m in enumerate_class_masks(n, cls))


def hull_membership(
    point: Union[CorrelationVector, Sequence[Fraction]], cls: PolytopeClass, n: int
) -> bool:
    """Exact membership in the convex hull of the class's extremal points.

    Correlation vectors are decided in 2d dimensions (n <= 3); plain
    vectors are treated as digraph-space points in d dimensions (n <= 4).
    """
    if isinstance(point, CorrelationVector):
        if n > MAX_HULL_CORRELATION_N:
            raise ValueError(f"correlation-space hull capped at n={MAX_HULL_CORRELATION_N}")
        vec = point.as_vector()
        generators = _correlation_generators(n, cls)
    else:
        if n > MAX_HULL_DIGRAPH_N:
            raise ValueError(f"digraph-space hull capped at n={MAX_HULL_DIGRAPH_N}")
        vec = tuple(Fraction(x) for x in point)
        generators = _digraph_generators(n, cls)
    if vec in generators:
        return True
    return hull_feasible(vec, generators)


def hamiltonian_cycle_inequalities(n: int) -> List[DigraphInequality]:
    """All (n-1)! Hamiltonian-cycle inequalities, vertex 0 fixed first."""
    return [hamiltonian_inequality(n, (0, *rest)) for rest in permutations(range(1, n))]


def hamiltonian_vertex_check(n: int, q: Sequence[Fraction]) -> bool:
    """Is q a vertex of the polytope cut out by trivial + Hamiltonian bounds?

    Requires q to satisfy every inequality and the active constraints to
    have full rank d.
    """
    if n > MAX_HAMILTONIAN_N:
        raise ValueError(f"Hamiltonian vertex check capped at n={MAX_HAMILTONIAN_N}")
    d = n * (n - 1)
    q = [Fraction(x) for x in q]
    if len(q) != d:
        raise ValueError(f"expected a vector of dimension {d}")
    if any(x < 0 or x > 1 for x in q):
        return False
    active_rows: List[List[Fraction]] = []
    for k, x in enumerate(q):
        if x == 0 or x == 1:
            row = [ZERO] * d
            row[k] = ONE
            active_rows.append(row)
    for ineq in hamiltonian_cycle_inequalities(n):
        value = sum((w * x for w, x in zip(ineq.weights, q)), ZERO)
        if value > ineq.bound:
            return False
        if value == ineq.bound:
            active_rows.append(list(ineq.weights))
    if not active_rows:
        return False
    return matrix_rank(active_rows) == d

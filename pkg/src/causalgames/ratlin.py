"""Exact rational arithmetic kernels: parsing, rank, and hull feasibility.

Everything here is computed over arbitrary-precision rationals; no floating
point enters at any stage, so results are bit-identical across runs and
platforms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from gmpy2 import mpq

Rational = Fraction
RatVector = Tuple[Fraction, ...]

_RAT_RE = re.compile(r"-?\d+(/\d+)?\Z")


def rat_parse(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` into a canonical rational.

    Raises ValueError on malformed input or a zero denominator.
    """
    if not isinstance(text, str) or not _RAT_RE.match(text):
        raise ValueError(f"malformed rational: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def rat_str(r: Fraction) -> str:
    """Serialize a rational; integers omit the '/1'."""
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_vector(entries: Sequence[str]) -> RatVector:
    return tuple(rat_parse(e) for e in entries)


def vector_str(v: Iterable[Fraction]) -> List[str]:
    return [rat_str(x) for x in v]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix via fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("rows of unequal length")
    m = _integer_rows(rows)
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, nrows):
            ri = m[i]
            if ri[col]:
                f = ri[col]
                for j in range(col + 1, ncols):
                    ri[j] = (pr[col] * ri[j] - f * pr[j]) // prev
                ri[col] = 0
        prev = pr[col]
        rank += 1
        if rank == nrows:
            break
    return rank


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of a nonempty set of rational points."""
    if not points:
        raise ValueError("empty point set")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise ValueError("points of mixed dimension")
    base = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0
    return matrix_rank(diffs)


class IncrementalRank:
    """Running rank of a growing set of rational rows.

    Keeps an echelon basis; feeding a row costs O(rank * dim) exact
    operations and never changes earlier results.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._basis: List[List[Fraction]] = []
        self._pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._basis)

    def add(self, row: Sequence[Fraction]) -> bool:
        """Reduce a row against the basis; return True if rank grew."""
        r = [Fraction(x) for x in row]
        for piv, b in zip(self._pivots, self._basis):
            if r[piv]:
                f = r[piv]
                r = [a - f * c for a, c in zip(r, b)]
        piv = next((j for j, x in enumerate(r) if x), None)
        if piv is None:
            return False
        inv = r[piv]
        self._basis.append([x / inv for x in r])
        self._pivots.append(piv)
        return True


def hull_feasible(point: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]) -> bool:
    """Exact convex-hull membership: is ``point`` a convex combination?

    Decides feasibility of {lambda >= 0, sum lambda = 1, G lambda = point}
    with an exact phase-one simplex.  Pivots follow Dantzig's rule and fall
    back to Bland's rule after a degenerate stall, which guarantees
    termination.  The tableau runs on gmpy2 rationals for speed; the
    arithmetic stays exact.
    """
    dim = len(point)
    if any(len(g) != dim for g in generators):
        raise ValueError("generator dimension mismatch")
    if not generators:
        return False
    k = len(generators)
    nrows = dim + 1
    zero = mpq(0)
    # Equality rows: one per coordinate plus the convexity row, rhs last.
    rows = []
    for i in range(dim):
        rows.append([mpq(Fraction(g[i])) for g in generators] + [mpq(Fraction(point[i]))])
    rows.append([mpq(1)] * k + [mpq(1)])
    for row in rows:
        if row[-1] < 0:
            for j in range(k + 1):
                row[j] = -row[j]
    # Artificial basis: minimize the sum of artificials; reduced costs for
    # the generator columns are the column sums of the constraint rows.
    basis = list(range(k, k + nrows))
    obj = [sum(row[j] for row in rows) for j in range(k)] + [zero] * nrows
    obj.append(sum(row[-1] for row in rows))
    for i, row in enumerate(rows):
        art = [zero] * nrows
        art[i] = mpq(1)
        row[-1:-1] = art
    ncols = k + nrows
    stall = 0
    stall_limit = 4 * nrows
    while True:
        if stall < stall_limit:
            enter = None
            best_cost = 0
            for j in range(ncols):
                if obj[j] > best_cost:
                    best_cost = obj[j]
                    enter = j
        else:
            enter = next((j for j in range(ncols) if obj[j] > 0), None)
        if enter is None:
            break
        # Bland ratio test: ties broken by the smallest basis variable.
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # Unbounded phase-one cannot happen (objective bounded below by 0).
            raise RuntimeError("phase-one simplex unbounded")
        stall = stall + 1 if best[0] == 0 else 0
        r = best[1]
        prow = rows[r]
        pval = prow[enter]
        if pval != 1:
            rows[r] = prow = [x / pval for x in prow]
        for i, row in enumerate(rows):
            if i != r and row[enter]:
                f = row[enter]
                rows[i] = [x - f * y for x, y in zip(row, prow)]
        f = obj[enter]
        if f:
            obj = [x - f * y for x, y in zip(obj, prow)]
        basis[r] = enter
    return obj[-1] == 0

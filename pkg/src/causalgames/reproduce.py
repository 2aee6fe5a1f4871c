"""End-to-end reproduction checks for the headline results.

Each check re-derives a published number or structural fact from scratch
and compares it against the closed-form value frozen here.  The checks are
shared between the ``reproduce`` CLI subcommand and the acceptance test
suite; all of them are deterministic (randomized checks use the fixed
seeds below).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from random import Random
from typing import Callable, List, Optional, Sequence, Tuple

from .correlations import CorrelationVector, signaling_digraph
from .decide import weak_source_digraph, weakly_causal_correlations
from .digraphs import (
    Digraph,
    PolytopeClass,
    all_digraphs,
    arc_index,
    dag_masks,
    enumerate_class_masks,
    fixed_point_free_maps,
    is_minimally_strong,
    make_mobius,
    make_twisted_cylinder,
)
from .inequalities import (
    DigraphInequality,
    LiftedInequality,
    cycle_inequality,
    evaluate,
    fence_inequality,
    kefalopoda_inequality,
    lift,
    min_strong_inequality,
    mobius_inequality,
    rotate,
    test_from_inequality,
    trivial_lower,
    trivial_upper,
    twisted_cylinder_inequality,
)
from .oracle import (
    FacetCertificate,
    brute_force_weak_membership,
    enumerate_extremal_correlations,
    extremal_masks,
    hamiltonian_cycle_inequalities,
    hamiltonian_vertex_check,
    hull_membership,
    verify_facet,
    verify_lifted_facet,
)
from .ratlin import rat_str

ZERO = Fraction(0)
ONE = Fraction(1)

ORACLE_SEED = 1093
PROJECTION_SEED = 2741
ROTATION_SEED = 3517
HULL_SEED = 4663

DAG_COUNT_N6 = 3_781_503


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _result(name: str, failures: List[str], detail_ok: str, t0: float) -> CheckResult:
    if failures:
        detail = "; ".join(failures[:5])
        if len(failures) > 5:
            detail += f"; and {len(failures) - 5} more"
        return CheckResult(name, False, detail, time.perf_counter() - t0)
    return CheckResult(name, True, detail_ok, time.perf_counter() - t0)


def _minimally_strong_digraphs(n: int) -> List[Digraph]:
    return [d for d in all_digraphs(n) if is_minimally_strong(d)]


# ---------------------------------------------------------------------------
# 1. Bound table

def check_bound_table() -> CheckResult:
    """Every named test bound matches its closed form."""
    t0 = time.perf_counter()
    failures: List[str] = []

    def expect(label: str, got, want) -> None:
        if got != want:
            failures.append(f"{label}: got {got}, want {want}")

    expect("2-cycle bound", test_from_inequality(cycle_inequality(2, 2)).bound, Fraction(3, 4))
    for n, want in ((3, Fraction(5, 6)), (4, Fraction(7, 8))):
        bounds = {
            test_from_inequality(kefalopoda_inequality(n, f)).bound
            for f in fixed_point_free_maps(n)
        }
        expect(f"kefalopoda bounds n={n}", bounds, {want})
    for n, want in ((3, {Fraction(5, 6), Fraction(7, 8)}),
                    (4, {Fraction(7, 8), Fraction(9, 10), Fraction(11, 12)})):
        bounds = {
            test_from_inequality(min_strong_inequality(d)).bound
            for d in _minimally_strong_digraphs(n)
        }
        expect(f"minimally-strong bounds n={n}", bounds, want)
    expect("twisted-cylinder bound",
           test_from_inequality(twisted_cylinder_inequality()).bound, Fraction(7, 8))

    prev: Optional[Fraction] = None
    for k in range(3, 100, 2):
        arcs = make_mobius(2 * k, k).arc_count
        bound = Fraction(1, 2) + Fraction(5 * k - 1, 2) / (2 * arcs)
        expect(f"moebius closed form k={k}", bound, Fraction(11 * k - 1, 12 * k))
        if not bound < Fraction(11, 12):
            failures.append(f"moebius bound k={k} not below 11/12: {bound}")
        if prev is not None and not bound > prev:
            failures.append(f"moebius bounds not increasing at k={k}")
        prev = bound
        if k <= 13:
            expect(f"moebius via inequality k={k}",
                   test_from_inequality(mobius_inequality(2 * k, k)).bound, bound)

    return _result("bound-table", failures,
                   "cycle/kefalopoda/minimally-strong/twisted-cylinder/moebius bounds all exact",
                   t0)


# ---------------------------------------------------------------------------
# 2 + 3. Facet certificates and tightness (shared enumeration work)

@lru_cache(maxsize=None)
def _certificate_suite() -> Tuple[Tuple[str, FacetCertificate, bool], ...]:
    """(label, certificate, expected_facet) for every inequality under test."""
    suite: List[Tuple[str, FacetCertificate, bool]] = []
    src, ns, dag = PolytopeClass.SOURCE, PolytopeClass.NOT_STRONG, PolytopeClass.DAG

    for n in (3, 4):
        for f in fixed_point_free_maps(n):
            cert = verify_facet(kefalopoda_inequality(n, f), src, n)
            suite.append((f"kefalopoda n={n} f={f}", cert, True))

    for cls in (src, ns):
        for i, j in ((i, j) for i in range(3) for j in range(3) if i != j):
            suite.append((f"trivial lower ({i},{j}) {cls.value} n=3",
                          verify_facet(trivial_lower(3, i, j), cls, 3), True))
            suite.append((f"trivial upper ({i},{j}) {cls.value} n=3",
                          verify_facet(trivial_upper(3, i, j), cls, 3), True))
        # Negative control: the upper bound is valid but not a facet at n=2.
        suite.append((f"trivial upper (0,1) {cls.value} n=2",
                      verify_facet(trivial_upper(2, 0, 1), cls, 2), False))

    for n in (3, 4):
        for d in _minimally_strong_digraphs(n):
            cert = verify_facet(min_strong_inequality(d), ns, n)
            suite.append((f"minimally-strong n={n} arcs={sorted(d.arcs)}", cert, True))

    suite.append(("twisted cylinder n=4",
                  verify_facet(twisted_cylinder_inequality(), ns, 4), True))

    for n in (3, 4, 5):
        for k in range(2, n + 1):
            suite.append((f"{k}-cycle n={n}",
                          verify_facet(cycle_inequality(n, k), dag, n), True))
    suite.append(("2-fence n=4", verify_facet(fence_inequality(4, 2), dag, 4), True))
    suite.append(("3-moebius n=6", verify_facet(mobius_inequality(6, 3), dag, 6), True))
    return tuple(suite)


def check_facet_certificates() -> CheckResult:
    """All listed inequalities certify as facets (negative controls do not)."""
    t0 = time.perf_counter()
    failures: List[str] = []
    n6 = sum(1 for _ in dag_masks(6))
    if n6 != DAG_COUNT_N6:
        failures.append(f"DAG count at n=6: got {n6}, want {DAG_COUNT_N6}")
    suite = _certificate_suite()
    for label, cert, expected in suite:
        if not cert.valid and expected:
            failures.append(f"{label}: inequality not valid")
        if cert.is_facet != expected:
            failures.append(
                f"{label}: is_facet={cert.is_facet} (rank {cert.affine_rank_of_saturators}"
                f"/{cert.ambient_dim - 1}), expected {expected}"
            )
    detail = f"{len(suite)} certificates, DAG count at n=6 confirmed {DAG_COUNT_N6}"
    return _result("facet-certificates", failures, detail, t0)


def check_tightness() -> CheckResult:
    """The maximum deterministic value of each certified inequality equals its bound."""
    t0 = time.perf_counter()
    failures: List[str] = []
    suite = _certificate_suite()
    for label, cert, expected in suite:
        if not expected:
            continue
        if cert.max_value != cert.inequality.bound:
            failures.append(
                f"{label}: max {cert.max_value} != bound {rat_str(cert.inequality.bound)}"
            )
    return _result("tightness", failures,
                   f"max deterministic value equals the bound for all "
                   f"{sum(1 for _, _, e in suite if e)} facets", t0)


# ---------------------------------------------------------------------------
# 4. Fast decision vs. exhaustive kefalopoda scan

def _random_vector(rng: Random, d: int, den: int = 64) -> List[Fraction]:
    return [Fraction(rng.randrange(0, den + 1), den) for _ in range(d)]


def oracle_sample_vectors(n: int, count: int, seed: int) -> List[List[Fraction]]:
    """In-range, out-of-range, and boundary (score exactly n-1) vectors."""
    rng = Random(seed)
    d = n * (n - 1)
    out: List[List[Fraction]] = []
    n_out = count // 10
    n_boundary = count // 10
    n_plain = count - n_out - n_boundary
    for t in range(n_plain):
        q = _random_vector(rng, d)
        if t % 4 == 0:
            # Shrink towards acceptance so both verdicts are exercised.
            q = [x * Fraction(n - 1, n) for x in q]
        out.append(q)
    for _ in range(n_out):
        q = _random_vector(rng, d)
        k = rng.randrange(d)
        q[k] = Fraction(65 + rng.randrange(16), 64) if rng.random() < 0.5 \
            else Fraction(-1 - rng.randrange(16), 64)
        out.append(q)
    for _ in range(n_boundary):
        # Per receiver, one in-arc carries (n-1)/n and the rest stay below it,
        # so the per-receiver maxima sum to exactly n-1.
        q = [ZERO] * d
        top = Fraction(n - 1, n)
        for r in range(n):
            senders = [s for s in range(n) if s != r]
            best = rng.choice(senders)
            for s in senders:
                q[arc_index(n, s, r)] = top if s == best \
                    else Fraction(rng.randrange(0, n), n)
        out.append(q)
    return out


def check_oracle_equivalence() -> CheckResult:
    """The one-pass decision agrees with the exhaustive (n-1)^n scan."""
    t0 = time.perf_counter()
    failures: List[str] = []
    total = 0
    for n in (3, 4, 5, 6):
        for q in oracle_sample_vectors(n, 1000, ORACLE_SEED + n):
            total += 1
            fast = weak_source_digraph(n, q).accepted
            brute = brute_force_weak_membership(n, q)
            if fast != brute:
                failures.append(f"n={n}: fast={fast}, brute={brute}, q={[rat_str(x) for x in q]}")
    return _result("oracle-equivalence", failures,
                   f"{total} vectors across n=3..6, including out-of-range and boundary cases",
                   t0)


# ---------------------------------------------------------------------------
# 5. Projection lemma at n=3

@lru_cache(maxsize=None)
def _rotated_kefalopoda_suite(n: int) -> Tuple[LiftedInequality, ...]:
    """Every rotation of every lifted kefalopoda inequality on [n]."""
    d = n * (n - 1)
    out = []
    for f in fixed_point_free_maps(n):
        base = lift(kefalopoda_inequality(n, f))
        for signs in product((1, -1), repeat=d):
            out.append(rotate(base, signs))
    return tuple(out)


def check_projection_lemma() -> CheckResult:
    """Projected membership equals direct checking of every rotated facet."""
    t0 = time.perf_counter()
    n = 3
    d = n * (n - 1)
    rng = Random(PROJECTION_SEED)
    suite = _rotated_kefalopoda_suite(n)
    signed_supports = [
        [(k, s * w) for k, (s, w) in enumerate(zip(q.phi, q.base.weights)) if w]
        for q in suite
    ]
    bound = Fraction(n - 1)
    failures: List[str] = []
    for _ in range(500):
        p = CorrelationVector(n, tuple(_random_vector(rng, d)), tuple(_random_vector(rng, d)))
        fast = weakly_causal_correlations(n, p).accepted
        diff = [a - b for a, b in zip(p.p0, p.p1)]
        direct = all(x >= 0 for x in p.p0 + p.p1) and all(x <= 1 for x in p.p0 + p.p1) \
            and all(sum((w * diff[k] for k, w in supp), ZERO) <= bound
                    for supp in signed_supports)
        if fast != direct:
            failures.append(f"fast={fast}, direct={direct} at p0={p.p0}, p1={p.p1}")
    return _result("projection-lemma", failures,
                   f"500 correlations vs 2d trivial + {len(suite)} rotated lifted "
                   f"kefalopoda inequalities", t0)


# ---------------------------------------------------------------------------
# 6. Lifted and rotated facets at n=3

def check_lifted_facets() -> CheckResult:
    """Lifting and random rotations preserve facet status in 2d dimensions."""
    t0 = time.perf_counter()
    n = 3
    d = n * (n - 1)
    rng = Random(ROTATION_SEED)
    failures: List[str] = []
    maps = list(fixed_point_free_maps(n))
    lifts = [lift(kefalopoda_inequality(n, f)) for f in maps]
    todo = [(f"lift f={f}", q) for f, q in zip(maps, lifts)]
    for t in range(20):
        i = rng.randrange(len(lifts))
        signs = tuple(rng.choice((1, -1)) for _ in range(d))
        todo.append((f"rotation #{t} f={maps[i]} phi={signs}", rotate(lifts[i], signs)))
    for label, q in todo:
        cert = verify_lifted_facet(q, PolytopeClass.SOURCE, n)
        if not cert.is_facet or cert.affine_rank_of_saturators != 2 * d - 1:
            failures.append(
                f"{label}: valid={cert.valid}, rank {cert.affine_rank_of_saturators}/{2 * d - 1}"
            )
    return _result("lifted-facets", failures,
                   f"{len(todo)} lifted/rotated inequalities facet-defining with "
                   f"saturating rank {2 * d - 1}", t0)


# ---------------------------------------------------------------------------
# 7. Hamiltonian fractional vertex at n=4

def hamiltonian_fractional_point() -> List[Fraction]:
    """A fractional vertex of the trivial + Hamiltonian-cycle relaxation at n=4.

    Vertex 0 sits in a 2-cycle with each other vertex; the remaining
    vertices carry a directed half-weight 3-cycle.
    """
    n = 4
    q = [ZERO] * (n * (n - 1))
    for i, j in ((0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)):
        q[arc_index(n, i, j)] = ONE
    for i, j in ((1, 2), (2, 3), (3, 1)):
        q[arc_index(n, i, j)] = Fraction(1, 2)
    return q


def check_hamiltonian_vertex() -> CheckResult:
    """The fractional point is a vertex yet breaks three graphical bounds maximally."""
    t0 = time.perf_counter()
    n = 4
    q = hamiltonian_fractional_point()
    failures: List[str] = []
    if not hamiltonian_vertex_check(n, q):
        failures.append("point fails the vertex check")
    ham_values = [evaluate(ineq, q) for ineq in hamiltonian_cycle_inequalities(n)]
    if max(ham_values) > 3:
        failures.append(f"a Hamiltonian-cycle value exceeds 3: {max(ham_values)}")

    def expect_maximal_violation(label: str, ineq: DigraphInequality, arc_count: int) -> None:
        value = evaluate(ineq, q)
        if not value > ineq.bound:
            failures.append(f"{label}: {value} does not exceed {rat_str(ineq.bound)}")
        if value != arc_count:
            failures.append(f"{label}: violation not maximal ({value} != {arc_count})")

    expect_maximal_violation("2-cycle", cycle_inequality(n, 2), 2)
    expect_maximal_violation("kefalopoda f=(1,0,0,0)",
                             kefalopoda_inequality(n, (1, 0, 0, 0)), 4)
    star = Digraph(n, frozenset({(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)}))
    expect_maximal_violation("minimally-strong star", min_strong_inequality(star), 6)
    return _result("hamiltonian-vertex", failures,
                   "vertex of the Hamiltonian relaxation; maximal violations 2>1, 4>3, 6>5",
                   t0)


# ---------------------------------------------------------------------------
# 8. Signaling digraphs of extremal correlations

def check_signaling_classes() -> CheckResult:
    """Extremal correlations signal along exactly the digraphs of their class."""
    t0 = time.perf_counter()
    failures: List[str] = []
    n = 3
    for cls in PolytopeClass:
        got = {
            signaling_digraph(p).mask()
            for p in enumerate_extremal_correlations(n, cls)
        }
        want = set(enumerate_class_masks(n, cls))
        if got != want:
            failures.append(
                f"{cls.value} n=3: {len(got)} signaling digraphs vs {len(want)} class members"
            )
    # Independent cross-check at n=2: filter the full cube by the class predicate.
    scan = set(extremal_masks(2, PolytopeClass.SOURCE, scan=True))
    constructed = set(extremal_masks(2, PolytopeClass.SOURCE))
    if scan != constructed or len(scan) != 12:
        failures.append(f"n=2 source scan mismatch: {len(scan)} vs {len(constructed)}")
    return _result("signaling-classes", failures,
                   "signaling digraphs match each class exactly at n=3 "
                   "(plus the full-cube cross-check at n=2)", t0)


# ---------------------------------------------------------------------------
# 9. Fast decision vs. exact hull membership

def check_hull_agreement() -> CheckResult:
    """Acceptance coincides with membership in the source-digraph hull."""
    t0 = time.perf_counter()
    failures: List[str] = []
    total = 0
    for n in (3, 4):
        rng = Random(HULL_SEED + n)
        d = n * (n - 1)
        for t in range(200):
            q = _random_vector(rng, d, den=8)
            if t % 2 == 0:
                q = [x * Fraction(n - 1, n) for x in q]
            total += 1
            fast = weak_source_digraph(n, q).accepted
            hull = hull_membership(q, PolytopeClass.SOURCE, n)
            if fast != hull:
                failures.append(f"n={n}: fast={fast}, hull={hull}, q={[rat_str(x) for x in q]}")
    return _result("hull-agreement", failures,
                   f"{total} vectors at n=3,4 decided identically by both routes", t0)


# ---------------------------------------------------------------------------
# Runner

ALL_CHECKS: List[Tuple[str, Callable[[], CheckResult]]] = [
    ("bound-table", check_bound_table),
    ("facet-certificates", check_facet_certificates),
    ("tightness", check_tightness),
    ("oracle-equivalence", check_oracle_equivalence),
    ("projection-lemma", check_projection_lemma),
    ("lifted-facets", check_lifted_facets),
    ("hamiltonian-vertex", check_hamiltonian_vertex),
    ("signaling-classes", check_signaling_classes),
    ("hull-agreement", check_hull_agreement),
]


def run_all(names: Optional[Sequence[str]] = None) -> List[CheckResult]:
    selected = set(names) if names else None
    results = []
    for name, fn in ALL_CHECKS:
        if selected is None or name in selected:
            results.append(fn())
    return results

"""Acceptance suite: one test per headline reproduction check.

Each test prints a single pass/fail line (visible with ``pytest -s`` or in
the failure report) and asserts the check passed.  The checks themselves
live in causalgames.reproduce and are shared with the ``reproduce`` CLI
subcommand.
"""

from causalgames import reproduce


def _run(number, fn):
    result = fn()
    print(f"criterion {number} {result.line()}")
    assert result.passed, result.detail
    return result


def test_criterion_1_bound_table():
    r = _run(1, reproduce.check_bound_table)
    assert r.seconds < 10


def test_criterion_2_facet_certificates():
    r = _run(2, reproduce.check_facet_certificates)
    assert r.seconds < 600


def test_criterion_3_tightness():
    _run(3, reproduce.check_tightness)


def test_criterion_4_oracle_equivalence():
    r = _run(4, reproduce.check_oracle_equivalence)
    assert r.seconds < 30


def test_criterion_5_projection_lemma():
    r = _run(5, reproduce.check_projection_lemma)
    assert r.seconds < 30


def test_criterion_6_lifted_facets():
    r = _run(6, reproduce.check_lifted_facets)
    assert r.seconds < 120


def test_criterion_7_hamiltonian_vertex():
    r = _run(7, reproduce.check_hamiltonian_vertex)
    assert r.seconds < 5


def test_criterion_8_signaling_classes():
    r = _run(8, reproduce.check_signaling_classes)
    assert r.seconds < 10


def test_criterion_9_hull_agreement():
    r = _run(9, reproduce.check_hull_agreement)
    assert r.seconds < 300


def test_negative_control_tampered_bound(monkeypatch):
    # A tampered family bound must make the corresponding check fail.
    from causalgames.inequalities import DigraphInequality, mobius_inequality

    def tampered(n, k):
        ineq = mobius_inequality(n, k)
        return DigraphInequality(ineq.weights, ineq.bound + 1)

    monkeypatch.setattr(reproduce, "mobius_inequality", tampered)
    result = reproduce.check_bound_table()
    assert not result.passed and "moebius" in result.detail

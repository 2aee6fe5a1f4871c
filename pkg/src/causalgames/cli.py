"""Command-line interface: game generation, evaluation, decisions, certificates.

Exit codes follow a stable contract: 0 for success (or an accepted/passing
verdict), 1 for a semantic negative (rejected, failed, or a non-facet),
2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import reproduce
from .correlations import (
    GraphicalTest,
    correlation_from_json,
    run_test,
    test_from_json,
    test_to_json,
)
from .decide import weak_source_digraph, weakly_causal_correlations
from .digraphs import (
    Digraph,
    PolytopeClass,
    digraph_from_json,
    digraph_to_json,
    fixed_point_free_maps,
)
from .inequalities import (
    cycle_inequality,
    fence_inequality,
    kefalopoda_inequality,
    min_strong_inequality,
    mobius_inequality,
    test_from_inequality,
    twisted_cylinder_inequality,
)
from .oracle import verify_facet
from .ratlin import parse_vector, rat_str

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _fmt(r: Fraction, approx: bool) -> str:
    if approx:
        return f"{rat_str(r)} (~{float(r):.6f})"
    return rat_str(r)


def _parse_f(text: str, n: int) -> List[int]:
    try:
        f = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise CliError(f"malformed predecessor map: {text!r}") from exc
    if len(f) != n:
        raise CliError(f"predecessor map must have {n} entries")
    return f


# ---------------------------------------------------------------------------
# gen-game

def cmd_gen_game(args: argparse.Namespace) -> int:
    try:
        if args.family == "cycle":
            ineq = cycle_inequality(args.n, args.k)
        elif args.family == "fence":
            ineq = fence_inequality(args.n, args.k)
        elif args.family == "mobius":
            ineq = mobius_inequality(args.n, args.k)
        elif args.family == "kefalopoda":
            if args.f is None:
                raise CliError("kefalopoda needs --f, e.g. --f 1,0,0,0")
            ineq = kefalopoda_inequality(args.n, _parse_f(args.f, args.n))
        elif args.family == "twisted-cylinder":
            ineq = twisted_cylinder_inequality()
        elif args.family == "minstrong":
            if args.game is None:
                raise CliError("minstrong needs --game pointing at a digraph JSON file")
            ineq = min_strong_inequality(digraph_from_json(_load_json(args.game)))
        else:  # pragma: no cover - argparse restricts choices
            raise CliError(f"unknown family {args.family}")
        test = test_from_inequality(ineq)
    except (ValueError, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    game_obj = digraph_to_json(test.game)
    test_obj = test_to_json(test)
    if args.out:
        for suffix, obj in ((".game.json", game_obj), (".test.json", test_obj)):
            with open(args.out + suffix, "w", encoding="utf-8") as fh:
                json.dump(obj, fh)
                fh.write("\n")
        print(f"wrote {args.out}.game.json and {args.out}.test.json")
    else:
        print(json.dumps({"game": game_obj, "test": test_obj}))
    print(f"bound {_fmt(test.bound, args.approx)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# eval

def cmd_eval(args: argparse.Namespace) -> int:
    try:
        p = correlation_from_json(_load_json(args.correlations))
        test = test_from_json(_load_json(args.test))
        result = run_test(p, test)
    except (ValueError, KeyError, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print("pass" if result.passed else "fail")
    print(f"win {_fmt(result.win, args.approx)}")
    print(f"margin {_fmt(result.margin, args.approx)}")
    return EXIT_OK if result.passed else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# decide

def cmd_decide(args: argparse.Namespace) -> int:
    try:
        obj = _load_json(args.input)
        if "p0" in obj:
            p = correlation_from_json(obj)
            decision = weakly_causal_correlations(p.n, p)
        elif "q" in obj:
            n = int(obj["n"])
            decision = weak_source_digraph(n, parse_vector(obj["q"]))
        else:
            raise CliError("input must contain either p0/p1 or q")
    except (ValueError, KeyError, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(json.dumps(decision.to_json()))
    if args.approx:
        print(f"score ~{float(decision.score):.6f}", file=sys.stderr)
    return EXIT_OK if decision.accepted else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# verify-facets

def _facet_targets(args: argparse.Namespace):
    cls = PolytopeClass(args.polytope_class)
    n = args.n
    if args.all_kefalopoda:
        for f in fixed_point_free_maps(n):
            yield f"kefalopoda f={f}", kefalopoda_inequality(n, f)
    if args.twisted_cylinder:
        yield "twisted-cylinder", twisted_cylinder_inequality()
    if args.cycle_k is not None:
        yield f"{args.cycle_k}-cycle", cycle_inequality(n, args.cycle_k)
    if args.fence_k is not None:
        yield f"{args.fence_k}-fence", fence_inequality(n, args.fence_k)
    if args.mobius_k is not None:
        yield f"{args.mobius_k}-moebius", mobius_inequality(n, args.mobius_k)


def cmd_verify_facets(args: argparse.Namespace) -> int:
    try:
        cls = PolytopeClass(args.polytope_class)
        targets = list(_facet_targets(args))
        if not targets:
            raise CliError("no family selected (try --all-kefalopoda, --cycle-k, ...)")
        certs = [(label, verify_facet(ineq, cls, args.n)) for label, ineq in targets]
    except (ValueError, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    width = max(len(label) for label, _ in certs)
    for label, cert in certs:
        print(
            f"{label:<{width}}  valid={cert.valid}  max={rat_str(cert.max_value)}  "
            f"saturating={cert.saturating_count}  rank={cert.affine_rank_of_saturators}"
            f"/{cert.ambient_dim - 1}  facet={cert.is_facet}"
        )
    facets = sum(1 for _, c in certs if c.is_facet)
    print(f"{facets}/{len(certs)} facet-defining over {cls.value} at n={args.n}")
    return EXIT_OK if facets == len(certs) else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# reproduce

def cmd_reproduce(args: argparse.Namespace) -> int:
    try:
        results = reproduce.run_all(args.only or None)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps([r.to_json() for r in results]))
    else:
        for r in results:
            print(r.line())
        passed = sum(1 for r in results if r.passed)
        print(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causalgames",
        description="Graphical games of causality: generation, evaluation, certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-game", help="generate a game digraph and its graphical test")
    g.add_argument("family", choices=["cycle", "fence", "mobius", "kefalopoda",
                                      "twisted-cylinder", "minstrong"])
    g.add_argument("--n", type=int, default=4)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--f", help="comma-separated predecessor map for kefalopoda")
    g.add_argument("--game", help="digraph JSON file for minstrong")
    g.add_argument("--out", help="output path prefix (writes PREFIX.game.json, PREFIX.test.json)")
    g.add_argument("--approx", action="store_true", help="also show decimal renderings")
    g.set_defaults(fn=cmd_gen_game)

    e = sub.add_parser("eval", help="run a graphical test on a correlation file")
    e.add_argument("correlations")
    e.add_argument("test")
    e.add_argument("--approx", action="store_true")
    e.set_defaults(fn=cmd_eval)

    d = sub.add_parser("decide", help="weak-causality membership for a correlation or vector")
    d.add_argument("input", help="correlation JSON (p0/p1) or digraph-vector JSON (n, q)")
    d.add_argument("--approx", action="store_true")
    d.set_defaults(fn=cmd_decide)

    v = sub.add_parser("verify-facets", help="brute-force facet certificates")
    v.add_argument("--class", dest="polytope_class", required=True,
                   choices=[c.value for c in PolytopeClass])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--all-kefalopoda", action="store_true")
    v.add_argument("--twisted-cylinder", action="store_true")
    v.add_argument("--cycle-k", type=int)
    v.add_argument("--fence-k", type=int)
    v.add_argument("--mobius-k", type=int)
    v.set_defaults(fn=cmd_verify_facets)

    r = sub.add_parser("reproduce", help="re-run the full reproduction suite")
    r.add_argument("--json", action="store_true", help="machine-readable report")
    r.add_argument("--only", action="append",
                   choices=[name for name, _ in reproduce.ALL_CHECKS],
                   help="run a single named check (repeatable)")
    r.set_defaults(fn=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; keep that contract.
        return int(exc.code or 0)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())

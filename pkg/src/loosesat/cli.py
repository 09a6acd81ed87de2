"""Command-line interface: ``loosesat <subcommand> ...``.

Exit codes: 0 success / property holds, 1 property refuted (certificate on
stdout), 2 usage or I/O error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from pathlib import Path

from .canonical import canonical_form
from .construction import construct_gn
from .discharge import audit_summary, default_ell, run_discharge
from .errors import DomainError, LooseSatError, ParseError, SearchTimeout
from .hypergraph import Hypergraph3
from .io import dumps, read_h3, save_h3, write_h3
from .lemmas import run_all
from .saturation import Verdict, is_free, saturate_greedy, verify_saturated
from .search import STRATEGIES, Budget, enumerate_extremal, min_saturation
from .triangle import find_triangle

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3
SEED_ENV = "LOOSESAT_SEED"


def _emit(text: str, path: str | None = None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_construct(args) -> int:
    G, _ = construct_gn(args.n)
    text = write_h3(G, (f"brick construction G_{args.n}",))
    _emit(text, args.output)
    if args.output not in (None, "-"):
        print(args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    G = read_h3(args.file)
    if args.free:
        w = find_triangle(G)
        out = {"schema": "loosesat.check/1", "property": "free", "holds": w is None,
               "witness": None if w is None else w.to_json()}
        sys.stdout.write(dumps(out))
        return EXIT_OK if w is None else EXIT_REFUTED
    cert = verify_saturated(G, jobs=args.jobs)
    out = {"schema": "loosesat.check/1", "property": "saturated", "holds": cert.saturated}
    out.update(cert.to_json())
    sys.stdout.write(dumps(out))
    return EXIT_OK if cert.saturated else EXIT_REFUTED


def cmd_satnum(args) -> int:
    budget = Budget(seconds=args.budget_secs)
    try:
        out = min_saturation(args.n, budget, strategy=args.strategy, jobs=args.jobs, max_edges=args.max_edges)
    except SearchTimeout as exc:
        part = exc.outcome
        print(f"loosesat: budget exhausted: {exc}", file=sys.stderr)
        if part is not None:
            print(f"loosesat: no saturated graph with <= {part.exhausted_upto} edges", file=sys.stderr)
        return EXIT_TIMEOUT
    if out.min_edges is None:
        sys.stdout.write(f"none\nexhausted_upto {out.exhausted_upto}\n")
        return EXIT_REFUTED
    path = args.witness or f"sat3-n{args.n}-witness.h3"
    comment = (f"saturated, n={args.n}, m={out.min_edges}",)
    sys.stdout.write(f"{out.min_edges}\n{path}\n")
    if path == "-":
        sys.stdout.write(write_h3(out.witness, comment))
    else:
        save_h3(out.witness, path, comment)
    if args.enumerate:
        try:
            forms = enumerate_extremal(args.n, out.min_edges, Budget(seconds=args.budget_secs), jobs=args.jobs)
        except SearchTimeout as exc:
            print(f"loosesat: budget exhausted during enumeration: {exc}", file=sys.stderr)
            return EXIT_TIMEOUT
        sys.stdout.write(f"classes {len(forms)}\n")
        for f in forms:
            sys.stdout.write(f.decode("ascii") + "\n")
    if args.json:
        _emit(dumps(out.to_json(timing=args.timing)), args.json)
    return EXIT_OK


def cmd_discharge(args) -> int:
    G = read_h3(args.file)
    ell = args.ell if args.ell is not None else default_ell(G.n)
    report = run_discharge(G, ell, d5_mode=args.d5)
    summary = audit_summary(report)
    sys.stdout.write(dumps(summary.to_json()))
    if args.json:
        _emit(dumps(report.to_json()), args.json)
    ok = summary.conserved and summary.nonlow_nonnegative and summary.helpful_floor
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_lemmas(args) -> int:
    G = read_h3(args.file)
    js = tuple(args.jfar) if args.jfar else (2, 3, 4)
    for j in js:
        if j < 2:
            raise DomainError(f"j must be at least 2, got {j}")
    report = run_all(G, js)
    out = {"schema": "loosesat.lemmas/1"}
    out.update(report.to_json(timing=args.timing))
    sys.stdout.write(dumps(out))
    return EXIT_OK if report.clean else EXIT_REFUTED


def cmd_stats(args) -> int:
    G = read_h3(args.file)
    deg = G.degrees()
    codeg = [len(es) for es in G.pair_index.values()]
    cert = verify_saturated(G)
    out = {
        "schema": "loosesat.stats/1",
        "n": G.n,
        "m": len(G.edges),
        "degree_histogram": {str(k): v for k, v in sorted(Counter(deg).items())},
        "max_degree": max(deg, default=0),
        "max_codegree": max(codeg, default=0),
        "isolated": sum(1 for d in deg if d == 0),
        "verdict": cert.verdict.value,
        "canonical_form": canonical_form(G).decode("ascii"),
    }
    sys.stdout.write(dumps(out))
    return EXIT_OK


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV, "").strip()
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return 0


def cmd_saturate(args) -> int:
    G = read_h3(args.file) if args.file else Hypergraph3(args.n or 0)
    if not is_free(G):
        raise DomainError("input contains a loose triangle")
    seed = _seed(args)
    H = saturate_greedy(G, seed)
    assert verify_saturated(H).verdict is Verdict.SATURATED
    _emit(write_h3(H, (f"greedy saturation, seed={seed}",)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loosesat", description="Loose-triangle saturation toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", help="write the brick construction G_n")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("check", help="verify freeness or saturation")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--free", action="store_true")
    g.add_argument("--saturated", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("satnum", help="exhaustively compute the minimum saturated edge count")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--max-edges", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget-secs", type=float)
    s.add_argument("--enumerate", action="store_true", help="also list all extremal classes")
    s.add_argument("--strategy", choices=STRATEGIES, default="orderly")
    s.add_argument("-w", "--witness", help="where to write the witness (.h3); '-' prints it")
    s.add_argument("--json", help="write the search outcome as JSON")
    s.add_argument("--timing", action="store_true", help="include wall-clock time in JSON")
    s.set_defaults(func=cmd_satnum)

    s = sub.add_parser("discharge", help="run the discharging audit")
    s.add_argument("file")
    s.add_argument("--ell", type=int)
    s.add_argument("--json", help="write the full charge report as JSON")
    s.add_argument("--d5", choices=("incidence", "neighbor"), default="incidence")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("lemmas", help="check the structural lemmas")
    s.add_argument("file")
    s.add_argument("--jfar", type=int, action="append", help="j for the far-neighbor bound (repeatable)")
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_lemmas)

    s = sub.add_parser("stats", help="print basic statistics")
    s.add_argument("file")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("saturate", help="greedily extend a triangle-free graph to a saturated one")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?")
    src.add_argument("-n", type=int, help="start from the empty graph on n vertices")
    s.add_argument("--seed", type=int, help=f"shuffle seed (default: ${SEED_ENV} or 0)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_saturate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (ParseError, DomainError, OSError) as exc:
        print(f"loosesat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LooseSatError as exc:
        print(f"loosesat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

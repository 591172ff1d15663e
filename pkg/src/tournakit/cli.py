"""``tk``: command-line front end.

Exit status is 0 on success, 1 when a verification check fails and 2 on
usage errors.  Wherever a tournament is expected, either an inline literal
(``"t 3 101"``) or a file holding such lines may be given.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .core import Tournament, canonical_tournament, parse_tournament
from .patterns import parse_cycle_type, parse_path_type


class UsageError(Exception):
    pass


def read_tournaments(arg: str) -> list[Tournament]:
    if arg.lstrip().startswith("t "):
        lines = [arg]
    else:
        path = Path(arg)
        if not path.is_file():
            raise UsageError(f"{arg!r} is neither a tournament literal nor a readable file")
        lines = [ln for ln in path.read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    try:
        return [parse_tournament(ln) for ln in lines]
    except ValueError as e:
        raise UsageError(str(e)) from None


def read_tournament(arg: str) -> Tournament:
    ts = read_tournaments(arg)
    if len(ts) != 1:
        raise UsageError(f"expected one tournament, found {len(ts)}")
    return ts[0]


def _pattern(args):
    try:
        if getattr(args, "cycle", None):
            return parse_cycle_type(args.cycle)
        return parse_path_type(args.path)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _labels(mask: int) -> str:
    return "{" + ",".join(str(v + 1) for v in range(mask.bit_length()) if mask >> v & 1) + "}"


def cmd_embed(args) -> int:
    from .patterns import CycleType
    from .search import find_cycle_embedding, find_path_embedding, proof_guided_cycle_embedding

    t = read_tournament(args.tournament)
    pat = _pattern(args)
    if pat.order > t.order:
        raise UsageError(f"pattern of order {pat.order} does not fit a tournament of order {t.order}")
    if isinstance(pat, CycleType):
        if args.proof_guided:
            if pat.order != t.order or pat.is_directed:
                raise UsageError("--proof-guided needs a non-directed Hamiltonian cycle type")
            emb = proof_guided_cycle_embedding(t, pat, seed=args.seed)
        else:
            emb = find_cycle_embedding(t, pat)
    else:
        emb = find_path_embedding(t, pat)
    print("ABSENT" if emb is None else emb.labels())
    return 0


def cmd_origins(args) -> int:
    from .search import origins

    t = read_tournament(args.tournament)
    p = _pattern(args)
    if p.order > t.order:
        raise UsageError(f"type of order {p.order} does not fit a tournament of order {t.order}")
    print(_labels(origins(t, p, sub=p.order < t.order)))
    return 0


def cmd_count(args) -> int:
    from .search import count_path_embeddings

    t = read_tournament(args.tournament)
    p = _pattern(args)
    if p.order != t.order:
        raise UsageError("counting needs a Hamiltonian path type")
    print(count_path_embeddings(t, p))
    return 0


def cmd_enum(args) -> int:
    from .enumerate import count_tournaments, tournaments_of_order

    try:
        if args.count_only:
            print(count_tournaments(args.order, allow_nine=True, jobs=args.jobs))
            return 0
        text = "".join(t.to_text() + "\n" for t in tournaments_of_order(args.order, jobs=args.jobs))
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_canon(args) -> int:
    for t in read_tournaments(args.tournament):
        print(canonical_tournament(t).to_text())
    return 0


def cmd_catalog(args) -> int:
    from .catalog import match_all
    from .catalog.export import catalog_json

    if args.tournament:
        if not (args.path or args.cycle):
            raise UsageError("--tournament needs --path or --cycle")
        t = read_tournament(args.tournament)
        found = match_all(t, _pattern(args))
        if not found:
            print("NONE")
        for m in found:
            print(m.name + (" (dual)" if m.via_dual else ""))
        return 0
    text = catalog_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_check

    rep = run_check(args.check, max_order=args.max_order, deep=args.deep, jobs=args.jobs,
                    seed=args.seed, samples=args.samples, timing=args.timing)
    if args.report:
        Path(args.report).write_text(rep.to_json())
    print(f"{rep.check}: {rep.status} ({rep.instances} instances, {len(rep.violations)} violations, "
          f"{len(rep.found_not_listed)} found not listed, {len(rep.listed_not_found)} listed not found)")
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    from .verify import CHECKS

    ap = argparse.ArgumentParser(prog="tk", description="Oriented paths and cycles in tournaments.")
    sub = ap.add_subparsers(dest="command", required=True)

    def pattern_flags(p, cycles=True):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--path", help="path type such as +(1,2)")
        if cycles:
            g.add_argument("--cycle", help="cycle type such as (2,1)")

    p = sub.add_parser("embed", help="find a witness for a path or cycle type")
    p.add_argument("--tournament", required=True)
    pattern_flags(p)
    p.add_argument("--proof-guided", action="store_true", help="use the min-indegree split embedder")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("origins", help="print the origins of a path type")
    p.add_argument("--tournament", required=True)
    pattern_flags(p, cycles=False)
    p.set_defaults(func=cmd_origins)

    p = sub.add_parser("count", help="count Hamiltonian paths of a type")
    p.add_argument("--tournament", required=True)
    pattern_flags(p, cycles=False)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enum", help="list tournaments of an order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("canon", help="print canonical forms")
    p.add_argument("--tournament", required=True)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("catalog", help="export the catalogue or match a pair against it")
    p.add_argument("--out")
    p.add_argument("--tournament")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--path")
    g.add_argument("--cycle")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--check", required=True, choices=list(CHECKS))
    p.add_argument("--max-order", type=int)
    p.add_argument("--deep", action="store_true", help="order 8 sweeps (also TK_DEEP=1)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int)
    p.add_argument("--report")
    p.add_argument("--timing", action="store_true", help="record wall time in the report")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"tk: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``schubsem {schubert,expand,pipedreams,scan}``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import verify
from .bases import elementary_poly, format_chm, sem_expand, single_chm_of
from .perm import PermutationError, format_word, parse_word
from .pipedream import DEFAULT_LIMIT, EnumerationLimitError, enumerate_reduced, ladder_graph_dot, weight
from .poly import Poly
from .schubert import expand_schubert_basis, schubert, schubert_divdiff

__all__ = ["CliConfig", "build_parser", "main"]

CACHE_ENV = "SCHUBSEM_CACHE_DIR"
NOT_SINGLE_CHM = "not a single CHM"


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    w: tuple[int, ...] | None = None
    n: int | None = None
    method: str = "divdiff"
    basis: str = "sem"
    format: str = "text"
    jobs: int = 1
    cache_dir: Path | None = None
    limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        if self.format == "dot" and self.subcommand != "pipedreams":
            raise UsageError("--format dot is only available for the pipedreams subcommand")


def _word(text: str):
    try:
        return parse_word(text)
    except PermutationError as exc:
        raise argparse.ArgumentTypeError(f"invalid permutation {text!r}: {exc}") from exc


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _checks(text: str) -> tuple[str, ...]:
    items = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [t for t in items if t not in verify.CHECKS]
    if bad or not items:
        raise argparse.ArgumentTypeError(
            f"unknown check {bad[0]!r}; choose from {', '.join(verify.CHECKS)}" if bad else "no checks given")
    return items


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubsem", description="Schubert polynomials and their SEM/CHM expansions.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="subcommand", required=True)

    fmt = dict(choices=("text", "json", "dot"), default="text")

    s = sub.add_parser("schubert", help="print the Schubert polynomial of w")
    s.add_argument("--w", type=_word, required=True, help="one-line word, e.g. 4132 or 10,2,3,...")
    s.add_argument("--method", choices=("divdiff", "pipedream", "checked"), default="divdiff")
    s.add_argument("--format", **fmt)

    e = sub.add_parser("expand", help="expand the Schubert polynomial of w in a basis")
    e.add_argument("--w", type=_word, required=True)
    e.add_argument("--basis", choices=("sem", "chm", "schubert", "monomial"), default="sem")
    e.add_argument("--monk", type=_positive, metavar="K",
                   help="with --basis schubert, expand e^K_1 * S_w instead of S_w")
    e.add_argument("--format", **fmt)

    d = sub.add_parser("pipedreams", help="list reduced pipe dreams or emit the ladder-move graph")
    d.add_argument("--w", type=_word, required=True)
    d.add_argument("--limit", type=_positive, default=DEFAULT_LIMIT, help="abort past this many dreams")
    d.add_argument("--format", **fmt)

    c = sub.add_parser("scan", help="exhaustive theorem, count and conjecture checks")
    c.add_argument("--n", type=_positive, required=True, help="largest n to scan")
    c.add_argument("--checks", type=_checks, default=verify.CHECKS, help="comma-separated subset of "
                   + ",".join(verify.CHECKS))
    c.add_argument("--jobs", type=_positive, default=1)
    c.add_argument("--cache-dir", type=Path, default=None, help=f"Schubert cache directory (default ${CACHE_ENV})")
    c.add_argument("--report", type=Path, default=None, help="write the JSON report here")
    c.add_argument("--sem-max", type=_positive, default=6, help="largest n for SEM expansions")
    c.add_argument("--mono-max", type=_positive, default=7, help="largest n for monomial/CHM checks")
    c.add_argument("--format", **fmt)
    return p


def _emit_poly(f: Poly, fmt: str) -> str:
    return f.to_json() if fmt == "json" else f.to_text()


def cmd_schubert(args) -> int:
    print(_emit_poly(schubert(args.w, args.method), args.format))
    return verify.EXIT_OK


def cmd_expand(args) -> int:
    w, n = args.w, len(args.w)
    if args.monk and args.basis != "schubert":
        raise UsageError("--monk requires --basis schubert")
    if args.basis == "monomial":
        print(_emit_poly(schubert_divdiff(w), args.format))
    elif args.basis == "sem":
        exp = sem_expand(schubert_divdiff(w), n)
        print(exp.to_json() if args.format == "json" else exp.to_text())
    elif args.basis == "chm":
        a = single_chm_of(w)
        if args.format == "json":
            print(json.dumps({"single": a is not None, "a": list(a) if a is not None else None},
                             separators=(",", ":")))
        else:
            print(format_chm(a) if a is not None else f"{NOT_SINGLE_CHM}: {format_word(w)}")
    else:
        if args.monk:
            m = max(n, args.monk) + 1
            exp = expand_schubert_basis(elementary_poly(args.monk, 1) * schubert_divdiff(w, m), m)
        else:
            exp = expand_schubert_basis(schubert_divdiff(w), n)
        if args.format == "json":
            print(exp.to_json())
        else:
            parts = []
            for u, c in sorted(exp.terms.items(), reverse=True):
                body = f"S[{format_word(u)}]"
                parts.append(body if c == 1 else f"{c}*{body}")
            print(" + ".join(parts).replace("+ -", "- ") or "0")
    return verify.EXIT_OK


def cmd_pipedreams(args) -> int:
    if args.format == "dot":
        sys.stdout.write(ladder_graph_dot(args.w, args.limit))
        return verify.EXIT_OK
    dreams = enumerate_reduced(args.w, args.limit)
    if args.format == "json":
        print(json.dumps({"count": len(dreams), "dreams": [D.to_json_obj() for D in dreams]},
                         separators=(",", ":")))
        return verify.EXIT_OK
    print(f"count: {len(dreams)}")
    for D in dreams:
        print()
        print(D.render())
        print("weight:", list(weight(D)))
    return verify.EXIT_OK


def cmd_scan(args) -> int:
    cache_dir = args.cache_dir or (Path(os.environ[CACHE_ENV]) if os.environ.get(CACHE_ENV) else None)
    config = verify.SuiteConfig(
        n_max=args.n,
        checks=tuple(args.checks),
        jobs=args.jobs,
        cache_dir=cache_dir,
        report_path=args.report,
        sem_max=args.sem_max,
        mono_max=args.mono_max,
    )
    report = verify.run_suite(config)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for n, table in report["counts"].items():
            print(f"n={n}: monomial={table['monomial']} sem={table['sem']} chm={table['chm']}"
                  f" {'ok' if table['pass'] else 'MISMATCH'}")
        for n, per in report["theorems"].items():
            bad = [k for k, v in per.items() if not v.get("pass", True)]
            print(f"n={n}: theorems {'ok' if not bad else 'FAILED: ' + ', '.join(bad)}")
        for n, c in report["conjecture"].items():
            print(f"n={n}: conjecture {c['status']} ({c['nonnegative']} nonnegative, {c['single_sem']} single)")
        if args.report:
            print(f"report written to {args.report}")
    return report["status"]["exit_code"]


COMMANDS = {"schubert": cmd_schubert, "expand": cmd_expand, "pipedreams": cmd_pipedreams, "scan": cmd_scan}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        CliConfig(
            subcommand=args.subcommand,
            w=getattr(args, "w", None),
            n=getattr(args, "n", None),
            format=args.format,
            jobs=getattr(args, "jobs", 1),
        )
        return COMMANDS[args.subcommand](args)
    except UsageError as exc:
        parser.error(str(exc))
    except (EnumerationLimitError, verify.CacheError) as exc:
        print(f"schubsem: error: {exc}", file=sys.stderr)
        return verify.EXIT_CHECK_FAILED
    except ValueError as exc:
        print(f"schubsem: error: {exc}", file=sys.stderr)
        return verify.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

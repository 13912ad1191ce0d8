"""colorpart command line: compute, verify, dissect, identities, residues.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from colorpart import __version__
from colorpart.dissect import IDENTITIES, component_vanishes, extract, verify_dissection
from colorpart.engine import (
    DEFAULT_DEPTH,
    DEFAULT_PRIMES,
    FAIL,
    REGISTRY,
    PrimeConstraintError,
    admissible_residues,
    get_family,
    grid_cells,
    run_cell,
    sort_key,
)
from colorpart.etatheta import DUAL_KINDS, check_theta_identity
from colorpart.quotient import QuotientSyntaxError, parse_quotient
from colorpart.series import EtaQuotient, expand_eta_quotient

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MIN_DEPTH = 100
FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    depth: int = DEFAULT_DEPTH
    primes: list[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    kmax: int = 2
    families: list[str] = field(default_factory=lambda: ["all"])
    out: str | None = None
    format: str = "table"
    threads: int = 1

    def __post_init__(self):
        if self.depth < MIN_DEPTH:
            raise UsageError(f"--N must be at least {MIN_DEPTH}, got {self.depth}")
        if self.kmax < 0:
            raise UsageError("--kmax must be >= 0")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        unknown = [f for f in self.families if f != "all" and f not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown family id(s): {', '.join(unknown)}")

    @property
    def family_ids(self) -> list[str]:
        if "all" in self.families:
            return list(REGISTRY)
        return list(dict.fromkeys(self.families))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _id_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise OSError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"config {args.config} is not valid JSON: {exc}") from exc
        aliases = {"N": "depth", "family": "families"}
        for key, val in raw.items():
            key = aliases.get(key, key)
            if key not in RunConfig.__dataclass_fields__:
                raise UsageError(f"unknown config key {key!r}")
            if key == "families" and isinstance(val, str):
                val = _id_list(val)
            values[key] = val
    flags = {
        "depth": args.N,
        "primes": args.primes,
        "kmax": args.kmax,
        "families": args.family,
        "out": args.out,
        "format": args.format,
        "threads": args.threads,
    }
    values.update({k: v for k, v in flags.items() if v is not None})
    if "format" not in values:
        values["format"] = "json" if values.get("out") else "table"
    return RunConfig(**values)


# -- verify ----------------------------------------------------------------


def run_verification(config: RunConfig):
    cells = grid_cells(config.family_ids, config.primes, config.kmax)
    started = time.perf_counter()
    if config.threads > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            reports = list(pool.map(run_cell, cells, [config.depth] * len(cells)))
    else:
        reports = [run_cell(c, config.depth) for c in cells]
    reports.sort(key=sort_key)
    wall = round((time.perf_counter() - started) * 1000, 3)
    return reports, wall


def build_report(config: RunConfig, reports, wall_ms: float) -> dict:
    cfg = asdict(config)
    cfg.pop("out")
    cfg.pop("threads")
    return {
        "meta": {
            "config": cfg,
            "version": __version__,
            # everything run-dependent lives under this one key
            "timestamp": {
                "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "wall_ms": wall_ms,
                "cell_ms": [r.ms for r in reports],
            },
        },
        "cells": [r.to_dict() for r in reports],
    }


CSV_COLUMNS = ("family", "p", "k", "j", "variant", "alpha", "colors", "modulus", "residues", "depth", "status", "checked", "witness", "note")


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for cell in report["cells"]:
        row = []
        for col in CSV_COLUMNS:
            v = cell[col]
            if col in ("colors", "residues"):
                v = " ".join(str(x) for x in v) if v else ""
            elif col == "witness":
                v = json.dumps(v, sort_keys=True) if v else ""
            elif v is None:
                v = ""
            row.append(v)
        w.writerow(row)
    return buf.getvalue()


def render_table(reports) -> str:
    lines = [f"{'family':<8} {'p':>3} {'k':>2} {'j':>2} {'case':<10} {'colors':<11} {'progression':<22} {'status':<8} detail"]
    for r in reports:
        case = r.variant or (f"a={r.alpha}" if r.alpha is not None else "")
        colors = f"({r.colors[0]},{r.colors[1]})" if r.colors else ""
        prog = f"{r.modulus}n+{{{','.join(map(str, r.residues))}}}"
        dash = lambda x: "-" if x is None else str(x)
        detail = r.note
        if r.witness:
            detail = "witness " + json.dumps(r.witness, sort_keys=True)
        elif r.status == "PASS":
            detail = f"{r.checked} coefficients to q^{r.depth}"
        lines.append(f"{r.family:<8} {r.p:>3} {dash(r.k):>2} {dash(r.j):>2} {case:<10} {colors:<11} {prog:<22} {r.status:<8} {detail}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    config = build_config(args)
    reports, wall = run_verification(config)
    report = build_report(config, reports, wall)
    if config.out:
        if config.format == "csv":
            text = render_csv(report)
        elif config.format == "table":
            text = render_table(reports) + "\n"
        else:
            text = json.dumps(report, indent=2) + "\n"
        Path(config.out).write_text(text)
        print(render_table(reports))
    elif config.format == "json":
        print(json.dumps(report, indent=2))
    elif config.format == "csv":
        sys.stdout.write(render_csv(report))
    else:
        print(render_table(reports))
    failed = sum(r.status == FAIL for r in reports)
    skipped = sum(r.status == "SKIPPED" for r in reports)
    print(f"{len(reports)} cells, {failed} failed, {skipped} skipped, {wall / 1000:.2f}s", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# -- other subcommands -----------------------------------------------------


def cmd_compute(args) -> int:
    if args.r < 1 or args.s < 1:
        raise UsageError("--r and --s must be >= 1")
    if args.N < 0:
        raise UsageError("--N must be >= 0")
    series = expand_eta_quotient(EtaQuotient.colored(args.r, args.s), args.N, args.mod)
    for n, c in enumerate(series):
        print(n, c)
    return EXIT_OK


def cmd_dissect(args) -> int:
    try:
        eq = parse_quotient(args.expr)
    except QuotientSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    if args.N < args.m:
        raise UsageError("--N must be at least --m")
    series = expand_eta_quotient(eq, args.N, args.mod)
    ring = f"mod {args.mod}" if args.mod else "over ZZ"
    print(f"{eq}  m={args.m}  {ring}  to O(q^{args.N + 1})")
    for j in range(args.m):
        comp = extract(series, args.m, j)
        ok, n = component_vanishes(series, args.m, j)
        head = " ".join(str(c) for c in comp.coeffs[: args.show])
        verdict = "vanishes" if ok else f"nonzero (first at n={n})"
        print(f"j={j:<3} {verdict:<26} {head}")
    return EXIT_OK


def cmd_identities(args) -> int:
    if args.N < 20:
        raise UsageError("--N must be at least 20")
    failed = 0
    rows = []
    for kind in DUAL_KINDS:
        t = time.perf_counter()
        ok, where = check_theta_identity(kind, args.N)
        rows.append((kind.value, ok, where, time.perf_counter() - t))
    for ident in IDENTITIES.values():
        t = time.perf_counter()
        ok, where = verify_dissection(ident, args.N)
        rows.append((f"{ident.id.value} {ident.description}", ok, where, time.perf_counter() - t))
    for name, ok, where, secs in rows:
        failed += not ok
        status = f"PASS  verified to O(q^{args.N + 1})" if ok else f"FAIL  first mismatch at q^{where}"
        print(f"{name:<22} {status:<34} {secs:.2f}s")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_residues(args) -> int:
    try:
        family = get_family(args.family)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    try:
        family.check_prime(args.prime)
    except PrimeConstraintError as exc:
        raise UsageError(str(exc)) from exc
    rule = getattr(family, "residue_rule", None)
    if rule is None:
        fixed = getattr(family, "progression", None)
        if fixed is None:
            print(f"{family.id}: {family.statement}")
        else:
            A, bs = family.progression(args.prime, family.variants[0])
            print(f"{family.id}: fixed progression {A}n + {', '.join(map(str, bs))}")
        return EXIT_OK
    admitted = admissible_residues(family, args.prime)
    for r in admitted:
        print(rule.describe(r, args.prime))
    if not admitted:
        print(f"{family.id}: no admissible r for p={args.prime}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorpart", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print a_{r,s}(n) for n <= N")
    p.add_argument("--r", type=int, required=True, help="colors for even parts")
    p.add_argument("--s", type=int, required=True, help="colors for odd parts")
    p.add_argument("--N", type=int, default=20)
    p.add_argument("--mod", type=int, default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run registered congruence families")
    p.add_argument("--family", type=_id_list, default=None, help="comma-separated ids or 'all'")
    p.add_argument("--N", type=int, default=None, help=f"coefficient depth (default {DEFAULT_DEPTH})")
    p.add_argument("--primes", type=_int_list, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--out", default=None, help="report file")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--config", default=None, help="JSON file with the same keys; flags win")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dissect", help="split an eta quotient into residue classes")
    p.add_argument("expr", help='e.g. "f2^3/f1^6"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--N", type=int, default=300)
    p.add_argument("--show", type=int, default=8, help="leading coefficients to print")
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("identities", help="check the theta and dissection identities")
    p.add_argument("--N", type=int, default=400)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("residues", help="list admissible r for a family and prime")
    p.add_argument("family")
    p.add_argument("prime", type=int)
    p.set_defaults(func=cmd_residues)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"colorpart {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"colorpart {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"colorpart {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

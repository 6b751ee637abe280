"""Command line front end: ``fatpoints {betti,resolution,hilbert,delta,interpolate,verify}``.

Exit codes: 0 success (or an affirmative verdict), 1 negative verdict or a
failed verification, 2 usage or input error. JSON output uses sorted keys
and integers only, so it is byte-stable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from pathlib import Path

from .core import BettiTable, DeltaMatrix, FatPointConfig, FatPointsError
from .hilbert import delta_rows, hilbert_table
from .interp import interpolate
from .resolution import betti_closed, resolve
from .verify import run_verification

FORMATS = ("text", "json", "csv")


class InputError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _config(args) -> FatPointConfig:
    try:
        return FatPointConfig(args.m11, args.m12, args.m21)
    except FatPointsError as exc:
        raise InputError(str(exc)) from exc


def render_betti(config: FatPointConfig, table: BettiTable, fmt: str) -> str:
    rows = sorted(table)
    if fmt == "json":
        return _dump_json({
            "config": list(config.as_tuple()),
            "entries": [{"u": u, "a": a, "b": b, "mult": m} for u, a, b, m in rows],
        })
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "a", "b", "mult"])
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = [f"betti numbers of I_Z for Z = {config}"]
    lines += [f"u={u} ({a},{b}) {m}" for u, a, b, m in rows]
    lines.append("totals: " + " ".join(f"u={u}:{table.total(u)}" for u in range(3)))
    return "\n".join(lines)


def render_resolution(config: FatPointConfig, fmt: str) -> str:
    res = resolve(config)
    if fmt == "json":
        return _dump_json({
            "config": list(config.as_tuple()),
            "levels": [[list(s) for s in level] for level in res.levels],
        })
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "a", "b"])
        for u, level in enumerate(res.levels):
            w.writerows((u, s.a, s.b) for s in level)
        return buf.getvalue().rstrip("\n")
    lines = [f"minimal free resolution of I_Z for Z = {config}"]
    for u in (2, 1, 0):
        counts = sorted(Counter(res.levels[u]).items())
        summands = " + ".join(f"R({-s.a},{-s.b})" + (f"^{k}" if k > 1 else "") for s, k in counts)
        lines.append(f"L{u}: {summands or '0'}")
    return "\n".join(lines)


def render_matrix(config: FatPointConfig, rows, kind: str, fmt: str) -> str:
    if fmt == "json":
        return _dump_json({
            "config": list(config.as_tuple()),
            "kind": kind,
            "layout": "rows[b][a]",
            "rows": [list(r) for r in rows],
        })
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in r) for r in rows)
    width = max(3, max(len(str(v)) for r in rows for v in r) + 1)
    head = "b\\a |" + "".join(f"{a:>{width}}" for a in range(len(rows[0])))
    lines = [f"{kind} of Z = {config}", head, "-" * len(head)]
    for b, r in enumerate(rows):
        lines.append(f"{b:>3} |" + "".join(f"{v:>{width}}" for v in r))
    return "\n".join(lines)


def parse_delta_text(text: str) -> DeltaMatrix:
    """Read a DeltaH table from CSV rows or JSON ``{"rows": [[...], ...]}``."""
    if not text.strip():
        raise InputError("empty input")
    stripped = text.lstrip()
    try:
        if stripped.startswith("{") or stripped.startswith("["):
            data = json.loads(text)
            rows = data["rows"] if isinstance(data, dict) else data
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise InputError("JSON input must be {\"rows\": [[...], ...]}")
            for r in rows:
                for v in r:
                    if isinstance(v, bool) or not isinstance(v, int):
                        raise InputError(f"non-integer entry {v!r}")
        else:
            rows = []
            for lineno, rec in enumerate(csv.reader(io.StringIO(text)), start=1):
                if not rec or all(not f.strip() for f in rec):
                    continue
                try:
                    rows.append([int(f) for f in rec])
                except ValueError as exc:
                    raise InputError(f"line {lineno}: non-integer entry") from exc
        return DeltaMatrix(tuple(tuple(r) for r in rows))
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from exc
    except KeyError as exc:
        raise InputError("JSON input must have a \"rows\" key") from exc
    except FatPointsError as exc:
        raise InputError(str(exc)) from exc


def render_report(report, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(report.to_dict())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m11", "m12", "m21", "system", "matched"])
        for c in report.candidates:
            w.writerow([*c.triple, c.system, int(c.matched)])
        return buf.getvalue().rstrip("\n")
    lines = [f"case: {report.case}"]
    inv = report.invariants
    if inv is not None:
        lines.append(f"gamma={inv.gamma} alpha={inv.alpha} beta={inv.beta} d={inv.d}")
    if not report.candidates and inv is not None:
        lines.append("no candidate multiplicities")
    for c in report.candidates:
        line = f"candidate {c.triple} from system ({c.system}): " + ("matches" if c.matched else "differs")
        if c.mismatch:
            i, j, want, got = c.mismatch
            line += f" first at row {i}, col {j}: input {want}, recomputed {got}"
        lines.append(line)
    verdict = report.verdict
    if report.triple is not None:
        verdict += f" {tuple(report.triple)}"
    lines.append(f"verdict: {verdict}")
    return "\n".join(lines)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def cmd_betti(args) -> int:
    config = _config(args)
    if config.is_empty:
        print("warning: empty configuration, I_Z is the unit ideal", file=sys.stderr)
    print(render_betti(config, betti_closed(config), args.format))
    return 0


def cmd_resolution(args) -> int:
    config = _config(args)
    if config.is_empty:
        print("warning: empty configuration, I_Z is the unit ideal", file=sys.stderr)
    print(render_resolution(config, args.format))
    return 0


def _window(args, config):
    bound = config.stabilization_bound
    amax = bound if args.amax is None else args.amax
    bmax = bound if args.bmax is None else args.bmax
    if amax < 0 or bmax < 0:
        raise InputError("--amax and --bmax must be nonnegative")
    return amax, bmax


def cmd_hilbert(args) -> int:
    config = _config(args)
    amax, bmax = _window(args, config)
    table = hilbert_table(config, amax, bmax)
    print(render_matrix(config, table.rows, "hilbert function", args.format))
    return 0


def cmd_delta(args) -> int:
    config = _config(args)
    amax, bmax = _window(args, config)
    print(render_matrix(config, delta_rows(config, amax, bmax), "first difference", args.format))
    return 0


def cmd_interpolate(args) -> int:
    h = parse_delta_text(_read_input(args.input))
    report = interpolate(h)
    print(render_report(report, args.format))
    return 0 if report.is_hilbert_function else 1


def cmd_verify(args) -> int:
    mmax = args.mmax if args.mmax is not None else args.mmax_pos
    if mmax is None:
        mmax = 3
    if mmax < 0:
        raise InputError("mmax must be nonnegative")
    report = run_verification(mmax, oracle=args.oracle == "on")
    if args.format == "json":
        print(_dump_json({
            "mmax": mmax,
            "configs": report.configs,
            "ok": report.ok,
            "checks": {k: {"passed": t.passed, "failed": t.failed, "skipped": t.skipped,
                           "first_failure": t.first_failure}
                       for k, t in report.tallies.items()},
        }))
    else:
        print("\n".join(report.lines()))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Betti numbers, Hilbert functions and interpolation for three fat points in P1xP1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    def triple(p):
        for name in ("m11", "m12", "m21"):
            p.add_argument(name, type=int)

    p = sub.add_parser("betti", help="bigraded Betti numbers of I_Z")
    triple(p), fmt(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("resolution", help="twists of the minimal free resolution of I_Z")
    triple(p), fmt(p)
    p.set_defaults(func=cmd_resolution)

    for name, func, text in (("hilbert", cmd_hilbert, "Hilbert function table"),
                             ("delta", cmd_delta, "first difference table")):
        p = sub.add_parser(name, help=f"{text} (rows indexed by b, columns by a)")
        triple(p), fmt(p)
        p.add_argument("--amax", type=int)
        p.add_argument("--bmax", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("interpolate", help="recover multiplicities from a first difference table")
    p.add_argument("input", help="CSV or JSON file, '-' for stdin")
    fmt(p)
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("verify", help="cross-check every route on all small configurations")
    p.add_argument("mmax_pos", nargs="?", type=int, metavar="MMAX")
    p.add_argument("--mmax", type=int)
    p.add_argument("--oracle", choices=("on", "off"), default="on")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

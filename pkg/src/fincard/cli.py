"""Command line driver.

    fincard verify [--suite NAME ...] [--seed S] [--threads T] [--report FILE] [--figures DIR]
    fincard encode  --input FAMILY.txt  [--schedule compact] [--max-cell K] [-o CODED.txt]
    fincard decode  --input CODED.txt   [-o FAMILY.txt]
    fincard ramsey-witness --size N --j 2 --colors 2 --r 3 (--coloring FILE | --seed S)
    fincard ramsey-exact   --j 2 --colors 2 --r 3 [--search-limit N]
    fincard replay FILE

Every ``verify`` flag can also be set through an environment variable named
``FINCARD_`` plus the flag in upper case (``FINCARD_GROUND_SIZE=8``); flags on
the command line win.  Exit status: 0 success, 1 failures found, 2 refused or
invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import ramsey
from .errors import FincardError
from .phi import phi_decode, phi_encode
from .schedule import make_schedule
from .serialize import dumps, loads
from .suites import MUTATIONS, SUITES, CampaignConfig, Refusal, replay_failure, run_suite

ENV_PREFIX = "FINCARD_"


def _env(name, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    if cast is bool:
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return cast(raw)


def _ints(text: str) -> list:
    return [int(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fincard", description="Finite verification of choice-free cardinal constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and emit a line-delimited report")
    v.add_argument("--ground-size", type=int, default=_env("GROUND_SIZE", 8, int))
    v.add_argument("--arity", type=int, default=_env("ARITY", 1, int))
    v.add_argument("--max-cell", type=int, default=_env("MAX_CELL", 1, int))
    v.add_argument("--schedule", choices=["compact", "paper"], default=_env("SCHEDULE", "compact"))
    env_suites = _env("SUITE", None)
    v.add_argument(
        "--suite", action="append", choices=SUITES, default=None,
        help="suite to run (repeatable; default: all)",
    )
    v.add_argument("--seed", type=int, default=_env("SEED", 0, int))
    v.add_argument("--samples", type=int, default=_env("SAMPLES", 10_000, int))
    v.add_argument("--threads", type=int, default=_env("THREADS", 1, int))
    v.add_argument("--force", action="store_true", default=_env("FORCE", False, bool))
    v.add_argument("--max-cost", type=int, default=_env("MAX_COST", 10**8, int))
    v.add_argument("--plant", choices=MUTATIONS, default=_env("PLANT", None), help="plant a known fault (mutation test hook)")
    v.add_argument("--no-timings", action="store_true", default=_env("NO_TIMINGS", False, bool),
                   help="write millis as null so reports are byte-reproducible")
    v.add_argument("--report", type=Path, default=_env("REPORT", None, Path))
    v.add_argument("--figures", type=Path, default=_env("FIGURES", None, Path))
    v.set_defaults(env_suites=env_suites)

    e = sub.add_parser("encode", help="encode a mixed family")
    e.add_argument("--input", type=Path, required=True)
    e.add_argument("--schedule", choices=["compact", "paper"], default=None)
    e.add_argument("--max-cell", type=int, default=None)
    e.add_argument("-o", "--output", type=Path)

    d = sub.add_parser("decode", help="decode a coded set")
    d.add_argument("--input", type=Path, required=True)
    d.add_argument("-o", "--output", type=Path)

    w = sub.add_parser("ramsey-witness", help="least monochromatic sub-grid of a colouring")
    w.add_argument("--size", type=int, required=True, help="each S_i is {0..size-1}")
    w.add_argument("--j", type=_ints, required=True)
    w.add_argument("--colors", type=int, required=True)
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--coloring", type=Path, help="JSON list of colours in grid order")
    w.add_argument("--seed", type=int, default=0)

    x = sub.add_parser("ramsey-exact", help="exact value at tiny parameters")
    x.add_argument("--j", type=_ints, required=True)
    x.add_argument("--colors", type=int, required=True)
    x.add_argument("--r", type=int, required=True)
    x.add_argument("--search-limit", type=int, default=12)
    x.add_argument("--max-colorings", type=int, default=ramsey.DEFAULT_MAX_COLORINGS)

    r = sub.add_parser("replay", help="re-run counterexamples from a report or failure file")
    r.add_argument("file", type=Path)
    return parser


def _write(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_verify(args) -> int:
    suites = args.suite or (args.env_suites.split(",") if args.env_suites else list(SUITES))
    config = CampaignConfig(
        ground_size=args.ground_size,
        arity=args.arity,
        max_cell=args.max_cell,
        schedule=args.schedule,
        suites=tuple(suites),
        seed=args.seed,
        samples=args.samples,
        threads=args.threads,
        force=args.force,
        max_cost=args.max_cost,
        mutation=args.plant,
        timings=not args.no_timings,
    )
    try:
        records = run_suite(config)
    except Refusal as exc:
        extra = {"estimate": exc.estimate, "required_ground": exc.required}
        print(f"refused: {exc} {json.dumps({k: v for k, v in extra.items() if v is not None})}", file=sys.stderr)
        return 2
    _write("".join(r.to_json() + "\n" for r in records), args.report)
    for rec in records:
        status = "PASS" if rec.passed else f"FAIL ({len(rec.failures)})"
        print(f"{rec.suite:14s} {rec.cases:7d} cases  {status}", file=sys.stderr)
    if args.figures is not None:
        from .plotting import render_report

        for path in render_report(records, args.figures):
            print(f"figure: {path}", file=sys.stderr)
    return 0 if all(r.passed for r in records) else 1


def cmd_encode(args) -> int:
    X, header = loads(args.input.read_text(encoding="utf-8"))
    if header.kind != "mixed":
        raise FincardError(f"expected a mixed family, got {header.kind}")
    K = args.max_cell if args.max_cell is not None else header.K
    name = args.schedule or header.schedule or "compact"
    if K is None:
        K = max((max(s) for s in X.shapes()), default=0)
    sched = make_schedule(name, header.n, K)
    C = phi_encode(X, header.ground, sched)
    _write(dumps(C, ground=header.ground, K=K, schedule=name), args.output)
    return 0


def cmd_decode(args) -> int:
    C, header = loads(args.input.read_text(encoding="utf-8"))
    if header.kind != "coded" or header.K is None or header.schedule is None:
        raise FincardError("expected a coded set with K and schedule in its header")
    sched = make_schedule(header.schedule, header.n, header.K)
    X = phi_decode(C, header.ground, sched, header.n, header.K)
    _write(dumps(X, ground=header.ground, K=header.K, schedule=header.schedule), args.output)
    return 0


def cmd_ramsey_witness(args) -> int:
    S = [list(range(args.size))] * len(args.j)
    points = ramsey.grid_points(S, args.j)
    if args.coloring is not None:
        colors = json.loads(args.coloring.read_text())
    else:
        rng = random.Random(args.seed)
        colors = [rng.randint(1, args.colors) for _ in points]
    col = ramsey.GridColoring.from_sequence(S, args.j, args.colors, colors)
    found = ramsey.find_monochromatic_grid(col, args.r)
    if found is None:
        print(json.dumps({"witness": None}))
        return 1
    T, d = found
    print(json.dumps({"witness": {"T": [list(t) for t in T], "color": d}}))
    return 0


def cmd_ramsey_exact(args) -> int:
    got = ramsey.ramsey_exact(args.j, args.colors, args.r, args.search_limit, args.max_colorings)
    if isinstance(got, ramsey.Unknown):
        print(json.dumps({"unknown": {"largest_insufficient": got.largest_insufficient}}))
    else:
        print(json.dumps({"value": got}))
    return 0


def _failures_in(path: Path):
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        if "failures" in obj:
            yield from obj["failures"]
        else:
            yield obj


def cmd_replay(args) -> int:
    reproduced = False
    for failure in _failures_in(args.file):
        verdict = replay_failure(failure)
        reproduced |= verdict["verdict"] == "fail"
        print(json.dumps(verdict, sort_keys=True, ensure_ascii=False, separators=(",", ":")))
    return 1 if reproduced else 0


COMMANDS = {
    "verify": cmd_verify,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "ramsey-witness": cmd_ramsey_witness,
    "ramsey-exact": cmd_ramsey_exact,
    "replay": cmd_replay,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (FincardError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

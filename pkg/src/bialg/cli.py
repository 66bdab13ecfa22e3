"""Run CCS programs, print truncated behaviours and check properties.

Exit status is 0 on success, 1 when a property check fails and 2 on bad
input.  ``BIALG_SEED`` in the environment overrides ``--seed``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from bialg import render, suites
from bialg.equiv import LANGS, SampleConfig, truncate
from bialg.lang import ccs, razor, stream
from bialg.syntax import CcsSyntaxError, UnboundVariable, load, parse_arith

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
CHECK_DEPTHS = {"ccs": 3}


class InputError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    source: str | None = None
    depth: int | None = 5
    max_outputs: int = 16
    samples: int = 4
    seed: int = 0
    fmt: str = "text"
    nub: bool = False

    def sample_config(self, depth: int | None = None) -> SampleConfig:
        return SampleConfig(
            depth=self.depth if depth is None else depth,
            receive_samples=tuple(range(self.samples)),
            seed=self.seed,
        )


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def _seed(text: str) -> int:
    try:
        n = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not -(1 << 63) <= n < (1 << 64):
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return n


def bundled_programs() -> dict[str, str]:
    root = resources.files("bialg") / "programs"
    return {p.name: p.read_text(encoding="utf-8") for p in root.iterdir() if p.name.endswith(".ccs")}


def read_source(source: str | None, expr: str | None, stdin=None) -> str:
    """Inline ``-e`` text, ``-`` for standard input, or a file path.

    A path that does not exist but names a bundled program (``nats.ccs``,
    ``counter.ccs``, ``countertest.ccs``) falls back to the bundled copy.
    """
    if expr is not None:
        return expr
    if source is None:
        raise InputError("no source given (use a file path, '-' or -e)")
    if source == "-":
        return (stdin or sys.stdin).read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    bundled = bundled_programs()
    if path.name in bundled:
        return bundled[path.name]
    raise InputError(f"no such file: {source}")


def _add_common(p: argparse.ArgumentParser, depth_default):
    p.add_argument("source", nargs="?", help="source file, or '-' for standard input")
    p.add_argument("-e", "--expr", help="inline source text")
    p.add_argument("--depth", type=_positive, default=depth_default)
    p.add_argument("--samples", type=_positive, default=4,
                   help="tabulate receives at 0..N-1")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--fmt", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="bialg", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="group", required=True)

    c = sub.add_parser("ccs", help="value-passing CCS")
    csub = c.add_subparsers(dest="action", required=True)
    run = csub.add_parser("run", help="print the values a program outputs")
    _add_common(run, None)
    run.add_argument("--max-outputs", type=_positive, default=16)
    run.add_argument("--nub", action="store_true",
                     help="drop repeated values; --max-outputs then counts distinct values")
    _add_common(csub.add_parser("trace", help="print the truncated behaviour tree"), 5)

    for lang in ("razor", "stream"):
        g = sub.add_parser(lang, help=f"{lang} arithmetic")
        gsub = g.add_subparsers(dest="action", required=True)
        _add_common(gsub.add_parser("trace", help="print the truncated behaviour"), 5)

    chk = sub.add_parser("check", help="run property suites over generated terms")
    chk.add_argument("suite", choices=suites.SUITES)
    chk.add_argument("--lang", choices=LANGS + ("all",), default="all")
    chk.add_argument("--terms", type=_positive, default=100)
    chk.add_argument("--depth", type=_positive, default=None,
                     help="default 5, or 3 for ccs whose trees widen quickly")
    chk.add_argument("--samples", type=_positive, default=4)
    chk.add_argument("--seed", type=_seed, default=0)
    chk.add_argument("--size", type=_positive, default=None,
                     help="constructor budget per generated term")
    chk.add_argument("--exhaustive-size", type=_positive, default=6)
    chk.add_argument("--fmt", choices=("text", "json"), default="text")
    return top


def _seed_from_env(args) -> None:
    raw = os.environ.get("BIALG_SEED")
    if raw is not None:
        try:
            args.seed = _seed(raw)
        except argparse.ArgumentTypeError as e:
            raise InputError(f"BIALG_SEED: {e}") from None


def cmd_ccs_run(args, out) -> int:
    term = load(read_source(args.source, args.expr))
    values = ccs.outputs(ccs.sem_ccs(term), None if args.nub else args.max_outputs, args.depth)
    if args.nub:
        seen: list[int] = []
        for v in values:
            if v not in seen:
                seen.append(v)
                if len(seen) >= args.max_outputs:
                    break
        shown = seen
    else:
        shown = list(values)
    if args.fmt == "json":
        print(json.dumps(shown), file=out)
    else:
        for v in shown:
            print(v, file=out)
    return EXIT_OK


def cmd_trace(args, out) -> int:
    src = read_source(args.source, args.expr)
    cfg = CliConfig(args.group, depth=args.depth, samples=args.samples, seed=args.seed).sample_config()
    if args.group == "ccs":
        b = ccs.sem_ccs(load(src))
    elif args.group == "razor":
        b = razor.sem_razor(parse_arith(src, allow_amb=True))
    else:
        b = stream.sem_stream(parse_arith(src, allow_amb=False))
    tree = truncate(b, cfg)
    print(render.dumps(tree) if args.fmt == "json" else render.to_text(tree), file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    langs = list(LANGS) if args.lang == "all" else [args.lang]
    reports = []
    for lang in langs:
        depth = args.depth or CHECK_DEPTHS.get(lang, 5)
        cfg = SampleConfig(depth=depth, receive_samples=tuple(range(args.samples)), seed=args.seed)
        reports += suites.run_check(args.suite, lang, args.terms, cfg, args.size, args.exhaustive_size)
    if args.fmt == "json":
        rows = [
            {
                "suite": r.suite, "lang": r.lang, "ok": r.ok,
                "passed": r.passed, "failed": r.failed,
                "depth": r.cfg.depth, "samples": list(r.cfg.receive_samples), "seed": r.cfg.seed,
                "counterexample": r.counterexample, "notes": r.notes,
            }
            for r in reports
        ]
        print(json.dumps(rows, indent=2), file=out)
    else:
        for r in reports:
            for line in r.lines():
                print(line, file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        _seed_from_env(args)
        if args.group == "check":
            return cmd_check(args, out)
        if args.group == "ccs" and args.action == "run":
            return cmd_ccs_run(args, out)
        return cmd_trace(args, out)
    except (InputError, CcsSyntaxError, UnboundVariable, OSError, UnicodeDecodeError) as e:
        print(f"bialg: {e}", file=err)
        return EXIT_INPUT
    except ValueError as e:
        # e.g. negative values produced by a program
        print(f"bialg: {e}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

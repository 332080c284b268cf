"""Command-line entry point: ``hfset repl | eval | run | check``."""
from __future__ import annotations

import argparse
import sys
from typing import Iterable, Optional, TextIO

from hfset.cli.session import SessionEnv, execute
from hfset.cli.suites import SUITES, run_suite
from hfset.cli.syntax import parse_statement
from hfset.config import Limits
from hfset.errors import HFError, ParseError, UnboundIdentifierError, UnknownSuiteError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _error_code(err: Exception) -> int:
    if isinstance(err, (ParseError, UnboundIdentifierError, UnknownSuiteError)):
        return EXIT_USAGE
    return EXIT_FAIL


def run_lines(lines: Iterable[str], env: SessionEnv, out: TextIO, err: TextIO,
              prompt: Optional[str] = None) -> int:
    """Execute lines one by one; returns the worst exit code seen."""
    code = EXIT_OK
    lineno = 0
    while True:
        if prompt:
            out.write(prompt)
            out.flush()
        try:
            line = next(lines)
        except StopIteration:
            break
        lineno += 1
        stripped = line.strip()
        if prompt and stripped in (":q", ":quit", "quit", "exit"):
            break
        try:
            result = execute(parse_statement(stripped), env)
        except (HFError, ValueError, RecursionError) as exc:
            where = f"line {lineno}: " if not prompt else ""
            err.write(f"error: {where}{exc}\n")
            code = max(code, _error_code(exc))
            continue
        if result is not None:
            out.write(result + "\n")
    return code


def _env(args) -> SessionEnv:
    lim = Limits(max_size=args.max_size, max_rank=args.max_rank, fuel=args.fuel)
    return SessionEnv(limits=lim, seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    defaults = Limits()
    p = argparse.ArgumentParser(prog="hfset", description=__doc__)
    p.add_argument("--max-size", type=int, default=defaults.max_size)
    p.add_argument("--max-rank", type=int, default=defaults.max_rank)
    p.add_argument("--fuel", type=int, default=defaults.fuel)
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("repl", help="interactive session")
    ev = sub.add_parser("eval", help="evaluate one expression or command")
    ev.add_argument("-e", "--expr", required=True)
    run = sub.add_parser("run", help="run a batch file (one statement per line)")
    run.add_argument("file", type=argparse.FileType("r"))
    chk = sub.add_parser("check", help="run a property suite")
    chk.add_argument("--suite", required=True, help=", ".join(sorted(SUITES)))
    chk.add_argument("--size", type=int, default=100)
    chk.add_argument("--seed", type=int, dest="suite_seed", default=None,
                     help="suite seed (defaults to the global --seed)")
    return p


def main(argv=None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    env = _env(args)
    if args.command == "eval":
        return run_lines(iter([args.expr]), env, out, err)
    if args.command == "run":
        with args.file as fh:
            return run_lines(iter(fh.read().splitlines()), env, out, err)
    if args.command == "repl":
        interactive = sys.stdin.isatty()
        return run_lines(iter(sys.stdin.readline, ""), env, out, err,
                         prompt="hf> " if interactive else None)
    try:
        seed = args.seed if args.suite_seed is None else args.suite_seed
        report = run_suite(args.suite, args.size, seed)
    except UnknownSuiteError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.write(report.render() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

    termite <problem.trs | -> -s '<method> [flags]' [--timeout S] [--recheck]

The strategy string carries the method name plus its template flags, e.g.

    termite add.trs -s 'kbo -prec "+ > s > 0" -w0 1 -weights "+ = s = 0 = 1"'

Exit codes: 0 proof found (YES), 1 no proof within bounds (MAYBE), 2 any
error (bad file, parse error, invalid flags). `--recheck` re-runs every YES
with a template pinning all found parameters, as a self-check.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import ConfigError, TermiteError
from .solver import (
    METHODS,
    Outcome,
    SearchConfig,
    cert_to_strategy,
    prove,
    render_outcome,
)
from .templates import Mode, TemplateAst, parse_inters, parse_prec, parse_weights
from .trs import Trs, parse_trs


@dataclass(frozen=True)
class Strategy:
    method: str
    prec: Optional[str] = None
    w0: Optional[int] = None
    weights: Optional[str] = None
    inters: Optional[str] = None
    dim: Optional[int] = None
    weight_bound: Optional[int] = None
    coeff_bound: Optional[int] = None
    entry_bound: Optional[int] = None
    quasi: bool = False


_VALUE_FLAGS = {
    "-prec": "prec",
    "-w0": "w0",
    "-weights": "weights",
    "-inters": "inters",
    "-dim": "dim",
    "-wb": "weight_bound",
    "-cb": "coeff_bound",
    "-eb": "entry_bound",
}
_BOOL_FLAGS = {"-quasi": "quasi", "-direct": None}
_INT_FLAGS = {"-w0", "-dim", "-wb", "-cb", "-eb"}

_ALLOWED = {
    "lpo": {"-prec", "-quasi"},
    "kbo": {"-prec", "-w0", "-weights", "-wb", "-quasi"},
    "poly": {"-inters", "-cb"},
    "matrix": {"-inters", "-dim", "-eb", "-direct"},
}


def parse_strategy(text: str) -> Strategy:
    try:
        words = shlex.split(text)
    except ValueError as e:
        raise ConfigError(f"unreadable strategy string: {e}")
    if not words:
        raise ConfigError("empty strategy")
    method = words[0]
    if method not in METHODS:
        raise ConfigError(
            f"unknown method '{method}' (expected one of {', '.join(METHODS)})"
        )
    fields: dict = {"method": method}
    i = 1
    while i < len(words):
        flag = words[i]
        if flag not in _VALUE_FLAGS and flag not in _BOOL_FLAGS:
            raise ConfigError(f"unknown flag '{flag}'")
        if flag not in _ALLOWED[method]:
            raise ConfigError(f"flag {flag} is not valid for {method}")
        if flag in _BOOL_FLAGS:
            if _BOOL_FLAGS[flag] is not None:
                fields[_BOOL_FLAGS[flag]] = True
            i += 1
            continue
        if i + 1 >= len(words):
            raise ConfigError(f"missing argument for {flag}")
        arg = words[i + 1]
        name = _VALUE_FLAGS[flag]
        if name in fields:
            raise ConfigError(f"duplicate flag {flag}")
        if flag in _INT_FLAGS:
            try:
                value: object = int(arg)
            except ValueError:
                raise ConfigError(f"{flag} expects an integer, got '{arg}'")
        else:
            value = arg
        fields[name] = value
        i += 2
    return Strategy(**fields)


@dataclass(frozen=True)
class Job:
    """A parsed strategy bound to a search configuration."""

    method: str
    cfg: SearchConfig
    prec: Optional[TemplateAst] = None
    weights: Optional[TemplateAst] = None
    inters: Optional[TemplateAst] = None
    w0: Optional[int] = None


def prepare(strategy: Strategy, timeout: Optional[float] = None) -> Job:
    cfg = SearchConfig(
        weight_bound=strategy.weight_bound if strategy.weight_bound is not None else 7,
        coeff_bound=strategy.coeff_bound if strategy.coeff_bound is not None else 3,
        entry_bound=strategy.entry_bound if strategy.entry_bound is not None else 3,
        dim=strategy.dim,
        quasi=strategy.quasi,
        time_limit=timeout,
    )
    prec = parse_prec(strategy.prec) if strategy.prec is not None else None
    weights = parse_weights(strategy.weights) if strategy.weights is not None else None
    inters = None
    if strategy.inters is not None:
        mode = Mode.POLY if strategy.method == "poly" else Mode.MATRIX
        inters = parse_inters(strategy.inters, mode)
    return Job(strategy.method, cfg, prec, weights, inters, strategy.w0)


def execute(trs: Trs, job: Job) -> Outcome:
    return prove(
        trs,
        job.method,
        job.cfg,
        prec=job.prec,
        weights=job.weights,
        inters=job.inters,
        w0=job.w0,
    )


def run(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="termite",
        description="Termination prover for first-order term rewrite systems.",
    )
    parser.add_argument("problem", help="TRS file in (VAR..)(RULES..) format, or - for stdin")
    parser.add_argument(
        "-s",
        "--strategy",
        required=True,
        help="method and flags, e.g. 'kbo -prec \"f > g\"'",
    )
    parser.add_argument("--timeout", type=float, default=None, help="seconds")
    parser.add_argument(
        "--recheck",
        action="store_true",
        help="verify every YES by re-proving with all parameters pinned",
    )
    args = parser.parse_args(argv)

    try:
        if args.problem == "-":
            text = sys.stdin.read()
        else:
            text = Path(args.problem).read_text()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    try:
        trs = parse_trs(text)
        strategy = parse_strategy(args.strategy)
        outcome = execute(trs, prepare(strategy, args.timeout))
    except TermiteError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(render_outcome(outcome, strategy.method))

    if outcome.is_yes and args.recheck:
        pinned = cert_to_strategy(outcome.certificate)
        try:
            again = execute(trs, prepare(parse_strategy(pinned), args.timeout))
        except TermiteError as e:
            print(f"error: recheck failed to run: {e}", file=sys.stderr)
            return 2
        if not again.is_yes:
            print(f"error: recheck did not confirm the proof: {pinned}", file=sys.stderr)
            return 2
    return 0 if outcome.is_yes else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

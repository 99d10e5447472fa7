#!/usr/bin/env python3
"""Prove termination of a few small systems with each method and print
the proofs, including template-restricted runs."""

from termite.cli import execute, parse_strategy, prepare
from termite.solver import render_outcome
from termite.trs import parse_trs

ADDITION = """\
(VAR x y)
(RULES
  +(0,y) -> y
  +(s(x),y) -> s(+(x,y))
)
"""

NESTING = "(VAR x y)(RULES g(x,y) -> x f(g(x,y)) -> g(f(x),y) h(x,y) -> x)"

SHOWCASE = [
    ("addition, unrestricted kbo", ADDITION, "kbo"),
    ("addition, unrestricted lpo", ADDITION, "lpo"),
    ("addition, unrestricted poly", ADDITION, "poly"),
    (
        "addition, fully fixed kbo parameters",
        ADDITION,
        'kbo -prec "+ > s > 0" -w0 1 -weights "+ = s = 0 = 1"',
    ),
    (
        "addition, fixed matrix interpretation",
        ADDITION,
        'matrix -inters "0 = 0, s = x0 + 1, + = [1,1;0,1]x0 + x1 + [1;0]"',
    ),
    (
        "addition, combined poly template",
        ADDITION,
        'poly -inters "AND(+ = _ + 2, OR(NOT(0 = 0), s = x0 + 1))"',
    ),
    (
        "nesting, upper triangular matrix shape",
        NESTING,
        'matrix -inters "f=g=h=[1,_,_;0,1,_;0,0,1]x0+_, g=h=[1,_,_;0,1,_;0,0,1]x1+_"',
    ),
    ("a self loop stays unproven", "(VAR x)(RULES f(x) -> f(x))", "lpo"),
]


def main() -> None:
    for title, problem, strategy in SHOWCASE:
        trs = parse_trs(problem)
        strat = parse_strategy(strategy)
        outcome = execute(trs, prepare(strat, timeout=10.0))
        print(f"## {title}")
        print(f"$ termite problem.trs -s '{strategy}'")
        print(render_outcome(outcome, strat.method))


if __name__ == "__main__":
    main()

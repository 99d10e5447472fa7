"""Lexicographic path order and Knuth-Bendix order over concrete parameters.

A precedence is a total level map over symbol names. In quasi mode equal
levels mean equivalent symbols; in strict mode equal levels of distinct
symbols mean incomparable (every symbol still compares EQ to itself).
All functions are pure; values are immutable and freely shareable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .trs import App, Symbol, Term, Var, var_counts


class Cmp(enum.Enum):
    GT = "GT"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class Precedence:
    levels: Mapping[str, int]
    quasi: bool = False


@dataclass(frozen=True)
class WeightFn:
    w0: int
    weights: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.w0 < 1:
            raise ValueError("variable weight w0 must be at least 1")
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("symbol weights must be naturals")


def prec_compare(p: Precedence, f: str, g: str) -> Cmp:
    lf, lg = p.levels[f], p.levels[g]
    if lf > lg:
        return Cmp.GT
    if lf == lg and (f == g or p.quasi):
        return Cmp.EQ
    return Cmp.INCOMPARABLE


def lpo_gt(p: Precedence, s: Term, t: Term) -> bool:
    """s > t in the lexicographic path order induced by p.

    Cases for s = f(s1..sn):
      (i)   some si equals t or si > t,
      (ii)  f above root(t), and s > tj for every argument tj,
      (iii) f equivalent to root(t), equal arity, arguments lexicographically
            greater at the leftmost difference, and s > tj for every tj.
    Variables are minimal: s > x iff x occurs properly in s.
    """
    if isinstance(s, Var):
        return False
    if isinstance(t, Var):
        return t.name in var_counts(s)
    if any(si == t or lpo_gt(p, si, t) for si in s.args):
        return True
    c = prec_compare(p, s.sym.name, t.sym.name)
    if c is Cmp.GT:
        return all(lpo_gt(p, s, tj) for tj in t.args)
    if c is Cmp.EQ and s.sym.arity == t.sym.arity:
        for si, ti in zip(s.args, t.args):
            if si == ti:
                continue
            return lpo_gt(p, si, ti) and all(lpo_gt(p, s, tj) for tj in t.args)
        return False  # arguments all equal: s = t up to equivalent roots
    return False


def kbo_weight(wf: WeightFn, t: Term) -> int:
    if isinstance(t, Var):
        return wf.w0
    return wf.weights[t.sym.name] + sum(kbo_weight(wf, a) for a in t.args)


def kbo_admissible(p: Precedence, wf: WeightFn, sig: Iterable[Symbol]) -> bool:
    """w(c) >= w0 for constants; a weight-0 unary symbol must be maximal."""
    symbols = list(sig)
    for s in symbols:
        if s.arity == 0 and wf.weights[s.name] < wf.w0:
            return False
        if s.arity == 1 and wf.weights[s.name] == 0:
            for g in symbols:
                if prec_compare(p, s.name, g.name) not in (Cmp.GT, Cmp.EQ):
                    return False
    return True


def kbo_gt(p: Precedence, wf: WeightFn, s: Term, t: Term) -> bool:
    """s > t in the Knuth-Bendix order (admissibility is the caller's duty)."""
    sc, tc = var_counts(s), var_counts(t)
    if any(sc[x] < n for x, n in tc.items()):
        return False
    ws, wt = kbo_weight(wf, s), kbo_weight(wf, t)
    if ws > wt:
        return True
    if ws < wt:
        return False
    if isinstance(s, Var):
        return False
    if isinstance(t, Var):
        # equal weights: s must be f^n(x) for a weight-0 unary f, n >= 1
        f = s.sym
        if f.arity != 1 or wf.weights[f.name] != 0:
            return False
        cur: Term = s
        while isinstance(cur, App):
            if cur.sym != f:
                return False
            cur = cur.args[0]
        return cur.name == t.name
    c = prec_compare(p, s.sym.name, t.sym.name)
    if c is Cmp.GT:
        return True
    if c is Cmp.EQ and s.sym.arity == t.sym.arity:
        for si, ti in zip(s.args, t.args):
            if si == ti:
                continue
            return kbo_gt(p, wf, si, ti)
    return False


# ---------------------------------------------------------------------------
# Proof printing
# ---------------------------------------------------------------------------


def format_precedence(p: Precedence, order: Sequence[str]) -> str:
    """Symbols by descending level, `>` between levels, `~` within a level.

    `order` fixes the tie order (signature first-occurrence order).
    """
    by_level: dict[int, list[str]] = {}
    for name in order:
        by_level.setdefault(p.levels[name], []).append(name)
    groups = [by_level[lvl] for lvl in sorted(by_level, reverse=True)]
    return " > ".join(" ~ ".join(g) for g in groups)


def format_weights(wf: WeightFn, order: Sequence[str]) -> str:
    return ", ".join(f"w({name}) = {wf.weights[name]}" for name in order)

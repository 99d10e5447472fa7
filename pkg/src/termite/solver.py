"""Bounded parameter search for the four proof methods.

The search space of each method is a list of small integer parameters (symbol
weights, precedence levels, interpretation coefficients). Templates are
normalized to DNF; within a disjunct, exact atoms pin parameter domains,
bound atoms clip them, and everything relational or negated becomes a
post-filter. A deterministic backtracking enumeration (domains ascending,
symbols in first-occurrence order) then looks for the first candidate that
orients every rule; rule checks run as early as their parameters are
assigned, which is what makes heavily templated spaces tractable.

Every YES is re-validated through check_certificate before it is returned.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from .errors import ConfigError
from .interp import (
    Interp,
    MatFunc,
    MatrixInterp,
    PolyFunc,
    PolyInterp,
    format_interp,
    format_mat_func,
    format_poly_func,
    identity,
    monotone,
    orients,
)
from .orders import (
    Cmp,
    Precedence,
    WeightFn,
    format_precedence,
    format_weights,
    kbo_admissible,
    kbo_gt,
    kbo_weight,
    lpo_gt,
    prec_compare,
)
from .templates import (
    CheckedTemplate,
    Coef,
    Const,
    Disjunct,
    Hole,
    IntersAtom,
    Lit,
    MatrixLit,
    Mode,
    PrecAtom,
    TemplateAst,
    VecShorthand,
    WeightsAtom,
    evaluate,
    lit_holds,
    parse_inters,
    parse_prec,
    parse_weights,
    to_dnf,
    validate,
)
from .trs import App, Rule, Trs, subterms, var_counts

METHODS = ("lpo", "kbo", "poly", "matrix")


@dataclass(frozen=True)
class SearchConfig:
    weight_bound: int = 7
    coeff_bound: int = 3
    entry_bound: int = 3
    dim: Optional[int] = None  # matrix only; template literals win
    quasi: bool = False
    time_limit: Optional[float] = None

    def __post_init__(self):
        if self.weight_bound < 1 or self.coeff_bound < 1 or self.entry_bound < 1:
            raise ConfigError("search bounds must be at least 1")
        if self.dim is not None and self.dim < 1:
            raise ConfigError("dimension must be at least 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ConfigError("time limit must be positive")


class MaybeReason(enum.Enum):
    EXHAUSTED = "Exhausted"
    TEMPLATE_UNSAT = "TemplateUnsatisfiable"
    TIMEOUT = "Timeout"


@dataclass(frozen=True)
class Certificate:
    method: str
    order: tuple[str, ...]  # symbols, first-occurrence order, for printing
    precedence: Optional[Precedence] = None
    weights: Optional[WeightFn] = None
    interp: Optional[Interp] = None


@dataclass(frozen=True)
class Outcome:
    certificate: Optional[Certificate] = None
    reason: Optional[MaybeReason] = None

    @property
    def is_yes(self) -> bool:
        return self.certificate is not None

    @classmethod
    def yes(cls, cert: Certificate) -> "Outcome":
        return cls(certificate=cert)

    @classmethod
    def maybe(cls, reason: MaybeReason) -> "Outcome":
        return cls(reason=reason)


# ---------------------------------------------------------------------------
# Domains
# ---------------------------------------------------------------------------


@dataclass
class _Domain:
    """Candidate values of one parameter.

    hard_lo is a validity floor (w0 >= 1, argument coefficients >= 1) that
    nothing may undercut. soft_hi is the configured search bound; an exact
    pin may exceed it (pinning states the value outright), while explicit
    <=/>= clips intersect with the default range and do apply to pins.
    """

    hard_lo: int
    soft_hi: int
    pin: Optional[int] = None
    dead: bool = False
    lo: Optional[int] = None
    hi: Optional[int] = None

    def set_pin(self, v: int) -> None:
        if self.pin is not None and self.pin != v:
            self.dead = True
        else:
            self.pin = v

    def clip_lo(self, v: int) -> None:
        self.lo = v if self.lo is None else max(self.lo, v)

    def clip_hi(self, v: int) -> None:
        self.hi = v if self.hi is None else min(self.hi, v)

    def values(self) -> list[int]:
        if self.dead:
            return []
        if self.pin is not None:
            ok = (
                self.pin >= self.hard_lo
                and (self.lo is None or self.pin >= self.lo)
                and (self.hi is None or self.pin <= self.hi)
            )
            return [self.pin] if ok else []
        a = self.hard_lo if self.lo is None else max(self.hard_lo, self.lo)
        b = self.soft_hi if self.hi is None else min(self.soft_hi, self.hi)
        return list(range(a, b + 1))


class _Space:
    """Ordered parameter list with by-key lookup."""

    def __init__(self, arities: Mapping[str, int]):
        self.arities = arities
        self.keys: list[tuple] = []
        self.domains: list[_Domain] = []
        self.index: dict[tuple, int] = {}

    def add(self, key: tuple, dom: _Domain) -> None:
        self.index[key] = len(self.keys)
        self.keys.append(key)
        self.domains.append(dom)

    def domain(self, key: tuple) -> _Domain:
        return self.domains[self.index[key]]


# ---------------------------------------------------------------------------
# Template-driven domain restriction
# ---------------------------------------------------------------------------


def restrict_domains(
    disjunct: Disjunct, space: _Space, dim: Optional[int] = None
) -> list[Lit]:
    """Apply one DNF disjunct to a parameter space.

    Positive exact atoms pin domains, weight bound atoms clip them;
    precedence atoms (relational) and all negated literals are returned as
    post-filters to run on assembled candidates. Emptied domains surface
    later as an unsatisfiable disjunct.
    """
    filters: list[Lit] = []
    for lit in disjunct:
        atom = lit.atom
        if lit.negated or isinstance(atom, PrecAtom):
            filters.append(lit)
            continue
        if isinstance(atom, WeightsAtom):
            for s in atom.symbols:
                d = space.domain(("w", s))
                if atom.rel == "=":
                    d.set_pin(atom.weight)
                elif atom.rel == "<=":
                    d.clip_hi(atom.weight)
                else:
                    d.clip_lo(atom.weight)
        elif isinstance(atom, IntersAtom):
            if atom.mode is Mode.POLY:
                _apply_poly_atom(atom, space)
            else:
                assert dim is not None
                _apply_matrix_atom(atom, space, dim)
    return filters


def _apply_poly_atom(atom: IntersAtom, space: _Space) -> None:
    has_hole = any(isinstance(m, Hole) for m in atom.monomials)
    for s in atom.symbols:
        mentioned: set[int] = set()
        const_pinned = False
        for mono in atom.monomials:
            if isinstance(mono, Coef):
                mentioned.add(mono.index)
                want = 1 if mono.coeff is None else mono.coeff
                space.domain(("coef", s, mono.index)).set_pin(want)
            elif isinstance(mono, Const):
                const_pinned = True
                space.domain(("const", s)).set_pin(mono.value)
        if not has_hole:
            for i in range(space.arities[s]):
                if i not in mentioned:
                    space.domain(("coef", s, i)).set_pin(0)
            if not const_pinned:
                space.domain(("const", s)).set_pin(0)


def _pin_entries(space: _Space, s: str, i: int, grid: Sequence[Sequence[Optional[int]]]) -> None:
    for r, row in enumerate(grid):
        for c, e in enumerate(row):
            if e is not None:
                space.domain(("entry", s, i, r, c)).set_pin(e)


def _apply_matrix_atom(atom: IntersAtom, space: _Space, dim: int) -> None:
    has_hole = any(isinstance(m, Hole) for m in atom.monomials)
    for s in atom.symbols:
        mentioned: set[int] = set()
        const_pinned = False
        for mono in atom.monomials:
            if isinstance(mono, Coef):
                mentioned.add(mono.index)
                if mono.coeff is None:
                    _pin_entries(space, s, mono.index, identity(dim))
                elif isinstance(mono.coeff, int):
                    scaled = [
                        [mono.coeff if r == c else 0 for c in range(dim)]
                        for r in range(dim)
                    ]
                    _pin_entries(space, s, mono.index, scaled)
                else:
                    _pin_entries(space, s, mono.index, mono.coeff.entries)
            elif isinstance(mono, Const):
                const_pinned = True
                if isinstance(mono.value, VecShorthand):
                    v = 0 if mono.value is VecShorthand.ZERO else 1
                    for r in range(dim):
                        space.domain(("vconst", s, r)).set_pin(v)
                else:
                    for r, row in enumerate(mono.value.entries):
                        if row[0] is not None:
                            space.domain(("vconst", s, r)).set_pin(row[0])
        if not has_hole:
            for i in range(space.arities[s]):
                if i not in mentioned:
                    _pin_entries(
                        space, s, i, [[0] * dim for _ in range(dim)]
                    )
            if not const_pinned:
                for r in range(dim):
                    space.domain(("vconst", s, r)).set_pin(0)


# ---------------------------------------------------------------------------
# Backtracking engine
# ---------------------------------------------------------------------------


class _Timeout(Exception):
    pass


_Check = Callable[[list[int]], bool]


def _backtrack(
    domains: list[list[int]],
    checks: Mapping[int, list[_Check]],
    deadline: Optional[float],
) -> Optional[list[int]]:
    n = len(domains)
    vals = [0] * n

    def bt(d: int) -> bool:
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout
        if d == n:
            return True
        for v in domains[d]:
            vals[d] = v
            if all(chk(vals) for chk in checks.get(d, ())) and bt(d + 1):
                return True
        return False

    return vals if bt(0) else None


def _rule_symbols(rule: Rule) -> set[str]:
    out = set()
    for side in (rule.lhs, rule.rhs):
        for t in subterms(side):
            if isinstance(t, App):
                out.add(t.sym.name)
    return out


# ---------------------------------------------------------------------------
# Method drivers
# ---------------------------------------------------------------------------


def _prove_path_order(
    trs: Trs,
    method: str,
    cfg: SearchConfig,
    prec_dnf: list[Disjunct],
    weights_dnf: list[Disjunct],
    w0: Optional[int],
    quasi: bool,
    deadline: Optional[float],
) -> Outcome:
    symbols = [s.name for s in trs.signature]
    arities = trs.arities()
    kbo = method == "kbo"
    top = max(len(symbols) - 1, 0)
    searched = False

    if kbo and any(var_counts(r.rhs) - var_counts(r.lhs) for r in trs.rules):
        return Outcome.maybe(MaybeReason.EXHAUSTED)

    for pd in prec_dnf:
        for wd in weights_dnf:
            space = _Space(arities)
            if kbo:
                space.add(("w0",), _Domain(1, cfg.weight_bound))
                for s in symbols:
                    space.add(("w", s), _Domain(0, cfg.weight_bound))
            for s in symbols:
                space.add(("level", s), _Domain(0, top))
            if kbo and w0 is not None:
                space.domain(("w0",)).set_pin(w0)
            filters = restrict_domains(pd + wd, space)
            if any(not d.values() for d in space.domains):
                continue
            searched = True

            lvl = {s: space.index[("level", s)] for s in symbols}
            widx = {s: space.index[("w", s)] for s in symbols} if kbo else {}

            def prec_of(vals: list[int], syms) -> Precedence:
                return Precedence({s: vals[lvl[s]] for s in syms}, quasi)

            def wf_of(vals: list[int], syms) -> WeightFn:
                return WeightFn(vals[0], {s: vals[widx[s]] for s in syms})

            checks: dict[int, list[_Check]] = {}

            def at(depth: int, chk: _Check) -> None:
                checks.setdefault(depth, []).append(chk)

            if kbo:
                for s in symbols:
                    if arities[s] == 0:
                        at(widx[s], lambda v, i=widx[s]: v[i] >= v[0])
                for rule in trs.rules:
                    syms = _rule_symbols(rule)
                    at(
                        max(widx[s] for s in syms),
                        lambda v, r=rule, ss=syms: kbo_weight(wf_of(v, ss), r.lhs)
                        >= kbo_weight(wf_of(v, ss), r.rhs),
                    )

            for rule in trs.rules:
                syms = _rule_symbols(rule)
                depth = max(lvl[s] for s in syms)
                if kbo:
                    at(
                        depth,
                        lambda v, r=rule, ss=syms: kbo_gt(
                            prec_of(v, ss), wf_of(v, ss), r.lhs, r.rhs
                        ),
                    )
                else:
                    at(
                        depth,
                        lambda v, r=rule, ss=syms: lpo_gt(prec_of(v, ss), r.lhs, r.rhs),
                    )

            if kbo and symbols:
                last = space.index[("level", symbols[-1])]

                def admissible(vals: list[int]) -> bool:
                    p = prec_of(vals, symbols)
                    for s in symbols:
                        if arities[s] == 1 and vals[widx[s]] == 0:
                            if any(
                                prec_compare(p, s, g) not in (Cmp.GT, Cmp.EQ)
                                for g in symbols
                            ):
                                return False
                    return True

                at(last, admissible)

            for lit in filters:
                if isinstance(lit.atom, PrecAtom):
                    syms = set(lit.atom.items)
                    at(
                        max(lvl[s] for s in syms),
                        lambda v, l=lit, ss=syms: lit_holds(l, prec_of(v, ss)),
                    )
                else:  # negated weights atom
                    syms = set(lit.atom.symbols)
                    at(
                        max(widx[s] for s in syms),
                        lambda v, l=lit, ss=syms: lit_holds(l, wf_of(v, ss)),
                    )

            sol = _backtrack([d.values() for d in space.domains], checks, deadline)
            if sol is not None:
                prec = Precedence({s: sol[lvl[s]] for s in symbols}, quasi)
                wf = (
                    WeightFn(sol[0], {s: sol[widx[s]] for s in symbols})
                    if kbo
                    else None
                )
                return Outcome.yes(
                    Certificate(method, tuple(symbols), precedence=prec, weights=wf)
                )
    return Outcome.maybe(
        MaybeReason.EXHAUSTED if searched else MaybeReason.TEMPLATE_UNSAT
    )


def _prove_interp(
    trs: Trs,
    method: str,
    cfg: SearchConfig,
    inters_dnf: list[Disjunct],
    dim: int,
    deadline: Optional[float],
) -> Outcome:
    symbols = [s.name for s in trs.signature]
    arities = trs.arities()
    poly = method == "poly"
    searched = False

    for disjunct in inters_dnf:
        space = _Space(arities)
        for s in symbols:
            if poly:
                for i in range(arities[s]):
                    space.add(("coef", s, i), _Domain(1, cfg.coeff_bound))
                space.add(("const", s), _Domain(0, cfg.coeff_bound))
            else:
                for i in range(arities[s]):
                    for r in range(dim):
                        for c in range(dim):
                            lo = 1 if r == 0 and c == 0 else 0
                            space.add(("entry", s, i, r, c), _Domain(lo, cfg.entry_bound))
                for r in range(dim):
                    space.add(("vconst", s, r), _Domain(0, cfg.entry_bound))
        filters = restrict_domains(disjunct, space, dim=dim)
        if any(not d.values() for d in space.domains):
            continue
        searched = True

        last_param = {
            s: max(
                (space.index[k] for k in space.keys if k[1] == s),
                default=0,
            )
            for s in symbols
        }

        def func_of(vals: list[int], s: str):
            if poly:
                coefs = tuple(
                    vals[space.index[("coef", s, i)]] for i in range(arities[s])
                )
                return PolyFunc(coefs, vals[space.index[("const", s)]])
            mats = tuple(
                tuple(
                    tuple(
                        vals[space.index[("entry", s, i, r, c)]] for c in range(dim)
                    )
                    for r in range(dim)
                )
                for i in range(arities[s])
            )
            const = tuple(vals[space.index[("vconst", s, r)]] for r in range(dim))
            return MatFunc(mats, const)

        def interp_of(vals: list[int], syms) -> Interp:
            funcs = {s: func_of(vals, s) for s in syms}
            return PolyInterp(funcs) if poly else MatrixInterp(dim, funcs)

        checks: dict[int, list[_Check]] = {}
        for rule in trs.rules:
            syms = _rule_symbols(rule)
            depth = max(last_param[s] for s in syms)
            checks.setdefault(depth, []).append(
                lambda v, r=rule, ss=syms: orients(interp_of(v, ss), r)
            )
        for lit in filters:
            syms = set(lit.atom.symbols)
            depth = max(last_param[s] for s in syms)
            checks.setdefault(depth, []).append(
                lambda v, l=lit, ss=syms: lit_holds(l, interp_of(v, ss))
            )

        sol = _backtrack([d.values() for d in space.domains], checks, deadline)
        if sol is not None:
            return Outcome.yes(
                Certificate(method, tuple(symbols), interp=interp_of(sol, symbols))
            )
    return Outcome.maybe(
        MaybeReason.EXHAUSTED if searched else MaybeReason.TEMPLATE_UNSAT
    )


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def prove(
    trs: Trs,
    method: str,
    cfg: Optional[SearchConfig] = None,
    *,
    prec: TemplateAst | str | None = None,
    weights: TemplateAst | str | None = None,
    inters: TemplateAst | str | None = None,
    w0: Optional[int] = None,
) -> Outcome:
    cfg = cfg or SearchConfig()
    if method not in METHODS:
        raise ConfigError(f"unknown method '{method}'")
    if w0 is not None and w0 < 1:
        raise ConfigError("w0 must be at least 1")
    if prec is not None and method not in ("lpo", "kbo"):
        raise ConfigError("a precedence template applies only to lpo and kbo")
    if (weights is not None or w0 is not None) and method != "kbo":
        raise ConfigError("weights apply only to kbo")
    if inters is not None and method not in ("poly", "matrix"):
        raise ConfigError("an interpretation template applies only to poly and matrix")
    if isinstance(prec, str):
        prec = parse_prec(prec)
    if isinstance(weights, str):
        weights = parse_weights(weights)
    if isinstance(inters, str):
        inters = parse_inters(inters, Mode.POLY if method == "poly" else Mode.MATRIX)
    arities = trs.arities()

    quasi = cfg.quasi
    checked_prec: Optional[CheckedTemplate] = None
    if prec is not None:
        checked_prec = validate(prec, arities)
        quasi = quasi or checked_prec.quasi
    if weights is not None:
        validate(weights, arities)

    dim = cfg.dim
    if inters is not None:
        mode = Mode.POLY if method == "poly" else Mode.MATRIX
        ct = validate(inters, arities, mode, cfg.dim)
        if ct.dim is not None:
            dim = ct.dim
    if method == "matrix" and dim is None:
        dim = 2

    deadline = (
        time.monotonic() + cfg.time_limit if cfg.time_limit is not None else None
    )
    prec_dnf = to_dnf(prec) if prec is not None else [()]
    weights_dnf = to_dnf(weights) if weights is not None else [()]
    inters_dnf = to_dnf(inters) if inters is not None else [()]

    try:
        if method in ("lpo", "kbo"):
            outcome = _prove_path_order(
                trs, method, cfg, prec_dnf, weights_dnf, w0, quasi, deadline
            )
        else:
            outcome = _prove_interp(trs, method, cfg, inters_dnf, dim or 1, deadline)
    except _Timeout:
        return Outcome.maybe(MaybeReason.TIMEOUT)

    if outcome.is_yes:
        fails = certificate_failures(
            trs, outcome.certificate, prec=prec, weights=weights, inters=inters, w0=w0
        )
        if fails:
            raise AssertionError(f"internal: unsound certificate: {'; '.join(fails)}")
    return outcome


# ---------------------------------------------------------------------------
# Certificate checking
# ---------------------------------------------------------------------------


def certificate_failures(
    trs: Trs,
    cert: Certificate,
    *,
    prec: TemplateAst | str | None = None,
    weights: TemplateAst | str | None = None,
    inters: TemplateAst | str | None = None,
    w0: Optional[int] = None,
) -> list[str]:
    """Independent validation of a certificate; empty list means valid."""
    from .trs import format_rule

    if isinstance(prec, str):
        prec = parse_prec(prec)
    if isinstance(weights, str):
        weights = parse_weights(weights)
    if isinstance(inters, str):
        inters = parse_inters(
            inters, Mode.POLY if cert.method == "poly" else Mode.MATRIX
        )

    fails: list[str] = []
    names = [s.name for s in trs.signature]

    if cert.method in ("lpo", "kbo"):
        p = cert.precedence
        if p is None:
            return ["missing precedence"]
        missing = [s for s in names if s not in p.levels]
        if missing:
            return [f"precedence does not cover {', '.join(missing)}"]
        if cert.method == "kbo":
            wf = cert.weights
            if wf is None:
                return ["missing weight function"]
            missing = [s for s in names if s not in wf.weights]
            if missing:
                return [f"weights do not cover {', '.join(missing)}"]
            if w0 is not None and wf.w0 != w0:
                fails.append(f"w0 is {wf.w0}, required {w0}")
            if not kbo_admissible(p, wf, trs.signature):
                fails.append("weight function not admissible")
            for r in trs.rules:
                if not kbo_gt(p, wf, r.lhs, r.rhs):
                    fails.append(f"rule not oriented: {format_rule(r)}")
            if weights is not None and not evaluate(weights, wf):
                fails.append("weights template not satisfied")
        else:
            for r in trs.rules:
                if not lpo_gt(p, r.lhs, r.rhs):
                    fails.append(f"rule not oriented: {format_rule(r)}")
        if prec is not None and not evaluate(prec, p):
            fails.append("precedence template not satisfied")
    else:
        interp = cert.interp
        if interp is None:
            return ["missing interpretation"]
        funcs = interp.funcs
        for s in trs.signature:
            f = funcs.get(s.name)
            if f is None:
                return [f"interpretation does not cover {s.name}"]
            n = len(f.coeffs) if isinstance(interp, PolyInterp) else len(f.mats)
            if n != s.arity:
                return [f"interpretation of {s.name} has arity {n}, expected {s.arity}"]
        if not monotone(interp):
            fails.append("interpretation not monotone")
        for r in trs.rules:
            if not orients(interp, r):
                fails.append(f"rule not oriented: {format_rule(r)}")
        if inters is not None and not evaluate(inters, interp):
            fails.append("interpretation template not satisfied")
    return fails


def check_certificate(
    trs: Trs,
    cert: Certificate,
    *,
    prec: Optional[TemplateAst] = None,
    weights: Optional[TemplateAst] = None,
    inters: Optional[TemplateAst] = None,
    w0: Optional[int] = None,
) -> bool:
    return not certificate_failures(
        trs, cert, prec=prec, weights=weights, inters=inters, w0=w0
    )


# ---------------------------------------------------------------------------
# Rendering and recheck support
# ---------------------------------------------------------------------------


def format_certificate(cert: Certificate) -> list[str]:
    if cert.method == "lpo":
        return [f"precedence: {format_precedence(cert.precedence, cert.order)}"]
    if cert.method == "kbo":
        return [
            f"precedence: {format_precedence(cert.precedence, cert.order)}",
            f"w0 = {cert.weights.w0}",
            format_weights(cert.weights, cert.order),
        ]
    lines = []
    if cert.method == "matrix":
        lines.append(f"dim = {cert.interp.dim}")
    lines.extend(format_interp(cert.interp, cert.order))
    return lines


def proof_body(outcome: Outcome, method: str) -> str:
    if outcome.is_yes:
        return "\n".join([method] + format_certificate(outcome.certificate))
    return f"{method}\n{outcome.reason.value}"


def render_outcome(outcome: Outcome, method: str) -> str:
    head = "YES" if outcome.is_yes else "MAYBE"
    return f"{head}\n\n{proof_body(outcome, method)}\n"


def _prec_chain(p: Precedence, order: Sequence[str]) -> Optional[str]:
    """Render a precedence as a prec template chain, or None if fewer than
    two symbols. Ties come out as `=`, which switches rechecking to quasi
    mode; that only ever enlarges the order, so YES is preserved."""
    if len(order) < 2:
        return None
    ranked = sorted(order, key=lambda s: (-p.levels[s], order.index(s)))
    parts = [ranked[0]]
    for a, b in zip(ranked, ranked[1:]):
        parts.append(">" if p.levels[a] > p.levels[b] else "=")
        parts.append(b)
    return " ".join(parts)


def cert_to_strategy(cert: Certificate) -> str:
    """A strategy string whose template pins every parameter of `cert`."""
    if cert.method in ("lpo", "kbo"):
        parts = [cert.method]
        chain = _prec_chain(cert.precedence, cert.order)
        if chain is not None:
            parts.append(f'-prec "{chain}"')
        if cert.method == "kbo":
            wf = cert.weights
            parts.append(f"-w0 {wf.w0}")
            if cert.order:
                groups: dict[int, list[str]] = {}
                for s in cert.order:
                    groups.setdefault(wf.weights[s], []).append(s)
                atoms = [
                    f"{' = '.join(syms)} = {w}" for w, syms in groups.items()
                ]
                parts.append(f'-weights "{", ".join(atoms)}"')
        return " ".join(parts)
    interp = cert.interp
    atoms = []
    for s in cert.order:
        if cert.method == "poly":
            atoms.append(f"{s} = {format_poly_func(interp.funcs[s])}")
        else:
            atoms.append(f"{s} = {format_mat_func(interp.funcs[s], interp.dim)}")
    parts = [cert.method]
    if cert.method == "matrix":
        parts.append(f"-dim {interp.dim}")
    if atoms:
        parts.append(f'-inters "{", ".join(atoms)}"')
    return " ".join(parts)

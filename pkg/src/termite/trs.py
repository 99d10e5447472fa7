"""First-order terms, rewrite rules, and the classic `(VAR ...)(RULES ...)`
problem format.

Terms are prefix applications `f(t1,...,tn)`; constants may be written bare.
A symbol's arity is inferred from its first use and enforced afterwards.
Parsed values are immutable and safe to share between concurrent provers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ParseError


@dataclass(frozen=True)
class Symbol:
    name: str
    arity: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    sym: Symbol
    args: tuple["Term", ...]

    def __post_init__(self):
        if len(self.args) != self.sym.arity:
            raise ValueError(
                f"symbol {self.sym.name} has arity {self.sym.arity}, "
                f"got {len(self.args)} arguments"
            )


Term = Union[Var, App]


@dataclass(frozen=True)
class Rule:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Trs:
    """A rewrite system: rules in input order, signature in first-occurrence
    order (the order seeds deterministic parameter search), declared variables
    in declaration order."""

    rules: tuple[Rule, ...]
    signature: tuple[Symbol, ...]
    variables: tuple[str, ...]

    def arities(self) -> dict[str, int]:
        return {s.name: s.arity for s in self.signature}

    def symbol(self, name: str) -> Symbol:
        for s in self.signature:
            if s.name == name:
                return s
        raise KeyError(name)


def subterms(t: Term) -> Iterator[Term]:
    """Pre-order traversal, t itself first."""
    yield t
    if isinstance(t, App):
        for a in t.args:
            yield from subterms(a)


def term_vars(t: Term) -> set[str]:
    return {s.name for s in subterms(t) if isinstance(s, Var)}


def var_counts(t: Term) -> Counter:
    return Counter(s.name for s in subterms(t) if isinstance(s, Var))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_PUNCT = {"(", ")", ","}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "(" | ")" | "," | "->" | "word"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c in _PUNCT:
            toks.append(_Tok(c, c, line, col))
            col += 1
            i += 1
            continue
        if text.startswith("->", i):
            toks.append(_Tok("->", "->", line, col))
            col += 2
            i += 2
            continue
        # word: maximal run up to whitespace, punctuation, or the arrow
        start, scol = i, col
        while i < n:
            c = text[i]
            if c.isspace() or c in _PUNCT or text.startswith("->", i):
                break
            i += 1
            col += 1
        toks.append(_Tok("word", text[start:i], line, scol))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.variables: list[str] = []
        self.arities: dict[str, int] = {}
        self.first_use: dict[str, tuple[int, int]] = {}
        self.order: list[str] = []

    # -- token helpers

    def peek(self) -> _Tok | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> _Tok:
        t = self.peek()
        if t is None:
            last = self.toks[-1] if self.toks else _Tok("word", "", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.col + len(last.text))
        self.pos += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.next()
        if t.kind != kind:
            raise ParseError(f"expected '{kind}', found '{t.text}'", t.line, t.col)
        return t

    def err(self, msg: str, tok: _Tok) -> ParseError:
        return ParseError(msg, tok.line, tok.col)

    # -- grammar

    def parse(self) -> Trs:
        rules: list[Rule] = []
        seen_rules = False
        while self.peek() is not None:
            self.expect("(")
            head = self.next()
            if head.kind != "word":
                raise self.err(f"expected a section name, found '{head.text}'", head)
            if head.text == "VAR":
                if seen_rules:
                    raise self.err("VAR section must precede RULES", head)
                self._parse_vars()
            elif head.text == "RULES":
                if seen_rules:
                    raise self.err("duplicate RULES section", head)
                seen_rules = True
                rules = self._parse_rules()
            elif head.text == "COMMENT":
                self._skip_comment()
            else:
                raise self.err(f"unknown section '{head.text}'", head)
        if not seen_rules:
            raise ParseError("missing RULES section", 1, 1)
        signature = tuple(Symbol(f, self.arities[f]) for f in self.order)
        return Trs(tuple(rules), signature, tuple(self.variables))

    def _parse_vars(self):
        while True:
            t = self.next()
            if t.kind == ")":
                return
            if t.kind != "word":
                raise self.err(f"expected a variable name, found '{t.text}'", t)
            if t.text not in self.variables:
                self.variables.append(t.text)

    def _skip_comment(self):
        depth = 1
        while depth:
            t = self.next()
            if t.kind == "(":
                depth += 1
            elif t.kind == ")":
                depth -= 1

    def _parse_rules(self) -> list[Rule]:
        rules = []
        while True:
            t = self.peek()
            if t is None:
                raise ParseError("unterminated RULES section", 1, 1)
            if t.kind == ")":
                self.next()
                return rules
            lhs_tok = t
            lhs = self._parse_term()
            self.expect("->")
            rhs = self._parse_term()
            if isinstance(lhs, Var):
                raise self.err(f"left-hand side is the variable '{lhs.name}'", lhs_tok)
            missing = term_vars(rhs) - term_vars(lhs)
            if missing:
                raise self.err(
                    f"right-hand side variable '{sorted(missing)[0]}' does not occur "
                    "on the left-hand side",
                    lhs_tok,
                )
            rules.append(Rule(lhs, rhs))

    def _parse_term(self) -> Term:
        t = self.next()
        if t.kind != "word":
            raise self.err(f"expected a term, found '{t.text}'", t)
        name = t.text
        nxt = self.peek()
        if name in self.variables:
            if nxt is not None and nxt.kind == "(":
                raise self.err(f"variable '{name}' cannot take arguments", t)
            return Var(name)
        if name not in self.first_use:
            # record signature order by head token, not by completed subterm
            self.first_use[name] = (t.line, t.col)
            self.order.append(name)
        args: list[Term] = []
        if nxt is not None and nxt.kind == "(":
            self.next()
            if self.peek() is not None and self.peek().kind == ")":
                self.next()
            else:
                args.append(self._parse_term())
                while True:
                    sep = self.next()
                    if sep.kind == ")":
                        break
                    if sep.kind != ",":
                        raise self.err(f"expected ',' or ')', found '{sep.text}'", sep)
                    args.append(self._parse_term())
        arity = len(args)
        if name in self.arities:
            if self.arities[name] != arity:
                first = self.first_use[name]
                raise self.err(
                    f"symbol '{name}' used with arity {arity}, but has arity "
                    f"{self.arities[name]} from line {first[0]}",
                    t,
                )
        else:
            self.arities[name] = arity
        return App(Symbol(name, arity), tuple(args))


def parse_trs(text: str) -> Trs:
    """Parse a `(VAR v1 ... vk)(RULES l1 -> r1 ...)` problem description.

    COMMENT sections are skipped. Arities are inferred from first use;
    clashes, variable left-hand sides, and right-hand-side variables missing
    from the left all raise ParseError with a position.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Formatting (canonical, parse_trs-compatible)
# ---------------------------------------------------------------------------


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if not t.args:
        return t.sym.name
    return f"{t.sym.name}({','.join(format_term(a) for a in t.args)})"


def format_rule(r: Rule) -> str:
    return f"{format_term(r.lhs)} -> {format_term(r.rhs)}"


def format_trs(trs: Trs) -> str:
    vars_part = " ".join(trs.variables)
    rules_part = " ".join(format_rule(r) for r in trs.rules)
    vars_sec = f"(VAR {vars_part})" if vars_part else "(VAR)"
    rules_sec = f"(RULES {rules_part})" if rules_part else "(RULES)"
    return vars_sec + rules_sec

"""Constraint templates restricting the parameter search of each method.

Three atom languages share one combination grammar (NOT/AND/OR, case
sensitive, plus a toplevel comma list read as conjunction):

  prec     +- chains like `f > g = h`; any `=` or `>=` switches the whole
              search to quasi-precedences.
  weights  +- `f = g <= 5`; the final numeral is always the weight, `<=`
              and `>=` turn it into an upper/lower bound for every listed
              symbol.
  inters   +- `+ = [1,1;0,1]x0 + x1 + [1;0]`; underscores are holes
              (unrestricted parts), an omitted coefficient is the identity,
              `0`/`1` abbreviate the zero/one vector in matrix mode.

Whitespace is insignificant, so symbol names cannot contain whitespace or
the delimiter characters ( ) [ ] ; , = < > +  (a bare `+` is still fine:
the parsers accept the plus token wherever a name is expected).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Union

from .errors import ParseError, ValidationError
from .interp import (
    MatrixInterp,
    PolyInterp,
    identity,
    zero_mat,
    zero_vec,
)
from .orders import Cmp, Precedence, WeightFn, prec_compare

DNF_CAP = 4096


class Mode(enum.Enum):
    POLY = "poly"
    MATRIX = "matrix"


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrecAtom:
    items: tuple[str, ...]
    rels: tuple[str, ...]  # each ">", "=" or ">="; len == len(items) - 1

    @property
    def quasi(self) -> bool:
        return any(r in ("=", ">=") for r in self.rels)


@dataclass(frozen=True)
class WeightsAtom:
    symbols: tuple[str, ...]
    rel: str  # "=", "<=" or ">="
    weight: int


@dataclass(frozen=True)
class MatrixLit:
    entries: tuple[tuple[Optional[int], ...], ...]  # None = hole

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])


class VecShorthand(enum.Enum):
    ZERO = "0"
    ONE = "1"


@dataclass(frozen=True)
class Hole:
    pass


@dataclass(frozen=True)
class Const:
    value: Union[int, MatrixLit, VecShorthand]


@dataclass(frozen=True)
class Coef:
    # None = implicit identity; int = scalar (scalar * identity in matrix
    # mode); MatrixLit = explicit matrix, possibly with holes.
    coeff: Union[None, int, MatrixLit]
    index: int


Monomial = Union[Hole, Const, Coef]


@dataclass(frozen=True)
class IntersAtom:
    symbols: tuple[str, ...]
    monomials: tuple[Monomial, ...]
    mode: Mode


TemplateAtom = Union[PrecAtom, WeightsAtom, IntersAtom]


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    atom: TemplateAtom


@dataclass(frozen=True)
class Not:
    child: "TemplateAst"


@dataclass(frozen=True)
class And:
    children: tuple["TemplateAst", ...]


@dataclass(frozen=True)
class Or:
    children: tuple["TemplateAst", ...]


TemplateAst = Union[Atom, Not, And, Or]


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Tok:
    kind: str  # "(", ")", "[", "]", ",", ";", "+", ">", ">=", "<=", "=",
    # "<", "word", "hole", "eof"
    text: str
    line: int
    col: int


_DELIMS = set("()[],;+<>=")


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c in "()[],;+":
            toks.append(_Tok(c, c, line, col))
            i += 1
            col += 1
            continue
        if c in "<>":
            if i + 1 < n and text[i + 1] == "=":
                toks.append(_Tok(c + "=", c + "=", line, col))
                i += 2
                col += 2
            else:
                toks.append(_Tok(c, c, line, col))
                i += 1
                col += 1
            continue
        if c == "=":
            toks.append(_Tok("=", "=", line, col))
            i += 1
            col += 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in _DELIMS:
            j += 1
        word = text[i:j]
        kind = "hole" if word == "_" else "word"
        toks.append(_Tok(kind, word, line, col))
        col += j - i
        i = j
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Stream:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Tok:
        i = min(self.pos + ahead, len(self.toks) - 1)
        return self.toks[i]

    def next(self) -> _Tok:
        t = self.peek()
        if t.kind != "eof":
            self.pos += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected '{kind}', found {_describe(t)}", t.line, t.col)
        return self.next()


def _describe(t: _Tok) -> str:
    return "end of input" if t.kind == "eof" else f"'{t.text}'"


def _is_name(t: _Tok) -> bool:
    return t.kind in ("word", "+")


def _expect_name(ts: _Stream) -> _Tok:
    t = ts.peek()
    if not _is_name(t):
        raise ParseError(f"expected symbol name, found {_describe(t)}", t.line, t.col)
    return ts.next()


# ---------------------------------------------------------------------------
# Combination grammar (shared by all three atom languages)
# ---------------------------------------------------------------------------

_AtomParser = Callable[[_Stream], TemplateAtom]


def _parse_combination(ts: _Stream, parse_atom: _AtomParser) -> TemplateAst:
    t = ts.peek()
    if t.kind == "word" and t.text in ("NOT", "AND", "OR") and ts.peek(1).kind == "(":
        ts.next()
        ts.expect("(")
        if t.text == "NOT":
            child = _parse_combination(ts, parse_atom)
            ts.expect(")")
            return Not(child)
        children = [_parse_combination(ts, parse_atom)]
        while ts.peek().kind == ",":
            ts.next()
            children.append(_parse_combination(ts, parse_atom))
        ts.expect(")")
        return And(tuple(children)) if t.text == "AND" else Or(tuple(children))
    return Atom(parse_atom(ts))


def _parse_template(text: str, parse_atom: _AtomParser) -> TemplateAst:
    ts = _Stream(_tokenize(text))
    parts = [_parse_combination(ts, parse_atom)]
    while ts.peek().kind == ",":
        ts.next()
        parts.append(_parse_combination(ts, parse_atom))
    t = ts.peek()
    if t.kind != "eof":
        raise ParseError(f"unexpected {_describe(t)}", t.line, t.col)
    return parts[0] if len(parts) == 1 else And(tuple(parts))


# ---------------------------------------------------------------------------
# prec atoms
# ---------------------------------------------------------------------------


def _parse_prec_atom(ts: _Stream) -> PrecAtom:
    first = _expect_name(ts)
    items = [first.text]
    rels: list[str] = []
    while ts.peek().kind in (">", "=", ">="):
        rels.append(ts.next().kind)
        items.append(_expect_name(ts).text)
    if not rels:
        raise ParseError(
            "precedence chain needs at least two symbols", first.line, first.col
        )
    return PrecAtom(tuple(items), tuple(rels))


def parse_prec(text: str) -> TemplateAst:
    return _parse_template(text, _parse_prec_atom)


# ---------------------------------------------------------------------------
# weights atoms
# ---------------------------------------------------------------------------


def _parse_weights_atom(ts: _Stream) -> WeightsAtom:
    toks = [_expect_name(ts)]
    rels: list[_Tok] = []
    while ts.peek().kind in ("=", "<=", ">="):
        rels.append(ts.next())
        toks.append(_expect_name(ts))
    if not rels:
        t = ts.peek()
        raise ParseError(f"expected '=' and a weight, found {_describe(t)}", t.line, t.col)
    last = toks[-1]
    if not last.text.isdigit():
        raise ParseError(
            f"weight must be a numeral, found '{last.text}'", last.line, last.col
        )
    for r in rels[:-1]:
        if r.kind != "=":
            raise ParseError(
                "only the relation before the weight may be '<=' or '>='",
                r.line,
                r.col,
            )
    return WeightsAtom(
        tuple(t.text for t in toks[:-1]), rels[-1].kind, int(last.text)
    )


def parse_weights(text: str) -> TemplateAst:
    return _parse_template(text, _parse_weights_atom)


# ---------------------------------------------------------------------------
# inters atoms
# ---------------------------------------------------------------------------

_COEF_VAR_RE = re.compile(r"(\d+)?x(\d+)\Z")


def _parse_matrix_lit(ts: _Stream) -> MatrixLit:
    opening = ts.expect("[")
    rows: list[tuple[Optional[int], ...]] = []
    while True:
        row: list[Optional[int]] = [_parse_entry(ts)]
        while ts.peek().kind == ",":
            ts.next()
            row.append(_parse_entry(ts))
        rows.append(tuple(row))
        if ts.peek().kind == ";":
            ts.next()
            continue
        break
    ts.expect("]")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged matrix literal", opening.line, opening.col)
    return MatrixLit(tuple(rows))


def _parse_entry(ts: _Stream) -> Optional[int]:
    t = ts.peek()
    if t.kind == "hole":
        ts.next()
        return None
    if t.kind == "word" and t.text.isdigit():
        ts.next()
        return int(t.text)
    raise ParseError(f"expected matrix entry, found {_describe(t)}", t.line, t.col)


def _var_after(ts: _Stream) -> Optional[int]:
    """Consume a following variable token like `x0`, if present."""
    t = ts.peek()
    if t.kind == "word":
        m = _COEF_VAR_RE.fullmatch(t.text)
        if m and m.group(1) is None:
            ts.next()
            return int(m.group(2))
    return None


def _parse_monomial(ts: _Stream, mode: Mode) -> Monomial:
    t = ts.peek()
    if t.kind == "hole":
        ts.next()
        return Hole()
    if t.kind == "[":
        if mode is Mode.POLY:
            raise ParseError("matrix literal in a polynomial template", t.line, t.col)
        lit = _parse_matrix_lit(ts)
        idx = _var_after(ts)
        return Const(lit) if idx is None else Coef(lit, idx)
    if t.kind == "word":
        m = _COEF_VAR_RE.fullmatch(t.text)
        if m:
            ts.next()
            c = m.group(1)
            return Coef(int(c) if c is not None else None, int(m.group(2)))
        if t.text.isdigit():
            ts.next()
            n = int(t.text)
            idx = _var_after(ts)
            if idx is not None:
                return Coef(n, idx)
            if mode is Mode.POLY:
                return Const(n)
            if n == 0:
                return Const(VecShorthand.ZERO)
            if n == 1:
                return Const(VecShorthand.ONE)
            raise ParseError(
                "matrix constants must be literals or the shorthands 0/1",
                t.line,
                t.col,
            )
    raise ParseError(f"expected monomial, found {_describe(t)}", t.line, t.col)


def _make_inters_parser(mode: Mode) -> _AtomParser:
    def parse(ts: _Stream) -> IntersAtom:
        syms: list[str] = []
        while _is_name(ts.peek()) and ts.peek(1).kind == "=":
            syms.append(ts.next().text)
            ts.next()
        if not syms:
            t = ts.peek()
            raise ParseError(
                f"expected symbol followed by '=', found {_describe(t)}", t.line, t.col
            )
        start = ts.peek()
        monos = [_parse_monomial(ts, mode)]
        while ts.peek().kind == "+":
            ts.next()
            monos.append(_parse_monomial(ts, mode))
        seen: set[int] = set()
        for mono in monos:
            if isinstance(mono, Coef):
                if mono.index in seen:
                    raise ParseError(
                        f"duplicate variable x{mono.index}", start.line, start.col
                    )
                seen.add(mono.index)
        return IntersAtom(tuple(syms), tuple(monos), mode)

    return parse


def parse_inters(text: str, mode: Mode) -> TemplateAst:
    return _parse_template(text, _make_inters_parser(mode))


# ---------------------------------------------------------------------------
# Formatting (inverse of parsing, up to whitespace)
# ---------------------------------------------------------------------------


def format_matrix_lit(lit: MatrixLit) -> str:
    rows = (",".join("_" if e is None else str(e) for e in row) for row in lit.entries)
    return "[" + ";".join(rows) + "]"


def _format_monomial(m: Monomial) -> str:
    if isinstance(m, Hole):
        return "_"
    if isinstance(m, Const):
        if isinstance(m.value, MatrixLit):
            return format_matrix_lit(m.value)
        if isinstance(m.value, VecShorthand):
            return m.value.value
        return str(m.value)
    if m.coeff is None:
        return f"x{m.index}"
    if isinstance(m.coeff, MatrixLit):
        return f"{format_matrix_lit(m.coeff)}x{m.index}"
    return f"{m.coeff}x{m.index}"


def format_atom(atom: TemplateAtom) -> str:
    if isinstance(atom, PrecAtom):
        out = atom.items[0]
        for rel, item in zip(atom.rels, atom.items[1:]):
            out += f" {rel} {item}"
        return out
    if isinstance(atom, WeightsAtom):
        return f"{' = '.join(atom.symbols)} {atom.rel} {atom.weight}"
    lhs = " = ".join(atom.symbols)
    rhs = " + ".join(_format_monomial(m) for m in atom.monomials)
    return f"{lhs} = {rhs}"


def format_template(ast: TemplateAst) -> str:
    # a toplevel conjunction prints in the bare comma form it was written in
    if isinstance(ast, And):
        return ", ".join(_format_nested(c) for c in ast.children)
    return _format_nested(ast)


def _format_nested(ast: TemplateAst) -> str:
    if isinstance(ast, Atom):
        return format_atom(ast.atom)
    if isinstance(ast, Not):
        return f"NOT({_format_nested(ast.child)})"
    name = "AND" if isinstance(ast, And) else "OR"
    return f"{name}({', '.join(_format_nested(c) for c in ast.children)})"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckedTemplate:
    ast: TemplateAst
    dim: Optional[int]  # fixed by a matrix literal, if any
    quasi: bool  # some prec atom uses = or >=


def _atoms(ast: TemplateAst):
    if isinstance(ast, Atom):
        yield ast.atom
    elif isinstance(ast, Not):
        yield from _atoms(ast.child)
    else:
        for c in ast.children:
            yield from _atoms(c)


def validate(
    ast: TemplateAst,
    arities: Mapping[str, int],
    mode: Optional[Mode] = None,
    dim: Optional[int] = None,
) -> CheckedTemplate:
    """Check symbols, arities and matrix dimensions against a signature.

    `dim` is an externally supplied dimension (the -dim flag); a dimension
    read from a literal must agree with it. Matrix templates that fix no
    dimension require one.
    """
    inferred: Optional[int] = None
    quasi = False

    def see_dim(d: int) -> None:
        nonlocal inferred
        if inferred is None:
            inferred = d
        elif inferred != d:
            raise ValidationError(
                f"inconsistent matrix dimensions in template: {inferred} vs {d}"
            )

    saw_inters = False
    for atom in _atoms(ast):
        if isinstance(atom, PrecAtom):
            quasi = quasi or atom.quasi
            for s in atom.items:
                if s not in arities:
                    raise ValidationError(f"unknown symbol '{s}' in template")
        elif isinstance(atom, WeightsAtom):
            for s in atom.symbols:
                if s not in arities:
                    raise ValidationError(f"unknown symbol '{s}' in template")
        else:
            saw_inters = True
            if mode is not None and atom.mode is not mode:
                raise ValidationError("template mode does not match the method")
            for s in atom.symbols:
                if s not in arities:
                    raise ValidationError(f"unknown symbol '{s}' in template")
            min_arity = min(arities[s] for s in atom.symbols)
            for mono in atom.monomials:
                if isinstance(mono, Coef):
                    if mono.index >= min_arity:
                        bad = next(
                            s for s in atom.symbols if arities[s] <= mono.index
                        )
                        raise ValidationError(
                            f"variable x{mono.index} out of range for "
                            f"'{bad}' (arity {arities[bad]})"
                        )
                    if isinstance(mono.coeff, MatrixLit):
                        if mono.coeff.rows != mono.coeff.cols:
                            raise ValidationError(
                                "coefficient matrix must be square, got "
                                f"{mono.coeff.rows}x{mono.coeff.cols}"
                            )
                        see_dim(mono.coeff.rows)
                elif isinstance(mono, Const) and isinstance(mono.value, MatrixLit):
                    if mono.value.cols != 1:
                        raise ValidationError(
                            "constant part must be a single-column vector, got "
                            f"{mono.value.rows}x{mono.value.cols}"
                        )
                    see_dim(mono.value.rows)

    if dim is not None and inferred is not None and dim != inferred:
        raise ValidationError(
            f"template fixes dimension {inferred} but {dim} was requested"
        )
    if mode is Mode.MATRIX and saw_inters and inferred is None and dim is None:
        raise ValidationError(
            "matrix dimension unspecified: no literal in the template and no -dim"
        )
    return CheckedTemplate(ast, inferred if inferred is not None else dim, quasi)


# ---------------------------------------------------------------------------
# DNF
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    atom: TemplateAtom
    negated: bool = False


Disjunct = tuple[Lit, ...]


def to_dnf(ast: TemplateAst) -> list[Disjunct]:
    dnf = _dnf(ast, False)
    return dnf


def _dnf(ast: TemplateAst, neg: bool) -> list[Disjunct]:
    if isinstance(ast, Atom):
        return [(Lit(ast.atom, neg),)]
    if isinstance(ast, Not):
        return _dnf(ast.child, not neg)
    conj = isinstance(ast, And) != neg  # And under even negations, Or under odd
    parts = [_dnf(c, neg) for c in ast.children]
    if not conj:
        out = [d for p in parts for d in p]
        _check_cap(len(out))
        return out
    acc: list[Disjunct] = [()]
    for p in parts:
        acc = [d1 + d2 for d1 in acc for d2 in p]
        _check_cap(len(acc))
    return acc


def _check_cap(n: int) -> None:
    if n > DNF_CAP:
        raise ValidationError(f"template too large: DNF exceeds {DNF_CAP} disjuncts")


# ---------------------------------------------------------------------------
# Satisfaction
# ---------------------------------------------------------------------------

Candidate = Union[Precedence, WeightFn, PolyInterp, MatrixInterp]


def atom_holds(atom: TemplateAtom, candidate: Candidate) -> bool:
    if isinstance(atom, PrecAtom):
        if not isinstance(candidate, Precedence):
            raise TypeError("precedence atom checked against a non-precedence")
        for f, rel, g in zip(atom.items, atom.rels, atom.items[1:]):
            c = prec_compare(candidate, f, g)
            ok = (
                c is Cmp.GT
                if rel == ">"
                else c is Cmp.EQ
                if rel == "="
                else c in (Cmp.GT, Cmp.EQ)
            )
            if not ok:
                return False
        return True
    if isinstance(atom, WeightsAtom):
        if not isinstance(candidate, WeightFn):
            raise TypeError("weights atom checked against a non-weight-function")
        for s in atom.symbols:
            if s not in candidate.weights:
                raise KeyError(f"symbol '{s}' missing from candidate weights")
            w = candidate.weights[s]
            if atom.rel == "=" and w != atom.weight:
                return False
            if atom.rel == "<=" and w > atom.weight:
                return False
            if atom.rel == ">=" and w < atom.weight:
                return False
        return True
    if isinstance(candidate, PolyInterp):
        return all(_poly_atom_holds(atom, candidate, s) for s in atom.symbols)
    if isinstance(candidate, MatrixInterp):
        return all(_matrix_atom_holds(atom, candidate, s) for s in atom.symbols)
    raise TypeError("interpretation atom checked against a non-interpretation")


def _poly_atom_holds(atom: IntersAtom, interp: PolyInterp, sym: str) -> bool:
    if sym not in interp.funcs:
        raise KeyError(f"symbol '{sym}' missing from candidate interpretation")
    f = interp.funcs[sym]
    has_hole = any(isinstance(m, Hole) for m in atom.monomials)
    mentioned: set[int] = set()
    const_pinned = False
    for mono in atom.monomials:
        if isinstance(mono, Coef):
            mentioned.add(mono.index)
            if mono.index >= len(f.coeffs):
                return False
            want = 1 if mono.coeff is None else mono.coeff
            if f.coeffs[mono.index] != want:
                return False
        elif isinstance(mono, Const):
            const_pinned = True
            if f.const != mono.value:
                return False
    if not has_hole:
        for i, c in enumerate(f.coeffs):
            if i not in mentioned and c != 0:
                return False
        if not const_pinned and f.const != 0:
            return False
    return True


def _lit_matches(lit: MatrixLit, actual) -> bool:
    if lit.rows != len(actual) or lit.cols != len(actual[0]):
        return False
    return all(
        e is None or e == actual[i][j]
        for i, row in enumerate(lit.entries)
        for j, e in enumerate(row)
    )


def _matrix_atom_holds(atom: IntersAtom, interp: MatrixInterp, sym: str) -> bool:
    if sym not in interp.funcs:
        raise KeyError(f"symbol '{sym}' missing from candidate interpretation")
    f = interp.funcs[sym]
    dim = interp.dim
    has_hole = any(isinstance(m, Hole) for m in atom.monomials)
    mentioned: set[int] = set()
    const_pinned = False
    for mono in atom.monomials:
        if isinstance(mono, Coef):
            mentioned.add(mono.index)
            if mono.index >= len(f.mats):
                return False
            actual = f.mats[mono.index]
            if mono.coeff is None:
                if actual != identity(dim):
                    return False
            elif isinstance(mono.coeff, int):
                scaled = tuple(
                    tuple(mono.coeff * e for e in row) for row in identity(dim)
                )
                if actual != scaled:
                    return False
            elif not _lit_matches(mono.coeff, actual):
                return False
        elif isinstance(mono, Const):
            const_pinned = True
            if isinstance(mono.value, VecShorthand):
                want = (
                    zero_vec(dim)
                    if mono.value is VecShorthand.ZERO
                    else (1,) * dim
                )
                if f.const != want:
                    return False
            else:
                col = tuple((v,) for v in f.const)
                if not _lit_matches(mono.value, col):
                    return False
    if not has_hole:
        for i, m in enumerate(f.mats):
            if i not in mentioned and m != zero_mat(dim):
                return False
        if not const_pinned and f.const != zero_vec(dim):
            return False
    return True


def lit_holds(lit: Lit, candidate: Candidate) -> bool:
    h = atom_holds(lit.atom, candidate)
    return not h if lit.negated else h


def evaluate(ast: TemplateAst, candidate: Candidate) -> bool:
    """Structural truth of the template on a concrete candidate."""
    if isinstance(ast, Atom):
        return atom_holds(ast.atom, candidate)
    if isinstance(ast, Not):
        return not evaluate(ast.child, candidate)
    if isinstance(ast, And):
        return all(evaluate(c, candidate) for c in ast.children)
    return any(evaluate(c, candidate) for c in ast.children)

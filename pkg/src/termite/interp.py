"""Linear polynomial and matrix interpretations over the naturals.

A polynomial interpretation assigns `[f](x0..xn-1) = a0*x0 + ... + c` with
natural coefficients; a matrix interpretation assigns square coefficient
matrices and a constant vector per symbol. `linear_form` flattens a term to
its symbolic linear normal form; `orients` applies the coefficientwise
orientation criterion (strict decrease of the constant part, first vector
component for matrices). Python integers are exact, so arithmetic never
wraps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .trs import App, Rule, Term, Var

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]  # row-major, square


def zero_vec(dim: int) -> Vector:
    return (0,) * dim


def zero_mat(dim: int) -> Matrix:
    return tuple((0,) * dim for _ in range(dim))


def identity(dim: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


@dataclass(frozen=True)
class PolyFunc:
    coeffs: tuple[int, ...]
    const: int


@dataclass(frozen=True)
class PolyInterp:
    funcs: Mapping[str, PolyFunc]


@dataclass(frozen=True)
class MatFunc:
    mats: tuple[Matrix, ...]
    const: Vector


@dataclass(frozen=True)
class MatrixInterp:
    dim: int
    funcs: Mapping[str, MatFunc]


Interp = Union[PolyInterp, MatrixInterp]


@dataclass(frozen=True)
class LinForm:
    """Symbolic value of a term: one coefficient per occurring variable plus
    a constant part. Variables absent from the mapping have coefficient 0."""

    coeffs: Mapping[str, object]  # int in poly mode, Matrix in matrix mode
    const: object  # int / Vector


def linear_form(interp: Interp, t: Term) -> LinForm:
    if isinstance(interp, PolyInterp):
        return _poly_form(interp, t)
    return _matrix_form(interp, t)


def _poly_form(interp: PolyInterp, t: Term) -> LinForm:
    if isinstance(t, Var):
        return LinForm({t.name: 1}, 0)
    f = interp.funcs[t.sym.name]
    if len(f.coeffs) != t.sym.arity:
        raise ValueError(f"interpretation of {t.sym.name} has wrong arity")
    coeffs: dict[str, int] = {}
    const = f.const
    for a, arg in zip(f.coeffs, t.args):
        sub = _poly_form(interp, arg)
        const += a * sub.const
        for x, c in sub.coeffs.items():
            coeffs[x] = coeffs.get(x, 0) + a * c
    return LinForm(coeffs, const)


def _matrix_form(interp: MatrixInterp, t: Term) -> LinForm:
    dim = interp.dim
    if isinstance(t, Var):
        return LinForm({t.name: identity(dim)}, zero_vec(dim))
    f = interp.funcs[t.sym.name]
    if len(f.mats) != t.sym.arity:
        raise ValueError(f"interpretation of {t.sym.name} has wrong arity")
    coeffs: dict[str, Matrix] = {}
    const = f.const
    for m, arg in zip(f.mats, t.args):
        sub = _matrix_form(interp, arg)
        const = vec_add(const, mat_vec(m, sub.const))
        for x, c in sub.coeffs.items():
            prod = mat_mul(m, c)
            coeffs[x] = mat_add(coeffs[x], prod) if x in coeffs else prod
    return LinForm(coeffs, const)


def _mat_ge(a: Matrix, b: Matrix) -> bool:
    return all(x >= y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def orients(interp: Interp, rule: Rule) -> bool:
    """Coefficientwise strict orientation of lhs over rhs (absolute
    positiveness): lhs coefficient >= rhs coefficient for every variable, and
    the lhs constant strictly above the rhs constant (first component for
    vectors, the rest componentwise >=)."""
    lhs = linear_form(interp, rule.lhs)
    rhs = linear_form(interp, rule.rhs)
    if isinstance(interp, PolyInterp):
        for x, c in rhs.coeffs.items():
            if lhs.coeffs.get(x, 0) < c:
                return False
        return lhs.const > rhs.const
    dim = interp.dim
    for x, c in rhs.coeffs.items():
        if not _mat_ge(lhs.coeffs.get(x, zero_mat(dim)), c):
            return False
    lc, rc = lhs.const, rhs.const
    return lc[0] > rc[0] and all(a >= b for a, b in zip(lc[1:], rc[1:]))


def monotone(interp: Interp) -> bool:
    """Context closure: every argument coefficient at least 1 (top-left
    matrix entry in matrix mode)."""
    if isinstance(interp, PolyInterp):
        return all(c >= 1 for f in interp.funcs.values() for c in f.coeffs)
    return all(m[0][0] >= 1 for f in interp.funcs.values() for m in f.mats)


def eval_numeric(form: LinForm, assignment: Mapping[str, object]):
    """Evaluate a linear form at a concrete assignment (naturals / vectors)."""
    const = form.const
    if isinstance(const, int):
        return const + sum(c * assignment[x] for x, c in form.coeffs.items())
    acc = const
    for x, c in form.coeffs.items():
        acc = vec_add(acc, mat_vec(c, assignment[x]))
    return acc


# ---------------------------------------------------------------------------
# Printing (mirrors the template syntax, so proofs can be fed back in)
# ---------------------------------------------------------------------------


def format_matrix(m: Matrix) -> str:
    return "[" + ";".join(",".join(str(e) for e in row) for row in m) + "]"


def format_vector(v: Vector) -> str:
    if all(e == 0 for e in v):
        return "0"
    if all(e == 1 for e in v):
        return "1"
    return "[" + ";".join(str(e) for e in v) + "]"


def format_poly_func(f: PolyFunc) -> str:
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        parts.append(f"x{i}" if c == 1 else f"{c}x{i}")
    if f.const != 0 or not parts:
        parts.append(str(f.const))
    return " + ".join(parts)


def format_mat_func(f: MatFunc, dim: int) -> str:
    parts = []
    for i, m in enumerate(f.mats):
        if m == zero_mat(dim):
            continue
        parts.append(f"x{i}" if m == identity(dim) else f"{format_matrix(m)}x{i}")
    if f.const != zero_vec(dim) or not parts:
        parts.append(format_vector(f.const))
    return " + ".join(parts)


def format_interp(interp: Interp, order) -> list[str]:
    """One `[f] = ...` line per symbol, in the given signature order."""
    lines = []
    for name in order:
        if isinstance(interp, PolyInterp):
            rhs = format_poly_func(interp.funcs[name])
        else:
            rhs = format_mat_func(interp.funcs[name], interp.dim)
        lines.append(f"[{name}] = {rhs}")
    return lines

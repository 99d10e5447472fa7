"""Template language: parsing, printing, validation, DNF, satisfaction."""

import pytest
from hypothesis import given, settings, strategies as st

from termite import (
    MatFunc,
    MatrixInterp,
    Mode,
    ParseError,
    PolyFunc,
    PolyInterp,
    Precedence,
    ValidationError,
    WeightFn,
    atom_holds,
    evaluate,
    format_template,
    parse_inters,
    parse_prec,
    parse_weights,
    to_dnf,
    validate,
)
from termite.templates import (
    And,
    Atom,
    Coef,
    Const,
    Hole,
    IntersAtom,
    MatrixLit,
    Not,
    Or,
    PrecAtom,
    VecShorthand,
    WeightsAtom,
    lit_holds,
)
from termite.interp import identity


# -- parsing -----------------------------------------------------------


def test_parse_prec_chain():
    ast = parse_prec("+ > s > 0")
    assert ast == Atom(PrecAtom(("+", "s", "0"), (">", ">")))
    assert not ast.atom.quasi


def test_parse_prec_quasi_markers():
    assert parse_prec("f > g = h").atom.quasi
    assert parse_prec("f >= g").atom.quasi
    assert not parse_prec("f > g").atom.quasi


def test_parse_prec_single_symbol_rejected():
    with pytest.raises(ParseError):
        parse_prec("f")


def test_parse_weights_chain_ends_in_weight():
    ast = parse_weights("+ = s = 0 = 1")
    assert ast == Atom(WeightsAtom(("+", "s", "0"), "=", 1))


def test_parse_weights_bounds():
    assert parse_weights("s >= 1") == Atom(WeightsAtom(("s",), ">=", 1))
    assert parse_weights("f = g <= 5") == Atom(WeightsAtom(("f", "g"), "<=", 5))


def test_parse_weights_numeral_symbols():
    # all but the final numeral are symbol names, even numeric-looking ones
    ast = parse_weights("1 = 2")
    assert ast == Atom(WeightsAtom(("1",), "=", 2))


def test_parse_weights_errors():
    with pytest.raises(ParseError):
        parse_weights("f = g")  # no final weight
    with pytest.raises(ParseError):
        parse_weights("f <= g = 1")  # bound relation before the end
    with pytest.raises(ParseError):
        parse_weights("f")


def test_parse_poly_inters():
    ast = parse_inters("+ = 2x0 + x1 + 2", Mode.POLY)
    atom = ast.atom
    assert atom == IntersAtom(
        ("+",), (Coef(2, 0), Coef(None, 1), Const(2)), Mode.POLY
    )


def test_parse_poly_coefficient_spacing():
    spaced = parse_inters("f = 2 x0 + 1", Mode.POLY)
    fused = parse_inters("f = 2x0 + 1", Mode.POLY)
    assert spaced == fused


def test_parse_poly_hole_and_const():
    ast = parse_inters("+ = _ + 2", Mode.POLY)
    assert ast.atom.monomials == (Hole(), Const(2))
    assert parse_inters("0 = 0", Mode.POLY).atom.monomials == (Const(0),)


def test_parse_shared_shape_for_several_symbols():
    ast = parse_inters("f = g = h = x0 + _", Mode.POLY)
    assert ast.atom.symbols == ("f", "g", "h")
    assert ast.atom.monomials == (Coef(None, 0), Hole())


def test_parse_matrix_inters():
    ast = parse_inters("+ = [1,1;0,1]x0 + x1 + [1;0]", Mode.MATRIX)
    atom = ast.atom
    assert atom.symbols == ("+",)
    assert atom.monomials == (
        Coef(MatrixLit(((1, 1), (0, 1))), 0),
        Coef(None, 1),
        Const(MatrixLit(((1,), (0,)))),
    )


def test_parse_matrix_shorthands():
    ast = parse_inters("0 = 0, s = x0 + 1", Mode.MATRIX)
    assert isinstance(ast, And)
    first, second = ast.children
    assert first.atom.monomials == (Const(VecShorthand.ZERO),)
    assert second.atom.monomials == (Coef(None, 0), Const(VecShorthand.ONE))


def test_parse_matrix_holes_in_literal():
    ast = parse_inters("f = [1,_;_,1]x0 + _", Mode.MATRIX)
    lit = ast.atom.monomials[0].coeff
    assert lit == MatrixLit(((1, None), (None, 1)))


def test_parse_matrix_scalar_coefficient():
    # a scalar multiplies the identity, so it stays dimension-agnostic
    ast = parse_inters("f = 2x0 + 0", Mode.MATRIX)
    assert ast.atom.monomials[0] == Coef(2, 0)


def test_parse_matrix_errors():
    with pytest.raises(ParseError):
        parse_inters("f = [1,2;3]x0", Mode.MATRIX)  # ragged literal
    with pytest.raises(ParseError):
        parse_inters("f = x0 + 2", Mode.MATRIX)  # bare constant beyond 0/1
    with pytest.raises(ParseError):
        parse_inters("f = [1,1;0,1]x0", Mode.POLY)  # matrix in poly mode


def test_parse_duplicate_argument_index():
    with pytest.raises(ParseError):
        parse_inters("f = x0 + x0", Mode.POLY)


def test_parse_combinations():
    ast = parse_inters("AND(+ = _ + 2, OR(NOT(0 = 0), s = x0 + 1))", Mode.POLY)
    assert isinstance(ast, And)
    left, right = ast.children
    assert isinstance(left, Atom)
    assert isinstance(right, Or)
    neg, pos = right.children
    assert isinstance(neg, Not) and isinstance(neg.child, Atom)
    assert isinstance(pos, Atom)


def test_toplevel_comma_is_conjunction():
    a = parse_prec("f > g, h > g")
    b = parse_prec("AND(f > g, h > g)")
    assert a == b


def test_keywords_need_parenthesis():
    # NOT/AND/OR only act as operators when directly followed by (
    ast = parse_prec("AND > OR = NOT")
    assert ast == Atom(PrecAtom(("AND", "OR", "NOT"), (">", "=")))


def test_keywords_are_case_sensitive():
    with pytest.raises(ParseError):
        parse_prec("not(f > g)")


def test_parse_trailing_garbage():
    with pytest.raises(ParseError):
        parse_prec("f > g)")
    with pytest.raises(ParseError):
        parse_inters("f = x0 + 1 extra", Mode.POLY)


# -- printing ----------------------------------------------------------


ROUND_TRIPS = [
    ("prec", "+ > s > 0"),
    ("prec", "f > g = h"),
    ("prec", "f >= g"),
    ("weights", "+ = s = 0 = 1"),
    ("weights", "f = g <= 5"),
    ("weights", "s >= 1"),
    ("poly", "+ = 2x0 + x1 + 2"),
    ("poly", "+ = _ + 2"),
    ("poly", "AND(+ = _ + 2, OR(NOT(0 = 0), s = x0 + 1))"),
    ("matrix", "0 = 0, s = x0 + 1, + = [1,1;0,1]x0 + x1 + [1;0]"),
    ("matrix", "f = [1,_;_,1]x0 + _"),
    ("matrix", "f = g = h = [1,_,_;0,1,_;0,0,1]x0 + _"),
]


def _parse(kind, text):
    if kind == "prec":
        return parse_prec(text)
    if kind == "weights":
        return parse_weights(text)
    return parse_inters(text, Mode.POLY if kind == "poly" else Mode.MATRIX)


@pytest.mark.parametrize("kind,text", ROUND_TRIPS)
def test_format_parse_round_trip(kind, text):
    ast = _parse(kind, text)
    printed = format_template(ast)
    assert _parse(kind, printed) == ast
    # canonical output is a fixed point
    assert format_template(_parse(kind, printed)) == printed


def test_format_canonical_spacing():
    assert format_template(parse_prec("f>g=h")) == "f > g = h"
    assert (
        format_template(parse_inters("f=[1,_;_,1]x0+_", Mode.MATRIX))
        == "f = [1,_;_,1]x0 + _"
    )


def test_format_toplevel_conjunction_uses_commas():
    ast = parse_weights("f = 1, g = 2")
    assert format_template(ast) == "f = 1, g = 2"


# -- validation --------------------------------------------------------


AR = {"+": 2, "0": 0, "s": 1, "f": 2, "g": 1, "h": 2}


def test_validate_unknown_symbol():
    with pytest.raises(ValidationError):
        validate(parse_prec("f > nope"), AR)


def test_validate_quasi_flag():
    assert validate(parse_prec("f > g = s"), AR).quasi
    assert not validate(parse_prec("f > g"), AR).quasi


def test_validate_argument_index_against_arity():
    validate(parse_inters("f = x1 + _", Mode.POLY), AR, Mode.POLY)
    with pytest.raises(ValidationError):
        validate(parse_inters("g = x1 + _", Mode.POLY), AR, Mode.POLY)
    # a shared shape is bounded by the smallest arity
    with pytest.raises(ValidationError):
        validate(parse_inters("f = g = x1 + _", Mode.POLY), AR, Mode.POLY)


def test_validate_mode_mismatch():
    ast = parse_inters("f = x0 + 1", Mode.POLY)
    with pytest.raises(ValidationError):
        validate(ast, AR, Mode.MATRIX, 2)


def test_validate_matrix_shapes():
    with pytest.raises(ValidationError):
        validate(parse_inters("g = [1,0]x0", Mode.MATRIX), AR, Mode.MATRIX)
    with pytest.raises(ValidationError):
        validate(parse_inters("g = x0 + [1,0;0,1]", Mode.MATRIX), AR, Mode.MATRIX)


def test_validate_dim_inference_and_conflicts():
    ct = validate(
        parse_inters("+ = [1,1;0,1]x0 + x1 + [1;0]", Mode.MATRIX), AR, Mode.MATRIX
    )
    assert ct.dim == 2
    with pytest.raises(ValidationError):
        validate(
            parse_inters("f = [1,0;0,1]x0 + [1;0;0]", Mode.MATRIX), AR, Mode.MATRIX
        )
    with pytest.raises(ValidationError):
        validate(
            parse_inters("f = [1,0;0,1]x0, g = [1]x0", Mode.MATRIX), AR, Mode.MATRIX
        )
    with pytest.raises(ValidationError):
        validate(
            parse_inters("f = [1,0;0,1]x0", Mode.MATRIX), AR, Mode.MATRIX, dim=3
        )


def test_validate_matrix_dim_required():
    ast = parse_inters("f = x0 + _", Mode.MATRIX)
    with pytest.raises(ValidationError):
        validate(ast, AR, Mode.MATRIX, None)
    assert validate(ast, AR, Mode.MATRIX, 2).dim == 2


def test_validate_shorthands_do_not_fix_dim():
    ct = validate(parse_inters("0 = 0", Mode.MATRIX), AR, Mode.MATRIX, 3)
    assert ct.dim == 3


# -- DNF ---------------------------------------------------------------


def _lits(disjunct):
    return [(l.atom, l.negated) for l in disjunct]


def test_to_dnf_distributes():
    a, b, c = (Atom(WeightsAtom((s,), "=", 1)) for s in "fgh")
    dnf = to_dnf(And((a, Or((Not(b), c)))))
    assert [_lits(d) for d in dnf] == [
        [(a.atom, False), (b.atom, True)],
        [(a.atom, False), (c.atom, False)],
    ]


def test_to_dnf_negations():
    a, b = (Atom(WeightsAtom((s,), "=", 1)) for s in "fg")
    assert [_lits(d) for d in to_dnf(Not(And((a, b))))] == [
        [(a.atom, True)],
        [(b.atom, True)],
    ]
    assert [_lits(d) for d in to_dnf(Not(Or((a, b))))] == [
        [(a.atom, True), (b.atom, True)]
    ]
    assert [_lits(d) for d in to_dnf(Not(Not(a)))] == [[(a.atom, False)]]


def test_to_dnf_cap():
    wide = "AND(" + ", ".join(["OR(f = 1, g = 2)"] * 13) + ")"
    with pytest.raises(ValidationError):
        to_dnf(parse_weights(wide))


_ATOMS = [
    PrecAtom(("f", "g"), (">",)),
    PrecAtom(("g", "h"), ("=",)),
    PrecAtom(("f", "h"), (">=",)),
    PrecAtom(("h", "g", "f"), (">", ">")),
]


def _asts():
    leaves = st.sampled_from([Atom(a) for a in _ATOMS])
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(Not, sub),
            st.builds(lambda xs: And(tuple(xs)), st.lists(sub, min_size=2, max_size=3)),
            st.builds(lambda xs: Or(tuple(xs)), st.lists(sub, min_size=2, max_size=3)),
        ),
        max_leaves=6,
    )


@settings(max_examples=200, deadline=None)
@given(
    _asts(),
    st.fixed_dictionaries(
        {n: st.integers(0, 2) for n in "fgh"}
    ),
    st.booleans(),
)
def test_dnf_preserves_meaning(ast, levels, quasi):
    cand = Precedence(levels, quasi)
    direct = evaluate(ast, cand)
    via_dnf = any(
        all(lit_holds(l, cand) for l in d) for d in to_dnf(ast)
    )
    assert direct == via_dnf


# -- satisfaction ------------------------------------------------------


def test_prec_atom_holds():
    strict = Precedence({"f": 2, "g": 1, "h": 1})
    assert atom_holds(PrecAtom(("f", "g"), (">",)), strict)
    assert not atom_holds(PrecAtom(("g", "f"), (">",)), strict)
    # distinct symbols on equal levels are incomparable without quasi
    assert not atom_holds(PrecAtom(("g", "h"), ("=",)), strict)
    quasi = Precedence({"f": 2, "g": 1, "h": 1}, quasi=True)
    assert atom_holds(PrecAtom(("g", "h"), ("=",)), quasi)
    assert atom_holds(PrecAtom(("f", "g", "h"), (">", "=")), quasi)
    assert atom_holds(PrecAtom(("f", "h"), (">=",)), quasi)
    assert atom_holds(PrecAtom(("g", "h"), (">=",)), quasi)
    assert not atom_holds(PrecAtom(("g", "f"), (">=",)), quasi)


def test_weights_atom_holds():
    wf = WeightFn(1, {"f": 2, "g": 2, "s": 0})
    assert atom_holds(WeightsAtom(("f", "g"), "=", 2), wf)
    assert not atom_holds(WeightsAtom(("f", "s"), "=", 2), wf)
    assert atom_holds(WeightsAtom(("f", "g"), ">=", 1), wf)
    assert atom_holds(WeightsAtom(("s",), "<=", 0), wf)
    assert not atom_holds(WeightsAtom(("f",), "<=", 1), wf)


def test_poly_atom_unmentioned_parts_must_be_zero():
    atom = parse_inters("s = x0", Mode.POLY).atom
    assert atom_holds(atom, PolyInterp({"s": PolyFunc((1,), 0)}))
    assert not atom_holds(atom, PolyInterp({"s": PolyFunc((1,), 1)}))
    assert not atom_holds(atom, PolyInterp({"s": PolyFunc((2,), 0)}))


def test_poly_atom_hole_frees_the_rest():
    atom = parse_inters("+ = _ + 2", Mode.POLY).atom
    assert atom_holds(atom, PolyInterp({"+": PolyFunc((3, 1), 2)}))
    assert atom_holds(atom, PolyInterp({"+": PolyFunc((1, 1), 2)}))
    assert not atom_holds(atom, PolyInterp({"+": PolyFunc((1, 1), 3)}))


def test_poly_atom_scalar_coefficient():
    atom = parse_inters("+ = 2x0 + x1 + 2", Mode.POLY).atom
    assert atom_holds(atom, PolyInterp({"+": PolyFunc((2, 1), 2)}))
    assert not atom_holds(atom, PolyInterp({"+": PolyFunc((2, 2), 2)}))


def test_matrix_atom_holds():
    plus = MatFunc((((1, 1), (0, 1)), identity(2)), (1, 0))
    mi = MatrixInterp(2, {"+": plus})
    exact = parse_inters("+ = [1,1;0,1]x0 + x1 + [1;0]", Mode.MATRIX).atom
    assert atom_holds(exact, mi)
    partial = parse_inters("+ = [1,_;_,1]x0 + _", Mode.MATRIX).atom
    assert atom_holds(partial, mi)
    off = parse_inters("+ = [1,0;_,1]x0 + _", Mode.MATRIX).atom
    assert not atom_holds(off, mi)


def test_matrix_atom_shorthands():
    mi = MatrixInterp(
        2,
        {
            "0": MatFunc((), (0, 0)),
            "s": MatFunc((identity(2),), (1, 1)),
        },
    )
    assert atom_holds(parse_inters("0 = 0", Mode.MATRIX).atom, mi)
    assert atom_holds(parse_inters("s = x0 + 1", Mode.MATRIX).atom, mi)
    shifted = MatrixInterp(2, {"0": MatFunc((), (1, 0))})
    assert not atom_holds(parse_inters("0 = 0", Mode.MATRIX).atom, shifted)


def test_atom_candidate_type_mismatch():
    with pytest.raises(TypeError):
        atom_holds(PrecAtom(("f", "g"), (">",)), WeightFn(1, {}))


def test_evaluate_combination(add_trs):
    pi = PolyInterp(
        {"+": PolyFunc((2, 1), 2), "0": PolyFunc((), 1), "s": PolyFunc((1,), 1)}
    )
    ast = parse_inters("AND(+ = _ + 2, OR(NOT(0 = 0), s = x0 + 1))", Mode.POLY)
    assert evaluate(ast, pi)
    zeroed = PolyInterp(
        {"+": PolyFunc((2, 1), 2), "0": PolyFunc((), 0), "s": PolyFunc((1,), 2)}
    )
    assert not evaluate(ast, zeroed)

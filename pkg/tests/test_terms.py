import pytest
from hypothesis import given, strategies as st

from termite import (
    App,
    ParseError,
    Rule,
    Symbol,
    Trs,
    Var,
    format_rule,
    format_term,
    format_trs,
    parse_trs,
)
from termite.trs import subterms, term_vars, var_counts

import gen


def test_addition_signature_order(add_trs):
    assert [(s.name, s.arity) for s in add_trs.signature] == [
        ("+", 2),
        ("0", 0),
        ("s", 1),
    ]
    assert add_trs.variables == ("x", "y")
    assert len(add_trs.rules) == 2


def test_signature_order_is_head_first():
    # + is the head of the first lhs, so it precedes its own arguments
    trs = parse_trs("(VAR y)(RULES +(0,y) -> y)")
    assert [s.name for s in trs.signature] == ["+", "0"]


def test_compact_and_multiline_agree(add_trs):
    compact = parse_trs("(VAR x y)(RULES +(0,y) -> y +(s(x),y) -> s(+(x,y)))")
    assert compact == add_trs


def test_comment_section_skipped(add_trs):
    text = "(COMMENT addition (nested (parens)) ok)" + format_trs(add_trs)
    assert parse_trs(text) == add_trs


def test_nullary_parens_optional():
    a = parse_trs("(VAR x)(RULES f(x,a) -> a)")
    b = parse_trs("(VAR x)(RULES f(x,a()) -> a())")
    assert a == b


def test_rule_and_term_formatting(add_trs):
    assert format_term(add_trs.rules[1].lhs) == "+(s(x),y)"
    assert format_rule(add_trs.rules[0]) == "+(0,y) -> y"
    assert format_trs(add_trs) == "(VAR x y)(RULES +(0,y) -> y +(s(x),y) -> s(+(x,y)))"


def test_format_parse_round_trip(add_trs):
    assert parse_trs(format_trs(add_trs)) == add_trs


def test_arities_and_symbol_lookup(add_trs):
    assert add_trs.arities() == {"+": 2, "0": 0, "s": 1}
    assert add_trs.symbol("s") == Symbol("s", 1)
    with pytest.raises(KeyError):
        add_trs.symbol("t")


@pytest.mark.parametrize(
    "text,needle",
    [
        ("(VAR x)(RULES x -> x)", "left-hand side is the variable"),
        ("(VAR x y)(RULES f(x) -> y)", "right-hand side variable 'y'"),
        ("(VAR x)(RULES f(x) -> f(x,x))", "arity"),
        ("(VAR x)(RULES x(a) -> a)", "cannot take arguments"),
        ("(VAR x)", "missing RULES"),
        ("", "missing RULES"),
        ("(FOO)(RULES a -> a)", "unknown section"),
        ("(RULES a -> a)(VAR x)", "VAR section must precede RULES"),
        ("(RULES a -> a)(RULES a -> a)", "duplicate RULES"),
        ("(RULES a -> a", "unterminated RULES"),
        ("(RULES a -> )", "expected a term"),
        ("(RULES a a)", "expected '->'"),
    ],
)
def test_parse_errors(text, needle):
    with pytest.raises(ParseError) as exc:
        parse_trs(text)
    assert needle in str(exc.value)


def test_arity_clash_reports_first_use_line():
    with pytest.raises(ParseError) as exc:
        parse_trs("(VAR x)(RULES\n f(x) -> x\n f(x,x) -> x\n)")
    assert "arity 2" in str(exc.value) and "from line 2" in str(exc.value)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse_trs("(VAR x)\n(RULES x -> x)")
    assert exc.value.line == 2
    assert str(exc.value).startswith("2:")


def test_subterms_preorder():
    t = parse_trs("(VAR x y)(RULES f(g(x),y) -> x)").rules[0].lhs
    assert [format_term(u) for u in subterms(t)] == ["f(g(x),y)", "g(x)", "x", "y"]


def test_var_utilities():
    t = parse_trs("(VAR x y)(RULES f(g(x),f(x,y)) -> x)").rules[0].lhs
    assert term_vars(t) == {"x", "y"}
    assert var_counts(t) == {"x": 2, "y": 1}


@st.composite
def random_trs(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    rules = []
    for _ in range(n):
        lhs = draw(gen.terms().filter(lambda t: isinstance(t, App)))
        vs = sorted(term_vars(lhs))
        leaves = [Var(v) for v in vs] + [App(gen.A, ()), App(gen.B, ())]
        rhs = draw(
            st.recursive(
                st.sampled_from(leaves),
                lambda sub: st.one_of(
                    st.builds(lambda t: App(gen.G, (t,)), sub),
                    st.builds(lambda s, t: App(gen.F, (s, t)), sub, sub),
                ),
                max_leaves=5,
            )
        )
        rules.append(Rule(lhs, rhs))
    used = [s for s in gen.SIG if any(s.name in _names(r) for r in rules)]
    vs = tuple(v for v in ("x", "y") if any(v in term_vars(r.lhs) for r in rules))
    return Trs(tuple(rules), tuple(used), vs)


def _names(rule):
    out = set()
    for t in (rule.lhs, rule.rhs):
        out |= {u.sym.name for u in subterms(t) if isinstance(u, App)}
    return out


@given(random_trs())
def test_round_trip_random(trs):
    back = parse_trs(format_trs(trs))
    assert back.rules == trs.rules
    assert set(back.signature) == set(trs.signature)
    assert set(back.variables) == set(term_vars_of(trs))


def term_vars_of(trs):
    out = set()
    for r in trs.rules:
        out |= term_vars(r.lhs) | term_vars(r.rhs)
    return out

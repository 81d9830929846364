"""Tests for words, expressions, the identity DSL, and multilinearization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nassoc.errors import IndexOutOfRange, NotHomogeneous, ParseError, UnbalancedParens
from nassoc.terms import (
    Expr,
    Identity,
    Permutation,
    apply_permutation,
    multilinearize,
    parse_expr,
    parse_identity,
    word_key,
)

Q = Fraction
H = Q(1, 2)


# ---------------------------------------------------------------------------
# parsing


def test_parse_left_comb():
    e = parse_expr("((x1 x2) x3)")
    assert e == Expr({((1, 2), 3): Q(1)})


def test_parse_bracket_sugar():
    e = parse_expr("[x1,x2]")
    assert e == Expr({(1, 2): H, (2, 1): -H})


def test_parse_circle_sugar():
    e = parse_expr("(x1 o x2)")
    assert e == Expr({(1, 2): H, (2, 1): H})


def test_parse_associator_circle():
    # ((x1,x2,x3) o x4): expand associator, then the anticommutator by hand
    e = parse_expr("((x1,x2,x3) o x4)")
    expected = Expr(
        {
            (((1, 2), 3), 4): H,
            (4, ((1, 2), 3)): H,
            ((1, (2, 3)), 4): -H,
            (4, (1, (2, 3))): -H,
        }
    )
    assert e == expected
    assert len(e.terms) == 4
    assert e.degrees() == {4}


def test_parse_coefficients():
    e = parse_expr("2 * (x1 x2) - 1/2 * (x2 x1)")
    assert e == Expr({(1, 2): Q(2), (2, 1): Q(-1, 2)})


def test_parse_identity_two_sides():
    ident = parse_identity("((x1 x2) x3) = (x2 (x3 x1))")
    assert ident.expr == Expr({((1, 2), 3): Q(1), (2, (3, 1)): Q(-1)})
    assert ident.degree == 3
    assert ident.nvars == 3


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_expr("(x1 $ x2)")
    assert err.value.position == 4


def test_unbalanced_parens():
    with pytest.raises(UnbalancedParens):
        parse_expr("((x1 x2) x3")
    with pytest.raises(UnbalancedParens):
        parse_expr("[x1, x2)")


def test_nested_associator():
    e = parse_expr("((x1,x2,x3),x4,x5)")
    assert e.degrees() == {5}
    # (A x4) x5 - A (x4 x5) with A a 2-word associator: 4 signed words
    assert len(e.terms) == 4


# ---------------------------------------------------------------------------
# printing round-trip


def _random_word(data, vars_, depth):
    if depth == 0 or data.draw(st.booleans()):
        return data.draw(st.sampled_from(vars_))
    return (_random_word(data, vars_, depth - 1), _random_word(data, vars_, depth - 1))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_parse_print_roundtrip(data):
    terms = {}
    for _ in range(data.draw(st.integers(1, 4))):
        w = _random_word(data, (1, 2, 3), 2)
        c = Q(data.draw(st.integers(-4, 4)), data.draw(st.integers(1, 4)))
        terms[w] = terms.get(w, Q(0)) + c
    e = Expr(terms)
    if e.is_zero():
        return
    assert parse_expr(str(e)) == e


# ---------------------------------------------------------------------------
# permutations


def test_apply_permutation_examples():
    e = parse_expr("((x1 x2) x3)")
    p = Permutation((2, 1, 3))
    assert apply_permutation(e, p) == parse_expr("((x2 x1) x3)")
    cyc = Permutation((2, 3, 1))  # 1 -> 2 -> 3 -> 1
    assert apply_permutation(e, cyc) == parse_expr("((x2 x3) x1)")


def test_bracket_antisymmetry_under_swap():
    e = parse_expr("[x1,x2]")
    assert apply_permutation(e, Permutation((2, 1))) == e.scale(-1)


def test_permutation_sign_and_compose():
    p = Permutation((2, 1, 3))
    q = Permutation((2, 3, 1))
    assert p.sign == -1
    assert q.sign == 1
    assert p.compose(p) == Permutation((1, 2, 3))


def test_index_out_of_range():
    e = parse_expr("(x1 x4)")
    with pytest.raises(IndexOutOfRange):
        apply_permutation(e, Permutation((2, 1, 3)))


@settings(max_examples=50, deadline=None)
@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]))
def test_group_action(p_imgs, q_imgs):
    e = parse_expr("((x1 x2) x3) - 2 * (x2 (x3 x1))")
    p, q = Permutation(p_imgs), Permutation(q_imgs)
    assert apply_permutation(apply_permutation(e, q), p) == apply_permutation(e, p.compose(q))


# ---------------------------------------------------------------------------
# multilinearization


def _extract_multilinear_111(expr):
    """Oracle: keep only terms using x1, x2, x3 exactly once."""
    from nassoc.terms import leaves

    keep = {}
    for w, c in expr.terms.items():
        if tuple(sorted(leaves(w))) == (1, 2, 3):
            keep[w] = c
    return Expr(keep)


def test_multilinearize_cube():
    ident = parse_identity("(x1,x1,x1) = 0")
    out = multilinearize(ident)
    assert len(out) == 1
    # oracle: expand (x1+x2+x3, x1+x2+x3, x1+x2+x3) and take the (1,1,1) part
    cube = parse_expr("(x1,x1,x1)")
    s = Expr({1: Q(1), 2: Q(1), 3: Q(1)})
    expanded = cube.subs_vars({1: s})
    assert out[0].expr == _extract_multilinear_111(expanded)
    assert out[0].is_multilinear()


def test_multilinearize_already_multilinear():
    ident = parse_identity("((x1 x2) x3) = (x2 (x3 x1))")
    assert multilinearize(ident) == [ident]


def test_multilinearize_power_identity():
    ident = parse_identity("((x1 x1) x1) = (x1 (x1 x1))")
    out = multilinearize(ident)
    assert len(out) == 1
    cube = parse_expr("((x1 x1) x1) - (x1 (x1 x1))")
    s = Expr({1: Q(1), 2: Q(1), 3: Q(1)})
    assert out[0].expr == _extract_multilinear_111(cube.subs_vars({1: s}))


def test_multilinearize_recovers_input():
    ident = parse_identity("((x1 x1) x1) = (x1 (x1 x1))")
    (lin,) = multilinearize(ident)
    x = Expr.var(1)
    collapsed = lin.expr.subs_vars({1: x, 2: x, 3: x})
    # collapsing the fresh variables gives 3! times the original identity
    assert collapsed == ident.expr.scale(6)


def test_multilinearize_inhomogeneous_rejected():
    with pytest.raises(NotHomogeneous):
        multilinearize(Identity(parse_expr("(x1 x2) + x1")))


def test_word_key_orders_by_shape():
    left = ((1, 2), 3)
    right = (1, (2, 3))
    assert word_key(left) < word_key(right)

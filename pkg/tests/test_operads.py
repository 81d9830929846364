"""Tests for consequence spaces, dimensions, duals, and membership proofs."""

import os
from fractions import Fraction

import pytest

from nassoc.errors import DegreeTooLarge, NotQuadratic
from nassoc.exact import SeriesQ
from nassoc.operads import (
    MultilinearSpace,
    OperadPresentation,
    catalan,
    consequences,
    hilbert,
    implies,
    koszul_dual,
    koszulity_residual,
    multilinear_dim,
    nice_index,
    prove_zero,
    resolve_degree_cap,
)
from nassoc.systems import anti_system, builtin_system
from nassoc.terms import Permutation, apply_permutation, parse_expr

Q = Fraction


def _series(order, pairs):
    coeffs = [Q(0)] * order
    for n, c in pairs:
        coeffs[n - 1] = Q(c)
    return SeriesQ(order, coeffs)


# ---------------------------------------------------------------------------
# consequence spaces and dimensions


def test_associativity_degree3():
    cons = consequences(builtin_system("as"), 3)
    assert cons.dim == 6
    assert multilinear_dim(builtin_system("as"), 4) == 24


def test_sas_degree3():
    assert consequences(builtin_system("sas"), 3).dim == 6


def _rewrite_once(word):
    """All single applications of (uv)w -> v(wu) at any node of a word."""
    out = []
    if isinstance(word, int):
        return out
    left, right = word
    if isinstance(left, tuple):
        u, v = left
        out.append((v, (right, u)))
    for lw in _rewrite_once(left):
        out.append((lw, right))
    for rw in _rewrite_once(right):
        out.append((left, rw))
    return out


def test_sas_degree5_dimension_with_union_find_oracle():
    """Independent oracle: the ideal is spanned by single-step rewrites
    m - m', so its rank is (monomial count) - (connected components)."""
    space = MultilinearSpace(5)
    parent = list(range(space.dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx in range(space.dim):
        w = space.word_at(idx)
        for w2 in _rewrite_once(w):
            a, b = find(idx), find(space.index_of_word(w2))
            if a != b:
                parent[a] = b
    components = len({find(i) for i in range(space.dim)})
    cons = consequences(builtin_system("sas"), 5)
    assert cons.dim == space.dim - components == 1679
    assert multilinear_dim(builtin_system("sas"), 5) == components == 1


def test_dimension_identity():
    for name in ("sas", "cas", "as", "a23"):
        sysn = builtin_system(name)
        for n in (2, 3, 4):
            cons = consequences(sysn, n)
            assert cons.dim + multilinear_dim(sysn, n) == cons.space.dim
            assert cons.space.dim == __import__("math").factorial(n) * catalan(n - 1)


def test_sas_dims_table():
    sas = builtin_system("sas")
    assert [multilinear_dim(sas, n) for n in range(1, 6)] == [1, 2, 6, 12, 1]


def test_a23_degree5():
    assert multilinear_dim(builtin_system("a23"), 5) == 20


def test_free_magma_series():
    from nassoc.operads import free_magma_dim, free_magma_series

    assert [free_magma_dim(n) for n in (1, 2, 3)] == [1, 2, 12]
    assert free_magma_series(3) == _series(3, [(1, -1), (2, 1), (3, -2)])


def test_consequences_s3_stability():
    cons = consequences(builtin_system("sas"), 4)
    space = cons.space
    for row in cons.rref.basis()[:10]:
        expr = space.vec_to_expr(row)
        for images in ((2, 1, 3, 4), (4, 3, 2, 1), (2, 3, 4, 1)):
            relabeled = apply_permutation(expr, Permutation(images))
            assert cons.contains_expr(relabeled)


def test_degree_cap():
    with pytest.raises(DegreeTooLarge):
        consequences(builtin_system("sas"), 7)
    os.environ["NASSOC_DEGREE_CAP"] = "7"
    try:
        assert resolve_degree_cap(None) == 7
    finally:
        del os.environ["NASSOC_DEGREE_CAP"]
    assert resolve_degree_cap(None) == 6
    assert resolve_degree_cap(9) == 8


# ---------------------------------------------------------------------------
# Hilbert series and residuals


def test_hilbert_sas():
    assert hilbert(builtin_system("sas"), 5) == _series(
        5, [(1, -1), (2, 1), (3, -1), (4, Q(1, 2)), (5, Q(-1, 120))]
    )


def test_hilbert_a12():
    assert hilbert(builtin_system("a12"), 5) == _series(
        5, [(1, -1), (2, 1), (3, -1), (4, Q(1, 2)), (5, Q(-1, 6))]
    )


def test_residuals():
    sas = builtin_system("sas")
    assert koszulity_residual(sas, sas, 5) == _series(5, [(5, Q(61, 60))])
    asys = builtin_system("as")
    assert koszulity_residual(asys, asys, 5).is_zero()
    for name in ("a23", "a12"):
        sysn = builtin_system(name)
        dual = koszul_dual(OperadPresentation.of_system(sysn)).to_identity_system()
        assert koszulity_residual(sysn, dual, 5) == _series(5, [(5, Q(7, 6))])


def test_residual_rejects_nonquadratic():
    with pytest.raises(NotQuadratic):
        koszulity_residual(builtin_system("com-as"), builtin_system("as"), 5)


# ---------------------------------------------------------------------------
# Koszul duals


def test_dual_table():
    for name in ("as", "a123", "a132", "sas"):
        pres = OperadPresentation.of_system(builtin_system(name))
        assert koszul_dual(pres).same_space(pres), name
    for name in ("a23", "a12", "a13"):
        pres = OperadPresentation.of_system(builtin_system(name))
        dual = koszul_dual(pres)
        assert dual.same_space(OperadPresentation.of_system(anti_system(name))), name
        assert not dual.same_space(pres), name


def test_dual_involution():
    for name in ("as", "sas", "a132"):
        pres = OperadPresentation.of_system(builtin_system(name))
        assert koszul_dual(koszul_dual(pres)).same_space(pres)


def test_dual_sas_explicit_identity():
    dual = koszul_dual(OperadPresentation.of_system(builtin_system("sas")))
    rel = parse_expr("((x1 x2) x3) - (x2 (x3 x1))")
    assert dual.rref.contains(dual.space.expr_to_vec(rel))
    assert dual.dim == 6


def test_cas_dual_is_the_associator_cycle():
    dual = koszul_dual(OperadPresentation.of_system(builtin_system("cas")))
    expected = OperadPresentation.of_system(builtin_system("cas-dual"))
    assert dual.same_space(expected)


# ---------------------------------------------------------------------------
# implication and membership


def test_inclusion_chain():
    cas, sas, casd = builtin_system("cas"), builtin_system("sas"), builtin_system("cas-dual")
    for n in (3, 4):
        assert implies(cas, sas, n)
        assert implies(sas, casd, n)
    assert not implies(sas, builtin_system("as"), 3)
    assert not implies(sas, cas, 3)


def test_prove_zero_examples():
    sas = builtin_system("sas")
    assert prove_zero(parse_expr("[x1,[x2,[x3,[x4,x5]]]]"), sas)
    assert prove_zero(
        parse_expr("(x1 o (x2 o (x3 o (x4 o x5)))) - (x1 o (x2 o (x4 o (x3 o x5))))"), sas
    )
    assert not prove_zero(parse_expr("[[x1,x2],x3]"), sas)


def test_prove_zero_monotone():
    # cyclic associative is contained in shift associative, so anything that
    # vanishes in the larger variety vanishes in the smaller one
    sas, cas = builtin_system("sas"), builtin_system("cas")
    for text in ("[x1,[x2,[x3,[x4,x5]]]]", "[x1,(x2 o (x3 o (x4 o x5)))]"):
        e = parse_expr(text)
        assert prove_zero(e, sas)
        assert prove_zero(e, cas)


def test_prove_zero_nonmultilinear():
    sas = builtin_system("sas")
    assert prove_zero(parse_expr("((x1 x1) x1) - (x1 (x1 x1))"), sas)


# ---------------------------------------------------------------------------
# niceness


def test_nice_indices():
    assert nice_index(builtin_system("sas"), 6) == 5
    assert nice_index(builtin_system("cas"), 6) == 4
    assert nice_index(builtin_system("com-as"), 6) == 3
    assert nice_index(builtin_system("as"), 6) is None

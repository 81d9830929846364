"""Tests for derivations, chains, Peirce splits, the semisimple/radical
decomposition, cocycle products, and fingerprints."""

from fractions import Fraction

import pytest

from nassoc.algebras import AlgebraStructure, check_identity
from nassoc.corpus import load_algebra
from nassoc.errors import NonSplitOperator, NotIdempotent, ParametricNotSupported, VerificationFailed
from nassoc.exact.linalg import bareiss_rank
from nassoc.exact.poly import PolyQ
from nassoc.structure import (
    CocycleSpec,
    Subspace,
    algebra_from_cocycle,
    annihilator_dim,
    change_basis,
    derivation_algebra,
    fingerprint,
    is_derivation,
    is_leibniz_derivation,
    peirce,
    powers_and_nilpotency,
    subalgebra_identity_check,
    wedderburn,
)
from nassoc.systems import builtin_system

Q = Fraction


def zero_algebra(n):
    consts = [[[PolyQ.zero()] * n for _ in range(n)] for _ in range(n)]
    return AlgebraStructure("zero", n, consts)


# ---------------------------------------------------------------------------
# derivations


def test_derivations_of_split_semisimple():
    assert derivation_algebra(load_algebra("A17")).dim == 0


def test_derivations_of_zero_algebra():
    assert derivation_algebra(zero_algebra(4)).dim == 16


def test_derivations_of_a12_at_one():
    """Direct computation gives a 4-dimensional derivation algebra (the
    published orbit count 13 for this family is the orbit dimension 12 of
    each member plus one for the parameter)."""
    A = load_algebra("a12").specialize({"alpha": 1})
    der = derivation_algebra(A)
    assert der.dim == 4
    for m in der.matrices:
        assert is_derivation(A, m)


def test_derivation_solution_space_matches_bareiss_rank():
    A = load_algebra("a13")
    n = A.dim
    rows = []
    c = [[[p.constant_value() for p in A.constants[i][j]] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [Q(0)] * (n * n)
                for l in range(n):
                    row[m * n + l] += c[i][j][l]
                for k in range(n):
                    row[k * n + i] -= c[k][j][m]
                    row[k * n + j] -= c[i][k][m]
                rows.append(row)
    assert derivation_algebra(A).dim == n * n - bareiss_rank(rows)


def test_derivations_require_specialization():
    with pytest.raises(ParametricNotSupported):
        derivation_algebra(load_algebra("a2"))


# ---------------------------------------------------------------------------
# Leibniz derivations


def test_derivation_is_leibniz_of_order3():
    A = load_algebra("a12").specialize({"alpha": 1})
    for m in derivation_algebra(A).matrices:
        assert is_leibniz_derivation(A, m, 3)


def test_identity_map_on_two_step_nilpotent():
    A = load_algebra("a1")
    eye = [[Q(i == j) for j in range(3)] for i in range(3)]
    # all triple products vanish, so the order-3 condition degenerates to 0 = 0
    assert is_leibniz_derivation(A, eye, 3)


def test_non_derivation_detected():
    A = load_algebra("A04")  # e1 e1 = e2
    D = [[Q(1), Q(0)], [Q(0), Q(0)]]  # e1 -> e1, e2 -> 0
    assert not is_leibniz_derivation(A, D, 2)


def test_single_bracketing_option():
    from nassoc.terms import shapes

    A = load_algebra("a1")
    eye = [[Q(i == j) for j in range(3)] for i in range(3)]
    assert is_leibniz_derivation(A, eye, 3, shapes(3)[0])


# ---------------------------------------------------------------------------
# power chains


def test_powers_of_family():
    rep = powers_and_nilpotency(load_algebra("a2"))
    assert rep.is_nilpotent and rep.is_solvable
    assert rep.nilpotency_class == 2
    assert rep.power_dims[:3] == [3, 1, 0]


def test_powers_idempotent_algebra():
    rep = powers_and_nilpotency(load_algebra("A17"))
    assert not rep.is_nilpotent and not rep.is_solvable
    assert rep.nilpotency_class is None


def test_powers_zero_algebra():
    rep = powers_and_nilpotency(zero_algebra(3))
    assert rep.is_nilpotent and rep.nilpotency_class == 1


def test_subalgebra_identity_checks():
    dim5 = load_algebra("dim5_nonassoc")
    assert subalgebra_identity_check(dim5, 2, builtin_system("as")).holds
    assert subalgebra_identity_check(dim5, 3, builtin_system("com-as")).holds
    assert not subalgebra_identity_check(dim5, 1, builtin_system("as")).holds


# ---------------------------------------------------------------------------
# Peirce splits


def test_peirce_split_semisimple():
    A = load_algebra("A17")
    split = peirce(A, A.basis_element(1))
    assert split.dims() == (3, 0, 1)
    assert split.a_half_zero and split.a0_ideal and split.a1_ideal and split.cross_products_zero


def test_peirce_a12():
    A = load_algebra("a12").specialize({"alpha": 1})
    split = peirce(A, A.basis_element(4))
    assert split.dims() == (3, 0, 1)
    assert split.a1 == [[Q(0), Q(0), Q(0), Q(1)]]


def test_peirce_zero_element():
    A = load_algebra("A17")
    split = peirce(A, A.zero_element())
    assert split.dims() == (4, 0, 0)


def test_peirce_rejects_non_idempotent():
    A = load_algebra("A17")
    with pytest.raises(NotIdempotent):
        peirce(A, A.element([2, 0, 0, 0]))


def test_peirce_non_split_operator():
    # e1 idempotent with e1 e2 = 3 e2 = e2 e1: the averaged operator has
    # eigenvalue 3, outside {0, 1/2, 1}
    A = AlgebraStructure("bad", 2, [[[1, 0], [0, 3]], [[0, 3], [0, 0]]])
    with pytest.raises(NonSplitOperator):
        peirce(A, A.basis_element(1))


# ---------------------------------------------------------------------------
# semisimple + radical splits


def test_wedderburn_split_semisimple():
    split = wedderburn(load_algebra("A17"))
    assert split.dims() == (4, 0)
    assert split.all_ok


def test_wedderburn_nilpotent():
    split = wedderburn(load_algebra("a02").specialize({"alpha": 1}))
    assert split.dims() == (0, 4)
    assert split.all_ok


def test_wedderburn_a12():
    split = wedderburn(load_algebra("a12").specialize({"alpha": 1}))
    assert split.dims() == (1, 3)
    assert split.all_ok
    assert split.s_basis == [[Q(0), Q(0), Q(0), Q(1)]]
    r = Subspace(4, split.r_basis)
    for i in range(3):
        v = [Q(0)] * 4
        v[i] = Q(1)
        assert r.contains(v)


def test_wedderburn_nonsplit_over_q():
    # Q[x]/(x^2 + 1): semisimple but its idempotent data is not rational
    A = AlgebraStructure("gauss", 2, [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]])
    with pytest.raises(VerificationFailed):
        wedderburn(A)


def test_wedderburn_corpus_samples():
    for name in ("A08", "A21", "a11", "a05"):
        A = load_algebra(name)
        split = wedderburn(A)
        assert split.all_ok, name


# ---------------------------------------------------------------------------
# cocycle construction


def test_cocycle_reproduces_family():
    L1 = load_algebra("L1")
    alpha = PolyQ.var("alpha")
    theta = CocycleSpec(
        3,
        {
            (1, 1): (PolyQ.zero(), PolyQ.zero(), PolyQ.const(1)),
            (2, 2): (PolyQ.zero(), PolyQ.zero(), alpha),
        },
    )
    built = algebra_from_cocycle(L1, theta)
    ref = load_algebra("a2")
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert built.constants[i][j][k] == ref.constants[i][j][k]
    assert check_identity(built, builtin_system("sas")).holds


def test_zero_cocycle_gives_bracket():
    L1 = load_algebra("L1")
    built = algebra_from_cocycle(L1, CocycleSpec(3, {}))
    ref = load_algebra("a1")
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert built.constants[i][j][k] == ref.constants[i][j][k]
    assert check_identity(built, builtin_system("sas")).holds


def test_l2_admits_no_sampled_cocycle():
    """Sampled symmetric maps on the 4-dimensional filiform Lie algebra never
    produce a shift associative product (universal emptiness is out of scope)."""
    L2 = load_algebra("L2")
    samples = [Q(0), Q(1), Q(-1), Q(2)]
    found = 0
    import itertools

    for c34, c44, c11k in itertools.product(samples, repeat=3):
        theta = CocycleSpec(
            4,
            {
                (3, 4): (0, 0, 0, c34),
                (4, 4): (0, 0, 0, c44),
                (1, 1): (0, 0, 0, c11k),
            },
        )
        built = algebra_from_cocycle(L2, theta)
        if check_identity(built, builtin_system("sas")).holds:
            found += 1
    assert found == 0


def test_cocycle_requires_anticommutative():
    with pytest.raises(ValueError):
        algebra_from_cocycle(load_algebra("A04"), CocycleSpec(2, {}))


# ---------------------------------------------------------------------------
# fingerprints and basis changes


def test_fingerprint_separates_two_dim():
    fp3 = fingerprint(load_algebra("A03"))
    fp4 = fingerprint(load_algebra("A04"))
    assert fp3.as_tuple() != fp4.as_tuple()
    assert fp3.nilpotency_class is None and fp4.nilpotency_class == 2


def test_fingerprint_separates_symmetric_part():
    fp1 = fingerprint(load_algebra("a1"))
    fp2 = fingerprint(load_algebra("a2").specialize({"alpha": 0}))
    assert fp1.as_tuple() != fp2.as_tuple()
    assert fp1.dim_der_plus != fp2.dim_der_plus


def test_fingerprint_self_equal():
    fp = fingerprint(load_algebra("a13"))
    assert fp.as_tuple() == fingerprint(load_algebra("a13")).as_tuple()


def test_annihilator_dims():
    assert annihilator_dim(load_algebra("a1")) == 1
    assert annihilator_dim(zero_algebra(4)) == 4
    assert annihilator_dim(load_algebra("A17")) == 0


def test_change_basis_identity():
    A = load_algebra("a13")
    eye = [[Q(i == j) for j in range(4)] for i in range(4)]
    B = change_basis(A, eye)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert B.constants[i][j][k] == A.constants[i][j][k]


def test_change_basis_preserves_identities():
    import random

    from nassoc.moduli import random_invertible_matrix

    rng = random.Random(7)
    A = load_algebra("dim5_nonassoc")
    for _ in range(3):
        M = random_invertible_matrix(5, rng)
        B = change_basis(A, M)
        assert check_identity(B, builtin_system("sas")).holds
        assert not check_identity(B, builtin_system("as")).holds

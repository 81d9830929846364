"""Tests for basis transforms, degeneration certificates, closed sets,
orbit dimensions, and the pencil invariant."""

import random
from fractions import Fraction

import pytest

from nassoc.corpus import load_algebra, load_certificate, load_closed_set, run_certificate
from nassoc.errors import ParametricNotSupported, ShapeMismatch, SingularForAllT
from nassoc.exact.ratfun import RatFunT
from nassoc.moduli import (
    ClosedSetSpec,
    ParamBasis,
    closed_set_membership,
    degeneration_check,
    degeneration_necessary,
    family_degeneration_check,
    monomial_certificate_search,
    orbit_dim,
    pencil_invariant,
    random_invertible_matrix,
    transform,
)
from nassoc.structure import change_basis, derivation_algebra

Q = Fraction


# ---------------------------------------------------------------------------
# transforms


def test_transform_identity_basis():
    A = load_algebra("a13")
    cols = [["1" if i == j else "0" for i in range(4)] for j in range(4)]
    out = transform(A, ParamBasis.from_strings(cols))
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert out[i][j][k] == RatFunT(A.constants[i][j][k].constant_value())


def test_transform_diagonal_example():
    A = load_algebra("a12")
    basis = ParamBasis.from_strings(
        [["t", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "t", "0"], ["0", "0", "0", "1"]],
        {"alpha": "0"},
    )
    out = transform(A, basis)
    t = RatFunT.t()
    one = RatFunT.const(1)
    assert out[0][0][2] == t  # E1 E1 = t E3
    assert out[0][1][2] == one  # E1 E2 = E3
    assert out[1][0][2] == -one
    assert out[3][3][3] == one  # E4 E4 = E4
    assert out[1][1][2] == RatFunT.const(0)


def test_transform_scaling_two_step_nilpotent():
    A = load_algebra("a1")
    basis = ParamBasis.from_strings([["t", "0", "0"], ["0", "t", "0"], ["0", "0", "t"]])
    out = transform(A, basis)
    assert out[0][1][2] == RatFunT.t()
    assert out[1][0][2] == -RatFunT.t()


def test_transform_functorial_at_samples():
    """transform(A, P*Q) agrees with transforming twice, checked exactly at
    rational t samples away from poles."""
    A = load_algebra("a13")
    P = [["t", "0", "0", "0"], ["0", "1", "0", "t"], ["0", "0", "t^2", "0"], ["0", "1", "0", "1"]]
    Qb = [["1", "t", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "t", "1"]]
    pb = ParamBasis.from_strings(P)
    qb = ParamBasis.from_strings(Qb)
    pm, qm = pb.matrix(), qb.matrix()
    prod_cols = [
        [sum((pm[r][s] * qm[s][i] for s in range(4)), RatFunT.const(0)) for r in range(4)]
        for i in range(4)
    ]
    once = transform(A, ParamBasis(prod_cols))
    for tval in (Q(2), Q(3), Q(5)):
        # evaluate the two-step route at the sample: change basis by Q(t0), then by P(t0)
        qnum = [[qm[r][c].eval_at(tval) for c in range(4)] for r in range(4)]
        pnum = [[pm[r][c].eval_at(tval) for c in range(4)] for r in range(4)]
        two_step = change_basis(change_basis(A, pnum), qnum)
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    assert once[i][j][k].eval_at(tval) == two_step.constants[i][j][k].constant_value()


def test_transform_rejects_singular():
    A = load_algebra("a1")
    cols = [["t", "0", "0"], ["t", "0", "0"], ["0", "0", "1"]]
    with pytest.raises(SingularForAllT):
        transform(A, ParamBasis.from_strings(cols))


def test_transform_requires_substitution():
    A = load_algebra("a12")
    cols = [["1" if i == j else "0" for i in range(4)] for j in range(4)]
    with pytest.raises(ParametricNotSupported):
        transform(A, ParamBasis.from_strings(cols))


# ---------------------------------------------------------------------------
# degenerations


def test_identity_certificate():
    A = load_algebra("a13")
    cols = [["1" if i == j else "0" for i in range(4)] for j in range(4)]
    cert = degeneration_check(A, ParamBasis.from_strings(cols), A)
    assert cert.verdict


def test_shipped_certificates_verify():
    for name in ("a12_0_to_a11", "a12_m1t_to_a13", "a13_to_a14"):
        result = run_certificate(load_certificate(name))
        assert result.verdict, name
    family = run_certificate(load_certificate("a12_family_to_a06"))
    assert all(r.verdict for r in family)


def test_printed_family_basis_fails():
    """The source table's parametrized basis for the family degeneration
    produces poles at t = 0; the shipped certificate documents and repairs it."""
    cert = load_certificate("a12_family_to_a06")
    assert "printed_basis" in cert and "note" in cert
    a12, a06 = load_algebra("a12"), load_algebra("a06")
    res = family_degeneration_check(
        a12, cert["printed_basis"], cert["subst"], a06, {"alpha": Q(1)}
    )
    assert not res.verdict
    assert any(e.limit is None for e in res.failures())


def test_pole_reported_as_failure():
    A = load_algebra("a1")
    B = load_algebra("a1")
    cols = [["1/t", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    cert = degeneration_check(A, ParamBasis.from_strings(cols), B)
    assert not cert.verdict
    assert any(e.limit is None for e in cert.failures())


def test_certificate_fingerprint_dominance():
    """A verified degeneration cannot decrease the derivation dimension."""
    checks = [
        ("a12_0_to_a11", {"alpha": Q(0)}),
        ("a13_to_a14", {}),
    ]
    for name, spec_env in checks:
        cert = load_certificate(name)
        result = run_certificate(cert)
        assert result.verdict
        A = load_algebra(cert["from"])
        if A.is_parametric():
            A = A.specialize(spec_env)
        B = load_algebra(cert["to"])
        assert derivation_algebra(B).dim >= derivation_algebra(A).dim


def test_monomial_search_finds_corrected_exponents():
    found = monomial_certificate_search(load_algebra("a13"), load_algebra("a14"), 6)
    assert (1, 2, 3, 2) in found
    assert all(ks[0] + ks[0] - ks[3] == 0 for ks in found)  # e1 e1 = e4 pins k4 = 2 k1


# ---------------------------------------------------------------------------
# orbit dimensions and necessary conditions


def test_orbit_dims():
    assert orbit_dim(load_algebra("A17")) == 16
    assert orbit_dim(load_algebra("a12")) == 13  # family: generic orbit 12 + 1 parameter
    for s in (Q(-1), Q(0), Q(1), Q(2)):
        assert orbit_dim(load_algebra("a12").specialize({"alpha": s})) == 12
    assert orbit_dim(load_algebra("a06")) == 12
    assert orbit_dim(load_algebra("A16")) == 12
    z = load_algebra("a1")
    from nassoc.algebras import AlgebraStructure
    from nassoc.exact.poly import PolyQ

    zero4 = AlgebraStructure("zero4", 4, [[[PolyQ.zero()] * 4 for _ in range(4)] for _ in range(4)])
    assert orbit_dim(zero4) == 0


def test_necessary_conditions():
    A17 = load_algebra("A17")
    a12_1 = load_algebra("a12").specialize({"alpha": 1})
    rep = degeneration_necessary(A17, a12_1)
    assert rep.possible
    assert rep.details["dim_der"] == (0, 4)
    same = degeneration_necessary(A17, A17)
    assert not same.proper
    # wrong direction: derivations must grow strictly
    back = degeneration_necessary(a12_1, A17)
    assert not back.der_condition


# ---------------------------------------------------------------------------
# closed sets


def test_closed_set_membership():
    spec = load_closed_set("a12_not_a10")
    assert closed_set_membership(spec, load_algebra("a12").specialize({"alpha": 1}))
    assert not closed_set_membership(spec, load_algebra("a10").specialize({"alpha": 1}))


def test_closed_set_zero_algebra():
    from nassoc.algebras import AlgebraStructure
    from nassoc.exact.poly import PolyQ

    spec = load_closed_set("a12_not_a10")
    zero4 = AlgebraStructure("zero4", 4, [[[PolyQ.zero()] * 4 for _ in range(4)] for _ in range(4)])
    assert closed_set_membership(spec, zero4)


def test_containment_shorthand():
    spec = ClosedSetSpec(containments=["A1*A1<=A3"])
    assert closed_set_membership(spec, load_algebra("a12").specialize({"alpha": 1}))
    assert not closed_set_membership(spec, load_algebra("A17"))


def test_borel_stability_evidence():
    """The containment shorthand part of the closed set is stable under
    triangular basis changes fixing the tail flags (randomized, seeded).

    With columns as new basis vectors, the matrices stabilizing the flags
    A_i = span(e_i..e_n) are the lower-triangular ones.
    """
    from nassoc.moduli import random_lower_triangular

    spec = ClosedSetSpec(containments=["A1*A1<=A3"])
    rng = random.Random(0)
    for name, value in (("a12", Q(1)), ("a10", Q(1)), ("a02", Q(2))):
        A = load_algebra(name).specialize({"alpha": value})
        base = closed_set_membership(spec, A)
        assert base
        for _ in range(8):
            M = random_lower_triangular(4, rng)
            assert closed_set_membership(spec, change_basis(A, M)) == base
    # a full-flag breaker: generic invertible changes do not preserve it
    A = load_algebra("a12").specialize({"alpha": Q(1)})
    broke = False
    for _ in range(12):
        M = random_invertible_matrix(4, rng)
        if not closed_set_membership(spec, change_basis(A, M)):
            broke = True
            break
    assert broke


# ---------------------------------------------------------------------------
# the pencil invariant


def test_pencil_values():
    a2 = load_algebra("a2")
    for s in (Q(0), Q(1), Q(2), Q(-1), Q(7, 3)):
        assert pencil_invariant(a2.specialize({"alpha": s})) == s


def test_pencil_of_bracket_algebra():
    assert pencil_invariant(load_algebra("a1")) == 0


def test_pencil_invariance_under_basis_changes():
    rng = random.Random(0)
    A = load_algebra("a2").specialize({"alpha": Q(3, 2)})
    for _ in range(20):
        M = random_invertible_matrix(3, rng)
        assert pencil_invariant(change_basis(A, M)) == Q(3, 2)


def test_pencil_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        pencil_invariant(load_algebra("A07"))  # not nilpotent
    with pytest.raises(ShapeMismatch):
        pencil_invariant(load_algebra("A06"))  # commutative: no antisymmetric part


def test_orbit_dim_derivation_identity():
    """For specialized algebras the orbit dimension and the derivation
    dimension always split n^2."""
    for name, env in (("A17", {}), ("a13", {}), ("a12", {"alpha": Q(1)}), ("a06", {"alpha": Q(-1)})):
        A = load_algebra(name)
        if env:
            A = A.specialize(env)
        assert orbit_dim(A) + derivation_algebra(A).dim == A.dim * A.dim

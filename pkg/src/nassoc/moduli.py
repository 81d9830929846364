"""Geometric classification support.

A degeneration A -> B is certified by an invertible parametrized basis
E_i(t): the structure constants of A rewritten in that basis must be
rational functions of t whose limits at t = 0 exist and equal B's constants.
All limits are taken symbolically; a pole surviving exact cancellation is a
hard failure.  Families A(alpha) degenerate through an additional parameter
substitution alpha := f(t) (checked at sampled rational alpha for
parametrized targets).

Orbit dimensions follow the derivation count: a single n-dimensional
algebra has orbit dimension n^2 - dim Der; a one-parameter family's orbit
closure gains one dimension on top of the generic orbit dimension.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import exprparse
from .algebras import AlgebraStructure
from .errors import ParametricNotSupported, PoleAtZero, ShapeMismatch, SingularForAllT
from .exact.linalg import det, rref, solve_right
from .exact.poly import PolyQ
from .exact.ratfun import RatFunT
from .structure import derivation_algebra, power_subspaces

RF0 = RatFunT.const(0)
RF1 = RatFunT.const(1)


def eval_poly(p: PolyQ, env: dict[str, RatFunT]) -> RatFunT:
    """Evaluate a polynomial with RatFunT values for its variables."""
    total = RF0
    for exps, c in sorted(p.terms.items()):
        term = RatFunT.const(c)
        for v, e in zip(p.vars, exps):
            if e:
                term = term * env[v] ** e
        total = total + term
    return total


@dataclass
class ParamBasis:
    """Columns are the coordinates of E_1..E_n in the reference basis."""

    columns: list  # list of columns, each a list of RatFunT
    subst: dict = field(default_factory=dict)  # parameter name -> RatFunT

    @property
    def dim(self) -> int:
        return len(self.columns)

    def matrix(self):
        n = self.dim
        return [[self.columns[i][r] for i in range(n)] for r in range(n)]

    @staticmethod
    def from_strings(columns, subst=None, env=None) -> "ParamBasis":
        base_env = {"t": RatFunT.t()}
        if env:
            base_env.update(env)
        cols = [
            [exprparse.evaluate(entry, base_env, RatFunT.const) for entry in col] for col in columns
        ]
        sub = {
            name: exprparse.evaluate(text, base_env, RatFunT.const)
            for name, text in (subst or {}).items()
        }
        return ParamBasis(cols, sub)


def transform(A: AlgebraStructure, basis: ParamBasis):
    """Structure constants of A in the parametrized basis, as RatFunT entries.

    Raises SingularForAllT when the basis matrix has identically zero
    determinant, and requires basis.subst to cover all parameters of A.
    """
    n = A.dim
    if basis.dim != n:
        raise ValueError("basis dimension does not match the algebra")
    for p in A.parameters:
        if p not in basis.subst:
            raise ParametricNotSupported(f"no substitution supplied for parameter {p!r}")
    m = basis.matrix()
    if det(m, zero=RF0, one=RF1) == RF0:
        raise SingularForAllT("parametrized basis matrix is singular for every t")
    env = dict(basis.subst)
    consts = [
        [[eval_poly(A.constants[i][j][k], env) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    new = [[None] * n for _ in range(n)]
    rhs_columns = []
    order = []
    for i in range(n):
        for j in range(n):
            vec = [RF0] * n
            for a in range(n):
                ca = basis.columns[i][a]
                if ca == RF0:
                    continue
                for b in range(n):
                    cb = basis.columns[j][b]
                    if cb == RF0:
                        continue
                    coef = ca * cb
                    for k in range(n):
                        if consts[a][b][k] != RF0:
                            vec[k] = vec[k] + coef * consts[a][b][k]
            rhs_columns.append(vec)
            order.append((i, j))
    solved = solve_right(m, rhs_columns, zero=RF0, one=RF1)
    for (i, j), col in zip(order, solved):
        new[i][j] = col
    return new


@dataclass
class CertificateEntry:
    i: int
    j: int
    k: int
    value: str  # c'_ij^k(t)
    limit: Fraction | None
    expected: Fraction
    ok: bool


@dataclass
class DegenerationCertificate:
    source: str
    target: str
    verdict: bool
    entries: list[CertificateEntry]

    def failures(self):
        return [e for e in self.entries if not e.ok]


def degeneration_check(A: AlgebraStructure, basis: ParamBasis, B: AlgebraStructure) -> DegenerationCertificate:
    """Verify that the parametrized basis certifies A -> B."""
    if B.is_parametric():
        raise ParametricNotSupported("degeneration target must be parameter-free")
    if A.dim != B.dim:
        raise ValueError("source and target dimensions differ")
    n = A.dim
    transformed = transform(A, basis)
    entries = []
    verdict = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = transformed[i][j][k]
                expected = B.constants[i][j][k].constant_value()
                try:
                    lim = c.value_at_zero()
                    ok = lim == expected
                except PoleAtZero:
                    lim = None
                    ok = False
                if not ok:
                    verdict = False
                entries.append(CertificateEntry(i + 1, j + 1, k + 1, str(c), lim, expected, ok))
    return DegenerationCertificate(A.name, B.name, verdict, entries)


def family_degeneration_check(
    A: AlgebraStructure,
    columns,
    subst,
    B: AlgebraStructure,
    sample_env: dict[str, Fraction] | None = None,
) -> DegenerationCertificate:
    """Degeneration of a parametric family: substitute the parametrized index
    (and any sampled rational values) into the basis strings, then check."""
    env = {name: RatFunT.const(v) for name, v in (sample_env or {}).items()}
    basis = ParamBasis.from_strings(columns, subst, env)
    target = B.specialize(sample_env or {}) if B.is_parametric() else B
    return degeneration_check(A, basis, target)


# ---------------------------------------------------------------------------
# orbit dimensions and necessary conditions


def generic_derivation_dim(A: AlgebraStructure) -> int:
    """Derivation dimension at generic parameter values (rank over Q(alpha))."""
    if len(A.parameters) == 0:
        return derivation_algebra(A).dim
    if len(A.parameters) > 1:
        raise ParametricNotSupported("generic derivations support one parameter")
    param = A.parameters[0]
    env = {param: RatFunT.t()}
    n = A.dim
    c = [[[eval_poly(A.constants[i][j][k], env) for k in range(n)] for j in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [RF0] * (n * n)
                for l in range(n):
                    if c[i][j][l] != RF0:
                        row[m * n + l] = row[m * n + l] + c[i][j][l]
                for k in range(n):
                    if c[k][j][m] != RF0:
                        row[k * n + i] = row[k * n + i] - c[k][j][m]
                    if c[i][k][m] != RF0:
                        row[k * n + j] = row[k * n + j] - c[i][k][m]
                if any(x != RF0 for x in row):
                    rows.append(row)
    if not rows:
        return n * n
    pivots, _ = rref(rows, zero=RF0, one=RF1)
    return n * n - len(pivots)


def orbit_dim(A: AlgebraStructure) -> int:
    """n^2 - dim Der(A); for a parametric family, the dimension of the union
    of the family's orbits (one extra dimension per free parameter)."""
    n = A.dim
    if not A.is_parametric():
        return n * n - derivation_algebra(A).dim
    return n * n - generic_derivation_dim(A) + len(A.parameters)


@dataclass
class NecessaryReport:
    proper: bool
    der_condition: bool
    square_condition: bool
    nilpotency_condition: bool
    details: dict

    @property
    def possible(self) -> bool:
        return self.proper and self.der_condition and self.square_condition and self.nilpotency_condition


def degeneration_necessary(A: AlgebraStructure, B: AlgebraStructure) -> NecessaryReport:
    """Advisory necessary conditions for a proper degeneration A -> B."""
    same = A.dim == B.dim and all(
        A.constants[i][j][k] == B.constants[i][j][k]
        for i in range(A.dim)
        for j in range(A.dim)
        for k in range(A.dim)
    )
    derA = derivation_algebra(A).dim
    derB = derivation_algebra(B).dim
    chainA = power_subspaces(A, limit=3)
    chainB = power_subspaces(B, limit=3)
    a2A = chainA[1].dim if len(chainA) > 1 else 0
    a2B = chainB[1].dim if len(chainB) > 1 else 0
    from .structure import powers_and_nilpotency

    nilpA = powers_and_nilpotency(A).is_nilpotent
    nilpB = powers_and_nilpotency(B).is_nilpotent
    return NecessaryReport(
        proper=not same,
        der_condition=derA < derB,
        square_condition=a2A >= a2B,
        nilpotency_condition=(not nilpA) or nilpB,
        details={
            "dim_der": (derA, derB),
            "dim_square": (a2A, a2B),
            "nilpotent": (nilpA, nilpB),
        },
    )


# ---------------------------------------------------------------------------
# closed sets


@dataclass
class ClosedSetSpec:
    containments: list[str] = field(default_factory=list)
    equations: list[str] = field(default_factory=list)

    @staticmethod
    def from_dict(data: dict) -> "ClosedSetSpec":
        return ClosedSetSpec(list(data.get("contain", ())), list(data.get("equations", ())))


def _parse_containment(text: str):
    # "Ap*Aq<=Ar" with A_i the span of e_i..e_n
    compact = text.replace(" ", "")
    left, right = compact.split("<=")
    r = int(right[1:])
    p_str, q_str = left.split("*")
    return int(p_str[1:]), int(q_str[1:]), r


def closed_set_membership(spec: ClosedSetSpec, A: AlgebraStructure) -> bool:
    """Evaluate containment shorthands and polynomial equations at A's constants."""
    if A.is_parametric():
        raise ParametricNotSupported("specialize parameters before membership tests")
    n = A.dim
    c = [[[A.constants[i][j][k].constant_value() for k in range(n)] for j in range(n)] for i in range(n)]
    for text in spec.containments:
        p, q, r = _parse_containment(text)
        for i in range(p, n + 1):
            for j in range(q, n + 1):
                for k in range(1, r):
                    if c[i - 1][j - 1][k - 1] != 0:
                        return False
    env = {
        f"c[{i}][{j}][{k}]": c[i - 1][j - 1][k - 1]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for k in range(1, n + 1)
    }
    for eq in spec.equations:
        if "=" in eq:
            lhs, rhs = eq.split("=", 1)
            lv = exprparse.evaluate(lhs, env, Fraction)
            rv = exprparse.evaluate(rhs, env, Fraction)
            if lv != rv:
                return False
        else:
            if exprparse.evaluate(eq, env, Fraction) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# the pencil invariant for 3-dimensional 2-step nilpotent algebras


def pencil_invariant(A: AlgebraStructure) -> Fraction:
    """Normalized determinant of the symmetric product part.

    Applies to 3-dimensional 2-step nilpotent algebras whose square is one
    dimensional with a nonzero antisymmetric product part.  Writing products
    into the square's generator z as S (symmetric) and K (antisymmetric)
    2x2 forms on a complement, rescaling z normalizes K to the standard
    antisymmetric unit and det(S) becomes a basis-change invariant.
    """
    if A.dim != 3:
        raise ShapeMismatch("pencil invariant needs a 3-dimensional algebra")
    if A.is_parametric():
        raise ParametricNotSupported("specialize parameters first")
    chain = power_subspaces(A, limit=3)
    square = chain[1]
    if square.dim != 1:
        raise ShapeMismatch("the square must be one-dimensional")
    cube = chain[2] if len(chain) > 2 else square
    if cube.dim != 0:
        raise ShapeMismatch("the algebra must be 2-step nilpotent")
    z = square.basis()[0]
    pivot = square.pivots[0]
    comp = [i for i in range(3) if i != pivot]
    u = A.basis_element(comp[0] + 1)
    v = A.basis_element(comp[1] + 1)

    def coeff(x, y):
        prod = [p.constant_value() for p in A.mul(x, y).coords]
        lam = prod[pivot] / z[pivot]
        if any(prod[i] != lam * z[i] for i in range(3)):
            raise ShapeMismatch("products leave the one-dimensional square")
        return lam

    s11 = coeff(u, u)
    s22 = coeff(v, v)
    uv = coeff(u, v)
    vu = coeff(v, u)
    k = (uv - vu) / 2
    s12 = (uv + vu) / 2
    if k == 0:
        raise ShapeMismatch("the antisymmetric product part vanishes")
    return (s11 * s22 - s12 * s12) / (k * k)


# ---------------------------------------------------------------------------
# randomized evidence helpers (seeded, deterministic)


def random_invertible_matrix(n: int, rng: random.Random):
    while True:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if det(m) != 0:
            return m


def random_upper_triangular(n: int, rng: random.Random):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Fraction(rng.choice([1, -1, 2, 3]))
        for j in range(i + 1, n):
            m[i][j] = Fraction(rng.randint(-2, 2))
    return m


def random_lower_triangular(n: int, rng: random.Random):
    """Column i supported on rows >= i: these basis changes stabilize the
    tail flags A_i = span(e_i..e_n) used by the containment shorthands."""
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Fraction(rng.choice([1, -1, 2, 3]))
        for j in range(i):
            m[i][j] = Fraction(rng.randint(-2, 2))
    return m


# ---------------------------------------------------------------------------
# certificate repair: diagonal monomial bases t^k e_i


def monomial_certificate_search(A: AlgebraStructure, B: AlgebraStructure, max_exp: int = 6):
    """Exponent vectors (k_1..k_n) such that E_i = t^{k_i} e_i certifies A -> B.

    In such a basis the transformed constants are t^{k_i + k_j - k_k} c_ij^k
    in closed form, so the search is pure integer feasibility.
    """
    if A.is_parametric() or B.is_parametric():
        raise ParametricNotSupported("specialize parameters before the search")
    n = A.dim
    if B.dim != n:
        raise ValueError("dimension mismatch")
    cA = [[[A.constants[i][j][k].constant_value() for k in range(n)] for j in range(n)] for i in range(n)]
    cB = [[[B.constants[i][j][k].constant_value() for k in range(n)] for j in range(n)] for i in range(n)]
    found = []
    for ks in itertools.product(range(max_exp + 1), repeat=n):
        ok = True
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    a = cA[i][j][k]
                    b = cB[i][j][k]
                    if a == 0:
                        if b != 0:
                            ok = False
                    else:
                        d = ks[i] + ks[j] - ks[k]
                        if d < 0:
                            ok = False
                        elif d == 0:
                            ok = a == b
                        else:
                            ok = b == 0
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.append(ks)
    return found

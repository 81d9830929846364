"""Structure theory for structure-constant algebras.

Covers derivation algebras, power/solvability chains, subalgebra
restriction, the Peirce split at an idempotent, and the semisimple-plus-
radical decomposition.  The radical candidate is the kernel of the trace
form tau(x,y) = trace(L_{x o y}) on the anticommutator algebra; the
semisimple part is rebuilt by lifting orthogonal primitive idempotents from
the quotient with the cubic iteration e <- 3e^2 - 2e^3.  Because the trace
recipe is a heuristic imported from the commutative setting, every split is
post-verified and the flags are part of the result.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import AlgebraStructure, Element, check_identity
from .errors import (
    NonSplitOperator,
    NotIdempotent,
    ParametricNotSupported,
    VerificationFailed,
)
from .exact.linalg import nullspace, rref
from .exact.poly import PolyQ
from .systems import builtin_system
from .terms import shapes


# ---------------------------------------------------------------------------
# rational subspaces


class Subspace:
    """Subspace of Q^n kept in reduced row echelon form."""

    def __init__(self, n: int, vectors=()):
        self.n = n
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        s = cls(n)
        for i in range(n):
            v = [Fraction(0)] * n
            v[i] = Fraction(1)
            s.add(v)
        return s

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def add(self, vec) -> bool:
        v = self.reduce(vec)
        for p in range(self.n):
            if v[p] != 0:
                inv = Fraction(1) / v[p]
                v = [x * inv for x in v]
                for i in range(len(self.rows)):
                    if self.rows[i][p] != 0:
                        c = self.rows[i][p]
                        self.rows[i] = [a - c * b for a, b in zip(self.rows[i], v)]
                idx = 0
                while idx < len(self.pivots) and self.pivots[idx] < p:
                    idx += 1
                self.rows.insert(idx, v)
                self.pivots.insert(idx, p)
                return True
        return False

    def basis(self):
        return [list(r) for r in self.rows]

    def express(self, vec):
        """Coefficients over the RREF basis, or None when vec is outside."""
        coeffs = [Fraction(vec[p]) for p in self.pivots]
        recon = [Fraction(0)] * self.n
        for c, row in zip(coeffs, self.rows):
            recon = [a + c * b for a, b in zip(recon, row)]
        if any(Fraction(x) != y for x, y in zip(vec, recon)):
            return None
        return coeffs

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.rows == other.rows


def monomial_coefficient_vectors(A: AlgebraStructure, x: Element):
    """Rational coefficient vectors of x, one per parameter monomial.

    The span of these vectors contains the specialization of x at every
    parameter value, which is the right hull for family-uniform chains.
    """
    coords = [c.on_vars(A.parameters) for c in x.coords]
    monomials = sorted({e for c in coords for e in c.terms})
    out = []
    for mono in monomials:
        out.append([c.terms.get(mono, Fraction(0)) for c in coords])
    return out


def product_span_vectors(A: AlgebraStructure, S1: Subspace, S2: Subspace):
    vecs = []
    for u in S1.basis():
        for v in S2.basis():
            z = A.mul(A.element(u), A.element(v))
            vecs.extend(monomial_coefficient_vectors(A, z))
    return vecs


# ---------------------------------------------------------------------------
# powers, solvability, nilpotency


@dataclass
class PowersReport:
    power_dims: list[int]  # dims of A^1, A^2, ...
    derived_dims: list[int]  # dims of A^(1), A^(2), ...
    is_nilpotent: bool
    is_solvable: bool
    nilpotency_class: int | None

    def __str__(self):
        cls = self.nilpotency_class if self.nilpotency_class is not None else "-"
        return (
            f"powers {self.power_dims} derived {self.derived_dims} "
            f"nilpotent={self.is_nilpotent} solvable={self.is_solvable} class={cls}"
        )


def power_subspaces(A: AlgebraStructure, limit: int | None = None) -> list[Subspace]:
    """[A^1, A^2, ...] until the chain stabilizes (or hits zero)."""
    n = A.dim
    chain = [Subspace.full(n)]
    limit = limit if limit is not None else 2 * n + 2
    while len(chain) < limit:
        k = len(chain) + 1
        nxt = Subspace(n)
        for i in range(1, k):
            j = k - i
            for v in product_span_vectors(A, chain[i - 1], chain[j - 1]):
                nxt.add(v)
        chain.append(nxt)
        if nxt.dim == 0 or nxt.dim == chain[-2].dim:
            break
    return chain


def powers_and_nilpotency(A: AlgebraStructure) -> PowersReport:
    chain = power_subspaces(A)
    power_dims = [s.dim for s in chain]
    nilpotent = power_dims[-1] == 0
    ncls = None
    if nilpotent:
        ncls = max(k for k, s in enumerate(chain, start=1) if s.dim > 0) if power_dims[0] > 0 else 0
    derived = [Subspace.full(A.dim)]
    for _ in range(2 * A.dim + 2):
        nxt = Subspace(A.dim)
        for v in product_span_vectors(A, derived[-1], derived[-1]):
            nxt.add(v)
        derived.append(nxt)
        if nxt.dim == 0 or nxt.dim == derived[-2].dim:
            break
    solvable = derived[-1].dim == 0
    return PowersReport([s.dim for s in chain], [s.dim for s in derived], nilpotent, solvable, ncls)


def restrict_to_subspace(A: AlgebraStructure, sub: Subspace, name: str) -> AlgebraStructure:
    """Algebra structure induced on a multiplicatively closed subspace."""
    bas = sub.basis()
    r = sub.dim
    if r == 0:
        raise ValueError("cannot restrict to the zero subspace")
    constants = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            z = A.mul(A.element(bas[i]), A.element(bas[j]))
            coords = [c.on_vars(A.parameters) for c in z.coords]
            monos = sorted({e for c in coords for e in c.terms})
            acc = [PolyQ.zero() for _ in range(r)]
            for mono in monos:
                vec = [c.terms.get(mono, Fraction(0)) for c in coords]
                coeffs = sub.express(vec)
                if coeffs is None:
                    raise VerificationFailed(
                        f"subspace of {A.name} is not closed under multiplication"
                    )
                mono_poly = PolyQ(A.parameters, {mono: Fraction(1)})
                for t in range(r):
                    if coeffs[t] != 0:
                        acc[t] = acc[t] + mono_poly * coeffs[t]
            constants[i][j] = acc
    labels = tuple(f"f{i+1}" for i in range(r))
    return AlgebraStructure(name, r, constants, A.parameters, labels)


def power_subalgebra(A: AlgebraStructure, k: int) -> tuple[AlgebraStructure, Subspace]:
    chain = power_subspaces(A, limit=max(k, 2))
    sub = chain[k - 1] if k <= len(chain) else chain[-1]
    if sub.dim == 0:
        raise ValueError(f"power {k} of {A.name} is the zero subspace")
    return restrict_to_subspace(A, sub, f"{A.name}^{k}"), sub


def subalgebra_identity_check(A: AlgebraStructure, k: int, sys, mode: str = "multilinear"):
    restricted, _ = power_subalgebra(A, k)
    return check_identity(restricted, sys, mode)


# ---------------------------------------------------------------------------
# derivations


@dataclass
class DerivationAlgebra:
    dim: int
    matrices: list  # list of n x n Fraction matrices, D(e_i) = sum_k D[k][i] e_k


def derivation_algebra(A: AlgebraStructure) -> DerivationAlgebra:
    """Exact solution space of D(xy) = D(x)y + x D(y) on basis pairs."""
    if A.is_parametric():
        raise ParametricNotSupported(
            f"derivations of {A.name} need specialized parameters; call specialize() first"
        )
    n = A.dim
    c = [[[p.constant_value() for p in A.constants[i][j]] for j in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [Fraction(0)] * (n * n)
                for l in range(n):
                    if c[i][j][l]:
                        row[m * n + l] += c[i][j][l]
                for k in range(n):
                    if c[k][j][m]:
                        row[k * n + i] -= c[k][j][m]
                    if c[i][k][m]:
                        row[k * n + j] -= c[i][k][m]
                if any(x != 0 for x in row):
                    rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * (n * n)]
    kernel = nullspace(rows, ncols=n * n)
    mats = []
    for v in kernel:
        mats.append([[v[k * n + i] for i in range(n)] for k in range(n)])
    return DerivationAlgebra(len(mats), mats)


def apply_matrix(A: AlgebraStructure, M, x: Element) -> Element:
    out = []
    for k in range(A.dim):
        acc = PolyQ.zero()
        for i in range(A.dim):
            if M[k][i]:
                acc = acc + x.coords[i] * Fraction(M[k][i])
        out.append(acc)
    return Element(tuple(out))


def is_derivation(A: AlgebraStructure, M) -> bool:
    for i in range(1, A.dim + 1):
        for j in range(1, A.dim + 1):
            x, y = A.basis_element(i), A.basis_element(j)
            lhs = apply_matrix(A, M, A.mul(x, y))
            rhs = A.add(A.mul(apply_matrix(A, M, x), y), A.mul(x, apply_matrix(A, M, y)))
            if not A.equal_elements(lhs, rhs):
                return False
    return True


def _eval_bracketing(A: AlgebraStructure, shape, elements, state):
    if shape == 0:
        e = elements[state[0]]
        state[0] += 1
        return e
    left = _eval_bracketing(A, shape[0], elements, state)
    right = _eval_bracketing(A, shape[1], elements, state)
    return A.mul(left, right)


def is_leibniz_derivation(A: AlgebraStructure, M, n: int, bracketing="all") -> bool:
    """Check D(prod_f(a_1..a_n)) = sum_i prod_f(a_1,..,D(a_i),..,a_n) on basis tuples.

    bracketing: a tree shape with n leaves, or "all" for every arrangement.
    """
    shape_list = shapes(n) if bracketing == "all" else (bracketing,)
    for shape in shape_list:
        for combo in itertools.product(range(1, A.dim + 1), repeat=n):
            elements = [A.basis_element(i) for i in combo]
            lhs = apply_matrix(A, M, _eval_bracketing(A, shape, elements, [0]))
            rhs = A.zero_element()
            for pos in range(n):
                modified = list(elements)
                modified[pos] = apply_matrix(A, M, elements[pos])
                rhs = A.add(rhs, _eval_bracketing(A, shape, modified, [0]))
            if not A.equal_elements(lhs, rhs):
                return False
    return True


# ---------------------------------------------------------------------------
# Peirce decomposition


@dataclass
class PeirceSplit:
    a0: list
    a_half: list
    a1: list
    spans: bool
    a_half_zero: bool
    a0_ideal: bool
    a1_ideal: bool
    cross_products_zero: bool

    def dims(self):
        return (len(self.a0), len(self.a_half), len(self.a1))


def _require_rational(A: AlgebraStructure, x: Element):
    try:
        return [c.constant_value() for c in x.coords]
    except ValueError:
        raise ParametricNotSupported("element must have rational coordinates") from None


def peirce(A: AlgebraStructure, e: Element) -> PeirceSplit:
    """Eigenspace split of x -> (xe + ex)/2 at an exact idempotent e."""
    if A.is_parametric():
        raise ParametricNotSupported(f"specialize {A.name} before the Peirce split")
    _require_rational(A, e)
    if not A.equal_elements(A.mul(e, e), e):
        raise NotIdempotent("e*e differs from e")
    n = A.dim
    half = Fraction(1, 2)
    cols = []
    for i in range(1, n + 1):
        b = A.basis_element(i)
        v = A.add(A.mul(b, e), A.mul(e, b))
        cols.append([c.constant_value() * half for c in v.coords])
    L = [[cols[i][k] for i in range(n)] for k in range(n)]
    spaces = {}
    for lam in (Fraction(0), Fraction(1, 2), Fraction(1)):
        m = [[L[k][i] - (lam if k == i else 0) for i in range(n)] for k in range(n)]
        spaces[lam] = nullspace(m, ncols=n)
    total = sum(len(v) for v in spaces.values())
    if total != n:
        raise NonSplitOperator(
            f"Peirce operator spectrum escapes {{0, 1/2, 1}} (caught {total} of {n} dimensions)"
        )
    a0, a_half, a1 = spaces[Fraction(0)], spaces[Fraction(1, 2)], spaces[Fraction(1)]

    def ideal_flag(part):
        span = Subspace(n, part)
        for u in part:
            for i in range(1, n + 1):
                b = A.basis_element(i)
                for prod in (A.mul(A.element(u), b), A.mul(b, A.element(u))):
                    if not span.contains([c.constant_value() for c in prod.coords]):
                        return False
        return True

    cross_zero = True
    for u in a0:
        for v in a1:
            for prod in (A.mul(A.element(u), A.element(v)), A.mul(A.element(v), A.element(u))):
                if not A.is_zero_element(prod):
                    cross_zero = False
    return PeirceSplit(
        a0=a0,
        a_half=a_half,
        a1=a1,
        spans=True,
        a_half_zero=not a_half,
        a0_ideal=ideal_flag(a0) if a0 else True,
        a1_ideal=ideal_flag(a1) if a1 else True,
        cross_products_zero=cross_zero,
    )


# ---------------------------------------------------------------------------
# semisimple + radical split


@dataclass
class WedderburnSplit:
    s_basis: list  # orthogonal idempotents spanning the semisimple part
    r_basis: list
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return all(self.flags.values())

    def dims(self):
        return (len(self.s_basis), len(self.r_basis))


def _lplus_matrix(A: AlgebraStructure, z: Element):
    n = A.dim
    half = Fraction(1, 2)
    cols = []
    for m in range(1, n + 1):
        b = A.basis_element(m)
        v = A.add(A.mul(z, b), A.mul(b, z))
        cols.append([c.constant_value() * half for c in v.coords])
    return [[cols[m][k] for m in range(n)] for k in range(n)]


def trace_form_gram(A: AlgebraStructure):
    n = A.dim
    half = Fraction(1, 2)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            bi, bj = A.basis_element(i), A.basis_element(j)
            z = A.scale(half, A.add(A.mul(bi, bj), A.mul(bj, bi)))
            tr = Fraction(0)
            m = _lplus_matrix(A, z)
            for k in range(n):
                tr += m[k][k]
            gram[i - 1][j - 1] = tr
            gram[j - 1][i - 1] = tr
    return gram


def _min_poly(mulfn, unit, u, sub: Subspace):
    """Monic minimal polynomial coefficients (ascending) of u relative to unit."""
    n = sub.n
    powers = [unit]
    space = Subspace(n, [unit])
    while True:
        nxt = mulfn(powers[-1], u)
        if space.contains(nxt):
            coeffs = _express_in_powers(powers, nxt)
            return coeffs
        powers.append(nxt)
        space.add(nxt)


def _express_in_powers(powers, target):
    """Solve sum c_k powers[k] = target; returns the monic min poly coefficients."""
    n = len(powers[0])
    rows = [[powers[k][i] for k in range(len(powers))] + [Fraction(target[i])] for i in range(n)]
    pivots, red = rref(rows)
    ncols = len(powers)
    sol = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        if p == ncols:
            raise VerificationFailed("power expression is inconsistent")
        sol[p] = red[r][ncols]
    # x^d - sum c_k x^k = 0
    return [-c for c in sol] + [Fraction(1)]


def _rational_roots(coeffs):
    """Distinct rational roots of a polynomial with rational coefficients."""
    from math import gcd

    mult = 1
    for c in coeffs:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    ints = [int(c * mult) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return []
    low = 0
    while ints[low] == 0:
        low += 1
    roots = set()
    if low > 0:
        roots.add(Fraction(0))
    a0, an = abs(ints[low]), abs(ints[-1])

    def divisors(m):
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return sorted(set(out))

    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


def wedderburn(A: AlgebraStructure) -> WedderburnSplit:
    """Split A into lifted orthogonal idempotents plus the trace-form radical.

    Raises VerificationFailed when the construction cannot be completed (for
    example when the semisimple quotient does not split over Q); otherwise
    post-verification results are returned in the flags.
    """
    if A.is_parametric():
        raise ParametricNotSupported(f"specialize {A.name} before the Wedderburn split")
    n = A.dim
    gram = trace_form_gram(A)
    r_vectors = nullspace(gram, ncols=n)
    radical = Subspace(n, r_vectors)
    flags: dict[str, bool] = {}

    # radical must be an ideal for the quotient to make sense
    def is_ideal(span: Subspace) -> bool:
        for u in span.basis():
            for i in range(1, n + 1):
                b = A.basis_element(i)
                for prod in (A.mul(A.element(u), b), A.mul(b, A.element(u))):
                    if not span.contains([c.constant_value() for c in prod.coords]):
                        return False
        return True

    flags["radical_is_ideal"] = is_ideal(radical)
    if radical.dim > 0:
        restricted = restrict_to_subspace(A, radical, f"rad({A.name})")
        flags["radical_nilpotent"] = powers_and_nilpotency(restricted).is_nilpotent
    else:
        flags["radical_nilpotent"] = True

    s_dim = n - radical.dim
    if s_dim == 0:
        split = WedderburnSplit([], radical.basis(), flags)
        flags["sum_is_direct"] = True
        flags["idempotents_orthonormal"] = True
        flags["s_commutative_associative"] = True
        return split
    if not flags["radical_is_ideal"]:
        raise VerificationFailed(f"trace-form kernel of {A.name} is not an ideal")

    # quotient algebra on the non-pivot coordinates
    free_coords = [i for i in range(n) if i not in radical.pivots]

    def project(vec):
        red = radical.reduce(vec)
        return [red[i] for i in free_coords]

    def lift_coset(qv):
        out = [Fraction(0)] * n
        for c, i in zip(qv, free_coords):
            out[i] = c
        return out

    qconsts = [[None] * s_dim for _ in range(s_dim)]
    for a in range(s_dim):
        for b in range(s_dim):
            prod = A.mul(A.element(lift_coset([Fraction(i == a) for i in range(s_dim)])),
                         A.element(lift_coset([Fraction(i == b) for i in range(s_dim)])))
            qconsts[a][b] = project([c.constant_value() for c in prod.coords])
    Q = AlgebraStructure(f"{A.name}/rad", s_dim, qconsts)
    if not check_identity(Q, builtin_system("com-as")).holds:
        raise VerificationFailed(f"quotient of {A.name} by the trace kernel is not commutative associative")

    def qmul(u, v):
        x = Q.mul(Q.element(u), Q.element(v))
        return [c.constant_value() for c in x.coords]

    # unit of the quotient
    rows = []
    for i in range(s_dim):
        base = [Fraction(k == i) for k in range(s_dim)]
        for m in range(s_dim):
            row = []
            for j in range(s_dim):
                ej = [Fraction(k == j) for k in range(s_dim)]
                row.append(qmul(ej, base)[m])
            rows.append(row + [base[m]])
    pivots, red = rref(rows)
    if any(p == s_dim for p in pivots):
        raise VerificationFailed(f"quotient of {A.name} has no unit; trace kernel is not the radical")
    unit = [Fraction(0)] * s_dim
    for r, p in enumerate(pivots):
        unit[p] = red[r][s_dim]

    # primitive orthogonal idempotents of the split semisimple quotient
    def primitive_idempotents(sub: Subspace, unit_elem):
        if sub.dim == 1:
            base = sub.basis()[0]
            sq = qmul(base, base)
            coeffs = sub.express(sq)
            c = coeffs[0]
            if c == 0:
                raise VerificationFailed("one-dimensional quotient piece is nilpotent")
            return [[x / c for x in base]]
        candidates = [list(b) for b in sub.basis()]
        for i in range(len(candidates)):
            for j in range(i + 1, len(candidates)):
                candidates.append([a + b for a, b in zip(candidates[i], candidates[j])])
        for u in candidates:
            coeffs = _min_poly(qmul, unit_elem, u, sub)
            roots = _rational_roots(coeffs)
            if len(roots) != len(coeffs) - 1:
                continue
            if len(roots) < 2:
                continue
            out = []
            for lam in roots:
                proj = list(unit_elem)
                for mu in roots:
                    if mu == lam:
                        continue
                    shifted = [a - mu * b for a, b in zip(u, unit_elem)]
                    proj = [x / (lam - mu) for x in qmul(proj, shifted)]
                piece_vectors = [qmul(proj, b) for b in sub.basis()]
                piece = Subspace(s_dim, piece_vectors)
                out.extend(primitive_idempotents(piece, proj))
            return out
        raise VerificationFailed(
            f"semisimple quotient of {A.name} does not split over Q (irrational idempotent data)"
        )

    prim = primitive_idempotents(Subspace(s_dim, [[Fraction(k == i) for k in range(s_dim)] for i in range(s_dim)]), unit)

    # lift the idempotents into shrinking Peirce-zero ideals
    lifted = []
    ideal = Subspace.full(n)
    for qbar in prim:
        target = qbar
        vbasis = ideal.basis()
        rows = []
        for m in range(s_dim):
            row = [project(v)[m] for v in vbasis] + [target[m]]
            rows.append(row)
        pivots, red = rref(rows)
        if any(p == len(vbasis) for p in pivots):
            raise VerificationFailed("idempotent has no preimage in the Peirce ideal")
        sol = [Fraction(0)] * len(vbasis)
        for r, p in enumerate(pivots):
            sol[p] = red[r][len(vbasis)]
        x = [sum(sol[t] * vbasis[t][i] for t in range(len(vbasis))) for i in range(n)]
        for _ in range(2 * n + 4):
            xe = A.element(x)
            sq = A.mul(xe, xe)
            if A.equal_elements(sq, xe):
                break
            cube_l = A.mul(sq, xe)
            cube_r = A.mul(xe, sq)
            if not A.equal_elements(cube_l, cube_r):
                raise VerificationFailed("cubic idempotent iteration left the associative subalgebra")
            nxt = A.add(A.scale(3, sq), A.scale(-2, cube_l))
            x = [c.constant_value() for c in nxt.coords]
        else:
            raise VerificationFailed("idempotent lifting did not converge")
        lifted.append(x)
        # shrink to the joint Peirce-zero ideal
        e_elem = A.element(x)
        new_basis = []
        vb = ideal.basis()
        rows = []
        for v in vb:
            w = A.add(A.mul(A.element(v), e_elem), A.mul(e_elem, A.element(v)))
            rows.append([c.constant_value() for c in w.coords])
        columns = [[rows[t][i] for t in range(len(vb))] for i in range(n)]
        kern = nullspace(columns, ncols=len(vb)) if vb else []
        shrunk = Subspace(n)
        for coeffs in kern:
            vec = [sum(coeffs[t] * vb[t][i] for t in range(len(vb))) for i in range(n)]
            shrunk.add(vec)
        ideal = shrunk

    # post-verification
    ortho = True
    for i, u in enumerate(lifted):
        for j, v in enumerate(lifted):
            prod = A.mul(A.element(u), A.element(v))
            expected = A.element(u) if i == j else A.zero_element()
            if not A.equal_elements(prod, expected):
                ortho = False
    flags["idempotents_orthonormal"] = ortho
    everything = Subspace(n, radical.basis())
    direct = all(everything.add(u) for u in lifted) and everything.dim == n
    flags["sum_is_direct"] = direct
    if lifted:
        s_span = Subspace(n, lifted)
        s_alg = restrict_to_subspace(A, s_span, f"ss({A.name})")
        flags["s_commutative_associative"] = check_identity(s_alg, builtin_system("com-as")).holds
    else:
        flags["s_commutative_associative"] = True
    return WedderburnSplit(lifted, radical.basis(), flags)


# ---------------------------------------------------------------------------
# cocycle construction and fingerprints


@dataclass
class CocycleSpec:
    """Symmetric bilinear map given on basis pairs i <= j (1-based)."""

    dim: int
    entries: dict  # (i, j) with i <= j -> coordinate tuple

    def value(self, i: int, j: int):
        key = (i, j) if i <= j else (j, i)
        vec = self.entries.get(key)
        if vec is None:
            return None
        return tuple(PolyQ.lift(c) for c in vec)


def algebra_from_cocycle(L: AlgebraStructure, theta: CocycleSpec, name: str | None = None) -> AlgebraStructure:
    """Product x*y = theta(x,y) + [x,y] on an anticommutative algebra L."""
    n = L.dim
    if theta.dim != n:
        raise ValueError("cocycle dimension mismatch")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if L.constants[i][j][k] != -L.constants[j][i][k]:
                    raise ValueError(f"{L.name} is not anticommutative")
    params = list(L.parameters)
    for vec in theta.entries.values():
        for c in vec:
            for v in PolyQ.lift(c).used_vars():
                if v not in params:
                    params.append(v)
    constants = []
    for i in range(n):
        row = []
        for j in range(n):
            sym = theta.value(i + 1, j + 1)
            vec = []
            for k in range(n):
                val = L.constants[i][j][k]
                if sym is not None:
                    val = val + sym[k]
                vec.append(val)
            row.append(vec)
        constants.append(row)
    return AlgebraStructure(name or f"cocycle({L.name})", n, constants, params, L.basis)


@dataclass
class Fingerprint:
    dim: int
    dim_a2: int
    dim_a3: int
    dim_annihilator: int
    dim_der: int
    dim_der_plus: int
    nilpotency_class: int | None
    commutative: bool
    associative: bool
    shift_associative: bool
    cyclic_associative: bool

    def as_tuple(self):
        return (
            self.dim,
            self.dim_a2,
            self.dim_a3,
            self.dim_annihilator,
            self.dim_der,
            self.dim_der_plus,
            self.nilpotency_class,
            self.commutative,
            self.associative,
            self.shift_associative,
            self.cyclic_associative,
        )


def annihilator_dim(A: AlgebraStructure) -> int:
    if A.is_parametric():
        raise ParametricNotSupported("specialize parameters before computing the annihilator")
    n = A.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([A.constants[i][j][k].constant_value() for i in range(n)])
            rows.append([A.constants[j][i][k].constant_value() for i in range(n)])
    return len(nullspace(rows, ncols=n))


def fingerprint(A: AlgebraStructure) -> Fingerprint:
    from .algebras import plus_algebra

    if A.is_parametric():
        raise ParametricNotSupported("specialize parameters before fingerprinting")
    chain = power_subspaces(A, limit=4)
    dim_a2 = chain[1].dim if len(chain) > 1 else 0
    dim_a3 = chain[2].dim if len(chain) > 2 else dim_a2
    powers = powers_and_nilpotency(A)
    commutative = all(
        A.constants[i][j][k] == A.constants[j][i][k]
        for i in range(A.dim)
        for j in range(A.dim)
        for k in range(A.dim)
    )
    return Fingerprint(
        dim=A.dim,
        dim_a2=dim_a2,
        dim_a3=dim_a3,
        dim_annihilator=annihilator_dim(A),
        dim_der=derivation_algebra(A).dim,
        dim_der_plus=derivation_algebra(plus_algebra(A)).dim,
        nilpotency_class=powers.nilpotency_class,
        commutative=commutative,
        associative=check_identity(A, builtin_system("as")).holds,
        shift_associative=check_identity(A, builtin_system("sas")).holds,
        cyclic_associative=check_identity(A, builtin_system("cas")).holds,
    )


def change_basis(A: AlgebraStructure, matrix) -> AlgebraStructure:
    """Structure constants in the basis E_i = sum_j matrix[j][i] e_j."""
    from .exact.linalg import inverse

    n = A.dim
    m = [[Fraction(x) for x in row] for row in matrix]
    minv = inverse(m)
    cols = [A.element([m[r][i] for r in range(n)]) for i in range(n)]
    constants = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = A.mul(cols[i], cols[j])
            vec = []
            for k in range(n):
                acc = PolyQ.zero()
                for l in range(n):
                    if minv[k][l]:
                        acc = acc + prod.coords[l] * minv[k][l]
                vec.append(acc)
            row.append(vec)
        constants.append(row)
    return AlgebraStructure(f"{A.name}~", n, constants, A.parameters, A.basis)

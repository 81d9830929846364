"""Degree-by-degree multilinear analysis of a variety.

The degree-n multilinear component of the free magma has dimension
n! * Catalan(n-1); monomials are indexed by (tree shape, permutation) with
shapes in Catalan order and permutations lexicographic.  The consequence
space of an identity system is generated inductively: the degree-(m+1)
component is spanned by left/right multiplications by a fresh variable and
by substitutions x_i -> (x_i x_{m+1}) applied to the degree-m component,
closed under relabeling.  Because the degree-m space is already stable under
S_m, closing under the transpositions (j, m+1) suffices.

Everything downstream (dimensions, Hilbert series, Koszulity residuals,
Koszul duals, implication between systems, membership proofs, k-niceness)
reduces to exact linear algebra on these spaces.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeTooLarge, NotMultilinear, NotQuadratic
from .exact.linalg import SparseRREF
from .exact.series import SeriesQ, compose_series
from .terms import (
    Expr,
    Identity,
    IdentitySystem,
    build_word,
    leaves,
    multihomogeneous_components,
    polarize,
    shapes,
)

DEFAULT_DEGREE_CAP = 6
HARD_DEGREE_CAP = 8


def resolve_degree_cap(cap: int | None = None) -> int:
    """Effective degree cap: explicit argument, else NASSOC_DEGREE_CAP, else 6."""
    if cap is None:
        env = os.environ.get("NASSOC_DEGREE_CAP")
        cap = int(env) if env else DEFAULT_DEGREE_CAP
    return min(cap, HARD_DEGREE_CAP)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def free_magma_dim(n: int) -> int:
    """Dimension of the degree-n multilinear component with no relations."""
    return math.factorial(n) * catalan(n - 1)


def free_magma_series(order: int) -> SeriesQ:
    """Signed exponential series of the free magma (the no-identities placeholder)."""
    return SeriesQ(
        order,
        [Fraction((-1) ** n * free_magma_dim(n), math.factorial(n)) for n in range(1, order + 1)],
    )


# ---------------------------------------------------------------------------
# the ambient multilinear space


@lru_cache(maxsize=None)
def _perms_lex(n: int):
    import itertools

    return tuple(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def _perm_rank_map(n: int):
    return {p: i for i, p in enumerate(_perms_lex(n))}


class MultilinearSpace:
    """Degree-n multilinear component of the free magma with a fixed basis."""

    _cache: dict[int, "MultilinearSpace"] = {}

    def __new__(cls, n: int):
        if n in cls._cache:
            return cls._cache[n]
        self = super().__new__(cls)
        self.n = n
        self.shapes = shapes(n)
        self.nperms = math.factorial(n)
        self.dim = len(self.shapes) * self.nperms
        self._shape_rank = {s: i for i, s in enumerate(self.shapes)}
        cls._cache[n] = self
        return self

    def index_of_word(self, word) -> int:
        from .terms import shape_of

        srank = self._shape_rank[shape_of(word)]
        prank = _perm_rank_map(self.n)[leaves(word)]
        return srank * self.nperms + prank

    def word_at(self, index: int):
        srank, prank = divmod(index, self.nperms)
        return build_word(self.shapes[srank], _perms_lex(self.n)[prank])

    def expr_to_vec(self, expr: Expr) -> dict[int, Fraction]:
        vec: dict[int, Fraction] = {}
        for w, c in expr.terms.items():
            labs = leaves(w)
            if len(labs) != self.n or tuple(sorted(labs)) != tuple(range(1, self.n + 1)):
                raise NotMultilinear(f"word {w} is not multilinear of degree {self.n}")
            vec[self.index_of_word(w)] = Fraction(c)
        return vec

    def vec_to_expr(self, vec: dict[int, Fraction]) -> Expr:
        return Expr({self.word_at(i): c for i, c in vec.items()})

    def monomials(self):
        return [self.word_at(i) for i in range(self.dim)]


# ---------------------------------------------------------------------------
# consequence spaces


class ConsequenceSpace:
    """Echelonized degree-n component of the operadic ideal of a system."""

    def __init__(self, system_name: str, degree: int, rref: SparseRREF):
        self.system_name = system_name
        self.degree = degree
        self.space = MultilinearSpace(degree)
        self.rref = rref

    @property
    def dim(self) -> int:
        return self.rref.rank

    def contains_vec(self, vec) -> bool:
        return self.rref.contains(vec)

    def contains_expr(self, expr: Expr) -> bool:
        return self.contains_vec(self.space.expr_to_vec(expr))

    def reduce_vec(self, vec):
        return self.rref.reduce(vec)

    def basis_exprs(self):
        return [self.space.vec_to_expr(row) for row in self.rref.basis()]

    def __repr__(self):
        return f"ConsequenceSpace({self.system_name!r}, degree={self.degree}, dim={self.dim})"


def _transposition_map(j: int, m: int) -> dict[int, int]:
    mapping = {i: i for i in range(1, m + 1)}
    mapping[j], mapping[m] = m, j
    return mapping


def _degree_images(expr: Expr, m: int) -> list[Expr]:
    """The degree-(m+1) generators obtained from a degree-m relation."""
    xm1 = Expr.var(m + 1)
    images = [expr * xm1, xm1 * expr]
    for i in range(1, m + 1):
        images.append(expr.subs_vars({i: Expr.var(i) * xm1}))
    return images


_consequence_cache: dict[tuple, ConsequenceSpace] = {}


def consequences(sys: IdentitySystem, n: int, cap: int | None = None) -> ConsequenceSpace:
    """Degree-n component of the operadic ideal generated by the system."""
    cap = resolve_degree_cap(cap)
    if n > cap:
        raise DegreeTooLarge(
            f"degree {n} exceeds the cap {cap}; raise it explicitly or via NASSOC_DEGREE_CAP"
        )
    if n < 1:
        raise ValueError("degree must be positive")
    if not sys.is_multilinear():
        raise NotMultilinear(
            f"system {sys.name!r} has non-multilinear identities; multilinearize first"
        )
    key = (sys.key(), n)
    if key in _consequence_cache:
        return _consequence_cache[key]

    by_degree: dict[int, list[Identity]] = {}
    for ident in sys.identities:
        by_degree.setdefault(ident.degree, []).append(ident)

    start = 1
    prev: ConsequenceSpace | None = None
    # reuse the highest cached lower degree
    for m in range(n - 1, 0, -1):
        got = _consequence_cache.get((sys.key(), m))
        if got is not None:
            prev = got
            start = m + 1
            break

    for m in range(start, n + 1):
        space = MultilinearSpace(m)
        acc = SparseRREF(space.dim)
        if prev is not None and prev.rref.rank:
            taus = [_transposition_map(j, m) for j in range(1, m + 1)]
            for row in prev.rref.basis():
                expr = prev.space.vec_to_expr(row)
                for image in _degree_images(expr, m - 1):
                    for tau in taus:
                        acc.insert(space.expr_to_vec(image.relabel(tau)))
        for ident in by_degree.get(m, ()):
            for perm in _perms_lex(m):
                mapping = {i + 1: perm[i] for i in range(m)}
                acc.insert(space.expr_to_vec(ident.expr.relabel(mapping)))
        prev = ConsequenceSpace(sys.name, m, acc)
        _consequence_cache[(sys.key(), m)] = prev
    return prev


def multilinear_dim(sys: IdentitySystem, n: int, cap: int | None = None) -> int:
    cons = consequences(sys, n, cap)
    return cons.space.dim - cons.dim


@dataclass
class VarietyProfile:
    """Multilinear dimensions of a variety with the derived signed series."""

    system_name: str
    dims: tuple[int, ...]
    series: SeriesQ


def hilbert(sys: IdentitySystem, order: int, cap: int | None = None) -> SeriesQ:
    """Signed exponential series: coefficient of t^n is (-1)^n dim(n)/n!."""
    coeffs = []
    for n in range(1, order + 1):
        d = multilinear_dim(sys, n, cap)
        coeffs.append(Fraction((-1) ** n * d, math.factorial(n)))
    return SeriesQ(order, coeffs)


def variety_profile(sys: IdentitySystem, order: int, cap: int | None = None) -> VarietyProfile:
    dims = tuple(multilinear_dim(sys, n, cap) for n in range(1, order + 1))
    series = SeriesQ(order, [Fraction((-1) ** n * d, math.factorial(n)) for n, d in enumerate(dims, 1)])
    return VarietyProfile(sys.name, dims, series)


def _check_quadratic(sys: IdentitySystem):
    for ident in sys.identities:
        if ident.degree != 3 or not ident.is_multilinear():
            raise NotQuadratic(f"system {sys.name!r} is not binary quadratic")


def koszulity_residual(sysP: IdentitySystem, sysQ: IdentitySystem, order: int, cap: int | None = None) -> SeriesQ:
    """compose(H_P, H_Q) - t; identically zero is consistent with Koszulity."""
    _check_quadratic(sysP)
    _check_quadratic(sysQ)
    f = hilbert(sysP, order, cap)
    g = hilbert(sysQ, order, cap)
    return compose_series(f, g) - SeriesQ.identity(order)


# ---------------------------------------------------------------------------
# quadratic presentations and Koszul duals


class OperadPresentation:
    """Binary quadratic presentation: an S3-stable relation subspace in degree 3."""

    def __init__(self, rref: SparseRREF, name: str = "presentation", check_stable: bool = True):
        self.name = name
        self.space = MultilinearSpace(3)
        self.rref = rref
        if check_stable and not self._is_s3_stable():
            raise NotQuadratic(f"relation space of {name!r} is not S3-stable")

    @staticmethod
    def of_system(sys: IdentitySystem, cap: int | None = None) -> "OperadPresentation":
        _check_quadratic(sys)
        cons = consequences(sys, 3, cap)
        return OperadPresentation(cons.rref, sys.name, check_stable=False)

    def _is_s3_stable(self) -> bool:
        for row in self.rref.basis():
            expr = self.space.vec_to_expr(row)
            for perm in _perms_lex(3):
                mapping = {i + 1: perm[i] for i in range(3)}
                if not self.rref.contains(self.space.expr_to_vec(expr.relabel(mapping))):
                    return False
        return True

    @property
    def dim(self) -> int:
        return self.rref.rank

    def to_identity_system(self, name: str | None = None) -> IdentitySystem:
        rows = [self.space.vec_to_expr(row) for row in self.rref.basis()]
        return IdentitySystem(name or self.name, [Identity(r) for r in rows])

    def same_space(self, other: "OperadPresentation") -> bool:
        if self.dim != other.dim:
            return False
        return all(other.rref.contains(row) for row in self.rref.basis())

    def __eq__(self, other):
        return isinstance(other, OperadPresentation) and self.same_space(other)

    def __repr__(self):
        return f"OperadPresentation({self.name!r}, dim={self.dim})"


def koszul_dual(pres: OperadPresentation | IdentitySystem) -> OperadPresentation:
    """Dual presentation via the Lie-admissibility expansion on tensor products.

    With (x (x) u)(y (x) v) := xy (x) uv, expand the Jacobi cyclic sum
    J = [[a(x)u, b(x)v], c(x)w] + [[b(x)v, c(x)w], a(x)u] + [[c(x)w, a(x)u], b(x)v],
    reduce each first-factor word modulo the relation space, and collect
    J = sum_beta beta (x) E_beta over a basis beta of the quotient.  The dual's
    relation space is the span of the E_beta.  The unhalved commutator is used;
    the halving constants only rescale each E_beta.
    """
    if isinstance(pres, IdentitySystem):
        pres = OperadPresentation.of_system(pres)
    space = pres.space

    def pair_terms(x, y, z, u, v, w):
        # [[x⊗u, y⊗v], z⊗w] expanded: four signed (S-word, U-word) pairs
        return [
            (1, ((x, y), z), ((u, v), w)),
            (-1, ((y, x), z), ((v, u), w)),
            (-1, (z, (x, y)), (w, (u, v))),
            (1, (z, (y, x)), (w, (v, u))),
        ]

    collected: dict[int, dict[int, Fraction]] = {}
    cycles = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
    for x, y, z in cycles:
        for sign, sword, uword in pair_terms(x, y, z, x, y, z):
            svec = {space.index_of_word(sword): Fraction(sign)}
            residual = pres.rref.reduce(svec)
            uidx = space.index_of_word(uword)
            for beta, lam in residual.items():
                bucket = collected.setdefault(beta, {})
                bucket[uidx] = bucket.get(uidx, Fraction(0)) + lam
    acc = SparseRREF(space.dim)
    for beta in sorted(collected):
        acc.insert(collected[beta])
    return OperadPresentation(acc, f"dual({pres.name})")


# ---------------------------------------------------------------------------
# implication, membership, niceness


def implies(sysA: IdentitySystem, sysB: IdentitySystem, n: int, cap: int | None = None) -> bool:
    """True when every algebra of sysA satisfies sysB's degree-n consequences,
    i.e. consequences(sysB, n) is contained in consequences(sysA, n)."""
    consA = consequences(sysA, n, cap)
    consB = consequences(sysB, n, cap)
    if consB.dim > consA.dim:
        return False
    return all(consA.contains_vec(row) for row in consB.rref.basis())


def prove_zero(expr: Expr, sys: IdentitySystem, cap: int | None = None) -> bool:
    """True iff expr lies in the ideal of consequences of the system.

    Multilinear expressions are reduced directly; otherwise each
    multihomogeneous component is polarized first (equivalent over Q).
    """
    if expr.is_zero():
        return True
    pieces: list[Expr] = []
    if expr.is_multilinear():
        pieces.append(expr)
    else:
        for comp in multihomogeneous_components(expr):
            first = next(iter(comp.terms))
            counts: dict[int, int] = {}
            for leaf in leaves(first):
                counts[leaf] = counts.get(leaf, 0) + 1
            lin, _, _ = polarize(comp, counts)
            vs = lin.variables()
            lin = lin.relabel({v: i for i, v in enumerate(vs, start=1)})
            pieces.append(lin)
    for piece in pieces:
        vs = piece.variables()
        piece = piece.relabel({v: i for i, v in enumerate(vs, start=1)})
        n = max(piece.degrees())
        cons = consequences(sys, n, cap)
        if not cons.contains_expr(piece):
            return False
    return True


def polarized_identity_dim(sys: IdentitySystem, op: str, n: int, cap: int | None = None) -> int:
    """Dimension of the degree-n identity space of the polarized operation.

    Formal degree-n words in the anticommutator ("circle") or commutator
    ("bracket") alone are expanded into raw products and reduced modulo the
    variety's consequences; the kernel of that linear map is the space of
    identities the polarized operation satisfies.  The count includes the
    trivial identities coming from (anti)commutativity of the operation
    itself, so it is a reporting aid rather than a minimal presentation.
    """
    from .terms import bracket, circle

    if op not in ("circle", "bracket"):
        raise ValueError("op must be 'circle' or 'bracket'")
    combine = circle if op == "circle" else bracket
    cons = consequences(sys, n, cap)
    space = cons.space

    def formal_expand(word) -> Expr:
        if isinstance(word, int):
            return Expr.var(word)
        return combine(formal_expand(word[0]), formal_expand(word[1]))

    from .exact.linalg import nullspace as dense_nullspace

    columns = []
    for idx in range(space.dim):
        word = space.word_at(idx)
        reduced = cons.reduce_vec(space.expr_to_vec(formal_expand(word)))
        columns.append(reduced)
    coords = sorted({c for col in columns for c in col})
    coord_pos = {c: i for i, c in enumerate(coords)}
    rows = [[Fraction(0)] * space.dim for _ in coords]
    for j, col in enumerate(columns):
        for c, v in col.items():
            rows[coord_pos[c]][j] = v
    if not rows:
        return space.dim
    return len(dense_nullspace(rows, ncols=space.dim))


def nice_index(sys: IdentitySystem, kmax: int, cap: int | None = None) -> int | None:
    """Smallest k in 3..kmax with a one-dimensional degree-k component in
    which every monomial is congruent to every other with coefficient +1
    (products of k elements do not depend on association or order).  The
    search starts at 3, the lowest degree where association is meaningful."""
    for k in range(3, kmax + 1):
        cons = consequences(sys, k, cap)
        space = cons.space
        if space.dim - cons.dim != 1:
            continue
        ok = True
        for i in range(1, space.dim):
            diff = {0: Fraction(1), i: Fraction(-1)}
            if not cons.contains_vec(diff):
                ok = False
                break
        if ok:
            return k
    return None

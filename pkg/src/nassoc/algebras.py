"""Finite-dimensional algebras given by structure constants.

Structure constants are multivariate polynomials over Q in declared
parameter names, so a whole family like e2*e2 = alpha*e3 is a single
algebra value and identity checks verify the family at once.  Elements are
coordinate vectors of polynomials.

Identity checking has two modes: "multilinear" evaluates every identity
(multilinearized first when needed) on all basis tuples, which is complete
in characteristic zero; "symbolic" substitutes generic elements with fresh
coordinate parameters and checks polynomial vanishing, which is valid over
any infinite field and also covers non-multilinear identities directly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from . import exprparse
from .errors import ParameterClash
from .exact.poly import PolyQ
from .terms import Expr, Identity, IdentitySystem, leaves, multilinearize


@dataclass(frozen=True)
class Element:
    """Coordinate vector in a fixed algebra basis."""

    coords: tuple

    def __len__(self):
        return len(self.coords)


class AlgebraStructure:
    """Algebra on an ordered basis with polynomial structure constants."""

    def __init__(self, name: str, dim: int, constants, parameters=(), basis=None):
        """constants[i][j] is the coordinate list of e_{i+1} e_{j+1}."""
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        self.name = name
        self.dim = dim
        self.parameters = tuple(parameters)
        self.basis = tuple(basis) if basis else tuple(f"e{i+1}" for i in range(dim))
        if len(self.basis) != dim:
            raise ValueError("basis label count does not match the dimension")
        self.constants = tuple(
            tuple(tuple(PolyQ.lift(c) for c in constants[i][j]) for j in range(dim))
            for i in range(dim)
        )
        for i in range(dim):
            for j in range(dim):
                if len(self.constants[i][j]) != dim:
                    raise ValueError("structure constant vectors must have length dim")
                for p in self.constants[i][j]:
                    for v in p.used_vars():
                        if v not in self.parameters:
                            raise ValueError(f"undeclared parameter {v!r} in constants")

    # -- elements ---------------------------------------------------------

    def zero_element(self) -> Element:
        return Element((PolyQ.zero(),) * self.dim)

    def basis_element(self, i: int) -> Element:
        """1-indexed basis vector."""
        coords = [PolyQ.zero()] * self.dim
        coords[i - 1] = PolyQ.const(1)
        return Element(tuple(coords))

    def element(self, coords) -> Element:
        coords = tuple(PolyQ.lift(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has the wrong length")
        return Element(coords)

    def add(self, x: Element, y: Element) -> Element:
        return Element(tuple(a + b for a, b in zip(x.coords, y.coords)))

    def scale(self, c, x: Element) -> Element:
        c = PolyQ.lift(c)
        return Element(tuple(c * a for a in x.coords))

    def mul(self, x: Element, y: Element) -> Element:
        n = self.dim
        out = [PolyQ.zero()] * n
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y.coords):
                if yj.is_zero():
                    continue
                cij = self.constants[i][j]
                coef = xi * yj
                for k in range(n):
                    if not cij[k].is_zero():
                        out[k] = out[k] + coef * cij[k]
        return Element(tuple(out))

    def is_zero_element(self, x: Element) -> bool:
        return all(c.is_zero() for c in x.coords)

    def equal_elements(self, x: Element, y: Element) -> bool:
        return all(a == b for a, b in zip(x.coords, y.coords))

    # -- parameters ---------------------------------------------------------

    def specialize(self, values: dict) -> "AlgebraStructure":
        """Substitute rational values for (some) parameters."""
        env = {k: Fraction(v) if not isinstance(v, PolyQ) else v for k, v in values.items()}
        remaining = tuple(p for p in self.parameters if p not in env)
        constants = [
            [[self.constants[i][j][k].subs(env) for k in range(self.dim)] for j in range(self.dim)]
            for i in range(self.dim)
        ]
        suffix = ",".join(f"{k}={env[k]}" for k in sorted(env))
        name = f"{self.name}[{suffix}]" if suffix else self.name
        return AlgebraStructure(name, self.dim, constants, remaining, self.basis)

    def with_parameters(self, extra) -> "AlgebraStructure":
        params = list(self.parameters)
        for p in extra:
            if p in params:
                raise ParameterClash(f"parameter {p!r} already declared")
            params.append(p)
        return AlgebraStructure(self.name, self.dim, self.constants, params, self.basis)

    def is_parametric(self) -> bool:
        return bool(self.parameters)

    def generic_element(self, prefix: str) -> tuple["AlgebraStructure", Element]:
        """Extend the parameter ring by fresh coordinates prefix_1..prefix_n."""
        names = [f"{prefix}_{i+1}" for i in range(self.dim)]
        for nm in names:
            if nm in self.parameters:
                raise ParameterClash(f"generated coordinate {nm!r} collides with a parameter")
        ext = self.with_parameters(names)
        return ext, ext.element([PolyQ.var(nm) for nm in names])

    def rational_coords(self, x: Element):
        return [c.constant_value() for c in x.coords]

    # -- display -------------------------------------------------------------

    def products_str(self):
        lines = []
        for i in range(self.dim):
            for j in range(self.dim):
                vec = self.constants[i][j]
                if all(p.is_zero() for p in vec):
                    continue
                parts = []
                for k in range(self.dim):
                    p = vec[k]
                    if p.is_zero():
                        continue
                    if p == PolyQ.const(1):
                        parts.append(self.basis[k])
                    else:
                        parts.append(f"({p})*{self.basis[k]}")
                lines.append(f"{self.basis[i]} {self.basis[j]} = " + " + ".join(parts))
        return lines

    def __repr__(self):
        return f"AlgebraStructure({self.name!r}, dim={self.dim}, params={list(self.parameters)})"

    # -- JSON interchange -----------------------------------------------------

    def to_json_dict(self) -> dict:
        products = []
        for i in range(self.dim):
            for j in range(self.dim):
                vec = self.constants[i][j]
                value = [[str(vec[k]), self.basis[k]] for k in range(self.dim) if not vec[k].is_zero()]
                if value:
                    products.append({"left": self.basis[i], "right": self.basis[j], "value": value})
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "parameters": list(self.parameters),
            "products": products,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @staticmethod
    def from_json_dict(data: dict) -> "AlgebraStructure":
        dim = data["dim"]
        basis = data.get("basis") or [f"e{i+1}" for i in range(dim)]
        params = tuple(data.get("parameters", ()))
        index = {label: i for i, label in enumerate(basis)}
        env = {p: PolyQ.var(p) for p in params}
        constants = [[[PolyQ.zero() for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        for prod in data.get("products", ()):
            i = index[prod["left"]]
            j = index[prod["right"]]
            vec = [PolyQ.zero()] * dim
            for coeff_str, label in prod["value"]:
                value = exprparse.evaluate(coeff_str, env, PolyQ.const)
                if not isinstance(value, PolyQ):
                    value = PolyQ.const(value)
                vec[index[label]] = vec[index[label]] + value
            constants[i][j] = vec
        return AlgebraStructure(data.get("name", "algebra"), dim, constants, params, basis)

    @staticmethod
    def from_json(text: str) -> "AlgebraStructure":
        return AlgebraStructure.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# identity checking


@dataclass
class Counterexample:
    identity: str
    tuple_labels: tuple
    coordinate: str
    value: str
    mode: str

    def __str__(self):
        at = ", ".join(self.tuple_labels)
        return f"{self.identity} fails at ({at}): coefficient of {self.coordinate} is {self.value}"


@dataclass
class CheckResult:
    holds: bool
    counterexample: Counterexample | None = None

    def __bool__(self):
        return self.holds


def _eval_word_on_tuple(A: AlgebraStructure, word, assignment, cache) -> Element:
    """assignment maps variable index -> basis index (1-based)."""
    key = (word, tuple(assignment[v] for v in leaves(word)))
    got = cache.get(key)
    if got is not None:
        return got
    if isinstance(word, int):
        val = A.basis_element(assignment[word])
    else:
        val = A.mul(
            _eval_word_on_tuple(A, word[0], assignment, cache),
            _eval_word_on_tuple(A, word[1], assignment, cache),
        )
    cache[key] = val
    return val


def evaluate_expr(A: AlgebraStructure, expr: Expr, values: dict[int, Element]) -> Element:
    """Evaluate an Expr with variables bound to elements."""

    def go(word) -> Element:
        if isinstance(word, int):
            return values[word]
        return A.mul(go(word[0]), go(word[1]))

    acc = A.zero_element()
    for w, c in expr.sorted_terms():
        acc = A.add(acc, A.scale(c, go(w)))
    return acc


def _check_multilinear_identity(A: AlgebraStructure, ident: Identity, cache) -> Counterexample | None:
    d = ident.nvars
    n = A.dim
    words = ident.expr.sorted_terms()
    for combo in itertools.product(range(1, n + 1), repeat=d):
        assignment = {v + 1: combo[v] for v in range(d)}
        acc = [PolyQ.zero()] * n
        for w, c in words:
            val = _eval_word_on_tuple(A, w, assignment, cache)
            for k in range(n):
                if not val.coords[k].is_zero():
                    acc[k] = acc[k] + c * val.coords[k]
        for k in range(n):
            if not acc[k].is_zero():
                return Counterexample(
                    identity=str(ident),
                    tuple_labels=tuple(A.basis[i - 1] for i in combo),
                    coordinate=A.basis[k],
                    value=str(acc[k]),
                    mode="multilinear",
                )
    return None


def _check_symbolic_identity(A: AlgebraStructure, ident: Identity) -> Counterexample | None:
    ext = A
    values = {}
    for v in range(1, ident.nvars + 1):
        ext, elem = ext.generic_element(f"g{v}")
        values[v] = elem
    # re-lift earlier elements into the final parameter ring
    values = {v: ext.element(e.coords) for v, e in values.items()}
    result = evaluate_expr(ext, ident.expr, values)
    for k in range(ext.dim):
        if not result.coords[k].is_zero():
            return Counterexample(
                identity=str(ident),
                tuple_labels=tuple(f"g{v}" for v in range(1, ident.nvars + 1)),
                coordinate=ext.basis[k],
                value=str(result.coords[k]),
                mode="symbolic",
            )
    return None


def check_identity(A: AlgebraStructure, sys: IdentitySystem, mode: str = "multilinear") -> CheckResult:
    """Check every identity of the system on A; parameters stay symbolic."""
    if mode not in ("multilinear", "symbolic"):
        raise ValueError("mode must be 'multilinear' or 'symbolic'")
    if mode == "multilinear":
        cache: dict = {}
        for ident in sys.identities:
            for lin in multilinearize(ident):
                ce = _check_multilinear_identity(A, lin, cache)
                if ce is not None:
                    return CheckResult(False, ce)
        return CheckResult(True)
    for ident in sys.identities:
        ce = _check_symbolic_identity(A, ident)
        if ce is not None:
            return CheckResult(False, ce)
    return CheckResult(True)


# ---------------------------------------------------------------------------
# constructions


def _swap_constants(A: AlgebraStructure):
    return [[A.constants[j][i] for j in range(A.dim)] for i in range(A.dim)]


def plus_algebra(A: AlgebraStructure) -> AlgebraStructure:
    """Anticommutator algebra: constants (c + c^T)/2 in the first two indices."""
    half = Fraction(1, 2)
    sw = _swap_constants(A)
    constants = [
        [[(A.constants[i][j][k] + sw[i][j][k]) * half for k in range(A.dim)] for j in range(A.dim)]
        for i in range(A.dim)
    ]
    return AlgebraStructure(f"{A.name}^+", A.dim, constants, A.parameters, A.basis)


def minus_algebra(A: AlgebraStructure) -> AlgebraStructure:
    """Commutator algebra: constants (c - c^T)/2."""
    half = Fraction(1, 2)
    sw = _swap_constants(A)
    constants = [
        [[(A.constants[i][j][k] - sw[i][j][k]) * half for k in range(A.dim)] for j in range(A.dim)]
        for i in range(A.dim)
    ]
    return AlgebraStructure(f"{A.name}^-", A.dim, constants, A.parameters, A.basis)


def _table_from_product(A: AlgebraStructure, product, name: str) -> AlgebraStructure:
    constants = [
        [list(product(A.basis_element(i + 1), A.basis_element(j + 1)).coords) for j in range(A.dim)]
        for i in range(A.dim)
    ]
    return AlgebraStructure(name, A.dim, constants, A.parameters, A.basis)


def mutation(A: AlgebraStructure, p: Element, q: Element) -> AlgebraStructure:
    """(p,q)-mutation: x*y = (xp)y - (yq)x."""

    def star(x, y):
        return A.add(A.mul(A.mul(x, p), y), A.scale(-1, A.mul(A.mul(y, q), x)))

    return _table_from_product(A, star, f"mut({A.name})")


def kantor_square(A: AlgebraStructure, p: Element) -> AlgebraStructure:
    """p-Kantor square: x*y = p(xy) - (px)y - x(py)."""

    def star(x, y):
        t = A.mul(p, A.mul(x, y))
        t = A.add(t, A.scale(-1, A.mul(A.mul(p, x), y)))
        t = A.add(t, A.scale(-1, A.mul(x, A.mul(p, y))))
        return t

    return _table_from_product(A, star, f"kantor({A.name})")


def scalar_mutation(A: AlgebraStructure, alpha, beta) -> AlgebraStructure:
    """x*y = alpha*xy + beta*yx, with alpha and beta rational or polynomial."""
    alpha = PolyQ.lift(alpha)
    beta = PolyQ.lift(beta)
    params = list(A.parameters)
    for p in (*alpha.used_vars(), *beta.used_vars()):
        if p not in params:
            params.append(p)
    sw = _swap_constants(A)
    constants = [
        [
            [alpha * A.constants[i][j][k] + beta * sw[i][j][k] for k in range(A.dim)]
            for j in range(A.dim)
        ]
        for i in range(A.dim)
    ]
    return AlgebraStructure(f"smut({A.name})", A.dim, constants, params, A.basis)


def unital_hull(A: AlgebraStructure) -> AlgebraStructure:
    """Adjoin a unit: dimension n+1 with basis (1, e1, ..., en)."""
    n = A.dim
    constants = [[[PolyQ.zero()] * (n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    one = PolyQ.const(1)
    constants[0][0] = [one] + [PolyQ.zero()] * n
    for i in range(n):
        vec = [PolyQ.zero()] * (n + 1)
        vec[i + 1] = one
        constants[0][i + 1] = list(vec)
        constants[i + 1][0] = list(vec)
    for i in range(n):
        for j in range(n):
            constants[i + 1][j + 1] = [PolyQ.zero()] + list(A.constants[i][j])
    basis = ("1",) + A.basis
    return AlgebraStructure(f"hull({A.name})", n + 1, constants, A.parameters, basis)


def sum_algebra(A: AlgebraStructure, B: AlgebraStructure) -> AlgebraStructure:
    """The product x(.+*)y = x.y + x*y on the common underlying space."""
    if A.dim != B.dim or A.parameters != B.parameters:
        raise ValueError("sum product needs matching dimension and parameters")
    constants = [
        [
            [A.constants[i][j][k] + B.constants[i][j][k] for k in range(A.dim)]
            for j in range(A.dim)
        ]
        for i in range(A.dim)
    ]
    return AlgebraStructure(f"({A.name})+({B.name})", A.dim, constants, A.parameters, A.basis)


def compatible_check(A: AlgebraStructure, B: AlgebraStructure, sys: IdentitySystem) -> CheckResult:
    """Compatibility of two products on one space.

    The pair is compatible for the variety exactly when both products and
    their sum satisfy the identities; for a degree-3 identity the sum
    condition minus the pure parts is the displayed mixed identity, so the
    three checks together are equivalent to the definition.
    """
    if A.dim != B.dim or A.parameters != B.parameters:
        raise ValueError("compatible products must share dimension and parameters")
    for candidate in (A, B, sum_algebra(A, B)):
        result = check_identity(candidate, sys)
        if not result.holds:
            return result
    return CheckResult(True)

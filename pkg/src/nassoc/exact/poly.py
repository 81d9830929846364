"""Multivariate polynomials over the rationals.

A polynomial carries an ordered tuple of variable names and a sparse term
map from exponent tuples (aligned with the variable order) to nonzero
Fraction coefficients.  The zero polynomial has an empty term map.  Term
ordering everywhere is graded lexicographic on the declared variable order,
which makes printing and equality canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected rational coefficient, got {type(c).__name__}")


class PolyQ:
    """Polynomial with rational coefficients in named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...] = (), terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.vars = tuple(vars)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            nv = len(self.vars)
            for exps, c in terms.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nv:
                    raise ValueError("exponent tuple length does not match variable count")
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c: Scalar, vars: tuple[str, ...] = ()) -> "PolyQ":
        c = _as_fraction(c)
        if c == 0:
            return PolyQ(vars)
        return PolyQ(vars, {(0,) * len(vars): c})

    @staticmethod
    def var(name: str) -> "PolyQ":
        return PolyQ((name,), {(1,): Fraction(1)})

    @staticmethod
    def zero(vars: tuple[str, ...] = ()) -> "PolyQ":
        return PolyQ(vars)

    @staticmethod
    def lift(x: "PolyQ | Scalar") -> "PolyQ":
        if isinstance(x, PolyQ):
            return x
        return PolyQ.const(x)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial (raises if variables actually occur)."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def used_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    # -- variable alignment -----------------------------------------------

    def on_vars(self, vars: tuple[str, ...]) -> "PolyQ":
        """Re-express on the given variable tuple (must contain all used vars)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        nv = len(vars)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            new = [0] * nv
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                if v not in pos:
                    raise ValueError(f"variable {v} not present in target context")
                new[pos[v]] = e
            out[tuple(new)] = out.get(tuple(new), Fraction(0)) + c
        return PolyQ(vars, out)

    def _aligned(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if self.vars == other.vars:
            return self, other
        merged = list(self.vars)
        for v in other.vars:
            if v not in merged:
                merged.append(v)
        ctx = tuple(merged)
        return self.on_vars(ctx), other.on_vars(ctx)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other, self.vars)
        a, b = self._aligned(other)
        out = dict(a.terms)
        for exps, c in b.terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s == 0:
                out.pop(exps, None)
            else:
                out[exps] = s
        return PolyQ(a.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other) -> "PolyQ":
        return (-self) + other

    def __mul__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return PolyQ(self.vars)
            return PolyQ(self.vars, {e: cc * c for e, cc in self.terms.items()})
        a, b = self._aligned(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return PolyQ(a.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PolyQ":
        # exact division by a rational constant only
        if isinstance(other, PolyQ):
            other = other.constant_value()
        c = _as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        return PolyQ(self.vars, {e: cc / c for e, cc in self.terms.items()})

    def __pow__(self, n: int) -> "PolyQ":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        out = PolyQ.const(1, self.vars)
        for _ in range(n):
            out = out * self
        return out

    # -- substitution -------------------------------------------------------

    def subs(self, env: Mapping[str, "PolyQ | Scalar"]) -> "PolyQ":
        """Substitute values (polynomials or rationals) for variables by name."""
        out = PolyQ.zero()
        for exps, c in sorted(self.terms.items()):
            term = PolyQ.const(c)
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                val = env.get(v)
                if val is None:
                    val = PolyQ.var(v)
                else:
                    val = PolyQ.lift(val)
                term = term * val ** e
            out = out + term
        return out

    def eval(self, env: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a full rational assignment of the used variables."""
        total = Fraction(0)
        for exps, c in self.terms.items():
            val = c
            for v, e in zip(self.vars, exps):
                if e:
                    val *= _as_fraction(env[v]) ** e
            total += val
        return total

    # -- ordering and display ------------------------------------------------

    def _sorted_terms(self):
        # graded lex, highest first
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other, self.vars)
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        used = self.used_vars()
        p = self.on_vars(used) if used != self.vars else self
        return hash((used, frozenset(p.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self._sorted_terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolyQ({self})"

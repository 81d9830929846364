"""Truncated power series with zero constant term, over the rationals."""

from __future__ import annotations

from fractions import Fraction

from ..errors import TruncationMismatch


class SeriesQ:
    """Coefficients c_1..c_N of a series c_1 t + ... + c_N t^N + O(t^{N+1})."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != order:
            raise ValueError(f"expected {order} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def zero(order: int) -> "SeriesQ":
        return SeriesQ(order, (Fraction(0),) * order)

    @staticmethod
    def identity(order: int) -> "SeriesQ":
        """The series t."""
        return SeriesQ(order, (Fraction(1),) + (Fraction(0),) * (order - 1))

    def coeff(self, n: int) -> Fraction:
        """Coefficient of t^n, 1 <= n <= order."""
        return self.coeffs[n - 1]

    def _check_order(self, other: "SeriesQ"):
        if self.order != other.order:
            raise TruncationMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: "SeriesQ") -> "SeriesQ":
        self._check_order(other)
        return SeriesQ(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SeriesQ") -> "SeriesQ":
        self._check_order(other)
        return SeriesQ(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SeriesQ":
        return SeriesQ(self.order, tuple(-a for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, SeriesQ):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            power = "t" if i == 1 else f"t^{i}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SeriesQ({self.order}, {self})"


def compose_series(f: SeriesQ, g: SeriesQ) -> SeriesQ:
    """Coefficients of f(g(t)) modulo t^{N+1}.

    Both series must share the truncation order N; having no constant term is
    built into the representation, so the composition is well defined.
    """
    if f.order != g.order:
        raise TruncationMismatch(f"orders {f.order} and {g.order} differ")
    n = f.order
    # dense polynomial arithmetic truncated at degree n; index i = coeff of t^i
    def mul(a, b):
        out = [Fraction(0)] * (n + 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if i + j > n:
                    break
                out[i + j] += ca * cb
        return out

    gp = [Fraction(0)] + list(g.coeffs)  # g as dense poly
    power = [Fraction(1)] + [Fraction(0)] * n  # g^0
    acc = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        power = mul(power, gp)
        ck = f.coeffs[k - 1]
        if ck != 0:
            for i in range(n + 1):
                acc[i] += ck * power[i]
    return SeriesQ(n, acc[1:])

"""Truncated power series in one variable and residue extraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InsufficientTruncation
from .poly import BiPoly

#: Hard cap on truncation orders requested by adaptive re-expansion.
DEFAULT_TRUNCATION_CAP = 128
START_ORDER = 8


@dataclass(frozen=True)
class TruncSeries:
    """Series ``sum coeffs[k] t^k`` known for k = 0..order.

    When ``exact`` is set the source was polynomial and every coefficient past
    ``order`` is known to be zero.  Reading an unknown coefficient raises
    :class:`InsufficientTruncation`.
    """

    coeffs: tuple
    order: int
    exact: bool = False

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs[: self.order + 1])
        cs = cs + (Fraction(0),) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_poly(cls, coeffs, order: int | None = None) -> TruncSeries:
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        exact = all(c == 0 for c in coeffs[order + 1:])
        return cls(tuple(coeffs[: order + 1]), order, exact)

    @classmethod
    def zero(cls, exact: bool = True) -> TruncSeries:
        return cls((), 0, exact)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k <= self.order:
            return self.coeffs[k]
        if self.exact:
            return Fraction(0)
        raise InsufficientTruncation(f"coefficient {k} requested beyond order {self.order}")

    @property
    def precision(self) -> float:
        return float("inf") if self.exact else self.order

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None for an exact zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        if self.exact:
            return None
        raise InsufficientTruncation(f"series vanishes to its truncation order {self.order}")

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order and not self.exact:
            raise InsufficientTruncation(f"cannot extend order {self.order} to {order}")
        return TruncSeries(tuple(self[k] for k in range(order + 1)), order,
                           self.exact and all(c == 0 for c in self.coeffs[order + 1:]))

    def _combine_order(self, other: TruncSeries, order) -> tuple[int, bool]:
        if order == float("inf"):
            return max(self.order, other.order), True
        return int(order), False

    def __add__(self, other: TruncSeries) -> TruncSeries:
        order, exact = self._combine_order(other, min(self.precision, other.precision))
        return TruncSeries(tuple(self[k] + other[k] for k in range(order + 1)), order, exact)

    def __neg__(self):
        return TruncSeries(tuple(-c for c in self.coeffs), self.order, self.exact)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def scale(self, c) -> TruncSeries:
        return TruncSeries(tuple(c * x for x in self.coeffs), self.order, self.exact)

    def _val_lower_bound(self):
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return float("inf") if self.exact else self.order + 1

    def _get(self, k: int) -> Fraction:
        # unknown coefficients only ever meet zero partners (see __mul__)
        return self.coeffs[k] if k <= self.order else Fraction(0)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        va, vb = self._val_lower_bound(), other._val_lower_bound()
        if va == float("inf") or vb == float("inf"):
            return TruncSeries.zero()
        prec = min(self.precision + vb, other.precision + va)
        if prec == float("inf"):
            order, exact = self.order + other.order, True
        else:
            order, exact = int(prec), False
        out = [Fraction(0)] * (order + 1)
        for i in range(min(order, self.order) + 1):
            a = self.coeffs[i]
            if a:
                for j in range(min(order - i, other.order) + 1):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(tuple(out), order, exact)

    def shift_down(self, k: int) -> TruncSeries:
        """Divide by t**k; the first k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError("series not divisible by requested power")
        return TruncSeries(self.coeffs[k:], max(self.order - k, 0), self.exact)

    def inverse(self, order: int) -> TruncSeries:
        """Reciprocal of a unit series, valid to ``order``."""
        c0 = self[0]
        if c0 == 0:
            raise ZeroDivisionError("series is not a unit")
        if not self.exact and order > self.order:
            raise InsufficientTruncation(f"inverse to order {order} needs input order {order}")
        inv = [Fraction(0)] * (order + 1)
        inv[0] = 1 / c0
        for n in range(1, order + 1):
            s = sum((self[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv[n] = -s / c0
        return TruncSeries(tuple(inv), order)

    def derivative(self) -> TruncSeries:
        return TruncSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)),
                           max(self.order - 1, 0), self.exact)


def _mul_trunc(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


def compose(f: BiPoly, param: TruncSeries, var: str = "z") -> TruncSeries:
    """Restrict f to a graph: f(t, param(t)) if var == 'z', else f(param(t), t).

    ``param`` must vanish at 0.  The result is valid to the parameter's
    order, or exact when the parameter is.
    """
    if param[0] != 0:
        raise ValueError("parametrization must vanish at 0")
    split = [((i, j) if var == "z" else (j, i), c) for (i, j), c in f.items()]
    if param.exact:
        dp = max((k for k, c in enumerate(param.coeffs) if c), default=0)
        order = max((free + dep * dp for (free, dep), _ in split), default=0)
    else:
        order = param.order
    pc = [param._get(k) for k in range(order + 1)]
    powers = [[Fraction(1)] + [Fraction(0)] * order]
    out = [Fraction(0)] * (order + 1)
    for (free, dep), c in split:
        while len(powers) <= dep:
            powers.append(_mul_trunc(powers[-1], pc, order))
        p = powers[dep]
        for k in range(order + 1 - free):
            if p[k]:
                out[k + free] += c * p[k]
    return TruncSeries(tuple(out), order, param.exact)


def series_residue(num: TruncSeries, den: TruncSeries) -> Fraction:
    """Coefficient of t^-1 in the Laurent expansion of num/den at 0."""
    d = den.valuation()
    if d is None:
        raise ZeroDivisionError("denominator is identically zero")
    if d == 0:
        return Fraction(0)
    # num/den = t^-d * num * u^-1 with u = den / t^d a unit
    unit = den.shift_down(d)
    need = d - 1
    if not num.exact and num.order < need:
        raise InsufficientTruncation(f"numerator needs order {need}, has {num.order}")
    if not unit.exact and unit.order < need:
        raise InsufficientTruncation(f"denominator needs order {2 * d - 1}, has {den.order}")
    inv = unit.inverse(need)
    return sum((num[k] * inv[need - k] for k in range(need + 1)), Fraction(0))

"""Smooth local branches of plane curves as truncated graph parametrizations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..errors import InsufficientTruncation, IrrationalTangents, NotANode, NotSmoothHere
from .poly import BiPoly, W, Z
from .series import TruncSeries, _mul_trunc, compose


@dataclass(frozen=True)
class Branch:
    """Smooth branch of ``equation = 0`` through ``base``.

    ``var`` names the free coordinate: for ``"z"`` the branch is
    ``w - w0 = param(z - z0)``, for ``"w"`` it is ``z - z0 = param(w - w0)``.
    ``certificate`` records the nonvanishing partial derivative (``"dw"`` /
    ``"dz"``) or ``"node"`` for a branch split off a normal crossing, in which
    case ``slope`` identifies the tangent line.
    """

    base: tuple
    param: TruncSeries
    var: str
    equation: BiPoly
    certificate: str
    slope: Fraction | None = None

    @property
    def order(self) -> int:
        return self.param.order

    def local_equation(self) -> BiPoly:
        return self.equation.translate(*self.base)

    def expanded(self, order: int) -> Branch:
        """Re-expand the same branch to a different truncation order."""
        if self.param.exact and order <= self.param.order:
            return self
        if self.certificate == "node":
            for b in factor_at_node(self.equation, self.base, order):
                if b.var == self.var and b.slope == self.slope:
                    return b
            raise AssertionError("node branch lost on re-expansion")
        return solve_smooth_branch(self.equation, self.base, order)


def _newton_graph(f: BiPoly, order: int) -> tuple:
    """Coefficients of phi with f(t, phi(t)) = 0 mod t^(order+1), f(0)=0, f_w(0)!=0."""
    fw = f.diff("w")
    phi = [Fraction(0)] * (order + 1)
    prec = 1
    while prec < order + 1:
        prec = min(2 * prec, order + 1)
        par = TruncSeries(tuple(phi[:prec]), prec - 1)
        val = compose(f, par).coeffs
        der = compose(fw, par)
        inv = der.inverse(prec - 1).coeffs
        corr = _mul_trunc(list(val), list(inv), prec - 1)
        for k in range(prec):
            phi[k] -= corr[k]
    return tuple(phi)


def solve_smooth_branch(f: BiPoly, p=(0, 0), order: int = 8) -> Branch:
    """Graph parametrization of ``{f = 0}`` at a smooth point ``p``."""
    p = (Fraction(p[0]), Fraction(p[1]))
    g = f.translate(*p)
    if g.constant_term() != 0:
        raise ValueError(f"curve {f} does not pass through {p}")
    fz, fw = g.coeff(1, 0), g.coeff(0, 1)
    if fw != 0:
        var, local, cert = "z", g, "dw"
    elif fz != 0:
        var, local, cert = "w", g.swap(), "dz"
    else:
        raise NotSmoothHere(f"both partial derivatives of {f} vanish at {p}")
    coeffs = _newton_graph(local, order)
    series = TruncSeries(coeffs, order)
    if compose(local, TruncSeries(coeffs, order, exact=True)).valuation() is None:
        series = TruncSeries(coeffs, order, exact=True)
    return Branch(p, series, var, f, cert)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def tangent_slopes(f: BiPoly, p=(0, 0)) -> list:
    """Rational slopes of the two tangent lines of a node; None stands for the vertical line."""
    g = f.translate(*p)
    if g.constant_term() != 0:
        raise ValueError("curve does not pass through the point")
    if g.coeff(1, 0) or g.coeff(0, 1):
        raise NotANode("curve is smooth at the point")
    a, b, c = g.coeff(2, 0), g.coeff(1, 1), g.coeff(0, 2)
    disc = b * b - 4 * a * c
    if disc == 0:
        raise NotANode("quadratic part is zero or a square")
    root = _rational_sqrt(disc)
    if root is None:
        raise IrrationalTangents(f"tangent cone of {f} at {p} splits only over Q(sqrt({disc}))")
    if c != 0:
        # c s^2 + b s + a = 0 for tangent w = s z
        return sorted([(-b - root) / (2 * c), (-b + root) / (2 * c)])
    # q = z (a z + b w): vertical tangent plus w = -a/b z
    return [-a / b, None]


def factor_at_node(f: BiPoly, p=(0, 0), order: int = 8) -> tuple[Branch, Branch]:
    """Split a normal crossing of ``{f = 0}`` into two smooth transverse branches."""
    p = (Fraction(p[0]), Fraction(p[1]))
    g = f.translate(*p)
    branches = []
    for s in tangent_slopes(f, p):
        if s is None:
            # z = w (0 + u): blow up in the other chart
            h = g.swap().subs(Z, Z * (W)).divide_monomial(2, 0)
            var, slope0 = "w", Fraction(0)
        else:
            h = g.subs(Z, Z * (W + s)).divide_monomial(2, 0)
            var, slope0 = "z", s
        # h(t, u) = 0 with h(0,0) = 0 and h_u(0,0) != 0 (distinct tangents)
        if order < 1:
            raise InsufficientTruncation("node branches need order >= 1")
        u = _newton_graph(h, order - 1)
        coeffs = (Fraction(0), slope0 + u[0]) + tuple(u[1:])
        series = TruncSeries(coeffs, order)
        local = g if var == "z" else g.swap()
        if compose(local, TruncSeries(coeffs, order, exact=True)).valuation() is None:
            series = TruncSeries(coeffs, order, exact=True)
        branches.append(Branch(p, series, var, f, "node", s))
    return branches[0], branches[1]

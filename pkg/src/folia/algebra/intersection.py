"""Local intersection multiplicity of plane curves at rational points."""

from __future__ import annotations

import math
from fractions import Fraction

from .. import linalg
from . import upoly
from .poly import BiPoly, poly_gcd

INFINITY = math.inf


def local_intersection_multiplicity(f: BiPoly, g: BiPoly, p=(0, 0)):
    """dim O_p / <f, g>; ``INFINITY`` when f and g share a component through p.

    Uses the classical recursive reduction: after translating p to the
    origin, compare f(z, 0) and g(z, 0), cancel leading terms, and peel off
    factors of w.
    """
    f = f.translate(*p)
    g = g.translate(*p)
    if f.constant_term() != 0 or g.constant_term() != 0:
        return 0
    if f.is_zero() or g.is_zero():
        return INFINITY
    h = poly_gcd(f, g)
    if not h.is_constant():
        if h.constant_term() == 0:
            return INFINITY
        # h is a unit in the local ring
        f, g = f.exact_div(h), g.exact_div(h)
    return _fulton(f, g)


def _fulton(f: BiPoly, g: BiPoly):
    total = 0
    while True:
        if f.constant_term() != 0 or g.constant_term() != 0:
            return total
        if f.is_zero() or g.is_zero():
            return INFINITY
        f0, g0 = f.at_w(0), g.at_w(0)
        if not f0 and not g0:
            return INFINITY
        if not f0 or not g0:
            if not f0:
                f, g, f0, g0 = g, f, g0, f0
            # g = w * h, and I(w, f) = ord_z f(z, 0)
            total += upoly.valuation(f0)
            g = g.divide_monomial(0, 1)
            continue
        if upoly.degree(f0) > upoly.degree(g0):
            f, g, f0, g0 = g, f, g0, f0
        shift = upoly.degree(g0) - upoly.degree(f0)
        g = f0[-1] * g - g0[-1] * BiPoly.monomial(shift, 0) * f


def _monomials(n: int):
    return [(i, d - i) for d in range(n) for i in range(d, -1, -1)]


def truncated_quotient_dimension(f: BiPoly, g: BiPoly, n: int) -> int:
    """dim Q[z, w] / (f, g, m^n) at the origin by linear algebra on monomials."""
    basis = _monomials(n)
    index = {e: k for k, e in enumerate(basis)}
    rows = []
    for h in (f, g):
        for (a, b) in basis:
            row = [Fraction(0)] * len(basis)
            for (i, j), c in h.items():
                key = (i + a, j + b)
                if key in index:
                    row[index[key]] += c
            if any(row):
                rows.append(row)
    return len(basis) - linalg.rank(rows)


def intersection_multiplicity_oracle(f: BiPoly, g: BiPoly, p=(0, 0), cap: int = 16):
    """Independent check: grow n until dim O/(f, g, m^n) stops growing.

    Equality at n and n + 1 means m^n lies in (f, g) + m^(n+1), hence in
    (f, g) by Nakayama, so the value is final.  Returns ``INFINITY`` when no
    stabilisation happens below ``cap`` (the multiplicity is then >= cap).
    """
    f = f.translate(*p)
    g = g.translate(*p)
    if f.constant_term() != 0 or g.constant_term() != 0:
        return 0
    prev = truncated_quotient_dimension(f, g, 1)
    for n in range(2, cap + 2):
        cur = truncated_quotient_dimension(f, g, n)
        if cur == prev:
            return cur
        prev = cur
    return INFINITY

"""Dense univariate polynomials over the rationals.

A polynomial is a tuple of Fractions, index = exponent, with no trailing
zeros; the zero polynomial is the empty tuple.
"""

from fractions import Fraction
from math import gcd, isqrt

ZERO = ()
ONE = (Fraction(1),)


def trim(coeffs):
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p):
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p, q):
    return add(p, scale(q, -1))


def scale(p, c):
    return trim(c * a for a in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def shift(p, k):
    """Multiply by x**k."""
    return tuple([Fraction(0)] * k + list(p)) if p else ZERO


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        c = rem[k + len(q) - 1] / lead
        quo[k] = c
        if c:
            for i, b in enumerate(q):
                rem[k + i] -= c * b
    return trim(quo), trim(rem)


def monic(p):
    return scale(p, 1 / p[-1]) if p else ZERO


def gcd_(p, q):
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim(i * c for i, c in enumerate(p) if i)


def valuation(p):
    """Order of vanishing at 0; None for the zero polynomial."""
    for i, c in enumerate(p):
        if c:
            return i
    return None


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p):
    """Distinct rational roots of a nonzero polynomial, sorted ascending."""
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    roots = set()
    v = valuation(p)
    if v:
        roots.add(Fraction(0))
        p = p[v:]
    if len(p) <= 1:
        return sorted(roots)
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    # rational root theorem on the integer-cleared polynomial
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand not in roots and evaluate(p, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def strip_roots(p, roots):
    """Divide out every occurrence of the given roots."""
    for r in roots:
        lin = (-Fraction(r), Fraction(1))
        while True:
            q, rem = divmod_(p, lin)
            if rem:
                break
            p = q
    return p


def squarefree(p):
    if degree(p) < 1:
        return monic(p)
    return monic(divmod_(p, gcd_(p, derivative(p)))[0])


def to_str(p, var="z"):
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text

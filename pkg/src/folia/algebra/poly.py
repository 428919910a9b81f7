"""Sparse bivariate polynomials over the rationals in the variables z, w."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from . import upoly

Exponent = tuple[int, int]


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class BiPoly:
    """Immutable polynomial ``sum c_ij z^i w^j`` with exact rational coefficients.

    Terms are stored sparsely; zero coefficients are never kept.  Printing
    uses graded lexicographic order with z before w, highest degree first.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = _rat(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def z(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def w(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_upoly(cls, p, var: str = "z") -> BiPoly:
        if var == "z":
            return cls({(i, 0): c for i, c in enumerate(p)})
        return cls({(0, j): c for j, c in enumerate(p)})

    # -- basic access -------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        k = 0 if var == "z" else 1
        return max((e[k] for e in self._terms), default=-1)

    def order(self) -> int | None:
        """Vanishing order at the origin; None for the zero polynomial."""
        return min((i + j for i, j in self._terms), default=None)

    def homogeneous_part(self, d: int) -> BiPoly:
        return BiPoly({e: c for e, c in self._terms.items() if sum(e) == d})

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the grlex-largest term."""
        if not self._terms:
            return Fraction(0)
        return self._terms[max(self._terms, key=_grlex_key)]

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(_rat(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- calculus and substitution --------------------------------------
    def diff(self, var: str) -> BiPoly:
        if var == "z":
            return BiPoly({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})
        return BiPoly({(i, j - 1): j * c for (i, j), c in self._terms.items() if j})

    def __call__(self, z, w) -> Fraction:
        z, w = _rat(z), _rat(w)
        return sum((c * z**i * w**j for (i, j), c in self._terms.items()), Fraction(0))

    def subs(self, z: BiPoly | object = None, w: BiPoly | object = None) -> BiPoly:
        """Compose with polynomial substitutions for z and/or w."""
        zs = BiPoly.z() if z is None else self._coerce(z)
        ws = BiPoly.w() if w is None else self._coerce(w)
        zpow: dict[int, BiPoly] = {0: BiPoly.const(1)}
        wpow: dict[int, BiPoly] = {0: BiPoly.const(1)}
        out = BiPoly()
        for (i, j), c in sorted(self._terms.items()):
            if i not in zpow:
                zpow[i] = zs**i
            if j not in wpow:
                wpow[j] = ws**j
            out = out + c * zpow[i] * wpow[j]
        return out

    def translate(self, a, b) -> BiPoly:
        """Return f(z + a, w + b): moves the point (a, b) to the origin."""
        a, b = _rat(a), _rat(b)
        if a == 0 and b == 0:
            return self
        return self.subs(BiPoly.z() + a, BiPoly.w() + b)

    def swap(self) -> BiPoly:
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def at_w(self, w0) -> tuple:
        """Univariate polynomial f(z, w0)."""
        w0 = _rat(w0)
        out: dict[int, Fraction] = {}
        for (i, j), c in self._terms.items():
            out[i] = out.get(i, 0) + c * w0**j
        return upoly.trim(out.get(i, 0) for i in range(max(out, default=-1) + 1))

    def at_z(self, z0) -> tuple:
        """Univariate polynomial f(z0, w) in w."""
        return self.swap().at_w(z0)

    def divide_monomial(self, i: int, j: int) -> BiPoly:
        if any(a < i or b < j for a, b in self._terms):
            raise ValueError("monomial does not divide polynomial")
        return BiPoly({(a - i, b - j): c for (a, b), c in self._terms.items()})

    def divmod(self, other: BiPoly) -> tuple[BiPoly, BiPoly]:
        """Division by a single polynomial with lex order (z > w).

        The remainder is zero exactly when ``other`` divides ``self``.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lt = max(other._terms)
        lc = other._terms[lt]
        rem = dict(self._terms)
        quo: dict[Exponent, Fraction] = {}
        stuck: dict[Exponent, Fraction] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if e[0] >= lt[0] and e[1] >= lt[1]:
                q = (e[0] - lt[0], e[1] - lt[1])
                f = c / lc
                quo[q] = quo.get(q, 0) + f
                for (a, b), d in other._terms.items():
                    key = (a + q[0], b + q[1])
                    v = rem.get(key, 0) - f * d
                    if v:
                        rem[key] = v
                    else:
                        rem.pop(key, None)
            else:
                stuck[e] = c
                del rem[e]
        return BiPoly(quo), BiPoly(stuck)

    def exact_div(self, other: BiPoly) -> BiPoly:
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def normalized(self) -> BiPoly:
        """Scale so that the grlex-leading coefficient is 1."""
        lc = self.leading_coefficient()
        return self if lc in (0, 1) else BiPoly({e: c / lc for e, c in self._terms.items()})

    # -- printing -------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(
                [v if k == 1 else f"{v}^{k}" for v, k in (("z", i), ("w", j)) if k]
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def _grlex_key(e: Exponent):
    return (e[0] + e[1], e[0])


Z = BiPoly.z()
W = BiPoly.w()


# -- gcd via primitive polynomial remainder sequences in w over Q[z] ------

def _as_w_poly(f: BiPoly) -> list[tuple]:
    """Coefficients (univariate in z) of f viewed as a polynomial in w."""
    dw = f.degree_in("w")
    rows: list[dict[int, Fraction]] = [dict() for _ in range(dw + 1)]
    for (i, j), c in f.items():
        rows[j][i] = c
    return [upoly.trim(r.get(i, 0) for i in range(max(r, default=-1) + 1)) for r in rows]


def _from_w_poly(coeffs: Iterable[tuple]) -> BiPoly:
    terms = {}
    for j, cz in enumerate(coeffs):
        for i, c in enumerate(cz):
            if c:
                terms[(i, j)] = c
    return BiPoly(terms)


def _content(rows: list[tuple]) -> tuple:
    g = upoly.ZERO
    for r in rows:
        g = upoly.gcd_(g, r)
        if upoly.degree(g) == 0:
            return upoly.ONE
    return g


def _primitive(rows: list[tuple]) -> list[tuple]:
    c = _content(rows)
    if upoly.degree(c) <= 0:
        # normalise scalar content away too
        lead = rows[-1][-1]
        return [upoly.scale(r, 1 / lead) for r in rows]
    return [upoly.divmod_(r, c)[0] for r in rows]


def _prem(f: list[tuple], g: list[tuple]) -> list[tuple]:
    """Pseudo-remainder of f by g as polynomials in w."""
    f = list(f)
    lg = g[-1]
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        lf = f[-1]
        k = len(f) - 1 - dg
        new = [upoly.mul(lg, c) for c in f]
        for idx, c in enumerate(g):
            new[idx + k] = upoly.sub(new[idx + k], upoly.mul(lf, c))
        while new and not new[-1]:
            new.pop()
        f = new
    return f


def poly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Greatest common divisor over Q, normalised to grlex-leading coefficient 1."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    fr, gr = _as_w_poly(f), _as_w_poly(g)
    cont = upoly.gcd_(_content(fr), _content(gr))
    a, b = _primitive(fr), _primitive(gr)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
        if not b:
            break
    if len(b) == 1:
        # constant in w: the primitive gcd is trivial
        core = BiPoly.const(1)
    else:
        core = _from_w_poly(_primitive(a))
    return (core * BiPoly.from_upoly(cont, "z")).normalized()

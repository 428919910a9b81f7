"""Local foliation germs: singular locus, classification, and indices.

A foliation on an affine chart is given by a polynomial vector field
``v = P d/dz + Q d/dw``; the dual 1-form is ``A dz + B dw`` with
``(A, B) = (-Q, P)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar

from . import linalg
from .algebra import upoly
from .algebra.branch import Branch, _rational_sqrt
from .algebra.intersection import INFINITY, local_intersection_multiplicity
from .algebra.poly import BiPoly, W, Z, poly_gcd
from .algebra.series import DEFAULT_TRUNCATION_CAP, START_ORDER, compose, series_residue
from .errors import (
    BranchNotInvariant,
    CurveIsInvariant,
    InsufficientTruncation,
    MismatchedPoints,
    NotSingularHere,
)

ORIGIN = (Fraction(0), Fraction(0))


def fmt_point(p) -> str:
    return f"({p[0]}, {p[1]})"


@dataclass(frozen=True)
class FoliationGerm:
    """Vector field ``P d/dz + Q d/dw`` considered near ``base``.

    Common polynomial factors of P and Q are divided out at construction and
    kept in ``removed_factor`` so the singular set is isolated.
    """

    P: BiPoly
    Q: BiPoly
    base: tuple = ORIGIN
    removed_factor: BiPoly = field(default_factory=lambda: BiPoly.const(1))

    def __post_init__(self):
        if self.P.is_zero() and self.Q.is_zero():
            raise ValueError("the zero vector field does not define a foliation")
        object.__setattr__(self, "base", (Fraction(self.base[0]), Fraction(self.base[1])))
        g = poly_gcd(self.P, self.Q)
        if not g.is_constant():
            object.__setattr__(self, "P", self.P.exact_div(g))
            object.__setattr__(self, "Q", self.Q.exact_div(g))
            object.__setattr__(self, "removed_factor", self.removed_factor * g)
        # scale so the leading coefficient of P (or Q) is 1: a canonical generator
        lead = self.P.leading_coefficient() or self.Q.leading_coefficient()
        if lead != 1:
            object.__setattr__(self, "P", self.P * (1 / lead))
            object.__setattr__(self, "Q", self.Q * (1 / lead))

    @classmethod
    def from_one_form(cls, A: BiPoly, B: BiPoly, base=ORIGIN) -> FoliationGerm:
        return cls(B, -A, base)

    @property
    def A(self) -> BiPoly:
        return -self.Q

    @property
    def B(self) -> BiPoly:
        return self.P

    def at(self, point) -> FoliationGerm:
        return FoliationGerm(self.P, self.Q, point)

    def centered(self) -> FoliationGerm:
        """The same germ in coordinates with its base point at the origin."""
        if self.base == ORIGIN:
            return self
        return FoliationGerm(self.P.translate(*self.base), self.Q.translate(*self.base))

    def apply(self, f: BiPoly) -> BiPoly:
        """Lie derivative v(f)."""
        return self.P * f.diff("z") + self.Q * f.diff("w")

    def is_singular(self) -> bool:
        return self.P(*self.base) == 0 and self.Q(*self.base) == 0

    def linear_part(self) -> list[list[Fraction]]:
        c = self.centered()
        return [[c.P.coeff(1, 0), c.P.coeff(0, 1)], [c.Q.coeff(1, 0), c.Q.coeff(0, 1)]]

    def multiplicity(self) -> int:
        """Algebraic multiplicity: least vanishing order of the components at the base."""
        c = self.centered()
        return min(o for o in (c.P.order(), c.Q.order()) if o is not None)

    def __str__(self):
        return f"({self.P})*d/dz + ({self.Q})*d/dw"


# -- singular locus -------------------------------------------------------

@dataclass(frozen=True)
class ResidualFactor:
    """Common zeros not defined over Q: ``factor(var) = 0`` (on the line z = at, if given)."""

    var: str
    factor: tuple
    at: Fraction | None = None

    def __str__(self):
        text = upoly.to_str(self.factor, self.var)
        return text if self.at is None else f"{text} (z = {self.at})"


@dataclass(frozen=True)
class SingularLocus:
    points: tuple
    residual: tuple

    @property
    def complete(self) -> bool:
        return not self.residual


def _sylvester_coeffs(f: BiPoly, z0, deg: int) -> list[Fraction]:
    p = f.at_z(z0)
    return [p[i] if i < len(p) else Fraction(0) for i in range(deg + 1)]


def resultant_w(f: BiPoly, g: BiPoly) -> tuple:
    """Res_w(f, g) as a univariate polynomial in z (formal w-degrees)."""
    m, n = f.degree_in("w"), g.degree_in("w")
    if m <= 0 and n <= 0:
        return upoly.ONE
    bound = max(f.degree(), 0) * max(g.degree(), 0) + 1
    xs = [Fraction(k) for k in range(bound + 1)]
    ys = []
    for x in xs:
        fc = list(reversed(_sylvester_coeffs(f, x, m)))
        gc = list(reversed(_sylvester_coeffs(g, x, n)))
        size = m + n
        rows = [[Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i) for i in range(n)]
        rows += [[Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i) for i in range(m)]
        ys.append(linalg.det(rows))
    return _interpolate(xs, ys)


def _interpolate(xs, ys) -> tuple:
    result = upoly.ZERO
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = upoly.ONE
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = upoly.mul(basis, (-xj, Fraction(1)))
                denom *= xi - xj
        result = upoly.add(result, upoly.scale(basis, yi / denom))
    return result


def singular_locus(germ: FoliationGerm) -> SingularLocus:
    """Rational common zeros of P and Q; other zeros are reported as eliminant factors."""
    P, Q = germ.P, germ.Q
    res = resultant_w(P, Q)
    points, residual = [], []
    if not res:
        raise AssertionError("coprime P, Q with vanishing resultant")
    zs = upoly.rational_roots(res) if upoly.degree(res) > 0 else []
    rest = upoly.squarefree(upoly.strip_roots(res, zs))
    if upoly.degree(rest) > 0:
        residual.append(ResidualFactor("z", rest))
    for z0 in zs:
        fiber = upoly.gcd_(P.at_z(z0), Q.at_z(z0))
        if upoly.degree(fiber) <= 0:
            continue
        ws = upoly.rational_roots(fiber)
        points.extend((z0, w0) for w0 in ws)
        left = upoly.squarefree(upoly.strip_roots(fiber, ws))
        if upoly.degree(left) > 0:
            residual.append(ResidualFactor("w", left, z0))
    return SingularLocus(tuple(sorted(points)), tuple(residual))


# -- classification -------------------------------------------------------

class SingClass:
    kind: ClassVar[str] = "nonsingular"

    @property
    def is_reduced(self) -> bool:
        return self.kind != "non_reduced"

    def to_dict(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class NonSingular(SingClass):
    kind: ClassVar[str] = "nonsingular"


@dataclass(frozen=True)
class ReducedNonDegenerate(SingClass):
    """Nondegenerate reduced point.

    ``ratio_sum`` is lambda + 1/lambda = t^2/d - 2.  When lambda is rational,
    ``ratio`` holds the root of larger absolute value; otherwise ``ratio`` is
    None and ``discriminant`` (ratio_sum^2 - 4) certifies irrationality.
    """

    ratio: Fraction | None = None
    ratio_sum: Fraction = Fraction(0)
    discriminant: Fraction = Fraction(0)
    kind: ClassVar[str] = "reduced_nondegenerate"

    def to_dict(self):
        return {"kind": self.kind, "ratio": _q(self.ratio), "ratio_sum": _q(self.ratio_sum),
                "discriminant": _q(self.discriminant)}


@dataclass(frozen=True)
class ReducedSaddleNode(SingClass):
    k: int = 1
    kind: ClassVar[str] = "saddle_node"

    def to_dict(self):
        return {"kind": self.kind, "k": self.k}


@dataclass(frozen=True)
class NonReduced(SingClass):
    reason: str = "zero_linear_part"
    ratio: Fraction | None = None
    kind: ClassVar[str] = "non_reduced"

    def to_dict(self):
        return {"kind": self.kind, "reason": self.reason, "ratio": _q(self.ratio)}


def _q(x):
    return None if x is None else str(x)


def classify_singularity(germ: FoliationGerm) -> SingClass:
    """Seidenberg type of a singular point, decided from trace and determinant."""
    if not germ.is_singular():
        raise NotSingularHere(f"{germ} does not vanish at {fmt_point(germ.base)}")
    (a, b), (c, d_) = germ.linear_part()
    t = a + d_
    d = a * d_ - b * c
    if d != 0:
        s = t * t / d - 2
        disc = s * s - 4
        root = _rational_sqrt(disc)
        if root is None:
            return ReducedNonDegenerate(None, s, disc)
        lam = max((s + root) / 2, (s - root) / 2, key=abs)
        if lam > 0:
            return NonReduced("ratio_in_Q+", lam)
        return ReducedNonDegenerate(lam, s, disc)
    if t != 0:
        mu = local_intersection_multiplicity(germ.P, germ.Q, germ.base)
        return ReducedSaddleNode(int(mu) - 1)
    if any((a, b, c, d_)):
        return NonReduced("nilpotent")
    return NonReduced("zero_linear_part")


def classify_point(germ: FoliationGerm) -> SingClass:
    return classify_singularity(germ) if germ.is_singular() else NonSingular()


# -- indices --------------------------------------------------------------

@dataclass(frozen=True)
class IndexRecord:
    kind: str  # "tang" | "Z" | "CS"
    value: Fraction
    point: tuple
    curve: str | None = None
    orbifold_order: int = 1


def _reduced_equation(f: BiPoly) -> BiPoly:
    g = poly_gcd(poly_gcd(f, f.diff("z")), f.diff("w"))
    return f if g.is_constant() else f.exact_div(g)


def tang_index(germ: FoliationGerm, f: BiPoly, p=None, orbifold_order: int = 1) -> Fraction:
    """Tangency order dim O_p/<f, v(f)> divided by the orbifold order."""
    p = germ.base if p is None else p
    f = _reduced_equation(f)
    vf = germ.apply(f)
    mult = local_intersection_multiplicity(f, vf, p)
    if mult == INFINITY:
        factor = poly_gcd(f, vf)
        raise CurveIsInvariant(f"component {factor} of the curve is invariant", factor)
    return Fraction(int(mult), orbifold_order)


def _graph_restrictions(germ: FoliationGerm, branch: Branch, order: int):
    b = branch.expanded(order)
    local = germ.at(b.base).centered()
    P, Q = local.P, local.Q
    if b.var == "w":
        # swap roles so the branch reads as a graph over the first variable
        P, Q = Q.swap(), P.swap()
    phi = b.param
    dphi = phi.derivative()
    along = compose(P, phi)
    normal = compose(Q, phi)
    # invariance: Q(t, phi) - phi' P(t, phi) = 0
    defect = normal - dphi * along
    if any(defect.coeffs):
        raise BranchNotInvariant("branch is not invariant by the foliation")
    return P, Q, phi, dphi, along


def _adaptive(fn, branch: Branch, cap: int):
    order = max(START_ORDER, branch.order)
    while True:
        try:
            return fn(min(order, cap))
        except InsufficientTruncation:
            if order >= cap:
                raise
            order *= 2


def z_index(germ: FoliationGerm, branch: Branch, cap: int = DEFAULT_TRUNCATION_CAP) -> int:
    """Vanishing order at the base point of v restricted to a smooth invariant branch."""

    def compute(order):
        _, _, _, _, along = _graph_restrictions(germ, branch, order)
        v = along.valuation()
        if v is None:
            raise AssertionError("vector field vanishes along a branch")
        return v

    return _adaptive(compute, branch, cap)


def cs_index(germ: FoliationGerm, branch: Branch, cap: int = DEFAULT_TRUNCATION_CAP) -> Fraction:
    """Camacho-Sad index of a smooth invariant branch.

    In coordinates (t, y = w - phi(t)) straightening the branch, the index is
    Res_{t=0} [Q_w - phi' P_w](t, phi(t)) / P(t, phi(t)) dt.
    """

    def compute(order):
        P, Q, phi, dphi, along = _graph_restrictions(germ, branch, order)
        num = compose(Q.diff("w"), phi) - dphi * compose(P.diff("w"), phi)
        return series_residue(num, along)

    return _adaptive(compute, branch, cap)


def combine_at_node(kind: str, left: IndexRecord, right: IndexRecord) -> IndexRecord:
    """Index of a normal crossing from the indices of its two branches."""
    if left.point != right.point:
        raise MismatchedPoints(f"{fmt_point(left.point)} != {fmt_point(right.point)}")
    if kind == "Z":
        value = left.value + right.value - 2
    elif kind == "CS":
        value = left.value + right.value + 2
    else:
        raise ValueError(f"no node rule for index kind {kind!r}")
    curve = left.curve if left.curve == right.curve else None
    return IndexRecord(kind, Fraction(value), left.point, curve, left.orbifold_order)


# -- projective compactification ------------------------------------------

def projective_chart(germ: FoliationGerm, chart: str) -> FoliationGerm:
    """Extend a polynomial field on C^2 to the charts of P^2 at infinity.

    ``chart="x"``: coordinates (u, t) with z = 1/u, w = t/u (line at infinity u = 0).
    ``chart="y"``: coordinates (s, r) with z = s/r, w = 1/r (line at infinity r = 0).
    New coordinates are again named (z, w) in that order.
    """
    d = max(germ.P.degree(), germ.Q.degree())

    def hom(f: BiPoly, swap: bool) -> BiPoly:
        terms = {}
        for (i, j), c in f.items():
            terms[(d - i - j, j) if not swap else (i, d - i - j)] = c
        return BiPoly(terms)

    if chart == "x":
        Ph, Qh = hom(germ.P, False), hom(germ.Q, False)
        u, t = Z, W
        return FoliationGerm(-u * Ph, Qh - t * Ph)
    if chart == "y":
        Ph, Qh = hom(germ.P, True), hom(germ.Q, True)
        s, r = Z, W
        return FoliationGerm(Ph - s * Qh, -r * Qh)
    raise ValueError(f"unknown chart {chart!r}")

"""Combinatorial foliated surfaces over Q.

A :class:`SurfaceModel` is a finite set of curves with a symmetric rational
intersection matrix, orbifold points and per-point index records.  Every
verdict here is relative to the curves present in the model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from types import MappingProxyType

from . import linalg
from .errors import (
    FoliaError,
    InsufficientData,
    MissingIndices,
    ModelInconsistency,
    NotContractible,
    NotDecomposable,
    NotNef,
    OrbifoldSingularityClash,
    UnknownCurve,
)

SCENE_VERSION = 1


class SceneError(FoliaError):
    """Malformed scene file."""


class CurveNotInvariant(FoliaError):
    """An invariant-curve check was requested on a non-invariant curve."""


def _rat(x) -> Fraction:
    if isinstance(x, bool):
        raise SceneError(f"expected a rational, got {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SceneError(f"bad rational {x!r}") from exc
    raise SceneError(f"expected a rational, got {x!r}")


@dataclass(frozen=True)
class SingRecord:
    """Indices of the foliation along one curve at one point."""

    point: str
    Z: int | None = None
    CS: Fraction | None = None
    tang: Fraction | None = None

    def to_dict(self) -> dict:
        out = {"point": self.point}
        if self.Z is not None:
            out["Z"] = self.Z
        if self.CS is not None:
            out["CS"] = str(self.CS)
        if self.tang is not None:
            out["tang"] = str(self.tang)
        return out


@dataclass(frozen=True)
class OrbifoldPoint:
    point: str
    order: int

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 2:
            raise ModelInconsistency(f"orbifold order at {self.point} must be an integer >= 2")


@dataclass(frozen=True)
class Curve:
    id: str
    genus: int | None = 0
    invariant: bool = True
    orbifold: tuple = ()
    records: tuple = ()
    nodes: tuple = ()  # point ids of ordinary double points
    kx: Fraction | None = None  # K_X . C when known

    def __post_init__(self):
        rec_points = {r.point for r in self.records}
        for q in self.orbifold:
            if q.point in rec_points and self._record_at(q.point).Z not in (None, 0):
                raise OrbifoldSingularityClash(
                    f"curve {self.id}: singular record at orbifold point {q.point}")

    def _record_at(self, point):
        return next(r for r in self.records if r.point == point)

    @property
    def orbifold_orders(self) -> tuple:
        return tuple(sorted(q.order for q in self.orbifold))

    @property
    def smooth(self) -> bool:
        return not self.nodes

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "genus": self.genus,
            "invariant": self.invariant,
            "orbifold": [{"point": q.point, "order": q.order} for q in self.orbifold],
            "records": [r.to_dict() for r in self.records],
            "nodes": list(self.nodes),
        }
        if self.kx is not None:
            out["kx"] = str(self.kx)
        return out


class QDivisor:
    """Finite rational combination of curves; zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None, **kw):
        data = dict(coeffs or {})
        data.update(kw)
        clean = {k: Fraction(v) for k, v in sorted(data.items()) if Fraction(v) != 0}
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    def __getitem__(self, cid) -> Fraction:
        return self.coeffs.get(cid, Fraction(0))

    @property
    def support(self) -> tuple:
        return tuple(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __add__(self, other: QDivisor) -> QDivisor:
        out = dict(self.coeffs)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return QDivisor(out)

    def __neg__(self) -> QDivisor:
        return QDivisor({k: -v for k, v in self.items()})

    def __sub__(self, other: QDivisor) -> QDivisor:
        return self + (-other)

    def __rmul__(self, c) -> QDivisor:
        return QDivisor({k: c * v for k, v in self.items()})

    def __eq__(self, other):
        return isinstance(other, QDivisor) and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def is_effective(self) -> bool:
        return all(v >= 0 for v in self.coeffs.values())

    def to_dict(self) -> dict:
        return {k: str(v) for k, v in self.items()}

    def __repr__(self):
        return f"QDivisor({self.to_dict()})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in self.items())


@dataclass(frozen=True)
class SurfaceModel:
    curves: tuple
    matrix: MappingProxyType  # (id, id) -> Fraction, both orders stored

    @classmethod
    def build(cls, curves, entries) -> SurfaceModel:
        curves = tuple(curves)
        ids = [c.id for c in curves]
        if len(set(ids)) != len(ids):
            raise ModelInconsistency("duplicate curve ids")
        known = set(ids)
        full = {}
        for (a, b), v in entries.items():
            for x in (a, b):
                if x not in known:
                    raise UnknownCurve(x)
            v = Fraction(v)
            for key in ((a, b), (b, a)):
                if key in full and full[key] != v:
                    raise ModelInconsistency(f"asymmetric intersection entry {a}.{b}")
                full[key] = v
        for a in ids:
            for b in ids:
                full.setdefault((a, b), Fraction(0))
                if a != b and full[(a, b)] < 0:
                    raise ModelInconsistency(f"negative intersection {a}.{b} of distinct curves")
        return cls(curves, MappingProxyType(full))

    @property
    def ids(self) -> tuple:
        return tuple(c.id for c in self.curves)

    def curve(self, cid) -> Curve:
        for c in self.curves:
            if c.id == cid:
                return c
        raise UnknownCurve(f"no curve {cid!r} in model")

    def entry(self, a, b) -> Fraction:
        try:
            return self.matrix[(a, b)]
        except KeyError:
            raise UnknownCurve(f"no curve {a!r} or {b!r} in model") from None

    def self_intersection(self, cid) -> Fraction:
        return self.entry(cid, cid)

    def neighbours(self, cid) -> list:
        return [d for d in self.ids if d != cid and self.entry(cid, d) != 0]

    def with_curve(self, curve: Curve) -> SurfaceModel:
        return SurfaceModel(tuple(curve if c.id == curve.id else c for c in self.curves), self.matrix)

    def divisor(self, cid) -> QDivisor:
        self.curve(cid)
        return QDivisor({cid: 1})

    def components(self) -> list:
        seen, out = set(), []
        for cid in self.ids:
            if cid in seen:
                continue
            stack, comp = [cid], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(self.neighbours(x))
            seen |= comp
            out.append(tuple(c for c in self.ids if c in comp))
        return out

    # -- scene files ----------------------------------------------------------

    def to_dict(self) -> dict:
        ids = self.ids
        return {
            "version": SCENE_VERSION,
            "curves": [c.to_dict() for c in self.curves],
            "matrix": [[str(self.entry(ids[i], ids[j])) for j in range(i + 1)] for i in range(len(ids))],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


# -- intersection numbers and curve invariants --------------------------------

def intersect(d1: QDivisor, d2: QDivisor, model: SurfaceModel) -> Fraction:
    total = Fraction(0)
    for a, x in d1.items():
        for b, y in d2.items():
            total += x * y * model.entry(a, b)
    return total


def _direct_chi(c: Curve) -> Fraction:
    # arithmetic Euler characteristic: nodes count twice (genus drop by one each)
    chi = Fraction(2 - 2 * c.genus - 2 * len(c.nodes))
    return chi + sum(Fraction(1 - q.order, q.order) for q in c.orbifold)


def chi_orb_routes(cid, model: SurfaceModel) -> dict:
    c = model.curve(cid)
    routes = {}
    if c.genus is not None:
        routes["direct"] = _direct_chi(c)
    if c.kx is not None:
        routes["adjunction"] = -c.kx - model.self_intersection(cid)
    return routes


def chi_orb(cid, model: SurfaceModel) -> Fraction:
    """Orbifold Euler characteristic, cross-checked by adjunction when K_X.C is known."""
    routes = chi_orb_routes(cid, model)
    if not routes:
        raise InsufficientData(f"curve {cid}: neither genus nor K_X degree known")
    values = set(routes.values())
    if len(values) > 1:
        raise ModelInconsistency(
            f"curve {cid}: direct chi_orb {routes['direct']} but adjunction gives {routes['adjunction']}")
    return values.pop()


@dataclass(frozen=True)
class KfReport:
    curve: str
    value: Fraction
    invariant: bool
    tang_total: Fraction | None = None

    @property
    def positivity_holds(self) -> bool | None:
        """(K_F + C).C >= 0 for a non-invariant curve, i.e. the total tangency is nonnegative."""
        return None if self.invariant else self.tang_total >= 0

    @property
    def transverse(self) -> bool | None:
        return None if self.invariant else self.tang_total == 0

    def to_dict(self) -> dict:
        out = {"curve": self.curve, "kf_degree": str(self.value), "invariant": self.invariant}
        if not self.invariant:
            out["tang"] = str(self.tang_total)
            out["kf_plus_c_dot_c"] = str(self.tang_total)
            out["transverse"] = self.transverse
        return out


def kf_degree(cid, model: SurfaceModel) -> KfReport:
    c = model.curve(cid)
    if c.invariant:
        if any(r.Z is None for r in c.records):
            raise MissingIndices(f"curve {cid}: Z index missing at some point")
        z = sum(r.Z for r in c.records)
        return KfReport(cid, -chi_orb(cid, model) + z, True)
    if any(r.tang is None for r in c.records):
        raise MissingIndices(f"curve {cid}: tang index missing at some point")
    tang = sum((r.tang for r in c.records), Fraction(0))
    return KfReport(cid, -model.self_intersection(cid) + tang, False, tang)


def kf_degree_value(cid, model: SurfaceModel) -> Fraction:
    return kf_degree(cid, model).value


@dataclass(frozen=True)
class CSReport:
    curve: str
    cs_sum: Fraction
    self_intersection: Fraction

    @property
    def residual(self) -> Fraction:
        return self.cs_sum - self.self_intersection

    @property
    def passed(self) -> bool:
        return self.residual == 0

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "cs_sum": str(self.cs_sum),
            "self_intersection": str(self.self_intersection),
            "residual": str(self.residual),
            "pass": self.passed,
        }


def verify_camacho_sad(cid, model: SurfaceModel) -> CSReport:
    c = model.curve(cid)
    if not c.invariant:
        raise CurveNotInvariant(f"curve {cid} is not invariant")
    if any(r.CS is None for r in c.records):
        raise MissingIndices(f"curve {cid}: CS index missing at some point")
    total = sum((r.CS for r in c.records), Fraction(0))
    return CSReport(cid, total, model.self_intersection(cid))


@dataclass(frozen=True)
class NefVerdict:
    nef: bool
    witness: str | None = None
    pairing: Fraction | None = None
    model_relative: bool = True

    def __bool__(self):
        return self.nef


def is_nef(L: QDivisor, model: SurfaceModel) -> NefVerdict:
    """L.C >= 0 for every curve of the model; the first failing curve is the witness."""
    for cid in model.ids:
        v = intersect(L, model.divisor(cid), model)
        if v < 0:
            return NefVerdict(False, cid, v)
    return NefVerdict(True)


# -- Zariski decomposition ------------------------------------------------------

@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: QDivisor
    negative: QDivisor
    support: tuple
    gram: tuple
    residuals: tuple  # P.C_j over the support, all zero

    def to_dict(self) -> dict:
        return {
            "P": self.positive.to_dict(),
            "N": self.negative.to_dict(),
            "certificate": {
                "support": list(self.support),
                "gram": [[str(x) for x in row] for row in self.gram],
                "leading_minors": [str(m) for m in linalg.leading_minors(self.gram)],
                "residuals": [str(r) for r in self.residuals],
            },
            "model_relative": True,
        }


def zariski_decompose(L: QDivisor, model: SurfaceModel) -> ZariskiDecomposition:
    """Split L = P + N by growing the support of N until P pairs nonnegatively with every curve."""
    for cid in L.support:
        model.curve(cid)
    order = sorted(model.ids)
    support: list = []
    P, N = L, QDivisor()
    while True:
        bad = [c for c in order if c not in support and intersect(P, model.divisor(c), model) < 0]
        if not bad:
            break
        support = [c for c in order if c in support or c in bad]
        gram = [[model.entry(a, b) for b in support] for a in support]
        if not linalg.is_negative_definite(gram):
            raise NotDecomposable(f"intersection form on {support} is not negative definite")
        rhs = [intersect(L, model.divisor(c), model) for c in support]
        x = linalg.solve(gram, rhs)
        if any(v < 0 for v in x):
            raise NotDecomposable(f"negative part on {support} would not be effective")
        N = QDivisor(dict(zip(support, x)))
        P = L - N
    gram = tuple(tuple(model.entry(a, b) for b in support) for a in support)
    residuals = tuple(intersect(P, model.divisor(c), model) for c in support)
    return ZariskiDecomposition(P, N, tuple(support), gram, residuals)


# -- contraction ---------------------------------------------------------------

@dataclass(frozen=True)
class ContractionProfile:
    k: int
    l: int
    point: str  # the singular point of the foliation on the curve


def contraction_profile(cid, model: SurfaceModel) -> ContractionProfile:
    c = model.curve(cid)
    if not c.invariant:
        raise NotContractible(f"{cid}: curve is not invariant")
    if c.genus != 0 or c.nodes:
        raise NotContractible(f"{cid}: curve is not a smooth rational curve")
    if len(c.orbifold) > 1:
        raise NotContractible(f"{cid}: more than one orbifold point")
    sing = [r for r in c.records if r.Z is None or r.Z != 0]
    if len(sing) != 1:
        raise NotContractible(f"{cid}: {len(sing)} singular points instead of exactly one")
    if sing[0].Z != 1:
        raise NotContractible(f"{cid}: Z index at {sing[0].point} is {sing[0].Z}, not 1")
    if kf_degree(cid, model).value >= 0:
        raise NotContractible(f"{cid}: K_F degree is not negative")
    k = c.orbifold[0].order if c.orbifold else 1
    l_frac = -model.self_intersection(cid) * k
    if l_frac.denominator != 1 or l_frac <= 0:
        raise NotContractible(f"{cid}: self-intersection {model.self_intersection(cid)} is not -l/{k}")
    l = int(l_frac)
    if gcd(l, k) != 1:
        raise NotContractible(f"{cid}: l = {l} is not prime to k = {k}")
    return ContractionProfile(k, l, sing[0].point)


def contract_negative_curve(cid, model: SurfaceModel) -> SurfaceModel:
    """Contract a curve with the (k, l) profile to a point of order l on the curves meeting it."""
    prof = contraction_profile(cid, model)
    c2 = model.self_intersection(cid)
    rest = [d for d in model.ids if d != cid]
    entries = {}
    for a in rest:
        for b in rest:
            entries[(a, b)] = model.entry(a, b) - model.entry(a, cid) * model.entry(b, cid) / c2
    kx_c = model.curve(cid).kx
    lost_orbifold = {q.point for q in model.curve(cid).orbifold}
    curves = []
    for d in rest:
        cur = model.curve(d)
        meet = model.entry(d, cid)
        if meet:
            records = tuple(r for r in cur.records if r.point != prof.point)
            orbifold = tuple(q for q in cur.orbifold if q.point not in lost_orbifold)
            if prof.l >= 2:
                orbifold += (OrbifoldPoint(prof.point, prof.l),)
            kx = cur.kx
            if kx is not None and kx_c is not None:
                kx = kx - kx_c / c2 * meet
            cur = replace(cur, records=records, orbifold=orbifold, kx=kx)
        curves.append(cur)
    return SurfaceModel.build(curves, entries)


def blow_up_model(model: SurfaceModel, new_id: str, multiplicities: dict, invariant: bool = True,
                  point: str | None = None) -> SurfaceModel:
    """Blow up a smooth point lying on the given curves with the given multiplicities."""
    if new_id in model.ids:
        raise ModelInconsistency(f"curve id {new_id} already used")
    entries = {}
    for a in model.ids:
        for b in model.ids:
            entries[(a, b)] = model.entry(a, b) - multiplicities.get(a, 0) * multiplicities.get(b, 0)
        entries[(a, new_id)] = Fraction(multiplicities.get(a, 0))
    entries[(new_id, new_id)] = Fraction(-1)
    curves = []
    for cur in model.curves:
        m = multiplicities.get(cur.id, 0)
        if m:
            records = tuple(r for r in cur.records if r.point != point) if point else cur.records
            orbifold = tuple(q for q in cur.orbifold if q.point != point) if point else cur.orbifold
            kx = None if cur.kx is None else cur.kx + m
            cur = replace(cur, records=records, orbifold=orbifold, kx=kx)
        curves.append(cur)
    curves.append(Curve(new_id, genus=0, invariant=invariant, kx=Fraction(-1)))
    return SurfaceModel.build(curves, entries)


def blow_down(cid, model: SurfaceModel, new_point: str | None = None) -> SurfaceModel:
    """Castelnuovo contraction of a smooth rational (-1)-curve met transversally at reduced points.

    The curves' records at the meeting points merge into one point.  Each
    branch through it gains 1 in CS; a curve meeting C twice becomes nodal
    there and its record follows the node rules (Z - 2, CS + 2).
    """
    c = model.curve(cid)
    if c.genus != 0 or c.nodes or model.self_intersection(cid) != -1 or c.orbifold:
        raise NotContractible(f"{cid}: not a smooth rational (-1)-curve without orbifold points")
    point = new_point or f"{cid}*"
    meeting = {r.point for r in c.records}
    rest = [d for d in model.ids if d != cid]
    entries = {}
    for a in rest:
        for b in rest:
            entries[(a, b)] = model.entry(a, b) + model.entry(a, cid) * model.entry(b, cid)
    curves = []
    for d in rest:
        cur = model.curve(d)
        m = model.entry(d, cid)
        if not m:
            curves.append(cur)
            continue
        hit = [r for r in cur.records if r.point in meeting]
        if len(hit) != m:
            raise NotContractible(f"{cid}: meeting points with {d} are not recorded on both curves")
        keep = tuple(r for r in cur.records if r.point not in meeting)
        z = None if any(r.Z is None for r in hit) else sum(r.Z for r in hit) - 2 * (len(hit) - 1)
        cs = None if any(r.CS is None for r in hit) else sum(r.CS + 1 for r in hit) + 2 * (len(hit) - 1)
        merged = SingRecord(point, z, cs)
        nodes = cur.nodes + ((point,) if m == 2 else ())
        if m > 2:
            raise NotContractible(f"{cid}: meets {d} in more than two points")
        kx = None if cur.kx is None else cur.kx - m
        curves.append(replace(cur, records=keep + (merged,), nodes=nodes, kx=kx))
    return SurfaceModel.build(curves, entries)


@dataclass(frozen=True)
class NefModelResult:
    model: SurfaceModel
    contractions: tuple
    inconsistencies: tuple  # (curve id, reason)

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies


def nef_model(model: SurfaceModel) -> NefModelResult:
    """Contract eligible K_F-negative curves (ascending id) until none remains contractible."""
    done = []
    while True:
        negative = [c for c in sorted(model.ids) if kf_degree(c, model).value < 0]
        problems = []
        for cid in negative:
            try:
                contraction_profile(cid, model)
            except NotContractible as exc:
                problems.append((cid, str(exc)))
                continue
            model = contract_negative_curve(cid, model)
            done.append(cid)
            break
        else:
            return NefModelResult(model, tuple(done), tuple(problems))


def numerical_kodaira(KF: QDivisor, model: SurfaceModel) -> int:
    verdict = is_nef(KF, model)
    if not verdict:
        raise NotNef(f"K_F pairs negatively with {verdict.witness}")
    if intersect(KF, KF, model) > 0:
        return 2
    if any(intersect(KF, model.divisor(c), model) > 0 for c in model.ids):
        return 1
    return 0


# -- component classifier ---------------------------------------------------------

def _intersection_points(model: SurfaceModel, a: str, b: str) -> set:
    pa = {r.point for r in model.curve(a).records}
    pb = {r.point for r in model.curve(b).records}
    return pa & pb


def _records_at_nodes_only(model: SurfaceModel, comp, nodal_points: dict) -> bool:
    return all({r.point for r in model.curve(cid).records} == nodal_points[cid] for cid in comp)


def classify_component(component, model: SurfaceModel) -> str | None:
    """Match a connected set of curves against the five numerically trivial configurations."""
    comp = tuple(c for c in model.ids if c in set(component))
    if len(comp) != len(set(component)) or not comp:
        return None
    curves = [model.curve(c) for c in comp]
    if not all(c.invariant for c in curves):
        return None
    # connectedness inside the component
    sub = {c: [d for d in model.neighbours(c) if d in comp] for c in comp}
    seen, stack = set(), [comp[0]]
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(sub[x])
    if seen != set(comp):
        return None

    if len(comp) == 1:
        c = curves[0]
        orders = c.orbifold_orders
        if c.genus == 1 and not c.nodes and not orders and not c.records:
            return "a"
        if c.genus != 0:
            return None
        if len(c.nodes) == 1 and not orders:
            if {r.point for r in c.records} == set(c.nodes):
                return "b"
            return None
        if c.nodes or c.records:
            return None
        if len(orders) == 3 and sum(Fraction(1, k) for k in orders) == 1:
            return "c"
        if orders == (2, 2, 2, 2):
            return "d"
        return None

    if any(c.genus != 0 or c.nodes for c in curves):
        return None
    nodal = {cid: set() for cid in comp}
    for i, a in enumerate(comp):
        for b in comp[i + 1:]:
            m = model.entry(a, b)
            pts = _intersection_points(model, a, b)
            if m.denominator != 1 or len(pts) != m:
                return None
            nodal[a] |= pts
            nodal[b] |= pts
    if not _records_at_nodes_only(model, comp, nodal):
        return None
    degrees = {cid: sum(int(model.entry(cid, d)) for d in sub[cid]) for cid in comp}
    edges = sum(degrees.values()) // 2
    # a cycle: every curve meets the rest in exactly two points, graph connected
    if all(v == 2 for v in degrees.values()) and edges == len(comp):
        if all(not c.orbifold for c in curves):
            return "b"
        return None
    # a chain: tree with maximal degree 2 and simple intersections
    if edges == len(comp) - 1 and all(v <= 2 for v in degrees.values()):
        for c in curves:
            end = degrees[c.id] == 1
            if end and c.orbifold_orders != (2, 2):
                return None
            if not end and c.orbifold:
                return None
        return "e"
    return None


# -- scene I/O ---------------------------------------------------------------

_CURVE_KEYS = {"id", "genus", "invariant", "orbifold", "records", "nodes", "kx"}
_RECORD_KEYS = {"point", "Z", "CS", "tang"}
_ORB_KEYS = {"point", "order"}
_SCENE_KEYS = {"version", "curves", "matrix", "divisors"}


def _check_keys(obj, allowed, where, strict):
    if not isinstance(obj, dict):
        raise SceneError(f"{where}: expected an object")
    extra = set(obj) - allowed
    if extra and strict:
        raise SceneError(f"{where}: unknown field(s) {sorted(extra)}")


def _curve_from_dict(d, strict) -> Curve:
    _check_keys(d, _CURVE_KEYS, "curve", strict)
    if "id" not in d:
        raise SceneError("curve without id")
    cid = str(d["id"])
    orbifold = []
    for i, q in enumerate(d.get("orbifold", [])):
        if isinstance(q, int) and not isinstance(q, bool):
            q = {"point": f"{cid}.q{i + 1}", "order": q}
        _check_keys(q, _ORB_KEYS, f"curve {cid} orbifold point", strict)
        order = q.get("order")
        if not isinstance(order, int) or isinstance(order, bool):
            raise SceneError(f"curve {cid}: orbifold order must be an integer")
        orbifold.append(OrbifoldPoint(str(q["point"]), order))
    records = []
    for r in d.get("records", []):
        _check_keys(r, _RECORD_KEYS, f"curve {cid} record", strict)
        if "point" not in r:
            raise SceneError(f"curve {cid}: record without point")
        z = r.get("Z")
        if z is not None and (not isinstance(z, int) or isinstance(z, bool)):
            raise SceneError(f"curve {cid}: Z must be an integer")
        records.append(SingRecord(str(r["point"]), z,
                                  None if r.get("CS") is None else _rat(r["CS"]),
                                  None if r.get("tang") is None else _rat(r["tang"])))
    genus = d.get("genus", 0)
    if genus is not None and (not isinstance(genus, int) or isinstance(genus, bool) or genus < 0):
        raise SceneError(f"curve {cid}: genus must be a nonnegative integer or null")
    invariant = d.get("invariant", True)
    if not isinstance(invariant, bool):
        raise SceneError(f"curve {cid}: invariant must be a boolean")
    return Curve(cid, genus, invariant, tuple(orbifold), tuple(records),
                 tuple(str(n) for n in d.get("nodes", [])),
                 None if d.get("kx") is None else _rat(d["kx"]))


def model_from_dict(data, strict: bool = True) -> tuple[SurfaceModel, dict]:
    """Scene object to (model, named divisors)."""
    _check_keys(data, _SCENE_KEYS, "scene", strict)
    if data.get("version") != SCENE_VERSION:
        raise SceneError(f"unsupported scene version {data.get('version')!r}")
    curves = [_curve_from_dict(c, strict) for c in data.get("curves", [])]
    ids = [c.id for c in curves]
    rows = data.get("matrix", [])
    if len(rows) != len(ids):
        raise SceneError("matrix must have one row per curve")
    entries = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != i + 1:
            raise SceneError(f"matrix row {i} must have {i + 1} entries (lower triangle)")
        for j, v in enumerate(row):
            entries[(ids[i], ids[j])] = _rat(v)
    model = SurfaceModel.build(curves, entries)
    divisors = {}
    for name, coeffs in (data.get("divisors") or {}).items():
        if not isinstance(coeffs, dict):
            raise SceneError(f"divisor {name}: expected an object")
        for cid in coeffs:
            model.curve(cid)
        divisors[name] = QDivisor({k: _rat(v) for k, v in coeffs.items()})
    return model, divisors


def load_scene(text: str, strict: bool = True) -> tuple[SurfaceModel, dict]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"invalid JSON: {exc}") from exc
    return model_from_dict(data, strict)


def dump_scene(model: SurfaceModel, divisors: dict | None = None) -> str:
    data = model.to_dict()
    if divisors:
        data["divisors"] = {k: v.to_dict() for k, v in sorted(divisors.items())}
    return json.dumps(data, sort_keys=True, indent=2)

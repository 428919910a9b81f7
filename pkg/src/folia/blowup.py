"""Point blow-ups of foliation germs and the Seidenberg reduction driver.

Every chart germ is kept in coordinates centred at the point of interest,
so exceptional curves through that point always appear as coordinate axes.
``axes = (a, b)`` records which curve is ``{z = 0}`` and which is ``{w = 0}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import upoly
from .algebra.poly import BiPoly, W, Z
from .algebra.series import DEFAULT_TRUNCATION_CAP
from .algebra.branch import solve_smooth_branch
from .errors import DepthExceeded, NotSingularHere, TreeIncomplete
from .germ import (
    FoliationGerm,
    ResidualFactor,
    SingClass,
    classify_point,
    cs_index,
    fmt_point,
    tang_index,
    z_index,
)

DEFAULT_MAX_DEPTH = 32

_AXIS_EQ = (Z, W)


@dataclass(frozen=True)
class PointOnE:
    """A point of interest on a freshly created exceptional curve."""

    label: str
    chart: int  # 1: E = {z = 0}, slope coordinate w; 2: E = {w = 0}, origin only
    coords: tuple
    germ: FoliationGerm  # centred at this point
    sclass: SingClass
    axes: tuple = (None, None)
    tangency: bool = False

    @property
    def singular(self) -> bool:
        return self.germ.is_singular()

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "chart": self.chart,
            "point": [str(c) for c in self.coords],
            "class": self.sclass.to_dict(),
            "axes": list(self.axes),
            "tangency": self.tangency,
        }


@dataclass(frozen=True)
class BlowupEvent:
    center: str
    multiplicity: int
    dicritical: bool
    charts: tuple  # (chart-1 germ, chart-2 germ), uncentred chart coordinates
    points: tuple
    unresolved: tuple = ()
    exceptional: str = "E"
    depth: int = 0
    center_axes: tuple = (None, None)

    @property
    def invariant(self) -> bool:
        return not self.dicritical

    def to_dict(self) -> dict:
        return {
            "exceptional": self.exceptional,
            "center": self.center,
            "center_axes": list(self.center_axes),
            "depth": self.depth,
            "multiplicity": self.multiplicity,
            "dicritical": self.dicritical,
            "charts": [str(g) for g in self.charts],
            "points": [p.to_dict() for p in self.points],
            "unresolved": [str(r) for r in self.unresolved],
        }


def _one_form_multiplicity(germ: FoliationGerm) -> int:
    return min(o for o in (germ.A.order(), germ.B.order()) if o is not None)


def _pullback(A: BiPoly, B: BiPoly, chart: int, power: int) -> FoliationGerm:
    if chart == 1:
        # (x, y) -> (x, x y): E = {x = 0}
        a, b = A.subs(Z, Z * W), B.subs(Z, Z * W)
        A1, B1 = a + W * b, Z * b
        return FoliationGerm.from_one_form(A1.divide_monomial(power, 0), B1.divide_monomial(power, 0))
    # (x, y) -> (x y, y): E = {y = 0}
    a, b = A.subs(Z * W, W), B.subs(Z * W, W)
    A2, B2 = W * a, Z * a + b
    return FoliationGerm.from_one_form(A2.divide_monomial(0, power), B2.divide_monomial(0, power))


def blow_up(germ: FoliationGerm, axes=(None, None), name: str = "E", depth: int = 0,
            center: str = "p0") -> BlowupEvent:
    """Blow up the singular point of ``germ`` at its base.

    ``axes`` names the exceptional curves already passing through the centre
    as {z = 0} and {w = 0}; they are propagated to the new points.
    """
    if not germ.is_singular():
        raise NotSingularHere(f"germ is regular at {fmt_point(germ.base)}")
    g = germ.centered()
    A, B = g.A, g.B
    nu = _one_form_multiplicity(g)
    tangency = Z * A.homogeneous_part(nu) + W * B.homogeneous_part(nu)
    dicritical = tangency.is_zero()
    power = nu + 1 if dicritical else nu
    c1, c2 = _pullback(A, B, 1, power), _pullback(A, B, 2, power)

    old_z, old_w = axes
    points, unresolved = [], []
    # chart 1: E = {z = 0}, points (0, s)
    p_on, q_on = c1.P.at_z(0), c1.Q.at_z(0)
    sing = upoly.gcd_(p_on, q_on)
    if not sing and not p_on and not q_on:
        raise AssertionError("exceptional curve inside the singular set")
    candidates = set()
    for poly, tangent in ((sing, False), (p_on if dicritical else upoly.ZERO, True)):
        if upoly.degree(poly) <= 0:
            continue
        roots = upoly.rational_roots(poly)
        candidates.update(roots)
        rest = upoly.squarefree(upoly.strip_roots(poly, roots))
        if upoly.degree(rest) > 0:
            unresolved.append(ResidualFactor("w", rest, Fraction(0)))
    for s in sorted(candidates):
        local = c1.at((0, s)).centered()
        pt_axes = (name, old_w if s == 0 else None)
        points.append(PointOnE(f"{name}:1({s})", 1, (Fraction(0), s), local,
                               classify_point(local), pt_axes, dicritical and not local.is_singular()))
    # chart 2 origin: the direction of the old {z = 0}
    origin2 = c2.centered()
    tangent2 = dicritical and origin2.Q.constant_term() == 0
    if origin2.is_singular() or tangent2:
        points.append(PointOnE(f"{name}:2(0)", 2, (Fraction(0), Fraction(0)), origin2,
                               classify_point(origin2), (old_z, name),
                               dicritical and not origin2.is_singular()))
    unique = []
    seen = set()
    for r in unresolved:
        if str(r) not in seen:
            seen.add(str(r))
            unique.append(r)
    return BlowupEvent(center, nu, dicritical, (c1, c2), tuple(points), tuple(unique), name,
                       depth, tuple(axes))


# -- reduction tree ---------------------------------------------------------

@dataclass
class CurveLedger:
    id: str
    self_intersection: Fraction
    invariant: bool
    depth: int
    adjacency: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "self_intersection": str(self.self_intersection),
            "invariant": self.invariant,
            "depth": self.depth,
            "adjacency": {k: v for k, v in sorted(self.adjacency.items())},
        }


@dataclass
class BlowupTree:
    root: FoliationGerm
    root_class: SingClass
    events: list = field(default_factory=list)
    curves: dict = field(default_factory=dict)
    blown_up: set = field(default_factory=set)

    @property
    def unresolved(self) -> list:
        return [(e.exceptional, r) for e in self.events for r in e.unresolved]

    @property
    def complete(self) -> bool:
        if not self.events:
            return self.root_class.is_reduced
        return not self.unresolved and all(p.sclass.is_reduced for p in self.leaf_points())

    def leaf_points(self) -> list:
        return [p for e in self.events for p in e.points if p.label not in self.blown_up]

    def to_dict(self) -> dict:
        return {
            "root": str(self.root),
            "root_class": self.root_class.to_dict(),
            "complete": self.complete,
            "events": [e.to_dict() for e in self.events],
            "curves": [self.curves[c].to_dict() for c in _curve_order(self.curves)],
            "leaves": [p.label for p in self.leaf_points()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_dot(self) -> str:
        lines = ["graph dual {"]
        for cid in _curve_order(self.curves):
            c = self.curves[cid]
            style = "invariant" if c.invariant else "dicritical"
            lines.append(f'  {cid} [label="{cid}\\nself={c.self_intersection}\\n{style}"];')
        for a in _curve_order(self.curves):
            for b, m in sorted(self.curves[a].adjacency.items()):
                if _curve_key(a) < _curve_key(b) and m:
                    lines.append(f"  {a} -- {b}" + (f' [label="{m}"]' if m != 1 else "") + ";")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _curve_key(cid: str):
    return int(cid[1:]) if cid[1:].isdigit() else cid


def _curve_order(curves) -> list:
    return sorted(curves, key=_curve_key)


def reduce_seidenberg(germ: FoliationGerm, max_depth: int = DEFAULT_MAX_DEPTH,
                      reverse: bool = False) -> BlowupTree:
    """Blow up non-reduced points until every singularity on the exceptional set is reduced.

    Pending centres are processed in lexicographic order of (depth, parent
    event, chart, coordinates); ``reverse=True`` flips the order among
    centres of equal depth, which must not change any invariant.
    """
    root = germ.centered()
    if not root.is_singular():
        raise NotSingularHere("the germ is regular at its base point")
    tree = BlowupTree(root, classify_point(root))
    if tree.root_class.is_reduced:
        return tree
    # (depth, parent event, chart, coords) orders the queue lexicographically
    pending = [((0, 0, 0, ()), "p0", root, (None, None))]
    while pending:
        pending.sort(key=lambda item: (item[0][0], item[0][1:]) if not reverse
                     else (item[0][0], tuple(-x for x in item[0][1:3]), _neg(item[0][3])))
        key, label, g, axes = pending.pop(0)
        depth = key[0]
        if depth >= max_depth:
            raise DepthExceeded(f"reduction did not terminate within depth {max_depth}")
        name = f"E{len(tree.events) + 1}"
        event = blow_up(g, axes, name, depth, label)
        tree.events.append(event)
        tree.blown_up.add(label)
        _update_ledger(tree, event)
        for p in event.points:
            if p.singular and not p.sclass.is_reduced:
                order = (depth + 1, len(tree.events), p.chart, p.coords)
                pending.append((order, p.label, p.germ, p.axes))
    return tree


def blow_up_once(germ: FoliationGerm) -> BlowupTree:
    """Tree holding a single blow-up at the base point, reduced or not."""
    root = germ.centered()
    tree = BlowupTree(root, classify_point(root))
    event = blow_up(root, (None, None), "E1", 0, "p0")
    tree.events.append(event)
    tree.blown_up.add("p0")
    _update_ledger(tree, event)
    return tree


def _neg(coords):
    return tuple(-c for c in coords)


def _update_ledger(tree: BlowupTree, event: BlowupEvent) -> None:
    name = event.exceptional
    new = CurveLedger(name, Fraction(-1), event.invariant, event.depth + 1)
    through = [c for c in event.center_axes if c is not None]
    for c in through:
        tree.curves[c].self_intersection -= 1
        new.adjacency[c] = 1
        tree.curves[c].adjacency[name] = 1
    if len(through) == 2:
        a, b = through
        for x, y in ((a, b), (b, a)):
            left = tree.curves[x].adjacency.get(y, 0) - 1
            if left:
                tree.curves[x].adjacency[y] = left
            else:
                tree.curves[x].adjacency.pop(y, None)
    tree.curves[name] = new


# -- bridge to the surface layer --------------------------------------------

def curve_records(tree: BlowupTree, curve_id: str, cap: int = DEFAULT_TRUNCATION_CAP) -> list:
    """Index records (point label, Z, CS, tang) of an exceptional curve at the leaf points."""
    from .surface import SingRecord

    ledger = tree.curves[curve_id]
    out = []
    for p in tree.leaf_points():
        if curve_id not in p.axes:
            continue
        axis = p.axes.index(curve_id)
        eq = _AXIS_EQ[axis]
        if ledger.invariant:
            if not p.singular:
                continue
            branch = solve_smooth_branch(eq, (0, 0), 4)
            out.append(SingRecord(p.label, Z=z_index(p.germ, branch, cap),
                                  CS=cs_index(p.germ, branch, cap)))
        else:
            out.append(SingRecord(p.label, tang=tang_index(p.germ, eq)))
    return out


def ledger_to_surface(tree: BlowupTree, cap: int = DEFAULT_TRUNCATION_CAP):
    """Exceptional configuration of a completed reduction as a SurfaceModel."""
    from .surface import Curve, SurfaceModel

    if not tree.complete:
        raise TreeIncomplete("reduction tree has unresolved or non-reduced points")
    curves = []
    entries = {}
    for cid in _curve_order(tree.curves):
        led = tree.curves[cid]
        curves.append(Curve(cid, genus=0, invariant=led.invariant,
                            records=tuple(curve_records(tree, cid, cap))))
        entries[(cid, cid)] = led.self_intersection
        for other, m in led.adjacency.items():
            entries[(cid, other)] = Fraction(m)
    return SurfaceModel.build(curves, entries)

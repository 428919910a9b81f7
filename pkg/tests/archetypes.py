"""Hand-built components of the five numerically trivial types and their corruptions."""

from dataclasses import replace

from folia.surface import Curve, OrbifoldPoint, SingRecord, SurfaceModel


def orb(*pairs):
    return tuple(OrbifoldPoint(p, k) for p, k in pairs)


def rec(*points, Z=1, CS=-1):
    return tuple(SingRecord(p, Z, CS) for p in points)


def case_a():
    return SurfaceModel.build([Curve("E", genus=1)], {("E", "E"): 0})


def case_b():
    curves = [
        Curve("A", records=rec("pAB", "pCA")),
        Curve("B", records=rec("pAB", "pBC")),
        Curve("C", records=rec("pBC", "pCA")),
    ]
    entries = {("A", "A"): -2, ("B", "B"): -2, ("C", "C"): -2, ("A", "B"): 1, ("B", "C"): 1, ("C", "A"): 1}
    return SurfaceModel.build(curves, entries)


def case_c():
    return SurfaceModel.build([Curve("R", orbifold=orb(("q1", 2), ("q2", 3), ("q3", 6)))], {("R", "R"): 0})


def case_d():
    return SurfaceModel.build(
        [Curve("R", orbifold=orb(("q1", 2), ("q2", 2), ("q3", 2), ("q4", 2)))], {("R", "R"): 0}
    )


def case_e():
    curves = [
        Curve("C1", orbifold=orb(("a1", 2), ("a2", 2)), records=rec("p12")),
        Curve("C2", records=rec("p12", "p23")),
        Curve("C3", orbifold=orb(("b1", 2), ("b2", 2)), records=rec("p23")),
    ]
    entries = {("C1", "C1"): -1, ("C2", "C2"): -2, ("C3", "C3"): -1, ("C1", "C2"): 1, ("C2", "C3"): 1}
    return SurfaceModel.build(curves, entries)


ARCHETYPES = {"a": case_a, "b": case_b, "c": case_c, "d": case_d, "e": case_e}


def _edit(model, cid, **changes):
    return model.with_curve(replace(model.curve(cid), **changes))


def _entries(model):
    return {k: v for k, v in model.matrix.items()}


def corruptions(case):
    """Four single structural edits of an archetype."""
    m = ARCHETYPES[case]()
    if case == "a":
        return [
            _edit(m, "E", genus=0),
            _edit(m, "E", records=rec("p")),
            _edit(m, "E", orbifold=orb(("q", 2))),
            _edit(m, "E", invariant=False),
        ]
    if case == "b":
        broken = _entries(m)
        broken[("C", "A")] = broken[("A", "C")] = 0
        return [
            _edit(m, "A", records=rec("pAB")),
            _edit(m, "B", records=rec("pAB", "pBC", "extra")),
            _edit(m, "C", orbifold=orb(("q", 2))),
            SurfaceModel.build(m.curves, broken),
        ]
    if case == "c":
        return [
            _edit(m, "R", orbifold=orb(("q1", 2), ("q2", 3), ("q3", 7))),
            _edit(m, "R", orbifold=orb(("q1", 2), ("q2", 3))),
            _edit(m, "R", records=rec("p")),
            _edit(m, "R", genus=1),
        ]
    if case == "d":
        return [
            _edit(m, "R", orbifold=orb(("q1", 2), ("q2", 2), ("q3", 2), ("q4", 3))),
            _edit(m, "R", orbifold=orb(("q1", 2), ("q2", 2), ("q3", 2))),
            _edit(m, "R", records=rec("p")),
            _edit(m, "R", nodes=("n",), records=rec("n")),
        ]
    if case == "e":
        closed = _entries(m)
        closed[("C1", "C3")] = closed[("C3", "C1")] = 1
        closed_model = SurfaceModel.build(
            [
                replace(m.curve("C1"), records=rec("p12", "p13")),
                m.curve("C2"),
                replace(m.curve("C3"), records=rec("p23", "p13")),
            ],
            closed,
        )
        return [
            _edit(m, "C1", orbifold=orb(("a1", 2))),
            _edit(m, "C2", orbifold=orb(("x", 2))),
            _edit(m, "C2", records=rec("p12")),
            closed_model,
        ]
    raise KeyError(case)

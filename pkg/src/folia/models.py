"""Degree bookkeeping for foliations transverse to a fibration.

The Riccati case has a closed form in the fibre data.  For the Turbulent
case only a generic evaluator is offered: the caller supplies each special
fibre's contribution, and nothing here claims those contributions are right.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction


class RiccatiInputError(ValueError):
    pass


def _pos_ints(values, name, minimum):
    out = tuple(values)
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
            raise RiccatiInputError(f"{name} entries must be integers >= {minimum}, got {v!r}")
    return out


@dataclass(frozen=True)
class RiccatiModel:
    """Special fibres of a Riccati foliation over a base curve.

    b_orders: orders k of the two quotient points on each (b) fibre.
    c_count: number of (c) fibres.
    d_multiplicities / e_multiplicities: saddle-node multiplicities.
    """

    chi_top: int
    b_orders: tuple = ()
    c_count: int = 0
    d_multiplicities: tuple = ()
    e_multiplicities: tuple = ()

    def __post_init__(self):
        if not isinstance(self.chi_top, int) or isinstance(self.chi_top, bool):
            raise RiccatiInputError("chi_top must be an integer")
        if not isinstance(self.c_count, int) or isinstance(self.c_count, bool) or self.c_count < 0:
            raise RiccatiInputError("c_count must be a nonnegative integer")
        object.__setattr__(self, "b_orders", _pos_ints(self.b_orders, "b_orders", 2))
        object.__setattr__(self, "d_multiplicities", _pos_ints(self.d_multiplicities, "d_multiplicities", 1))
        object.__setattr__(self, "e_multiplicities", _pos_ints(self.e_multiplicities, "e_multiplicities", 1))

    _KEYS = ("chi_top", "b_orders", "c_count", "d_multiplicities", "e_multiplicities")

    @classmethod
    def from_dict(cls, data: dict) -> RiccatiModel:
        if not isinstance(data, dict):
            raise RiccatiInputError("expected a JSON object")
        extra = set(data) - set(cls._KEYS) - {"version"}
        if extra:
            raise RiccatiInputError(f"unknown field(s) {sorted(extra)}")
        if "chi_top" not in data:
            raise RiccatiInputError("chi_top is required")
        for key in ("b_orders", "d_multiplicities", "e_multiplicities"):
            if key in data and not isinstance(data[key], list):
                raise RiccatiInputError(f"{key} must be a list")
        return cls(**{k: tuple(v) if isinstance(v, list) else v
                      for k, v in data.items() if k != "version"})

    @classmethod
    def from_json(cls, text: str) -> RiccatiModel:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise RiccatiInputError(f"invalid JSON: {exc}") from exc

    def to_dict(self) -> dict:
        return {
            "chi_top": self.chi_top,
            "b_orders": list(self.b_orders),
            "c_count": self.c_count,
            "d_multiplicities": list(self.d_multiplicities),
            "e_multiplicities": list(self.e_multiplicities),
        }


def base_chi_orb(model: RiccatiModel) -> Fraction:
    chi = Fraction(model.chi_top)
    chi -= sum((Fraction(k - 1, k) for k in model.b_orders), Fraction(0))
    chi -= Fraction(len(model.e_multiplicities), 2)
    return chi


def pushforward_degree(model: RiccatiModel) -> Fraction:
    """Degree of the direct image of K_F on the base."""
    return (
        -base_chi_orb(model)
        + model.c_count
        + sum(model.d_multiplicities)
        + sum((Fraction(l, 2) for l in model.e_multiplicities), Fraction(0))
    )


def kodaira_from_degree(deg) -> float | int:
    """1, 0 or -inf according to the sign of the degree."""
    deg = Fraction(deg)
    if deg > 0:
        return 1
    if deg == 0:
        return 0
    return -math.inf


def format_kodaira(kod) -> str:
    return "-inf" if kod == -math.inf else str(kod)


@dataclass(frozen=True)
class RiccatiReport:
    model: RiccatiModel
    chi_orb: Fraction
    degree: Fraction
    kodaira: float | int

    def to_dict(self) -> dict:
        return {
            "model": self.model.to_dict(),
            "chi_orb_base": str(self.chi_orb),
            "pushforward_degree": str(self.degree),
            "kod": format_kodaira(self.kodaira),
        }

    def table(self) -> str:
        rows = [("chi_orb(B)", str(self.chi_orb)),
                ("deg pi_* K_F", str(self.degree)),
                ("kod", format_kodaira(self.kodaira))]
        width = max(len(a) for a, _ in rows)
        return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows) + "\n"


def riccati_report(model: RiccatiModel) -> RiccatiReport:
    deg = pushforward_degree(model)
    return RiccatiReport(model, base_chi_orb(model), deg, kodaira_from_degree(deg))


@dataclass(frozen=True)
class ContributionSum:
    """User-supplied evaluation: -chi_orb(B) plus one rational per special fibre.

    ``provenance`` is always ``"user-supplied"``; the per-fibre values are not
    derived here.
    """

    chi_orb: Fraction
    contributions: tuple = field(default_factory=tuple)
    provenance: str = "user-supplied"

    @property
    def degree(self) -> Fraction:
        return -self.chi_orb + sum((Fraction(c) for c in self.contributions), Fraction(0))


def contribution_degree(chi_orb, contributions) -> ContributionSum:
    return ContributionSum(Fraction(chi_orb), tuple(Fraction(c) for c in contributions))

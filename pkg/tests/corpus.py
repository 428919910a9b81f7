"""Shared germs and curves for the test-suite."""

import random
from fractions import Fraction as F

from folia.algebra import W, Z, BiPoly
from folia.germ import FoliationGerm


def germ(P, Q):
    return FoliationGerm(P, Q)


def _random_quadratic(rng):
    return sum((F(rng.randint(-3, 3), rng.randint(1, 3)) * Z**i * W**(2 - i) for i in range(3)), BiPoly())


def corpus():
    """(name, germ) pairs; every singular point met during reduction is rational."""
    items = [
        ("saddle", germ(Z, -W)),
        ("linear_-2/3", germ(Z, F(-2, 3) * W)),
        ("linear_-2", germ(Z, -2 * W)),
        ("saddle_node_k1", germ(Z, W**2)),
        ("saddle_node_k2", germ(Z + Z * W, W**3)),
        ("cusp", FoliationGerm.from_one_form(-3 * Z**2, 2 * W)),
        ("z2_w2", germ(Z**2, W**2)),
        ("radial", germ(Z, W)),
        ("resonant_2", germ(Z, 2 * W)),
        ("nilpotent_A3", germ(W, 2 * Z**3)),
        ("three_lines", germ(Z * (Z - 2 * W), W * (2 * Z - W))),
        ("cubic_lines", germ(Z**3, W**3)),
    ]
    rng = random.Random(20240601)
    for n in range(4):
        lam = F(-rng.randint(1, 7), rng.randint(1, 5))
        items.append((f"perturbed_linear_{n}", germ(Z + _random_quadratic(rng), lam * W + W * _random_quadratic(rng).subs(W, W))))
    for n in range(3):
        a, b, c, d = (F(rng.randint(-4, 4) or 1, rng.randint(1, 3)) for _ in range(4))
        items.append((f"axes_quadratic_{n}", germ(Z * (a * Z + b * W) + W**3, W * (c * Z + d * W))))
    return items


def reduced_corpus():
    from folia.germ import classify_point

    return [(n, g) for n, g in corpus() if classify_point(g).is_reduced]


CURVES = [
    Z,
    W,
    Z + W,
    W - Z**2,
    W**2 - Z**3,
    W**2 + Z**3,
    W**2 - Z**5,
    Z * W,
    W**3 - Z**4,
    (W - Z**2) ** 2 - Z**5,
    W - Z**3 + Z * W,
    Z**2 - W**2 + W**3,
]

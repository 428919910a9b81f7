from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from folia.algebra import W, Z, TruncSeries, compose, series_residue
from folia.errors import InsufficientTruncation

from strategies import small_rats


def test_reading_past_order_is_an_error():
    s = TruncSeries((1, 2), 1)
    with pytest.raises(InsufficientTruncation):
        s[2]
    assert TruncSeries((1, 2), 1, exact=True)[5] == 0


def test_product_keeps_minimum_valid_order():
    a = TruncSeries((0, 1, 1), 2)
    b = TruncSeries((1, 1, 1, 1, 1), 4)
    assert (a * b).order == 2
    assert (a * TruncSeries((2,), 0, exact=True)).order == 2


def test_residue_examples():
    # (t + t^2) / t^2 = 1/t + 1
    num = TruncSeries.from_poly([0, 1, 1])
    den = TruncSeries.from_poly([0, 0, 1])
    assert series_residue(num, den) == 1
    # 1 / (t - t^2) = 1/t + 1 + t + ...
    assert series_residue(TruncSeries.from_poly([1]), TruncSeries.from_poly([0, 1, -1])) == 1
    # holomorphic quotient
    assert series_residue(TruncSeries.from_poly([3]), TruncSeries.from_poly([2])) == 0


def test_residue_needs_enough_terms():
    num = TruncSeries((1,), 0)
    den = TruncSeries((0, 0, 0, 1), 3)
    with pytest.raises(InsufficientTruncation):
        series_residue(num, den)


def test_compose_graph():
    # f = w - z^2 along w = t^2 vanishes identically
    phi = TruncSeries.from_poly([0, 0, 1])
    assert compose(W - Z**2, phi).valuation() is None


@given(st.lists(small_rats, min_size=1, max_size=5), st.lists(small_rats, min_size=1, max_size=5))
def test_inverse_is_inverse(a, b):
    if a[0] == 0:
        return
    s = TruncSeries(tuple(a), 6)
    inv = s.inverse(6)
    prod = s * inv
    assert prod[0] == 1 and all(prod[k] == 0 for k in range(1, 7))


@given(small_rats.filter(lambda x: x != 0), st.integers(1, 4), st.lists(small_rats, max_size=4))
def test_residue_of_simple_pole_times_unit(c, d, tail):
    # c t^(d-1) / t^d (1 + ...) has residue c
    num = TruncSeries.from_poly([0] * (d - 1) + [c])
    den = TruncSeries.from_poly([0] * d + [1] + list(tail))
    assert series_residue(num, den) == c

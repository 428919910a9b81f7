import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from folia.models import (
    RiccatiInputError,
    RiccatiModel,
    base_chi_orb,
    contribution_degree,
    kodaira_from_degree,
    pushforward_degree,
    riccati_report,
)


def test_base_chi_orb_examples():
    assert base_chi_orb(RiccatiModel(2)) == 2
    assert base_chi_orb(RiccatiModel(2, b_orders=(2, 2))) == 1
    assert base_chi_orb(RiccatiModel(2, e_multiplicities=(1,))) == F(3, 2)


def test_pushforward_degree_examples():
    assert pushforward_degree(RiccatiModel(2)) == -2
    assert pushforward_degree(RiccatiModel(0, c_count=1)) == 1
    assert pushforward_degree(RiccatiModel(2, b_orders=(2, 2), d_multiplicities=(1,))) == 0


def test_kodaira_from_degree_examples():
    assert kodaira_from_degree(1) == 1
    assert kodaira_from_degree(0) == 0
    assert kodaira_from_degree(-2) == -math.inf
    assert kodaira_from_degree(F(1, 6)) == 1


def test_report_serialisation():
    report = riccati_report(RiccatiModel(2, e_multiplicities=(3,)))
    assert report.degree == F(0)
    assert report.to_dict() == {
        "model": {"chi_top": 2, "b_orders": [], "c_count": 0, "d_multiplicities": [], "e_multiplicities": [3]},
        "chi_orb_base": "3/2",
        "pushforward_degree": "0",
        "kod": "0",
    }
    assert "kod" in report.table()


def test_input_validation():
    with pytest.raises(RiccatiInputError):
        RiccatiModel(2, b_orders=(1,))
    with pytest.raises(RiccatiInputError):
        RiccatiModel(2, d_multiplicities=(0,))
    with pytest.raises(RiccatiInputError):
        RiccatiModel(2, c_count=-1)
    with pytest.raises(RiccatiInputError):
        RiccatiModel.from_json('{"chi_top": 2, "f_count": 1}')
    with pytest.raises(RiccatiInputError):
        RiccatiModel.from_json('{"b_orders": [2]}')
    with pytest.raises(RiccatiInputError):
        RiccatiModel.from_json("{not json")
    m = RiccatiModel.from_json('{"chi_top": 0, "b_orders": [3, 3], "c_count": 2}')
    assert RiccatiModel.from_dict(m.to_dict()) == m


def test_contribution_evaluator_is_labelled_user_supplied():
    result = contribution_degree(F(1, 2), [1, F(1, 3)])
    assert result.degree == F(5, 6)
    assert result.provenance == "user-supplied"


models = st.builds(
    RiccatiModel,
    chi_top=st.integers(-6, 2),
    b_orders=st.lists(st.integers(2, 9), max_size=4).map(tuple),
    c_count=st.integers(0, 3),
    d_multiplicities=st.lists(st.integers(1, 5), max_size=3).map(tuple),
    e_multiplicities=st.lists(st.integers(1, 5), max_size=3).map(tuple),
)


def _bump(model, field, index):
    values = list(getattr(model, field))
    values[index] += 1
    return RiccatiModel(**{**model.to_dict(), field: tuple(values)})


@given(models, st.data())
def test_degree_monotone_in_every_entry(model, data):
    deg = pushforward_degree(model)
    more_c = RiccatiModel(**{**model.to_dict(), "c_count": model.c_count + 1})
    assert pushforward_degree(more_c) >= deg
    for field in ("b_orders", "d_multiplicities", "e_multiplicities"):
        values = getattr(model, field)
        if values:
            i = data.draw(st.integers(0, len(values) - 1))
            assert pushforward_degree(_bump(model, field, i)) >= deg


@given(st.integers(0, 5))
def test_no_special_fibres_gives_2g_minus_2(genus):
    assert pushforward_degree(RiccatiModel(2 - 2 * genus)) == 2 * genus - 2


@given(models)
def test_denominators_divide_twice_lcm(model):
    bound = 2 * math.lcm(1, *model.b_orders)
    for value in (base_chi_orb(model), pushforward_degree(model)):
        assert bound % value.denominator == 0

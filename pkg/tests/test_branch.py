from fractions import Fraction as F

import pytest
from hypothesis import given

from folia.algebra import W, Z, compose, factor_at_node, solve_smooth_branch, tangent_slopes
from folia.errors import IrrationalTangents, NotANode, NotSmoothHere

from strategies import small_rats


def test_smooth_branch_series():
    b = solve_smooth_branch(W + Z + Z * W, order=3)
    assert b.var == "z" and b.certificate == "dw"
    assert list(b.param.coeffs) == [0, -1, 1, -1]


def test_polynomial_graph_is_exact():
    b = solve_smooth_branch(W - Z**2)
    assert b.param.exact


def test_vertical_branch_uses_other_variable():
    b = solve_smooth_branch(Z - W**2)
    assert b.var == "w" and b.certificate == "dz"


def test_singular_point_rejected():
    with pytest.raises(NotSmoothHere):
        solve_smooth_branch(W**2 - Z**3)


def test_node_factorisation():
    assert tangent_slopes(W**2 - Z**2) == [-1, 1]
    assert tangent_slopes(Z * W) == [0, None]
    for f in (W**2 - Z**2 + Z**3, Z * W + W**3, (W - Z) * (W + 2 * Z) + Z**2 * W):
        for b in factor_at_node(f, order=6):
            local = f if b.var == "z" else f.swap()
            s = compose(local, b.param)
            assert all(c == 0 for c in s.coeffs)


def test_node_errors():
    with pytest.raises(IrrationalTangents):
        tangent_slopes(W**2 - 2 * Z**2)
    with pytest.raises(NotANode):
        tangent_slopes(W**2 - Z**3)
    with pytest.raises(NotANode):
        tangent_slopes(W - Z**2)


@given(small_rats, small_rats, small_rats)
def test_branch_annihilates_equation(a, b, c):
    f = W - a * Z - b * Z**2 - c * Z * W + W**2
    br = solve_smooth_branch(f, order=7)
    s = compose(f, br.param)
    assert all(x == 0 for x in s.coeffs)


@given(small_rats, small_rats)
def test_branch_at_translated_point(a, b):
    f = (W - b) - (Z - a) ** 2
    br = solve_smooth_branch(f, (a, b))
    assert br.base == (a, b) and br.param.exact

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from folia.algebra import W, Z, BiPoly, factor_at_node, solve_smooth_branch
from folia.errors import BranchNotInvariant, CurveIsInvariant, MismatchedPoints, NotSingularHere
from folia.germ import (
    FoliationGerm,
    IndexRecord,
    NonReduced,
    NonSingular,
    ReducedNonDegenerate,
    ReducedSaddleNode,
    classify_point,
    classify_singularity,
    combine_at_node,
    cs_index,
    projective_chart,
    singular_locus,
    tang_index,
    z_index,
)

from strategies import negative_rats, small_rats

Z_AXIS = solve_smooth_branch(W)  # {w = 0}
W_AXIS = solve_smooth_branch(Z)  # {z = 0}


def test_one_form_duality():
    g = FoliationGerm.from_one_form(-W, Z)
    assert g == FoliationGerm(Z, W)
    assert g.A == -W and g.B == Z


def test_common_factor_removed_and_scaled():
    g = FoliationGerm(2 * Z * (Z - 1), 2 * W * (Z - 1))
    assert g.P == Z and g.Q == W
    assert g.removed_factor == Z - 1


def test_singular_locus():
    loc = singular_locus(FoliationGerm(Z**2 - 1, W))
    assert loc.points == ((-1, 0), (1, 0)) and loc.complete
    loc = singular_locus(FoliationGerm(Z**2 - 2, W))
    assert loc.points == () and not loc.complete
    assert str(loc.residual[0]) == "z^2 - 2"


def test_classification_examples():
    assert classify_singularity(FoliationGerm(Z, -W)) == ReducedNonDegenerate(F(-1), F(-2), F(0))
    assert classify_singularity(FoliationGerm(Z, W**2)) == ReducedSaddleNode(1)
    assert classify_singularity(FoliationGerm(Z, 5 * W)) == NonReduced("ratio_in_Q+", F(5))
    assert classify_singularity(FoliationGerm(W, Z**2)) == NonReduced("nilpotent")
    assert classify_singularity(FoliationGerm(Z**2, W**2)) == NonReduced("zero_linear_part")
    irr = classify_singularity(FoliationGerm(2 * Z + W, Z + W))
    assert irr.ratio is None and irr.ratio_sum == 7 and irr.discriminant == 45
    assert classify_point(FoliationGerm(1 + Z, W)) == NonSingular()
    with pytest.raises(NotSingularHere):
        classify_singularity(FoliationGerm(1 + Z, W))


def test_linear_index_table():
    for lam in (F(-1), F(-2), F(-2, 3)):
        g = FoliationGerm(Z, lam * W)
        assert z_index(g, Z_AXIS) == 1 and z_index(g, W_AXIS) == 1
        assert cs_index(g, Z_AXIS) == lam and cs_index(g, W_AXIS) == 1 / lam


def test_saddle_node_weak_separatrix_cs_is_nu():
    for k, nu in ((1, F(3)), (2, F(-1, 2)), (3, F(0))):
        g = FoliationGerm(Z * (1 + nu * W**k), W ** (k + 1))
        assert z_index(g, Z_AXIS) == 1 and cs_index(g, Z_AXIS) == 0
        assert z_index(g, W_AXIS) == k + 1 and cs_index(g, W_AXIS) == nu


def test_node_combination():
    lam = F(-2, 3)
    g = FoliationGerm(Z, lam * W)
    b1, b2 = factor_at_node(Z * W)
    zs = [IndexRecord("Z", z_index(g, b), (0, 0)) for b in (b1, b2)]
    cs = [IndexRecord("CS", cs_index(g, b), (0, 0)) for b in (b1, b2)]
    assert combine_at_node("Z", *zs).value == 0
    assert combine_at_node("CS", *cs).value == lam + 1 / lam + 2
    with pytest.raises(MismatchedPoints):
        combine_at_node("Z", zs[0], IndexRecord("Z", 1, (1, 0)))


def test_tang_examples():
    radial = FoliationGerm(Z, W)
    assert tang_index(radial, W - Z**2) == 2
    assert tang_index(FoliationGerm(BiPoly.const(1), BiPoly()), W - Z**2) == 1
    assert tang_index(radial, W - Z**2, orbifold_order=2) == 1
    with pytest.raises(CurveIsInvariant) as info:
        tang_index(radial, W * (W - Z**2))
    assert info.value.factor == W


def test_non_invariant_branch_rejected():
    with pytest.raises(BranchNotInvariant):
        z_index(FoliationGerm(Z, W), solve_smooth_branch(W - Z**2))


def test_projective_charts_of_linear_model():
    lam = F(-3, 4)
    g = FoliationGerm(Z, lam * W)
    assert projective_chart(g, "x") == FoliationGerm(-Z, (lam - 1) * W)
    assert projective_chart(g, "y") == FoliationGerm((1 - lam) * Z, -lam * W)


@given(negative_rats)
def test_cs_of_linear_germ_is_eigenvalue_ratio(lam):
    g = FoliationGerm(Z, lam * W)
    assert cs_index(g, Z_AXIS) * cs_index(g, W_AXIS) == 1
    assert classify_singularity(g).ratio == max(lam, 1 / lam, key=abs)


@given(negative_rats, small_rats, small_rats, small_rats)
def test_indices_ignore_higher_order_terms_on_axes(lam, a, b, c):
    # axes stay invariant; CS depends only on the linear part
    g = FoliationGerm(Z + a * Z**2 + b * Z * W, lam * W + c * W**2 + a * Z * W)
    assert cs_index(g, Z_AXIS) == lam
    assert cs_index(g, W_AXIS) == 1 / lam


@given(st.integers(1, 5), small_rats)
def test_saddle_node_multiplicity(k, nu):
    g = FoliationGerm(Z * (1 + nu * W**k), W ** (k + 1))
    assert classify_singularity(g) == ReducedSaddleNode(k)


@given(small_rats.filter(bool), negative_rats)
def test_classification_invariant_under_scaling_and_swap(c, lam):
    g = FoliationGerm(Z + W**2, lam * W)
    scaled = FoliationGerm(c * g.P, c * g.Q)
    swapped = FoliationGerm(g.Q.swap(), g.P.swap())
    assert classify_singularity(scaled) == classify_singularity(g) == classify_singularity(swapped)

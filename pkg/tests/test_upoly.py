from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from folia.algebra import upoly

from strategies import small_rats

polys = st.lists(small_rats, max_size=5).map(upoly.trim)


def from_roots(roots):
    p = upoly.ONE
    for r in roots:
        p = upoly.mul(p, (-r, F(1)))
    return p


def test_trim_and_degree():
    assert upoly.trim((F(1), F(0), F(0))) == (F(1),)
    assert upoly.degree(upoly.ZERO) == -1
    assert upoly.degree((F(0), F(2))) == 1


def test_rational_roots_finds_all_rational_roots():
    p = from_roots([F(1, 2), F(-3), F(2, 3)])
    p = upoly.mul(p, (F(2), F(0), F(1)))  # z^2 + 2 has no rational root
    assert upoly.rational_roots(p) == [F(-3), F(1, 2), F(2, 3)]


def test_strip_roots_leaves_irrational_factor():
    p = upoly.mul(from_roots([F(1), F(1)]), (F(-2), F(0), F(1)))
    rest = upoly.squarefree(upoly.strip_roots(p, [F(1)]))
    assert rest == (F(-2), F(0), F(1))


def test_to_str():
    assert upoly.to_str((F(-2), F(0), F(1)), "z") == "z^2 - 2"


@given(polys, polys)
def test_divmod_identity(p, q):
    if not q:
        return
    quo, rem = upoly.divmod_(p, q)
    assert upoly.add(upoly.mul(quo, q), rem) == p
    assert upoly.degree(rem) < upoly.degree(q)


@given(polys, polys, polys)
def test_gcd_divides_and_is_maximal(a, b, c):
    if not c:
        return
    p, q = upoly.mul(a, c), upoly.mul(b, c)
    g = upoly.gcd_(p, q)
    if not p and not q:
        assert g == upoly.ZERO
        return
    assert upoly.divmod_(p, g)[1] == upoly.ZERO
    assert upoly.divmod_(q, g)[1] == upoly.ZERO
    assert upoly.divmod_(g, upoly.monic(c))[1] == upoly.ZERO


@given(st.lists(small_rats, min_size=1, max_size=4))
def test_rational_roots_of_product(roots):
    assert upoly.rational_roots(from_roots(roots)) == sorted(set(roots))

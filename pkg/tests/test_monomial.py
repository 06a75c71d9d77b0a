import pytest
from hypothesis import given, settings, strategies as st

from cwlsum.errors import DegenerateIdealError, RingMismatchError
from cwlsum.monomial import (Monomial, MonomialIdeal, Ring, colon, component, factor_gcd,
                             maximal_ideal, minimalize, power, scale, stats, unit_ideal,
                             zero_ideal)

from conftest import ideals


def test_ring_construction():
    assert Ring("x y").names == ("x", "y")
    assert Ring("x", "y") == Ring(["x", "y"])
    with pytest.raises(ValueError):
        Ring("x x")
    with pytest.raises(ValueError):
        Ring()


def test_minimalize(R2):
    x2, x2y, y3 = (2, 0), (2, 1), (0, 3)
    assert minimalize([x2, x2y, y3], R2) == R2.ideal(x2, y3)
    assert minimalize([], R2).is_zero
    assert minimalize([(1, 1), (3, 0), (2, 1)], R2).exponents == ((1, 1), (3, 0))


def test_mixed_rings_rejected(R2, R3):
    with pytest.raises(RingMismatchError):
        R2.m + R3.m
    with pytest.raises(RingMismatchError):
        MonomialIdeal(R2, [R3.var("z")])


def test_sum_examples():
    R = Ring("a b")
    assert R.ideal("a^2, a*b, b^4") + R.ideal("a^4, a*b, b^2") == R.ideal("a^2, a*b, b^2")
    S = Ring("x y")
    I, J = S.ideal("x^4, x^3*y^2"), S.ideal("y^4, x^2*y^3")
    assert I + J == S.ideal("x^4, x^3*y^2, x^2*y^3, y^4")
    assert I + zero_ideal(S) == I


def test_scale(R2):
    x, y = R2.var("x"), R2.var("y")
    assert scale(x * y, R2.m) == R2.ideal("x^2*y, x*y^2")
    assert scale(R2.one(), R2.ideal("x^3, y")) == R2.ideal("x^3, y")
    assert scale(x ** 3, R2.ideal("x^2, x*y, y^3")) == R2.ideal("x^5, x^4*y, x^3*y^3")


def test_intersect_examples(R2):
    assert R2.ideal("x^3, x^2*y^2, x*y^3") & R2.ideal("y^3") == R2.ideal("x*y^3")
    assert R2.ideal("x^4, x^3*y^2") & R2.ideal("y^4, x^2*y^3") == R2.ideal("x^3*y^3")
    I = R2.ideal("x^2, y^5")
    assert I & I == I


def test_colon_examples(R2):
    m = R2.m
    assert colon(R2.ideal("x^3, x*y"), m) == R2.ideal("x^2, x*y")
    assert colon(R2.ideal("x^3, x*y, y^3"), m) == R2.ideal("x^2, x*y, y^2")
    assert colon(m ** 4, R2.monomial("x^3")) == m
    assert colon(R2.ideal("x^2"), R2.monomial("x^3")).is_unit
    assert colon(zero_ideal(R2), m).is_zero
    with pytest.raises(ValueError):
        colon(m, zero_ideal(R2))


def test_component_examples(R2):
    I = R2.ideal("x^3, x*y, y^3")
    assert component(I, 2) == R2.ideal("x*y")
    assert component(I, 3) == R2.m ** 3
    assert component(I, 1).is_zero


def test_stats_examples():
    R = Ring("x y")
    s = stats(R.ideal("x^4, x^2*y, x*y^2, y^4"))
    assert (s.order, s.mu) == (3, 4)
    s = stats(R.m ** 3)
    assert (s.order, s.mu, s.is_m_primary) == (3, 4, True)
    T = Ring("a b c d")
    s = stats(T.ideal("a^2*b, a*b*c, b*c*d, c*d^2"))
    assert s.support == frozenset(range(4)) and not s.is_m_primary
    with pytest.raises(DegenerateIdealError):
        stats(zero_ideal(R))


def test_factor_gcd(R2):
    f, Ip = factor_gcd(R2.ideal("x^5, x^4*y, x^3*y^3"))
    assert f == R2.monomial("x^3") and Ip == R2.ideal("x^2, x*y, y^3")
    g, Jp = factor_gcd(R2.ideal("x*y^4, y^5"))
    assert g == R2.monomial("y^4") and Jp == R2.m
    one, same = factor_gcd(R2.m ** 2)
    assert one.is_unit and same == R2.m ** 2


def test_power(R2):
    assert power(R2.m, 2) == R2.ideal("x^2, x*y, y^2")
    assert R2.m ** 3 == R2.ideal("x^3, x^2*y, x*y^2, y^3")
    I = R2.ideal("x^2, y^3")
    assert I ** 1 == I and (I ** 0).is_unit
    with pytest.raises(ValueError):
        power(I, -1)


def test_zero_and_unit_distinct(R2):
    assert zero_ideal(R2) != unit_ideal(R2)
    assert str(zero_ideal(R2)) == "(0)" and str(unit_ideal(R2)) == "(1)"


def test_canonical_order_and_str(R2):
    I = R2.ideal("y^3, x*y, x^3")
    assert str(I) == "(x*y, x^3, y^3)"


def test_monomial_ops(R2):
    a, b = R2.monomial("x^2*y"), R2.monomial("x*y^3")
    assert a.lcm(b) == R2.monomial("x^2*y^3") and a.gcd(b) == R2.monomial("x*y")
    assert (a * b) / b == a
    assert R2.monomial("x*y").is_squarefree and not a.is_squarefree
    with pytest.raises(ValueError):
        b / a


# ---- properties ------------------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(ideals(3, 3, 4), ideals(3, 3, 4), ideals(3, 3, 4))
def test_distributivity(A, B, C):
    assert (A + B) & C == (A & C) + (B & C)


@settings(max_examples=80, deadline=None)
@given(ideals(3, 3, 4), ideals(3, 3, 4), st.tuples(*[st.integers(0, 2)] * 3),
       st.tuples(*[st.integers(0, 2)] * 3))
def test_fIgJ_identity(I, J, fe, ge):
    R = I.ring
    f, g = Monomial(R, fe), Monomial(R, ge)
    h = f.lcm(g)
    assert scale(f, I) & scale(g, J) == scale(h, colon(I, h / f) & colon(J, h / g))


@settings(max_examples=60, deadline=None)
@given(ideals(3, 3, 4), st.tuples(*[st.integers(0, 2)] * 3), st.tuples(*[st.integers(0, 2)] * 3))
def test_colon_composes(I, fe, ge):
    R = I.ring
    f, g = Monomial(R, fe), Monomial(R, ge)
    assert colon(colon(I, f), g) == colon(I, f * g)


@settings(max_examples=60, deadline=None)
@given(ideals(2, 5, 4), st.integers(0, 7))
def test_component_growth(I, j):
    m = maximal_ideal(I.ring)
    C, D = component(I, j), component(I, j + 1)
    assert (m * C) <= D
    if j + 1 > I.order and j + 1 not in I.degrees:
        assert D == m * C


@settings(max_examples=60, deadline=None)
@given(ideals(3, 4, 4), ideals(3, 4, 4))
def test_order_of_sum(I, J):
    assert (I + J).order == min(I.order, J.order)


@settings(max_examples=60, deadline=None)
@given(ideals(3, 4, 5))
def test_generators_are_antichain(I):
    G = I.exponents
    for a in G:
        for b in G:
            if a != b:
                assert not all(p <= q for p, q in zip(a, b))

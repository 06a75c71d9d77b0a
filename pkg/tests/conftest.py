import pytest
from hypothesis import strategies as st

from cwlsum.monomial import MonomialIdeal, Ring


@pytest.fixture
def R2():
    return Ring("x", "y")


@pytest.fixture
def R3():
    return Ring("x", "y", "z")


def ideals(n=2, max_exp=4, max_gens=5, allow_zero=False):
    """Hypothesis strategy for monomial ideals in the ring x, y[, z, w]."""
    names = ["x", "y", "z", "w"][:n]
    ring = Ring(names)
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    lo = 0 if allow_zero else 1
    return st.lists(vec, min_size=lo, max_size=max_gens).map(
        lambda gs: MonomialIdeal(ring, gs))

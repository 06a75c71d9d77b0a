import pytest

from cwlsum import Ring
from cwlsum.criteria import (check_componentwise_criterion, check_cwl_plus_linear,
                             check_hv_criterion, check_lin_plus_lin, check_nJ_sum,
                             check_prime_product, find_prime_multiplier)
from cwlsum.resolution import is_cwl
from cwlsum.verdict import INCONCLUSIVE

R = Ring("x y")
S3 = Ring("x y z")
A = Ring("a b")
T = Ring("a b c d")
U = Ring("u v p q")


def test_lin_plus_lin():
    I = R.ideal("x^4, x^3*y^2")
    assert not check_lin_plus_lin(I, I, 4).applicable
    m2 = R.m ** 2
    v = check_lin_plus_lin(m2, m2, 2)
    assert v.holds and v.witness("reg intersection") == 2
    v = check_lin_plus_lin(S3.ideal("x^2*y, x*y^2"), S3.ideal("y^2*z, y*z^2"), 3)
    assert v.applicable and v.conclusion is False
    assert v.witness("reg intersection") == 5 and v.direct is False and v.consistent


def test_cwl_plus_linear():
    I = S3.ideal("x^2*y*z, x*y^2*z, x*y*z^2") + S3.ideal("x^2*y, x*y^2")
    J = S3.ideal("y^2*z, y*z^2")
    v = check_cwl_plus_linear(I, J)
    assert not v.applicable and v.direct is False
    v = check_cwl_plus_linear(R.ideal("x^4, x^3*y^2"), R.ideal("y^4, x^2*y^3"))
    assert not v.applicable and v.direct is False
    v = check_cwl_plus_linear(R.ideal("x^3"), R.ideal("y^3"))
    assert v.applicable and v.conclusion == INCONCLUSIVE
    assert v.consistent


def test_componentwise_criterion():
    v = check_componentwise_criterion(A.ideal("a^2, a*b, b^4"), A.ideal("a^4, a*b, b^2"))
    assert v.holds and v.direct is True
    v = check_componentwise_criterion(R.ideal("x^4, x^3*y^2"), R.ideal("y^4, x^2*y^3"))
    assert v.conclusion is False and v.witness("failing t") == 4 and v.consistent
    I = R.ideal("x^2, x*y^3")
    assert check_componentwise_criterion(I, I).holds


def test_hv():
    v = check_hv_criterion(R.ideal("x^3, x^2*y^2, x*y^3"), R.ideal("y^3"))
    assert not v.applicable and v.direct is False
    J = U.ideal("u^2, u*v")
    v = check_hv_criterion(U.ideal("p") * J, U.ideal("q") * J)
    assert v.holds and v.details["one_sided_sufficient"] and v.consistent
    I = R.ideal("x^2, x*y")
    assert not check_hv_criterion(I, I).applicable


def test_prime_product():
    v = check_prime_product(["b", "c"], T.ideal("a^2*b, a*b*c, b*c*d, c*d^2"))
    assert not v.applicable and v.direct is False
    J = U.ideal("u^2, u*v")
    assert check_prime_product(["p"], J).holds
    v = check_prime_product(["p", "q"], J)
    assert v.holds and v.direct is True
    with pytest.raises(ValueError):
        check_prime_product([], J)


def test_nJ_sum():
    v = check_nJ_sum(R.ideal("x^2*y, x*y^2"), R.ideal("x^3"))
    assert v.holds and v.consistent
    v = check_nJ_sum(S3.ideal("x*y, x*z"), S3.ideal("x^2"))
    assert v.holds and v.details["prime"] == ["y", "z"]
    v = check_nJ_sum(R.ideal("x^3, x^2*y^2, x*y^3"), R.ideal("y^3"))
    assert not v.applicable and "mI" in v.witness("reason")


def test_find_prime_multiplier():
    J = S3.ideal("x^2")
    assert find_prime_multiplier(S3.ideal("x^2*y, x^2*z"), J) == (1, 2)
    assert find_prime_multiplier(S3.ideal("x^3"), J) is None


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_family_sum_cwl(m):
    I, J = A.ideal(f"a^2, a*b, b^{m}"), A.ideal(f"a^{m}, a*b, b^2")
    assert is_cwl(I + J)
    v = check_componentwise_criterion(I, J)
    assert v.holds and v.consistent

import pytest

from cwlsum import Ring
from cwlsum.dim2 import (colon_z_dim, cwl_ordering, fullness_checks, fullsum_verdict,
                         graded_colon_linear, incremental_chain, is_full, is_m_full,
                         linear_colon_tests, mu_additive_verdict, order_length_formula,
                         reg_plus_one_verdict, validate_certificate)
from cwlsum.errors import DegenerateIdealError
from cwlsum.monomial import zero_ideal
from cwlsum.resolution import is_cwl
from cwlsum.verify import enumerate_ideals_dim2

R = Ring("x y")
S3 = Ring("x y z")


def test_graded_colon_linear():
    assert graded_colon_linear(R.ideal("x^2, y^2"), 3).dims == (0, 1, 3, 4)
    assert graded_colon_linear(R.m ** 2, 3).dims == (0, 2, 3, 4)
    assert colon_z_dim(R.m, 0) == 1
    with pytest.raises(DegenerateIdealError):
        graded_colon_linear(zero_ideal(R), 2)


def test_fullness_examples():
    assert is_full(R.ideal("x^4, x^2*y, x*y^2, y^3"))
    assert not is_full(R.ideal("x^3, x^2*y^2, y^3"))
    assert not is_m_full(R.ideal("x^2, y^2"))
    assert is_m_full(R.m ** 3)
    v = fullness_checks(R.ideal("x^4, x^3*y^2, x^2*y^3, y^4"))
    assert v.conclusion is False and v.consistent
    # m-full implies full in three variables as well
    v = fullness_checks(S3.m ** 2)
    assert v.details == {"is_full": True, "is_m_full": True, "is_cwl": True}


def test_trio_small():
    for I in enumerate_ideals_dim2(3):
        assert is_full(I) == is_m_full(I) == is_cwl(I)


def test_order_length():
    v = order_length_formula(R.ideal("x^4, x^3*y^2"), R.ideal("y^4, x^2*y^3"))
    assert v.holds and v.witness("length") == 2
    assert v.witness("order of intersection") == 6 and v.witness("max order") == 4
    assert not order_length_formula(R.ideal("x^3, x^2*y^2, y^3"), R.m).applicable
    I, J = R.ideal("x^4, x^3*y, x^2*y^2, y^3"), R.ideal("x^4, x^2*y, x*y^2, y^4")
    v = order_length_formula(I, J)
    assert v.holds and v.witness("length") == 1 and v.witness("order of intersection") == 4
    v = order_length_formula(R.ideal("x^3"), R.ideal("y^3"))
    assert v.holds and v.witness("length") == 3


def test_fullsum():
    I, J = R.ideal("x^4, x^3*y, x^2*y^2, y^3"), R.ideal("x^4, x^2*y, x*y^2, y^4")
    v = fullsum_verdict(I, J)
    assert v.holds and v.witness("condition") == 2
    assert v.witness("(I+J):m") == R.ideal("x^3, x*y, y^2")
    v = fullsum_verdict(R.ideal("x^3"), R.ideal("y^3"))
    assert v.conclusion is False and v.direct is False and v.consistent
    assert not fullsum_verdict(R.ideal("x^3, x^2*y^2, y^3"), R.m).applicable
    assert not fullsum_verdict(S3.m, S3.m).applicable


def test_mu_additive():
    v = mu_additive_verdict(R.ideal("x^4, x^3*y^2"), R.ideal("y^4, x^2*y^3"))
    assert v.applicable and v.conclusion is False and v.consistent
    v = mu_additive_verdict(R.ideal("x^3"), R.ideal("x*y"))
    assert v.holds and v.consistent
    assert not mu_additive_verdict(R.ideal("x^2, y"), R.ideal("y")).applicable


def test_linear_colon():
    v = linear_colon_tests(R.ideal("x^3, x^2*y^2"), R.monomial("y^4"))
    assert v.applicable and v.conclusion is False and v.consistent
    v = linear_colon_tests(R.ideal("x*y, x^3"), R.monomial("y^3"))
    assert v.holds and v.witness("colon") == R.ideal("x") and v.witness("variable") == "x"
    assert not linear_colon_tests(R.ideal("x^2"), R.monomial("x^3")).applicable
    assert not linear_colon_tests(R.ideal("x^2, y^2"), R.monomial("y")).applicable


def test_reg_plus_one():
    I = R.ideal("x^3") * R.m
    J = R.ideal("y^3") * R.m
    v = reg_plus_one_verdict(I, J)
    assert not v.applicable and v.direct is False
    v = reg_plus_one_verdict(R.ideal("x^5, x^4*y, x^3*y^3"), R.ideal("x*y^4, y^5"))
    assert v.applicable and v.conclusion is False and v.witness("failing s") == 2
    assert v.witness("I'") == R.ideal("x^2, x*y, y^3") and v.witness("f'") == R.monomial("y^4")
    v = reg_plus_one_verdict(R.ideal("x^3, x^2*y"), R.ideal("y^2"))
    assert v.holds and v.direct is True and v.consistent


def test_ordering():
    c = cwl_ordering(R.ideal("x^4, x^2*y, x*y^2, y^3"))
    assert c.success and [str(f) for f in c.order] == ["x^2*y", "x*y^2", "y^3", "x^4"]
    assert c.colon_vars == ["x", "x", "y"] and c.degrees == [3, 3, 3, 4]
    assert validate_certificate(c)
    c = cwl_ordering(R.ideal("x^3, x*y, y^3"))
    assert c.success and [f.exps for f in c.order] == [(1, 1), (3, 0), (0, 3)]
    c = cwl_ordering(R.ideal("x^3, x^2*y^2, y^3"))
    assert not c.success and c.failure_step == 2 and c.consistent
    with pytest.raises(ValueError):
        cwl_ordering(S3.m)


def test_ordering_small_exhaustive():
    for I in enumerate_ideals_dim2(4):
        c = cwl_ordering(I)
        assert c.consistent and c.success == is_cwl(I)


def test_incremental_chain():
    vs = incremental_chain([(1, 1), (3, 0), (0, 3)], R)
    assert [v.conclusion for v in vs] == [True, True]


def _colon_dim_with_form(I, d, coeffs):
    # same kernel as colon_z_dim, for the form sum c_i x_i
    from cwlsum.linalg import rank_sparse
    from cwlsum.monomial import monomials_of_degree
    G = I.exponents
    col = {t: k for k, t in enumerate(monomials_of_degree(2, d + 1))
           if not any(all(a <= b for a, b in zip(g, t)) for g in G)}
    rows = []
    for u in monomials_of_degree(2, d):
        row = {}
        for i, c in enumerate(coeffs):
            t = u[:i] + (u[i] + 1,) + u[i + 1:]
            if t in col:
                row[col[t]] = c
        rows.append(row)
    return len(rows) - rank_sparse(rows)


def test_all_ones_form_is_generic():
    # any form with nonzero coefficients gives the same graded dimensions
    for I in enumerate_ideals_dim2(3):
        for d in range(6):
            z = colon_z_dim(I, d)
            assert z == _colon_dim_with_form(I, d, (2, -3)) == _colon_dim_with_form(I, d, (5, 7))

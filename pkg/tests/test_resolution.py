import pytest

from cwlsum import Ring
from cwlsum.errors import DegenerateIdealError
from cwlsum.monomial import unit_ideal, zero_ideal
from cwlsum.resolution import (betti, betti_oracle_dim2, betti_oracle_lcm_lattice,
                               has_linear_resolution, is_componentwise_linear, is_cwl,
                               reg_or_zero, reg_value, regularity)
from cwlsum.verify import enumerate_ideals_dim2, random_ideal

R = Ring("x y")
A = Ring("a b")
S3 = Ring("x y z")
T = Ring("a b c d")


def test_principal():
    t = betti(R.ideal("x^3*y^4"))
    assert t.entries == {(0, (3, 4)): 1}
    assert t.reg == 7 and t.pd == 0
    assert reg_value(R.ideal("x^3*y^3")) == 6


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_a_m_ab_b_m(m):
    assert reg_value(A.ideal(f"a^{m}, a*b, b^{m}")) == m


def test_linear_resolution_four_vars():
    t = betti(T.ideal("a^2*b, a*b*c, b*c*d, c*d^2"))
    assert all(sum(a) == 3 + i for i, a in t.entries)
    assert t.reg == 3 and has_linear_resolution(T.ideal("a^2*b, a*b*c, b*c*d, c*d^2"))


def test_reg_xyz2_xy2z():
    # two generators of degree 4 with lcm of degree 5: reg = 5 - 1 = 4
    I = S3.ideal("x*y*z^2, x*y^2*z")
    assert reg_value(I) == 4
    r = regularity(I)
    assert r.witness[0] in (0, 1) and r.pd == 1


def test_linear_resolution_examples():
    assert has_linear_resolution(S3.ideal("y*z^2, y^2*z"))
    assert not has_linear_resolution(R.ideal("x^3, y^3"))
    assert reg_value(R.ideal("x^3, y^3")) == 5
    assert has_linear_resolution(R.m ** 3)
    assert has_linear_resolution(S3.m ** 3)
    assert not has_linear_resolution(R.ideal("x^2, y^3"))


def test_cwl_examples():
    assert not is_cwl(R.ideal("x^3, x^2*y^2, y^3"))
    assert is_cwl(R.ideal("x^4, x^2*y, x*y^2, y^3"))
    v = is_componentwise_linear(S3.ideal("x*y^2, x^2*y, y*z^2, y^2*z"))
    assert v.applicable and v.conclusion is False
    assert v.witness("failing degree") is not None


def test_cwl_verdict_bounds():
    v = is_componentwise_linear(R.ideal("x^3, x^2*y^2, y^3"))
    assert v.bounds == {"j_min": 3, "j_max": reg_value(R.ideal("x^3, x^2*y^2, y^3"))}
    assert v.witness("failing degree") == 3


def test_degenerate():
    for I in (zero_ideal(R), unit_ideal(R)):
        with pytest.raises(DegenerateIdealError):
            betti(I)
    assert reg_or_zero(unit_ideal(R)) == 0


def test_dim2_oracle_examples():
    t = betti_oracle_dim2(R.ideal("x^3, x*y, y^3"))
    assert {a for i, a in t.entries if i == 1} == {(3, 1), (1, 3)}
    t = betti_oracle_dim2(R.ideal("x^4, x^2*y^2, x^3*y, y^3"))
    assert t.reg == 4
    assert betti_oracle_dim2(R.ideal("x^2*y")).pd == 0
    with pytest.raises(ValueError):
        betti_oracle_dim2(S3.m)


def test_lcm_oracle_examples():
    for I in (T.ideal("a^2*b, a*b*c, b*c*d, c*d^2"), R.ideal("x^3, x*y, y^3"),
              R.ideal("x^5*y")):
        assert betti_oracle_lcm_lattice(I) == betti(I)
    assert betti_oracle_lcm_lattice(R.ideal("x^5*y")).entries == {(0, (5, 1)): 1}


def test_oracles_small_exhaustive():
    for I in enumerate_ideals_dim2(3):
        t = betti(I)
        assert betti_oracle_lcm_lattice(I) == t == betti_oracle_dim2(I)


@pytest.mark.parametrize("seed", range(20))
def test_oracles_random(seed):
    I = random_ideal(3 + seed % 2, 4, 6, seed)
    assert betti_oracle_lcm_lattice(I) == betti(I)


def test_betti_euler():
    # alternating sum of Betti numbers of an ideal is 1
    for I in (S3.ideal("x*y, y*z, x*z"), T.ideal("a^2*b, a*b*c, b*c*d, c*d^2"), S3.m ** 2):
        t = betti(I)
        assert sum((-1) ** i * t.total(i) for i in range(t.pd + 1)) == 1


def test_koszul_complex_of_m():
    t = betti(T.m)
    assert [t.total(i) for i in range(4)] == [4, 6, 4, 1]


def test_table_format():
    t = betti(R.ideal("x^2, y^2"))
    assert t.graded() == {(0, 2): 2, (1, 4): 1}
    assert "b[1,x^2*y^2]=1" in str(t)
    assert t.format().splitlines()[1].startswith("   2:")

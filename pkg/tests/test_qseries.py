import pytest

from qpairs.algebra import ZZ, ZZ_z, LaurentSeries, ZPoly
from qpairs.qseries import (
    DivergentProduct,
    Monomial,
    ZeroBracket,
    euler_product,
    jacobi_bracket,
    jtheta,
    jtheta_sum_oracle,
    normalize_bracket,
    pochhammer_finite,
    pochhammer_inf,
)

from .oracles import bracket_direct, euler, pentagonal, series_dict, theta_sum


def test_pochhammer_finite_examples():
    assert series_dict(pochhammer_finite(Monomial(1, 1), 1, 0, 10)) == {0: 1}
    assert series_dict(pochhammer_finite(Monomial(1, 1), 1, 3, 6)) == {0: 1, 1: -1, 2: -1, 4: 1, 5: 1, 6: -1}
    zq = pochhammer_finite(Monomial(1, 1, 1), 1, 2, 5)
    z = ZZ_z.z
    assert zq[1] == -z and zq[2] == -z and zq[3] == z * z and zq[0] == ZZ_z.one


def test_pochhammer_inf_examples():
    assert series_dict(euler_product(1, 12)) == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}
    assert series_dict(pochhammer_inf(Monomial(1, 2), 2, 1)) == {0: 1}
    assert pochhammer_inf(Monomial(1, 1, 1), 1, 4)[1] == -ZZ_z.z


def test_pochhammer_inf_rejects_divergent():
    with pytest.raises(DivergentProduct):
        pochhammer_inf(Monomial(1, 0), 1, 5)
    with pytest.raises(DivergentProduct):
        pochhammer_inf(Monomial(1, -2), 3, 5)


def test_euler_pentagonal():
    assert euler_product(1, 150) == jtheta_sum_oracle(1, 3, 150)
    assert series_dict(euler_product(1, 80)) == pentagonal(80)
    assert series_dict(euler_product(3, 90)) == euler(90, 3)


def test_bracket_direct_product():
    assert series_dict(jacobi_bracket(1, 3, 40)) == bracket_direct(1, 3, 40)
    assert series_dict(jacobi_bracket(4, 9, 60)) == bracket_direct(4, 9, 60)


def test_bracket_normalization_examples():
    # <q^-1>_{q^3} = -q^-1 <q^2>_{q^3}
    assert jacobi_bracket(-1, 3, 30) == -jacobi_bracket(2, 3, 31).shift(-1)
    # <q^4>_{q^3} = -q^-1 <q>_{q^3}
    assert jacobi_bracket(4, 3, 30) == -jacobi_bracket(1, 3, 31).shift(-1)
    assert normalize_bracket(14, 9) == (-1, -5, 4)


def test_zero_bracket():
    with pytest.raises(ZeroBracket):
        jacobi_bracket(9, 9, 10)
    with pytest.raises(ZeroBracket):
        normalize_bracket(-18, 9)
    assert jtheta(3, 3, 20).is_zero()
    assert jtheta_sum_oracle(3, 3, 20).is_zero()


@pytest.mark.parametrize("b", [3, 5, 9, 15, 25, 27])
def test_triple_product(b):
    for a in range(1, b):
        assert jtheta(a, b, 120) == jtheta_sum_oracle(a, b, 120)


def test_theta_oracle_matches_plain_sum():
    assert series_dict(jtheta_sum_oracle(1, 9, 60)) == theta_sum(1, 9, 60)
    assert jtheta_sum_oracle(2, 9, 30) == jtheta(2, 9, 30)


@pytest.mark.parametrize("a,b", [(1, 3), (2, 5), (-1, 3), (4, 3), (-7, 9), (14, 9), (-14, 15), (22, 15), (3, 8), (-5, 7)])
def test_bracket_laws(a, b):
    N = 60
    lhs = jacobi_bracket(a, b, N)
    assert lhs == jacobi_bracket(b - a, b, N)
    assert lhs == -jacobi_bracket(a + b, b, N - a).shift(a).truncate(N)
    assert lhs == -jacobi_bracket(-a, b, N - a).shift(a).truncate(N)


def _bracket_product(rs, b, order):
    out = LaurentSeries.one(ZZ, order)
    for r in rs:
        out = out * jacobi_bracket(r, b, order)
    return out


def test_product_collapse():
    assert _bracket_product([1, 4, 6], 15, 100) == jacobi_bracket(1, 5, 100)
    assert _bracket_product([2, 3, 7], 15, 100) == jacobi_bracket(2, 5, 100)


def test_monomial_element():
    assert Monomial(1, 2, -1).element(ZZ_z) == ZPoly.monomial(1, -1)
    with pytest.raises(ValueError):
        Monomial(1, 2, 1).element(ZZ)

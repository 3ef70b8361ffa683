"""Property-based checks (hypothesis)."""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from qpairs.algebra import (
    ZZ,
    ZZ_z,
    CyclotomicInt,
    CyclotomicRing,
    LaurentSeries,
    ZPoly,
    dissect,
    eval_at_root_of_unity,
    reassemble,
    series_inverse,
)
from qpairs.identities import get_check, list_checks, verify
from qpairs.lambert import sigma
from qpairs.partitions import CrankTable, st_series_z_def
from qpairs.qseries import jtheta, jtheta_sum_oracle

from .oracles import series_dict, sigma_direct

small = st.integers(-6, 6)
FAST = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


# -- ring elements -------------------------------------------------------------

zpolys = st.dictionaries(st.integers(-4, 4), small, max_size=4).map(ZPoly.from_dict)


def cyclo(t):
    return st.lists(small, min_size=t - 1, max_size=t - 1).map(lambda v: CyclotomicInt(t, v))


RING_ELEMENTS = [
    ("ZZ", st.integers(-10**30, 10**30)),
    ("ZZ_z", zpolys),
    ("Z[zeta3]", cyclo(3)),
    ("Z[zeta5]", cyclo(5)),
]


@pytest.mark.parametrize("label,elems", RING_ELEMENTS, ids=[r[0] for r in RING_ELEMENTS])
@FAST
@given(data=st.data())
def test_ring_axioms(label, elems, data):
    a, b, c = (data.draw(elems) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert not (a - a) and a + (-a) == a - a


def _series(coeffs, lo, ring=ZZ):
    return LaurentSeries(ring, coeffs, lo=lo, order=lo + len(coeffs) - 1)


int_series = st.builds(
    lambda cs, lo: _series(cs, lo).truncate(30 + lo),
    st.lists(st.integers(-5, 5), min_size=31, max_size=31),
    st.integers(-3, 3),
)


@FAST
@given(int_series, int_series, int_series)
def test_series_distributive_and_associative(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@FAST
@given(st.lists(st.integers(-5, 5), min_size=30, max_size=30), st.sampled_from([1, -1]), st.integers(-4, 4))
def test_inverse_round_trip(tail, lead, lo):
    a = _series([lead] + tail, lo)
    assert (a * series_inverse(a)).to_dict() == {0: 1}


@FAST
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=40), st.integers(-12, 5), st.sampled_from([2, 3, 5]))
def test_dissect_round_trip(cs, lo, t):
    a = _series(cs, lo)
    parts = [dissect(a, t, r) for r in range(t)]
    back = reassemble(parts, t)
    assert back.truncate(a.order).to_dict() == a.to_dict()
    assert back.order >= a.order - t + 1


z_series = st.builds(
    lambda cs: LaurentSeries(ZZ_z, cs, lo=0, order=len(cs) - 1),
    st.lists(zpolys, min_size=6, max_size=6),
)


@FAST
@given(z_series, z_series, st.sampled_from([3, 5]))
def test_root_of_unity_is_homomorphism(a, b, t):
    ev = lambda s: eval_at_root_of_unity(s, t)  # noqa: E731
    assert ev(a + b) == ev(a) + ev(b)
    assert ev(a * b) == ev(a) * ev(b)


@FAST
@given(st.sampled_from([3, 5, 9, 15, 25, 27]), st.data())
def test_triple_product_cross_check(b, data):
    a = data.draw(st.integers(-2 * b, 3 * b).filter(lambda x: x % b))
    assert jtheta(a, b, 80) == jtheta_sum_oracle(a, b, 80)


@FAST
@given(st.sampled_from([3, 5, 9, 15]), st.data())
def test_sigma_oracle_equivalence(c, data):
    a = data.draw(st.integers(-2 * c, 2 * c).filter(lambda x: x % c))
    b = data.draw(st.integers(-3 * c, 3 * c))
    assert series_dict(sigma(a, b, c, 40)) == sigma_direct(a, b, c, 40)


@pytest.fixture(scope="module")
def crank_table():
    return CrankTable.from_series(st_series_z_def(30), 30)


def test_crank_symmetry(crank_table):
    for (m, n), c in crank_table.counts.items():
        assert crank_table.counts.get((-m, n), 0) == c


def test_cyclotomic_identities():
    for t in (3, 5, 7, 11):
        R = CyclotomicRing(t)
        assert R.zeta() ** t == R.one
        assert sum((R.zeta(k) for k in range(t)), R.zero) == R.zero


# -- registry-level properties -------------------------------------------------

CHECKS = [c.name for c in list_checks()]


def _small_order(name):
    c = get_check(name)
    return max(c.min_order, min(c.default_order, 40))


@pytest.mark.parametrize("name", CHECKS)
def test_monotonicity(name):
    n = _small_order(name)
    if verify(name, n).passed:
        assert verify(name, max(get_check(name).min_order, n // 2)).passed


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CHECKS), st.integers(0, 6), st.integers(1, 3))
def test_fault_injection_flips(name, k, c):
    n = _small_order(name)
    r = verify(name, n, inject=(k, c))
    assert not r.passed and r.first_bad_exponent <= k

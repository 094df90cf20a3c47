from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abacrystal.abacus import compact_for_weight
from abacrystal.charformula import (
    QSeries,
    Z_borodin,
    Z_weyl,
    dimq_V,
    euler_product,
    lambda_prime,
    parse_weight,
    profile_of,
    series_inv,
    series_inv_cyclotomic,
)
from abacrystal.cpp import enumerate_cpps
from abacrystal.partitions import partitions_of

series = st.lists(st.integers(-5, 5), min_size=7, max_size=7).map(lambda c: QSeries((1, *c[1:])))


def count_partitions(degree, keep=lambda p: True):
    return [sum(1 for p in partitions_of(k) if keep(p)) for k in range(degree + 1)]


def test_series_basics():
    one = QSeries.one(4)
    assert list(series_inv_cyclotomic(1, 4)) == [1, 1, 1, 1, 1]
    assert list(series_inv_cyclotomic(2, 5)) == [1, 0, 1, 0, 1, 0]
    assert list(one.times_binomial(1) * series_inv_cyclotomic(1, 4)) == [1, 0, 0, 0, 0]
    assert list(QSeries((1, 1, 0, 0, 0)) ** 3) == [1, 3, 3, 1, 0]
    with pytest.raises(ValueError):
        one + QSeries.one(3)
    with pytest.raises(ZeroDivisionError):
        series_inv(QSeries((2, 1)))


@given(series, series)
def test_inverse_and_product_laws(a, b):
    one = QSeries.one(a.degree)
    assert a * series_inv(a) == one
    assert a * b == b * a
    assert (a ** 2) * series_inv(a) == a


def test_euler_product_counts_partitions():
    assert list(euler_product(1, 12)) == count_partitions(12)
    assert list(euler_product(2, 12)) == [count_partitions(6)[k // 2] if k % 2 == 0 else 0 for k in range(13)]


def test_level_one_specialized_characters():
    # level one, n = 3: partitions with no part divisible by 3
    assert list(dimq_V((1, 0, 0), 3, 12)) == count_partitions(12, lambda p: all(x % 3 for x in p))
    assert list(dimq_V((1, 0), 2, 12)) == count_partitions(12, lambda p: all(x % 2 for x in p))


@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 0, 0), (0, 0, 1), (0, 1, 0, 0)])
def test_level_one_times_fock_is_partition_count(lam):
    assert list(Z_weyl(lam, len(lam), 9)) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


@pytest.mark.parametrize("lam", [(1, 1), (1, 1, 0), (2, 1), (1, 2, 1), (0, 2, 1)])
def test_product_formulas_match_enumeration(lam):
    n, ell, deg = len(lam), sum(lam), 10
    counts = Counter(p.size for p in enumerate_cpps(n, compact_for_weight(lam).charges, deg))
    enum = [counts[k] for k in range(deg + 1)]
    assert list(Z_weyl(lam, n, deg)) == enum
    assert list(Z_borodin(profile_of(lam, n, ell), deg)) == enum


def test_profile_word():
    p = profile_of((1, 1, 0), 3, 2)
    assert p.word() == "ABABB"
    assert sum(p.B) == 3 and sum(p.A) == 2
    with pytest.raises(ValueError):
        profile_of((1, 1, 0), 3, 3)


def test_dual_weights():
    assert lambda_prime((2, 3, 1)) == (1, 1, 0, 0, 1, 0)
    assert lambda_prime((1, 1)) == (1, 1)
    assert lambda_prime((2, 1)) == (1, 1, 0)


@pytest.mark.parametrize("lam", [(1, 1), (1, 1, 0), (2, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1, 1)])
def test_rank_level_duality(lam):
    assert Z_weyl(lam, len(lam), 12) == Z_weyl(lambda_prime(lam), sum(lam), 12)


def test_parse_weight():
    assert parse_weight("1, 2,0") == (1, 2, 0)
    with pytest.raises(ValueError):
        parse_weight("1,x")

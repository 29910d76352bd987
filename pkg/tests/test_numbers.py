from fractions import Fraction
from math import comb

import pytest

import golden
from genocchi import numbers
from genocchi.seidel import seidel_array


def test_bernoulli_values():
    assert numbers.bernoulli(0) == 1
    assert numbers.bernoulli(1) == Fraction(-1, 2)
    assert numbers.bernoulli(3) == 0
    assert numbers.bernoulli(12) == Fraction(-691, 2730)
    assert [numbers.bernoulli(n) for n in range(17)] == [
        Fraction(s) for s in golden.BERNOULLI_17
    ]


def test_bernoulli_odd_indices_vanish():
    for n in range(1, 21):
        assert numbers.bernoulli(2 * n + 1) == 0


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        numbers.bernoulli(-1)


def test_bernoulli_b():
    assert numbers.bernoulli_b(0) == 1
    assert numbers.bernoulli_b(1) == Fraction(1, 2)
    assert numbers.bernoulli_b(4) == Fraction(-1, 30)
    for n in (0, 2, 3, 4, 9, 12):
        assert numbers.bernoulli_b(n) == numbers.bernoulli(n)


def test_genocchi_values():
    assert numbers.genocchi(1) == 1
    assert numbers.genocchi(4) == 17
    assert numbers.genocchi(8) == 929569
    assert [numbers.genocchi(n) for n in range(1, 9)] == golden.GENOCCHI_8


def test_genocchi_returns_int():
    assert all(isinstance(numbers.genocchi(n), int) for n in range(1, 20))


def test_genocchi_signed_values():
    assert numbers.genocchi_signed(1) == 1
    assert numbers.genocchi_signed(5) == 0
    assert numbers.genocchi_signed(6) == -3
    assert [numbers.genocchi_signed(n) for n in range(1, 11)] == golden.GENOCCHI_SIGNED_10


def test_tangent_values():
    assert numbers.tangent(0) == 1
    assert numbers.tangent(3) == 272
    assert numbers.tangent(6) == 22368256
    assert [numbers.tangent(k) for k in range(7)] == golden.TANGENT_7


def test_tangent_genocchi_relation():
    for k in range(20):
        assert numbers.tangent(k) * (2 * k + 2) == 2 ** (2 * k + 1) * numbers.genocchi(k + 1)


def test_median_genocchi_values():
    assert numbers.median_genocchi(0) == 1
    assert numbers.median_genocchi(4) == 56
    assert numbers.median_genocchi(5) == 608
    assert [numbers.median_genocchi(n) for n in range(6)] == golden.MEDIAN_GENOCCHI_6


def test_median_genocchi_binomial_cross_check():
    # the alternating binomial transform of the medians gives the Genocchi run
    for n in range(13):
        total = sum(
            (-1) ** (n - j) * comb(2 * n + 1 - j, j) * numbers.median_genocchi(j)
            for j in range(n + 1)
        )
        assert total == numbers.genocchi(n + 1)


def test_three_way_genocchi_oracle():
    # Bernoulli route vs the self-seeding difference array vs the signed variant
    depth = 15
    arr = seidel_array("genocchi", rows=2 * depth + 1)
    for n in range(1, depth + 1):
        from_bernoulli = numbers.genocchi(n)
        from_array = (-1) ** (n - 1) * arr.rows[2 * n - 1][0]
        assert from_array == from_bernoulli
        if n >= 1:
            assert abs(numbers.genocchi_signed(2 * n)) == from_bernoulli


def test_index_validation():
    with pytest.raises(ValueError):
        numbers.genocchi(0)
    with pytest.raises(ValueError):
        numbers.genocchi_signed(0)
    with pytest.raises(ValueError):
        numbers.tangent(-1)
    with pytest.raises(ValueError):
        numbers.median_genocchi(-1)

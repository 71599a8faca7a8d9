import random
from fractions import Fraction

import pytest

from gcdlab.logreal import LogReal, logreal_sign, logreal_sum


def test_zero_and_power_collapse():
    assert LogReal().is_zero
    assert LogReal({4: 1, 2: -2}).is_zero          # log 4 = 2 log 2
    assert LogReal({8: Fraction(1, 3), 2: -1}).is_zero
    assert not LogReal({2: 1}).is_zero


def test_structural_vs_mathematical_equality():
    assert LogReal({6: 1}) == LogReal({2: 1, 3: 1})
    assert LogReal({12: 1}) == LogReal({2: 2, 3: 1})
    assert LogReal({6: 1}) != LogReal({2: 1})


def test_canonical_coeffs_are_prime_based_at_desk_scale():
    assert LogReal({360: 1}).coeffs == {2: 3, 3: 2, 5: 1}
    assert LogReal.log_of_fraction(Fraction(-3, 2)).coeffs == {3: 1, 2: -1}


def test_signs():
    assert logreal_sign(LogReal({3: 1, 2: -1})) == 1   # log(3/2) > 0
    assert logreal_sign(LogReal({2: 1, 3: -1})) == -1
    assert logreal_sign(LogReal({4: 1, 2: -2})) == 0
    # a deliberately tiny difference: 2^1000000 vs 3^630929 (close ratio)
    a = LogReal({2: 1000000, 3: -630929})
    assert a.sign() in (-1, 1)
    assert a.sign() == -(-a).sign()


def test_sign_order_compatible_with_addition():
    rng = random.Random(5)
    primes = [2, 3, 5, 7]
    for _ in range(100):
        a = LogReal({p: rng.randint(-4, 4) for p in primes})
        b = LogReal({p: rng.randint(-4, 4) for p in primes})
        if a.sign() > 0 and b.sign() > 0:
            assert (a + b).sign() > 0


def test_cmp_const():
    big = LogReal.log_of_int(2**1100 + 1)
    assert big.cmp(Fraction(762)) == 1
    assert big.cmp(Fraction(763)) == -1
    assert LogReal().cmp(Fraction(1, 10**50)) == -1
    assert LogReal().cmp(Fraction(0)) == 0
    assert LogReal({2: 1}).cmp(Fraction(0)) == 1
    # log 2 vs very tight rational bounds
    l2 = LogReal({2: 1})
    assert l2.cmp(Fraction(693147180559945309, 10**18)) == 1
    assert l2.cmp(Fraction(693147180559945310, 10**18)) == -1


def test_big_unfactored_arithmetic():
    n = 2**521 - 1  # a large prime; refinement must not choke
    a = LogReal.log_of_int(n)
    b = LogReal.log_of_int(n * 9)
    assert (b - a).coeffs == {3: 2}
    assert b - a == LogReal({3: 2})
    # exact cancellation through a product
    c = LogReal.log_of_int(n * (2**607 - 1)) - LogReal.log_of_int(2**607 - 1)
    assert c == a


def test_scalar_arithmetic():
    a = LogReal({2: Fraction(3, 2)})
    assert (a * 2).coeffs == {2: 3}
    assert (a - a).is_zero
    assert (a * 0).is_zero
    assert (-a).sign() == -1
    assert (a / Fraction(3, 2)).coeffs == {2: 1}


def test_comparison_operators():
    assert LogReal({2: 1}) < LogReal({3: 1})
    assert LogReal({9: 1}) >= LogReal({3: 2})
    assert LogReal({9: 1}) <= LogReal({3: 2})


def test_printing_and_decimal():
    a = LogReal({2: Fraction(3, 2), 3: -1})
    assert str(a) == "3/2*log(2) - log(3)"
    assert str(LogReal()) == "0"
    assert LogReal({2: 1}).decimal(10) == "0.6931471806"
    # decimal output is deterministic
    assert a.decimal(15) == a.decimal(15)


def test_sum_helper():
    vals = [LogReal({2: 1}), LogReal({2: -1}), LogReal({5: 2})]
    assert logreal_sum(vals) == LogReal({25: 1})


def test_unhashable_by_design():
    with pytest.raises(TypeError):
        hash(LogReal({2: 1}))

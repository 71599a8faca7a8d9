import random
from fractions import Fraction

import pytest

from gcdlab.logreal import LogReal
from gcdlab.lrs import (
    PowerSum,
    RootGroup,
    compute_S0,
    empirical_height_ratio,
    from_recurrence,
    laurent_identity_holds,
    lrs_coprime,
    monomial_height,
    multiplicative_independence,
    power_sum_from_json,
    power_sum_to_json,
    root_group,
    to_laurent,
    zero_scan,
)
from gcdlab.multipoly import LaurentPoly
from gcdlab.places import DomainError, PlaceSet


def rand_power_sum(rng, max_terms=3, max_deg=2):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        root = Fraction(rng.randint(-5, 5) or 2, rng.randint(1, 3))
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, max_deg + 1))]
        terms.append((coeffs, root))
    return PowerSum(terms)


def test_eval_examples():
    F = PowerSum.of(([0, 1], 2), ([1], 1))  # n 2^n + 1
    G = PowerSum.of(([1], 2), ([1], 1))     # 2^n + 1
    assert F.eval(4) == 65
    assert G.eval(6) == 65
    assert PowerSum.zero().eval(12) == 0


def test_ring_operations_examples():
    assert PowerSum.geometric(2) * PowerSum.geometric(3) == PowerSum.geometric(6)
    assert (PowerSum.geometric(2) + PowerSum.geometric(2, -1)).is_zero
    assert PowerSum.of(([0, 1], 2)) * PowerSum.geometric(2) == PowerSum.of(([0, 1], 4))


def test_ring_homomorphism_random():
    rng = random.Random(61)
    for _ in range(30):
        F, G = rand_power_sum(rng), rand_power_sum(rng)
        for n in range(0, 25):
            assert (F + G).eval(n) == F.eval(n) + G.eval(n)
            assert (F * G).eval(n) == F.eval(n) * G.eval(n)


def test_compose_ap_examples():
    assert PowerSum.geometric(2).compose_ap(2, 1) == PowerSum.of(([2], 4))
    F = PowerSum.of(([0, 1], 2))
    for t in range(10):
        assert F.compose_ap(2, 1).eval(t) == F.eval(2 * t + 1)
    assert F.compose_ap(1, 0) == F


def test_compose_ap_random():
    rng = random.Random(62)
    for _ in range(20):
        F = rand_power_sum(rng)
        a, b = rng.randint(1, 4), rng.randint(0, 5)
        H = F.compose_ap(a, b)
        for t in range(0, 31, 3):
            assert H.eval(t) == F.eval(a * t + b)


def test_degeneracy():
    assert PowerSum.of(([1], 2), ([1], -2)).is_degenerate()
    assert not PowerSum.of(([1], 2), ([1], 3)).is_degenerate()
    assert not PowerSum.of(([0, 0, 1], 5)).is_degenerate()


def test_zero_scan_examples():
    zs = zero_scan(PowerSum.of(([1], 2), ([1], -2)), 200)
    assert zs.progressions == ((1, 2),)
    assert zs.sporadic == ()
    assert zs.zeros == tuple(range(1, 201, 2))

    zs2 = zero_scan(PowerSum.of(([1], 2), ([-4], 1)), 20)
    assert zs2.zeros == (2,) and zs2.progressions == () and zs2.sporadic == (2,)

    zs3 = zero_scan(PowerSum.of(([1], 2), ([1], 3)), 50)
    assert zs3.zeros == () and zs3.progressions == ()


def test_zero_scan_nondegenerate_corpus_is_finite():
    corpus = [
        PowerSum.of(([1], 2), ([-1], 1)),
        PowerSum.of(([-6], 1), ([1, 1], 2)),
        PowerSum.of(([1], 3), ([-1], 2), ([1], 1)),
        from_recurrence([3, -2], [0, 1]),
    ]
    for F in corpus:
        assert not F.is_degenerate()
        zs = zero_scan(F, 100)
        assert zs.progressions == ()
        assert zs.sporadic == zs.zeros


def test_root_group_examples():
    rg = root_group([Fraction(4), Fraction(8)])
    assert rg.generators == (Fraction(2),)
    assert rg.rank == 1 and not rg.has_torsion
    assert root_group([Fraction(2), Fraction(3)]).rank == 2
    # true torsion examples over Q
    assert root_group([Fraction(-2), Fraction(2)]).has_torsion
    assert root_group([Fraction(-1), Fraction(3)]).has_torsion
    # <-2, 4> = <-2> is torsion-free of rank 1 (the square of -2 is +4)
    rg3 = root_group([Fraction(-2), Fraction(4)])
    assert rg3.rank == 1 and not rg3.has_torsion


def test_root_group_reconstruction():
    rng = random.Random(63)
    for _ in range(40):
        roots = [
            Fraction(rng.randint(-12, 12) or 5, rng.randint(1, 12))
            for _ in range(rng.randint(1, 4))
        ]
        rg = root_group(roots)
        if rg.has_torsion:
            continue
        for r in roots:
            exps = rg.express(r)
            val = Fraction(1)
            for g, e in zip(rg.generators, exps):
                val *= g**e
            assert val == r


def test_multiplicative_independence_examples():
    assert multiplicative_independence([Fraction(2)], [Fraction(3)])
    assert not multiplicative_independence([Fraction(2), Fraction(3)], [Fraction(6)])
    assert not multiplicative_independence([Fraction(2)], [Fraction(1, 2)])


def test_compute_S0_examples():
    assert compute_S0([Fraction(2)], [Fraction(3)]) == PlaceSet(False, ())
    assert compute_S0([Fraction(1, 2)], [Fraction(1, 3)]) == PlaceSet(True, ())
    assert compute_S0([Fraction(2, 5), Fraction(4, 5)], [Fraction(3, 5)]) == PlaceSet(True, ())
    assert compute_S0([Fraction(2, 3), Fraction(4, 5)], [Fraction(2, 7)]) == PlaceSet(True, (2,))


def test_to_laurent_examples():
    rg = root_group([Fraction(2)])
    f = to_laurent(PowerSum.of(([0, 1], 2), ([1], 1)), rg)
    assert f == LaurentPoly(2, {(1, 1): 1, (0, 0): 1})
    f2 = to_laurent(PowerSum.of(([1], 2), ([1], Fraction(1, 2))), rg)
    assert f2 == LaurentPoly(2, {(0, 1): 1, (0, -1): 1})
    assert to_laurent(PowerSum.geometric(6), root_group([Fraction(6)])) == LaurentPoly(
        2, {(0, 1): 1}
    )
    with pytest.raises(DomainError):
        to_laurent(PowerSum.geometric(5), rg)
    with pytest.raises(DomainError):
        to_laurent(PowerSum.geometric(2), root_group([Fraction(-2), Fraction(2)]))


def test_to_laurent_identity():
    rng = random.Random(64)
    done = 0
    while done < 15:
        F = rand_power_sum(rng)
        if F.is_zero:
            continue
        rg = root_group(F.roots)
        if rg.has_torsion:
            continue
        assert laurent_identity_holds(F, rg, upto=20)
        done += 1


def test_lrs_coprime_examples():
    A = PowerSum.of(([1], 2), ([-1], 1))
    B = PowerSum.of(([1], 3), ([-1], 1))
    assert lrs_coprime(A, B)
    C = A * PowerSum.of(([1], 3), ([1], 1))
    D = A * PowerSum.of(([1], 5), ([1], 1))
    assert not lrs_coprime(C, D)
    assert lrs_coprime(PowerSum.of(([0, 1], 2), ([1], 1)), PowerSum.of(([1], 2), ([1], 1)))
    with pytest.raises(DomainError):
        lrs_coprime(PowerSum.of(([1], 2), ([1], -2)), B)


def test_monomial_height_examples():
    rg = root_group([Fraction(2), Fraction(3)])
    assert monomial_height(root_group([Fraction(2)]), [5]) == LogReal({2: 5})
    assert monomial_height(rg, [1, -1]) == LogReal({3: 1})
    best = empirical_height_ratio(rg, 3)
    assert best[0].sign() > 0


def test_empirical_ratio_nonincreasing_in_box():
    rg = root_group([Fraction(2), Fraction(3)])
    prev = None
    for bound in (1, 2, 3, 4):
        h, scale, _ = empirical_height_ratio(rg, bound)
        if prev is not None:
            ph, ps = prev
            # h/scale <= ph/ps as exact sign
            assert (h * ps - ph * scale).sign() <= 0
        prev = (h, scale)


def test_from_recurrence():
    ps = from_recurrence([3, -2], [0, 1])
    assert ps == PowerSum.of(([1], 2), ([-1], 1))
    assert [ps.eval(n) for n in range(6)] == [0, 1, 3, 7, 15, 31]
    # repeated root: a(n) = (n+1) 2^n satisfies a(n+2) = 4a(n+1) - 4a(n)
    ps2 = from_recurrence([4, -4], [1, 4])
    assert ps2 == PowerSum.of(([1, 1], 2))
    with pytest.raises(DomainError):
        from_recurrence([1, 1], [0, 1])  # golden-ratio roots


def test_json_roundtrip():
    F = PowerSum.of(([0, 1], 2), ([1], 1))
    blob = power_sum_to_json(F)
    assert blob == {
        "terms": [
            {"coeff": ["1"], "root": "1"},
            {"coeff": ["0", "1"], "root": "2"},
        ]
    }
    assert power_sum_from_json(blob) == F
    assert power_sum_from_json({"terms": []}).is_zero
    G = PowerSum.of(([Fraction(1, 2)], Fraction(3, 2)))
    assert power_sum_from_json(power_sum_to_json(G)) == G

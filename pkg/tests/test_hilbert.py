import random
from fractions import Fraction
from math import comb

import pytest

from gcdlab.heights import TorusPoint
from gcdlab.hilbert import (
    ceil_spart_degree,
    delta_for_epsilon,
    dim_quotient_bruteforce,
    dim_quotient_formula,
    floor_scaled_inv_sqrt,
    greedy_dominance_violations,
    greedy_monomial_basis,
    i_spart,
    inequality_constants,
    monomials_upto,
    multiindex_sum,
    multiindex_sum_closed_form,
    ord_sum_check,
    truncated_ideal,
    veronese_basis,
    veronese_rank,
)
from gcdlab.logreal import LogReal
from gcdlab.multipoly import MultiPoly, parse_poly
from gcdlab.places import DomainError, Place


def test_multiindex_sum_examples():
    assert multiindex_sum(1, 2) == (3, 3)
    assert multiindex_sum(2, 1) == (1, 1, 1)
    assert multiindex_sum(2, 3) == (10, 10, 10)


def test_multiindex_sum_matches_closed_form():
    for n in range(1, 6):
        for m in range(1, 11):
            assert multiindex_sum(n, m) == multiindex_sum_closed_form(n, m)


def test_dim_quotient_formula_examples():
    assert dim_quotient_formula(2, 2, 1, 1) == 1
    assert dim_quotient_formula(2, 3, 1, 2) == 2
    assert dim_quotient_formula(1, 5, 2, 3) == 0


def test_dim_quotient_against_bruteforce_spotchecks():
    F1 = parse_poly("x1", nvars=3)
    F2 = parse_poly("x2", nvars=3)
    assert dim_quotient_bruteforce(F1, F2, 2) == 1
    F2b = parse_poly("x2^2 + x3^2", nvars=3)
    assert dim_quotient_bruteforce(F1, F2b, 3) == 2
    G1 = parse_poly("x1^2 + x2^2", nvars=2)
    G2 = parse_poly("x1^3 - x2^3", nvars=2)
    assert dim_quotient_bruteforce(G1, G2, 5) == 0


def test_truncated_ideal_examples():
    T = truncated_ideal(parse_poly("x1 + 1", nvars=2), parse_poly("x2", nvars=2), 1)
    assert (T.N, T.Nprime) == (2, 1)
    T2 = truncated_ideal(parse_poly("x1", nvars=2), parse_poly("x2", nvars=2), 2)
    assert T2.Nprime == 1
    T3 = truncated_ideal(parse_poly("x1", nvars=2), parse_poly("x1^2", nvars=2), 2)
    assert T3.Nprime == 3
    with pytest.raises(DomainError):
        truncated_ideal(parse_poly("x1^2", nvars=2), parse_poly("x2", nvars=2), 1)


def test_truncated_ideal_dimension_identity():
    rng = random.Random(51)
    from gcdlab.harness import random_coprime_forms

    for _ in range(10):
        F1, F2 = random_coprime_forms(rng, 3, rng.randint(1, 2), rng.randint(1, 2))
        f, g = F1.dehomogenize(), F2.dehomogenize()
        if f.is_zero or g.is_zero or f.is_constant() or g.is_constant():
            continue
        m = max(f.degree(), g.degree()) + rng.randint(0, 2)
        T = truncated_ideal(f, g, m)
        n = 2
        assert T.N + T.Nprime == comb(m + n, n)
        # membership: the generators are inside, and reduce() vanishes there
        assert T.contains(f * MultiPoly.one(2))
        if m >= f.degree() + 1:
            assert T.contains(f * MultiPoly.variable(2, 0))


def test_affine_truncation_matches_projective_formula():
    # dim of poly_<=m modulo (f, g)_(m) equals the graded quotient of the
    # homogenized pair in one more variable
    rng = random.Random(52)
    from gcdlab.harness import random_coprime_forms
    from gcdlab.multipoly import coprime

    done = 0
    while done < 8:
        F1, F2 = random_coprime_forms(rng, 3, rng.randint(1, 2), rng.randint(1, 2))
        f, g = F1.dehomogenize(), F2.dehomogenize()
        if f.is_zero or g.is_zero or f.is_constant() or g.is_constant():
            continue
        if f.degree() != F1.degree() or g.degree() != F2.degree():
            continue
        if not coprime(f, g):
            continue
        m = max(f.degree(), g.degree()) + rng.randint(0, 2)
        T = truncated_ideal(f, g, m)
        assert T.Nprime == dim_quotient_formula(2, m, f.degree(), g.degree())
        done += 1


def test_greedy_basis_examples():
    T = truncated_ideal(parse_poly("x1 + 1", nvars=2), parse_poly("x2", nvars=2), 1)
    gb = greedy_monomial_basis(T, TorusPoint([2, 3]), Place.archimedean())
    assert gb.monomials == [(0, 0)]
    gb2 = greedy_monomial_basis(T, TorusPoint([Fraction(1, 2), 3]), Place.archimedean())
    assert gb2.monomials == [(1, 0)]
    # reduction: 1 == -x1 modulo (x1+1, x2) in degree 1
    assert gb2.reduce_monomial((0, 0)) == {(1, 0): Fraction(-1)}
    # empty quotient gives the empty basis
    T0 = truncated_ideal(parse_poly("x1 + 1", nvars=1), parse_poly("x1", nvars=1), 1)
    assert T0.Nprime == 0
    gb0 = greedy_monomial_basis(T0, TorusPoint([2]), Place.archimedean())
    assert gb0.monomials == []


def test_greedy_dominance_battery():
    rng = random.Random(53)
    from gcdlab.multipoly import coprime

    made = 0
    while made < 20:
        f = _rand_affine(rng, 2)
        g = _rand_affine(rng, 2)
        if f.is_zero or g.is_zero or f.is_constant() or g.is_constant():
            continue
        if not coprime(f, g):
            continue
        m = rng.randint(max(f.degree(), g.degree()), 5)
        u = TorusPoint(
            [
                Fraction(rng.choice([-1, 1]))
                * Fraction(2) ** rng.randint(-5, 5)
                * Fraction(3) ** rng.randint(-5, 5)
                for _ in range(2)
            ]
        )
        v = rng.choice([Place.archimedean(), Place.finite(2), Place.finite(3)])
        T = truncated_ideal(f, g, m)
        if T.Nprime == 0:
            continue
        gb = greedy_monomial_basis(T, u, v)
        assert len(gb.monomials) == T.Nprime
        assert greedy_dominance_violations(gb) == []
        made += 1


def _rand_affine(rng, d):
    monos = monomials_upto(2, d)
    return MultiPoly(
        2,
        {
            e: Fraction(rng.choice([-2, -1, 1, 2]))
            for e in rng.sample(monos, min(len(monos), 4))
        },
    )


def test_ord_sum_examples():
    assert ord_sum_check([(0, 0, 2)], 0, 1, 1, 2, 2)
    assert ord_sum_check([(0, 0, 2)], 2, 1, 1, 2, 2)  # boundary: 2 <= 2
    assert ord_sum_check([], 0, 1, 1, 2, 2)


def test_constants_examples():
    c = inequality_constants(2, 3, 2, Fraction(1, 100))
    assert c.C_main == 32
    assert c.C_combined == 120
    assert inequality_constants(2, 1, 1, Fraction(1, 4)).m_main == 8
    assert i_spart(1, 1, 3) == 6
    assert i_spart(1, 1, 2) == 3
    # I >= C(n + (m-1)d, n), the lower bound used downstream
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            m = ceil_spart_degree(n, d)
            assert m <= 2 * n
            assert i_spart(n, d, m) >= comb(n + (m - 1) * d, n)
    with pytest.raises(DomainError):
        inequality_constants(2, 1, 1, Fraction(2))


def test_floor_scaled_inv_sqrt():
    assert floor_scaled_inv_sqrt(4, Fraction(1, 4)) == 8
    # irrational case against a high-precision check: 5/sqrt(1/10)=15.811...
    assert floor_scaled_inv_sqrt(5, Fraction(1, 10)) == 15
    # exact boundary: 6/sqrt(9/25) = 10 exactly
    assert floor_scaled_inv_sqrt(6, Fraction(9, 25)) == 10


def test_delta_for_epsilon():
    assert delta_for_epsilon(Fraction(1), 1, 1, 1) == Fraction(1, 144)
    assert delta_for_epsilon(Fraction(1, 2), 2, 1, 2) == (
        Fraction(1, 2) / (6 * 8 * 3)
    ) ** 2


def test_veronese_examples():
    vb = veronese_basis(parse_poly("x1 + x2", nvars=2), 2)
    assert vb.I == 3 == i_spart(1, 1, 2)
    assert veronese_rank(vb) == comb(1 + 2, 1)
    vb2 = veronese_basis(parse_poly("x1^2 + x2^2", nvars=2), 1)
    assert vb2.I == 1
    assert veronese_rank(vb2) == 3
    # monomials with ord_x0 < d are kept untouched
    low = [
        el for el, e in zip(vb2.elements, vb2.exponents) if e[0] < 2
    ]
    for el, e in zip(vb2.elements, vb2.exponents):
        if e[0] < 2:
            assert el == MultiPoly.monomial(2, e)
    with pytest.raises(DomainError):
        veronese_basis(parse_poly("x1*x2", nvars=2), 1)


def test_veronese_full_rank_and_I_identity():
    rng = random.Random(54)
    for _ in range(8):
        n = rng.randint(1, 2)
        d = rng.randint(1, 2)
        m = rng.randint(1, 3)
        terms = {tuple([d] + [0] * n): Fraction(rng.choice([1, 2]))}
        from gcdlab.hilbert import monomials_exact

        for e in rng.sample(monomials_exact(n + 1, d), min(3, comb(n + d, n))):
            terms.setdefault(e, Fraction(rng.choice([-2, -1, 1, 2])))
        F = MultiPoly(n + 1, terms)
        vb = veronese_basis(F, m)
        assert veronese_rank(vb) == comb(n + m * d, n)
        assert vb.I == i_spart(n, d, m)


def test_quotient_bound_for_n_at_least_2():
    # N' <= d1 d2 C(m+n-2, n-2) and N/C(m+n, n) >= 1/n once m >= d1 n
    # (the n = 1 case of this printed estimate is genuinely false and is
    # excluded on purpose)
    rng = random.Random(55)
    from gcdlab.harness import random_coprime_forms
    from gcdlab.multipoly import coprime

    done = 0
    while done < 6:
        n = 2
        d1, d2 = sorted((rng.randint(1, 2), rng.randint(1, 2)), reverse=True)
        F1, F2 = random_coprime_forms(rng, n + 1, d1, d2)
        f, g = F1.dehomogenize(), F2.dehomogenize()
        if f.degree() != d1 or g.degree() != d2 or not coprime(f, g):
            continue
        m = d1 * n + rng.randint(0, 2)
        T = truncated_ideal(f, g, m)
        bound = d1 * d2 * (comb(m + n - 2, n - 2) if n >= 2 else 0)
        assert T.Nprime <= bound
        assert T.N * n >= comb(m + n, n)
        done += 1

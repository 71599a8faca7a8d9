"""Combinatorics of truncated polynomial ideals: exact dimension formulas
for quotients by a coprime pair, the degree-bounded ideal (f,g) as a vector
space with membership tests, place-adapted greedy monomial bases of the
quotient, the degree-d-uple basis built from powers of a single form, and
the explicit constants of the gcd inequalities."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import comb

import mpmath

from .heights import TorusPoint
from .linalg import LinearSpan, rational_rank
from .logreal import LogReal, PrecisionExhausted
from .multipoly import MultiPoly
from .places import DomainError, Place, log_abs


# ---------------------------------------------------------------------
# monomial bookkeeping
# ---------------------------------------------------------------------

def monomials_exact(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, graded-lex sorted."""
    out = [
        e
        for e in itertools.product(range(degree + 1), repeat=nvars)
        if sum(e) == degree
    ]
    out.sort()
    return out


def monomials_upto(nvars: int, m: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree <= m, graded-lex sorted."""
    out = []
    for d in range(m + 1):
        out.extend(monomials_exact(nvars, d))
    return out


def multiindex_sum(n: int, m: int) -> tuple[int, ...]:
    """Coordinate-wise sum of all (n+1)-tuples of nonnegative integers with
    coordinate sum m, by direct enumeration."""
    if n < 1 or m < 1:
        raise DomainError("n and m must be positive")
    total = [0] * (n + 1)
    for e in monomials_exact(n + 1, m):
        for i, x in enumerate(e):
            total[i] += x
    return tuple(total)


def multiindex_sum_closed_form(n: int, m: int) -> tuple[int, ...]:
    """m * C(n+m, n) / (n+1) in every coordinate."""
    value = m * comb(n + m, n)
    if value % (n + 1):
        raise ArithmeticError("closed form is not integral")
    return tuple([value // (n + 1)] * (n + 1))


def dim_quotient_formula(n: int, l: int, d1: int, d2: int) -> int:
    """Dimension of the degree-l graded piece of k[x0..xn] modulo a coprime
    pair of forms of degrees d1, d2 (binomials with tops below the bottom
    vanish)."""
    if n < 1 or l < 0 or d1 < 1 or d2 < 1:
        raise DomainError("bad parameters")

    def b(top: int) -> int:
        return comb(top, n) if top >= n else 0

    return b(l + n) - b(l + n - d1) - b(l + n - d2) + b(l + n - d1 - d2)


def graded_ideal_rank(F1: MultiPoly, F2: MultiPoly, l: int) -> int:
    """Brute-force dim of the degree-l piece of the ideal (F1, F2): the rank
    of the matrix of all monomial multiples, by exact elimination."""
    nvars = F1.nvars
    cols = {e: j for j, e in enumerate(monomials_exact(nvars, l))}
    rows = []
    for F in (F1, F2):
        d = F.degree()
        if l < d:
            continue
        for a in monomials_exact(nvars, l - d):
            row = [Fraction(0)] * len(cols)
            for e, c in F.terms.items():
                row[cols[tuple(x + y for x, y in zip(a, e))]] = c
            rows.append(row)
    return rational_rank(rows) if rows else 0


def dim_quotient_bruteforce(F1: MultiPoly, F2: MultiPoly, l: int) -> int:
    nvars = F1.nvars
    return comb(l + nvars - 1, nvars - 1) - graded_ideal_rank(F1, F2, l)


def ord_sum_check(B, var_index: int, d1: int, d2: int, m: int, n: int) -> bool:
    """For a set B of degree-m monomials independent modulo a coprime pair of
    forms of degrees d1, d2 in n+1 variables: the sum of x_i-orders over B is
    at most the alternating binomial bound, itself at most
    d1*d2*C(m+n-2, n-1)."""
    total = sum(e[var_index] for e in B)

    def b(top: int, bottom: int) -> int:
        return comb(top, bottom) if top >= bottom >= 0 else 0

    alt = (
        b(m + n, n + 1)
        - b(m + n - d1, n + 1)
        - b(m + n - d2, n + 1)
        + b(m + n - d1 - d2, n + 1)
    )
    relaxed = d1 * d2 * b(m + n - 2, n - 1)
    return total <= alt <= relaxed


# ---------------------------------------------------------------------
# truncated ideal (f,g) up to degree m
# ---------------------------------------------------------------------

@dataclass
class TruncatedIdeal:
    """The vector space {f*p + g*q : deg f*p, deg g*q <= m} inside the
    polynomials of degree <= m, held as a reduced echelon span over the
    graded-lex monomial coordinates."""

    f: MultiPoly
    g: MultiPoly
    m: int
    monomials: list[tuple[int, ...]]
    span: LinearSpan
    N: int
    Nprime: int

    @property
    def nvars(self) -> int:
        return self.f.nvars

    def _vector(self, p: MultiPoly) -> list[Fraction]:
        col = {e: j for j, e in enumerate(self.monomials)}
        row = [Fraction(0)] * len(self.monomials)
        for e, c in p.terms.items():
            if sum(e) > self.m:
                raise DomainError("degree exceeds the truncation bound")
            row[col[e]] = c
        return row

    def contains(self, p: MultiPoly) -> bool:
        """Membership of a degree-<= m polynomial, by exact reduction."""
        return self.span.contains(self._vector(p))

    def reduce(self, p: MultiPoly) -> list[Fraction]:
        residual, _ = self.span.reduce(self._vector(p))
        return residual


def truncated_ideal(f: MultiPoly, g: MultiPoly, m: int) -> TruncatedIdeal:
    if f.is_zero or g.is_zero:
        raise DomainError("need nonzero polynomials")
    if m < max(f.degree(), g.degree()):
        raise DomainError("truncation bound below the degrees")
    nvars = f.nvars
    monomials = monomials_upto(nvars, m)
    col = {e: j for j, e in enumerate(monomials)}
    span = LinearSpan(len(monomials))
    for h in (f, g):
        for a in monomials_upto(nvars, m - h.degree()):
            row = [Fraction(0)] * len(monomials)
            for e, c in h.terms.items():
                row[col[tuple(x + y for x, y in zip(a, e))]] = c
            span.add(row)
    N = span.rank
    return TruncatedIdeal(f, g, m, monomials, span, N, len(monomials) - N)


# ---------------------------------------------------------------------
# greedy monomial bases adapted to a point and place
# ---------------------------------------------------------------------

@dataclass
class GreedyBasis:
    """Quotient basis of monomials chosen greedily by increasing |u^i|_v,
    ties broken graded-lex; supports exact reduction of any monomial to the
    chosen basis modulo the ideal."""

    place: Place
    point: TorusPoint
    monomials: list[tuple[int, ...]]
    ideal: TruncatedIdeal
    _span: LinearSpan = field(repr=False)

    def monomial_log(self, e) -> LogReal:
        return monomial_log_abs(self.point, e, self.place)

    def reduce_monomial(self, e) -> dict[tuple[int, ...], Fraction]:
        """Coefficients c with x^e == sum c_j x^(i_j) modulo the ideal."""
        col = {mono: j for j, mono in enumerate(self.ideal.monomials)}
        vec = [Fraction(0)] * len(self.ideal.monomials)
        vec[col[tuple(e)]] = Fraction(1)
        residual, tag = self._span.reduce(vec)
        if any(residual):
            raise DomainError("monomial independent of ideal + basis")
        return {
            self.monomials[j]: -tag[j] for j in range(len(self.monomials)) if tag[j]
        }


def monomial_log_abs(u: TorusPoint, exponents, v: Place) -> LogReal:
    """Exact log|u^e|_v."""
    total = LogReal.zero()
    for c, k in zip(u.coords, exponents):
        if k:
            total = total + log_abs(c, v) * k
    return total


def greedy_monomial_basis(T: TruncatedIdeal, u: TorusPoint, v: Place) -> GreedyBasis:
    if len(u.coords) != T.nvars:
        raise DomainError("point dimension mismatch")
    logs = [log_abs(c, v) for c in u.coords]

    def mono_log(e) -> LogReal:
        total = LogReal.zero()
        for lg, k in zip(logs, e):
            if k:
                total = total + lg * k
        return total

    def compare(e1, e2) -> int:
        s = (mono_log(e1) - mono_log(e2)).sign()
        if s:
            return s
        k1, k2 = (sum(e1), e1), (sum(e2), e2)
        return -1 if k1 < k2 else (1 if k1 > k2 else 0)

    candidates = sorted(T.monomials, key=cmp_to_key(compare))
    col = {e: j for j, e in enumerate(T.monomials)}
    span = LinearSpan(len(T.monomials), ntags=T.Nprime)
    for row, _ in T.span.rows:
        span.add(list(row))
    chosen: list[tuple[int, ...]] = []
    for e in candidates:
        if len(chosen) == T.Nprime:
            break
        vec = [Fraction(0)] * len(T.monomials)
        vec[col[e]] = Fraction(1)
        tag = [Fraction(0)] * T.Nprime
        tag[len(chosen)] = Fraction(1)
        if span.add(vec, tag):
            chosen.append(e)
    if len(chosen) != T.Nprime:
        raise ArithmeticError("quotient basis construction failed")
    return GreedyBasis(v, u, chosen, T, span)


def greedy_dominance_violations(gb: GreedyBasis):
    """Monomials of degree <= m outside the basis whose reduction uses a
    basis monomial of strictly larger |u^.|_v.  Always empty for a correctly
    built greedy basis; returned for auditing."""
    out = []
    basis_set = set(gb.monomials)
    for e in gb.ideal.monomials:
        if e in basis_set:
            continue
        target = gb.monomial_log(e)
        for mono, coeff in gb.reduce_monomial(e).items():
            if coeff and (gb.monomial_log(mono) - target).sign() > 0:
                out.append((e, mono))
    return out


# ---------------------------------------------------------------------
# explicit constants
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityConstants:
    """The explicit constants of the polynomial gcd inequalities for a pair
    of degrees (d1, d2) in n variables at a rational delta, plus the
    single-form S-part data for a form of degree d."""

    n: int
    d1: int
    d2: int
    delta: Fraction
    d: int
    C_main: int          # 2(n^2 d1 + n d2)
    m_main: int          # floor(2 d1 n / sqrt(delta))
    C_combined: int      # 6 (d1 + d2) n^2
    C_spart: int         # 4 n d
    m_spart: int         # ceil((n - 2^(1/d) + 1)/(d(2^(1/d) - 1)) + 1) <= 2n
    I_spart: int         # 1 + sum_{j=1}^{m_spart - 1} C(n + j d, n)


def floor_scaled_inv_sqrt(a: int, delta: Fraction) -> int:
    """floor(a / sqrt(delta)) for a positive integer a and rational delta in
    (0, 1), by exact integer square roots."""
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise DomainError("delta must lie in (0, 1)")
    p, q = delta.numerator, delta.denominator
    # a * sqrt(q/p) = sqrt(a^2 q / p) ; floor(sqrt(A/B)) = isqrt(A*B)//B
    return math.isqrt(a * a * q * p) // p


def ceil_spart_degree(n: int, d: int) -> int:
    """ceil((n - 2^(1/d) + 1) / (d (2^(1/d) - 1)) + 1), certified by interval
    arithmetic when 2^(1/d) is irrational (d >= 2)."""
    if d == 1:
        return n  # the expression is exactly (n - 1) + 1
    iv = mpmath.iv
    saved = iv.prec
    try:
        prec = 64
        while prec <= 1 << 14:
            iv.prec = prec
            t = iv.mpf(2) ** (iv.mpf(1) / d)
            expr = (iv.mpf(n) - t + 1) / (iv.mpf(d) * (t - 1)) + 1
            lo = mpmath.mpf(expr.a)
            hi = mpmath.mpf(expr.b)
            clo = int(mpmath.ceil(lo))
            chi = int(mpmath.ceil(hi))
            if clo == chi and lo != mpmath.floor(lo):
                return clo
            prec *= 2
    finally:
        iv.prec = saved
    raise PrecisionExhausted("could not certify the ceiling")


def i_spart(n: int, d: int, m: int) -> int:
    return 1 + sum(comb(n + j * d, n) for j in range(1, m))


def inequality_constants(
    n: int, d1: int, d2: int, delta: Fraction, d: int | None = None
) -> InequalityConstants:
    if min(n, d1, d2) < 1:
        raise DomainError("n, d1, d2 must be positive")
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise DomainError("delta must lie in (0, 1)")
    if d is None:
        d = min(d1, d2)
    m_spart = ceil_spart_degree(n, d)
    if m_spart > 2 * n:
        raise ArithmeticError("degree choice exceeded 2n")
    return InequalityConstants(
        n=n,
        d1=d1,
        d2=d2,
        delta=delta,
        d=d,
        C_main=2 * (n * n * d1 + n * d2),
        m_main=floor_scaled_inv_sqrt(2 * d1 * n, delta),
        C_combined=6 * (d1 + d2) * n * n,
        C_spart=4 * n * d,
        m_spart=m_spart,
        I_spart=i_spart(n, d, m_spart),
    )


def delta_for_epsilon(eps: Fraction, n: int, d1: int, d2: int) -> Fraction:
    """The delta guaranteeing the eps-form of the gcd inequality:
    (eps / (6 n^3 (d1 + d2)))^2."""
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    return (eps / (6 * n**3 * (d1 + d2))) ** 2


# ---------------------------------------------------------------------
# basis from powers of a single form (d-uple embedding)
# ---------------------------------------------------------------------

@dataclass
class PowerBasis:
    """For a form F of degree d with nonzero x0^d coefficient: the degree
    m*d basis {x^i / x0^(k_i d) * F^(k_i)} with k_i = floor(ord_x0(x^i)/d),
    together with I = sum k_i."""

    F: MultiPoly
    m: int
    elements: list[MultiPoly]
    exponents: list[tuple[int, ...]]
    k_values: list[int]
    I: int


def veronese_basis(F: MultiPoly, m: int) -> PowerBasis:
    if not F.is_homogeneous() or F.is_zero:
        raise DomainError("need a nonzero homogeneous form")
    d = F.degree()
    nvars = F.nvars
    top = tuple([d] + [0] * (nvars - 1))
    if F.terms.get(top, Fraction(0)) == 0:
        raise DomainError("x0^d coefficient vanishes (dehomogenization hits the origin)")
    powers = [MultiPoly.one(nvars)]
    for _ in range(m):
        powers.append(powers[-1] * F)
    elements, ks = [], []
    exps = monomials_exact(nvars, m * d)
    for e in exps:
        k = e[0] // d
        rest = (e[0] - k * d,) + e[1:]
        elements.append(MultiPoly.monomial(nvars, rest) * powers[k])
        ks.append(k)
    return PowerBasis(F, m, elements, exps, ks, sum(ks))


def veronese_rank(basis: PowerBasis) -> int:
    """Exact rank of the power basis inside the degree m*d forms (full rank
    equals C(n + m*d, n))."""
    nvars = basis.F.nvars
    deg = basis.m * basis.F.degree()
    col = {e: j for j, e in enumerate(monomials_exact(nvars, deg))}
    rows = []
    for p in basis.elements:
        row = [Fraction(0)] * len(col)
        for e, c in p.terms.items():
            row[col[e]] = c
        rows.append(row)
    return rational_rank(rows)

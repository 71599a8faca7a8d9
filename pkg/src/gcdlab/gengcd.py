"""Generalized logarithmic gcd of two rationals: the negated sum of
log^- max(|a|_v, |b|_v) over places, extending log gcd from integer pairs to
rational pairs, with variants restricted to the places inside or outside a
finite set S.

The finite-place part is computed from classical integer gcds alone (no
factorization), so the operands may be astronomically large."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd

from .logreal import LogReal
from .places import DomainError, PlaceSet


@dataclass(frozen=True)
class GcdValue:
    """A generalized-gcd value; each place contributes a nonnegative term."""

    value: LogReal

    def sign(self, precision: int = 128) -> int:
        return self.value.sign(precision)

    def __str__(self) -> str:
        return str(self.value)


def _finite_core(a: Fraction, b: Fraction) -> tuple[int, int]:
    """(M, L): the finite-place part of the generalized gcd is log(M), and L
    is the common denominator used (needed to restrict by valuations)."""
    L = a.denominator // igcd(a.denominator, b.denominator) * b.denominator
    A = abs(a.numerator) * (L // a.denominator)
    B = abs(b.numerator) * (L // b.denominator)
    g = igcd(A, B)  # gcd(x, 0) == |x|, so single-zero inputs come for free
    return g // igcd(g, L), L


def _arch_term(a: Fraction, b: Fraction) -> LogReal:
    mx = max(abs(a), abs(b))
    if mx < 1:
        return LogReal.log_of_fraction(1 / mx)
    return LogReal.zero()


def _split_primes(M: int, primes) -> tuple[dict[int, int], int]:
    parts: dict[int, int] = {}
    for p in primes:
        e = 0
        while M % p == 0:
            M //= p
            e += 1
        if e:
            parts[p] = e
    return parts, M


def log_gcd(a: Fraction, b: Fraction) -> GcdValue:
    """Generalized log gcd over all places; equals log(gcd(a, b)) exactly for
    integer inputs."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise DomainError("log_gcd(0, 0) is undefined")
    M, _ = _finite_core(a, b)
    return GcdValue(LogReal.log_of_int(M) + _arch_term(a, b))


def log_gcd_within(a: Fraction, b: Fraction, S: PlaceSet) -> GcdValue:
    """The part of the generalized log gcd contributed by the places in S."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise DomainError("log_gcd(0, 0) is undefined")
    M, _ = _finite_core(a, b)
    parts, _ = _split_primes(M, S.finite_primes)
    total = LogReal({p: Fraction(e) for p, e in parts.items()})
    if S.contains_archimedean:
        total = total + _arch_term(a, b)
    return GcdValue(total)


def log_gcd_outside(a: Fraction, b: Fraction, S: PlaceSet) -> GcdValue:
    """The part of the generalized log gcd contributed by places not in S;
    log_gcd == log_gcd_within + log_gcd_outside for every S."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise DomainError("log_gcd(0, 0) is undefined")
    M, _ = _finite_core(a, b)
    _, rest = _split_primes(M, S.finite_primes)
    total = LogReal.log_of_int(rest)
    if not S.contains_archimedean:
        total = total + _arch_term(a, b)
    return GcdValue(total)

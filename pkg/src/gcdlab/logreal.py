"""Exact real numbers of the form sum c_b * log(b) with rational c_b and
integer bases b >= 2.

Every height, local height and generalized-gcd value in this library lives
here.  Canonical form keeps the bases pairwise coprime and power-free, which
makes the zero test exact (a nonzero rational combination of logs of pairwise
coprime integers cannot vanish); nonzero signs are certified by interval
arithmetic at escalating precision.  Canonicalization is lazy so that values
built from huge unfactored integers (gcds of recurrence terms) stay cheap
until an exact zero test actually needs them."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

import mpmath

from .arith import SMALL_PRIMES, factorize, perfect_power

_SPLIT_BOUND = 1000  # bases get their prime factors below this split off

DEFAULT_PRECISION = 128
MAX_PRECISION = 1 << 16


class PrecisionExhausted(ArithmeticError):
    """Interval sign test stayed ambiguous up to the precision cap."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def _merge(raw: Mapping[int, Fraction]) -> dict[int, Fraction]:
    merged: dict[int, Fraction] = {}
    for base, coeff in raw.items():
        if not isinstance(base, int) or base < 1:
            raise ValueError(f"bad log base {base!r}")
        coeff = _as_fraction(coeff)
        if base == 1 or coeff == 0:
            continue
        cur = merged.get(base, Fraction(0)) + coeff
        if cur == 0:
            merged.pop(base, None)
        else:
            merged[base] = cur
    return merged


def _canonicalize(items: dict[int, Fraction]) -> dict[int, Fraction]:
    """Split bases until pairwise coprime, reduce perfect powers, peel small
    prime factors.  Terminates: every split replaces a base by strictly
    smaller cofactors."""
    items = dict(items)

    def push(d, base, coeff):
        if base == 1 or coeff == 0:
            return
        cur = d.get(base, Fraction(0)) + coeff
        if cur == 0:
            d.pop(base, None)
        else:
            d[base] = cur

    changed = True
    while changed:
        changed = False
        bases = sorted(items)
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                b1, b2 = bases[i], bases[j]
                g = math.gcd(b1, b2)
                if g == 1:
                    continue
                c1 = items.pop(b1)
                c2 = items.pop(b2)
                push(items, g, c1)
                push(items, b1 // g, c1)
                push(items, g, c2)
                push(items, b2 // g, c2)
                changed = True
                break
            if changed:
                break

    out: dict[int, Fraction] = {}
    for base in sorted(items):
        coeff = items[base]
        if base >= 4:
            root, k = perfect_power(base)
            base = root
            coeff = coeff * k
        if base < _SPLIT_BOUND * _SPLIT_BOUND:
            for p, e in factorize(base).items():
                push(out, p, coeff * e)
        else:
            for p in SMALL_PRIMES:
                if p >= _SPLIT_BOUND:
                    break
                while base % p == 0:
                    base //= p
                    push(out, p, coeff)
            push(out, base, coeff)
    return out


class LogReal:
    """Immutable exact value sum(coeffs[b] * log(b))."""

    __slots__ = ("_coeffs", "_canonical")

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        object.__setattr__(self, "_coeffs", _merge(coeffs or {}))
        object.__setattr__(self, "_canonical", False)

    @classmethod
    def _wrap(cls, coeffs: dict[int, Fraction], canonical: bool) -> "LogReal":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_coeffs", coeffs)
        object.__setattr__(obj, "_canonical", canonical)
        return obj

    @staticmethod
    def zero() -> "LogReal":
        return LogReal._wrap({}, True)

    @classmethod
    def log_of_int(cls, n: int) -> "LogReal":
        """log(n) for an integer n >= 1, kept unfactored until needed."""
        if n < 1:
            raise ValueError("log_of_int needs n >= 1")
        if n == 1:
            return cls.zero()
        return cls._wrap({n: Fraction(1)}, False)

    @classmethod
    def log_of_fraction(cls, q) -> "LogReal":
        """log|q| for a nonzero rational q."""
        q = _as_fraction(q)
        if q == 0:
            raise ValueError("log of zero")
        return cls(
            {abs(q.numerator): Fraction(1), q.denominator: Fraction(-1)}
        )

    def _refined(self) -> dict[int, Fraction]:
        if not self._canonical:
            object.__setattr__(self, "_coeffs", _canonicalize(self._coeffs))
            object.__setattr__(self, "_canonical", True)
        return self._coeffs

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Canonical base -> coefficient map (bases pairwise coprime,
        power-free; prime for all desk-scale values)."""
        return dict(self._refined())

    @property
    def is_zero(self) -> bool:
        return not self._refined()

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "LogReal") -> "LogReal":
        if not isinstance(other, LogReal):
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        merged = dict(self._coeffs)
        for b, c in other._coeffs.items():
            cur = merged.get(b, Fraction(0)) + c
            if cur == 0:
                merged.pop(b, None)
            else:
                merged[b] = cur
        return LogReal._wrap(merged, False)

    def __sub__(self, other: "LogReal") -> "LogReal":
        return self.__add__(-other)

    def __neg__(self) -> "LogReal":
        return LogReal._wrap(
            {b: -c for b, c in self._coeffs.items()}, self._canonical
        )

    def __mul__(self, scalar) -> "LogReal":
        s = _as_fraction(scalar)
        if s == 0:
            return LogReal.zero()
        return LogReal._wrap(
            {b: c * s for b, c in self._coeffs.items()}, self._canonical
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "LogReal":
        return self * (Fraction(1) / _as_fraction(scalar))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogReal):
            return NotImplemented
        return (self - other).is_zero

    __hash__ = None  # mathematical equality crosses structural boundaries

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def interval(self, prec: int):
        """Enclosure of the value as an mpmath interval; caller must have set
        mpmath.iv.prec."""
        iv = mpmath.iv
        total = iv.mpf(0)
        for b, c in self._coeffs.items():
            total += iv.mpf(c.numerator) / iv.mpf(c.denominator) * iv.log(iv.mpf(b))
        return total

    def sign(self, precision: int = DEFAULT_PRECISION) -> int:
        """Certified sign: -1, 0, or +1.  Zero is exact (canonical map is
        empty); a nonzero canonical value is irrational, so the interval
        escalation terminates."""
        if not self._refined():
            return 0
        return self._cmp_nonzero(Fraction(0), precision)

    def cmp(self, const, precision: int = DEFAULT_PRECISION) -> int:
        """Certified sign of (self - const) for a rational const."""
        const = _as_fraction(const)
        if const == 0:
            return self.sign(precision)
        if not self._coeffs:
            return -1 if const > 0 else 1
        # value is either 0 or irrational, never equal to const != 0
        return self._cmp_nonzero(const, precision)

    def _cmp_nonzero(self, const: Fraction, precision: int) -> int:
        # fast float path with a crude but generous error budget
        mid = 0.0
        budget = 1e-12
        ok = True
        try:
            for b, c in self._coeffs.items():
                t = (c.numerator / c.denominator) * math.log(b)
                mid += t
                budget += 1e-12 * (abs(t) + 1.0)
            cf = const.numerator / const.denominator
            budget += 1e-12 * (abs(cf) + 1.0)
            mid -= cf
        except OverflowError:
            ok = False
        if ok and abs(mid) > budget:
            return 1 if mid > 0 else -1
        iv = mpmath.iv
        saved = iv.prec
        try:
            prec = max(precision, 16)
            while prec <= MAX_PRECISION:
                iv.prec = prec
                diff = self.interval(prec) - fraction_interval(const, prec)
                if diff.a > 0:
                    return 1
                if diff.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved
        raise PrecisionExhausted(
            f"sign of ({self}) - ({const}) not separated below {MAX_PRECISION} bits"
        )

    def to_float(self) -> float:
        total = 0.0
        for b, c in self._coeffs.items():
            total += (c.numerator / c.denominator) * math.log(b)
        return total

    def decimal(self, digits: int = 20) -> str:
        """Decimal approximation, deterministic for a given digit count."""
        if not self._coeffs:
            return "0"
        with mpmath.workdps(digits + 10):
            total = mpmath.mpf(0)
            for b, c in sorted(self._coeffs.items()):
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.log(b)
            return mpmath.nstr(total, digits)

    def __str__(self) -> str:
        coeffs = self._refined()
        if not coeffs:
            return "0"
        parts = []
        for b, c in sorted(coeffs.items()):
            if c == 1:
                term = f"log({b})"
            elif c == -1:
                term = f"-log({b})"
            else:
                term = f"{c}*log({b})"
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term.lstrip("-"))
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LogReal({self})"

    def pretty(self, digits: int = 20) -> str:
        if self.is_zero:
            return "0"
        return f"{self} = {self.decimal(digits)}"


def logreal_sum(values: Iterable[LogReal]) -> LogReal:
    total = LogReal.zero()
    for v in values:
        total = total + v
    return total


def logreal_sign(a: LogReal, precision: int = DEFAULT_PRECISION) -> int:
    """Sign of an exact log-combination: -1, 0 or +1, never a guess."""
    return a.sign(precision)


def escalating_sign(interval_fn, start_prec: int = DEFAULT_PRECISION,
                    max_prec: int = MAX_PRECISION):
    """Generic certified sign for quantities only available as intervals.

    ``interval_fn(prec)`` must return an mpmath.iv enclosure computed at that
    precision (mpmath.iv.prec is set before each call).  Returns -1/+1, or
    None when the enclosure still straddles zero at ``max_prec``."""
    iv = mpmath.iv
    saved = iv.prec
    try:
        prec = max(start_prec, 16)
        while prec <= max_prec:
            iv.prec = prec
            val = interval_fn(prec)
            if val.a > 0:
                return 1
            if val.b < 0:
                return -1
            prec *= 2
    finally:
        iv.prec = saved
    return None


def fraction_interval(q, prec: int):
    """mpmath.iv enclosure of a rational (iv.prec must be set by caller)."""
    q = _as_fraction(q)
    return mpmath.iv.mpf(q.numerator) / mpmath.iv.mpf(q.denominator)

"""Exact integer arithmetic helpers: primality, factorization, integer
lattice reduction.  Everything here is deterministic; no probabilistic
one-sided tests are exposed."""

from __future__ import annotations

import math
from fractions import Fraction

_SMALL_PRIME_BOUND = 10_000


def _sieve_primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(bound) if sieve[i]]


SMALL_PRIMES = _sieve_primes(_SMALL_PRIME_BOUND)
_SMALL_PRIMES = SMALL_PRIMES

# Deterministic Miller-Rabin witness set, valid for n < 3317044064679887385961981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin below 3.3e24, trial
    division beyond)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:60]:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        d = n - 1
        r = 0
        while d % 2 == 0:
            d //= 2
            r += 1
        for a in _MR_WITNESSES:
            x = pow(a, d, n)
            if x in (1, n - 1):
                continue
            for _ in range(r - 1):
                x = x * x % n
                if x == n - 1:
                    break
            else:
                return False
        return True
    # desk scale should never reach this; keep it correct anyway
    f = _SMALL_PRIMES[-1]
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _pollard_rho(n: int) -> int:
    # n odd composite, not a prime power of a small prime
    if n % 2 == 0:
        return 2
    x0 = 2
    c = 1
    while True:
        x = y = x0
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        x0 += 1
        c += 2


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as {prime: exponent}."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root, k = perfect_power(m)
        if k > 1:
            stack.extend([root] * k)
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


def factorize_fraction(q: Fraction) -> dict[int, int]:
    """Exponents of the prime factorization of a nonzero rational (negative
    exponents from the denominator).  Sign is discarded."""
    if q == 0:
        raise ValueError("zero has no factorization")
    out = factorize(abs(q.numerator)) if abs(q.numerator) != 1 else {}
    for p, e in factorize(q.denominator).items():
        out[p] = out.get(p, 0) - e
    return {p: e for p, e in out.items() if e != 0}


def perfect_power(n: int) -> tuple[int, int]:
    """Largest k with n = r**k for n >= 2; returns (r, k), k = 1 if none.
    Only prime exponents are probed; composite exponents fall out of the
    recursion (64 -> (2, 6))."""
    if n < 2:
        raise ValueError("perfect_power expects n >= 2")
    maxk = n.bit_length()
    for k in _SMALL_PRIMES:
        if k > maxk:
            break
        r = _iroot(n, k)
        if r**k == n:
            r2, k2 = perfect_power(r)
            return r2, k * k2
    return (n, 1)


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1."""
    if n < 0:
        raise ValueError("negative radicand")
    if k == 1 or n in (0, 1):
        return n
    hi = 1 << ((n.bit_length() + k - 1) // k)
    lo = hi >> 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def iroot(n: int, k: int) -> int:
    return _iroot(n, k)


def floor_sqrt_fraction(q: Fraction) -> int:
    """floor(sqrt(q)) for a nonnegative rational, exactly."""
    if q < 0:
        raise ValueError("negative radicand")
    # sqrt(a/b) = sqrt(a*b)/b
    a, b = q.numerator, q.denominator
    return math.isqrt(a * b) // b


def sqrt_fraction_exact(q: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        raise ValueError("negative radicand")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (x, y, g) with x*a + y*b == g = gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hnf_with_transform(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form of an integer matrix.

    Returns (H, T) with T unimodular-on-rows such that H = T @ rows, the
    nonzero rows of H forming an echelon basis of the row lattice (positive
    pivots, entries above each pivot reduced)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    H = [list(r) for r in rows]
    T = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivot_row = 0
    for col in range(n):
        # find a row at or below pivot_row with nonzero entry in col
        pivots = [i for i in range(pivot_row, m) if H[i][col] != 0]
        if not pivots:
            continue
        i0 = pivots[0]
        H[pivot_row], H[i0] = H[i0], H[pivot_row]
        T[pivot_row], T[i0] = T[i0], T[pivot_row]
        for i in range(pivot_row + 1, m):
            while H[i][col] != 0:
                a, b = H[pivot_row][col], H[i][col]
                if abs(a) > abs(b) or (a % b == 0 and abs(a) >= abs(b)):
                    H[pivot_row], H[i] = H[i], H[pivot_row]
                    T[pivot_row], T[i] = T[i], T[pivot_row]
                    a, b = b, a
                q = b // a
                for j in range(n):
                    H[i][j] -= q * H[pivot_row][j]
                for j in range(m):
                    T[i][j] -= q * T[pivot_row][j]
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
            T[pivot_row] = [-x for x in T[pivot_row]]
        # reduce entries above the pivot
        a = H[pivot_row][col]
        for i in range(pivot_row):
            q = H[i][col] // a
            if q:
                for j in range(n):
                    H[i][j] -= q * H[pivot_row][j]
                for j in range(m):
                    T[i][j] -= q * T[pivot_row][j]
        pivot_row += 1
        if pivot_row == m:
            break
    return H, T


def solve_in_row_lattice(basis: list[list[int]], target: list[int]):
    """Integer coefficients c with sum(c_i * basis_i) == target, or None.

    ``basis`` must be in row echelon form (as produced by hnf_with_transform,
    zero rows allowed at the bottom)."""
    n = len(target)
    residual = list(target)
    coeffs = []
    rows = [r for r in basis if any(r)]
    for row in rows:
        lead = next(j for j in range(n) if row[j] != 0)
        if residual[lead] % row[lead] != 0:
            # not solvable with this echelon row; leading entries of later
            # rows are strictly to the right so nothing can fix column lead
            if residual[lead] != 0:
                return None
            coeffs.append(0)
            continue
        c = residual[lead] // row[lead]
        coeffs.append(c)
        if c:
            for j in range(n):
                residual[j] -= c * row[j]
    if any(residual):
        return None
    return coeffs


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of {c : sum c_i * rows_i == 0} over the integers."""
    H, T = hnf_with_transform(rows)
    return [T[i] for i in range(len(rows)) if not any(H[i])]

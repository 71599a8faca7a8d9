"""Experiment runners: exact grid scans of gcds of two linear recurrences
with log-tube clustering of the violating pairs, sampling audits of the
polynomial gcd inequalities over almost-unit points, the prime-power
coincidence family, the sharpness construction, single-place decay scans,
and desk-scale unit-equation enumeration.

Each runner returns a plain report object; CSV rendering is separate.  All
randomness flows through an explicit seed and reports are assembled in
canonical order, so identical configurations produce identical output."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd

import mpmath

from .gengcd import _finite_core, _split_primes, log_gcd, log_gcd_outside, log_gcd_within
from .heights import (
    AlmostUnitConfig,
    TorusPoint,
    h_sbar,
    height,
    is_almost_unit,
    torus_height,
)
from .hilbert import inequality_constants
from .logreal import (
    DEFAULT_PRECISION,
    LogReal,
    escalating_sign,
    fraction_interval,
    logreal_sum,
)
from .lrs import PowerSum, compute_S0, zero_scan
from .multipoly import MultiPoly
from .places import DomainError, PlaceSet, format_rational
from .arith import sqrt_fraction_exact


class BudgetExceeded(RuntimeError):
    """An enumeration hit its combinatorial budget; partial results attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


# ---------------------------------------------------------------------
# recurrence gcd grid scans
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class ScanConfig:
    F: PowerSum
    G: PowerSum
    epsilon: Fraction
    N: int
    extra_S: PlaceSet = PlaceSet(False, ())
    mode: str = "full-grid"  # or "diagonal"
    tube_max_ab: int = 8
    tube_kappa: int = 16
    keep_rows: bool = True
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.epsilon <= 0:
            raise DomainError("epsilon must be positive")
        if self.N < 1:
            raise DomainError("N must be at least 1")
        if self.mode not in ("full-grid", "diagonal"):
            raise DomainError(f"unknown scan mode {self.mode!r}")


@dataclass(frozen=True)
class ScanRow:
    m: int
    n: int
    core: int                # finite-place gcd part outside S, an integer
    arch: Fraction | None    # 1/max|a|,|b| when that max is < 1
    flagged: bool
    cluster: int | None = None
    note: str = ""

    @property
    def lhs(self) -> LogReal:
        total = LogReal.log_of_int(self.core)
        if self.arch is not None:
            total = total + LogReal.log_of_fraction(self.arch)
        return total


@dataclass(frozen=True)
class TubeCluster:
    """Pairs within |a*m - b*n| <= kappa * log max(m, n) of the line
    a*m = b*n."""

    cluster_id: int
    a: int
    b: int
    kappa: int
    members: tuple[tuple[int, int], ...]
    kappa_hat: float  # observed max |a*m-b*n| / log max(m,n)


@dataclass
class ScanReport:
    config: ScanConfig
    S0: PlaceSet
    S_used: PlaceSet
    nrows: int
    flagged: list[ScanRow]
    clusters: list[TubeCluster]
    sporadic: list[ScanRow]
    zero_rows: list[tuple[int, int, str]]
    zero_structure_F: object
    zero_structure_G: object
    max_flagged_extent: int  # max over flagged rows of max(m, n); 0 if none
    rows: list[ScanRow] | None = None

    def flagged_pairs(self) -> list[tuple[int, int]]:
        return [(r.m, r.n) for r in self.flagged]


def _scan_row(m, n, a: Fraction, b: Fraction, s_primes, s_arch: bool):
    """Compact per-row data for the gcd outside S: integer core and the
    optional archimedean term."""
    M, _ = _finite_core(a, b)
    _, rest = _split_primes(M, s_primes)
    arch = None
    if not s_arch:
        mx = max(abs(a), abs(b))
        if mx < 1:
            arch = 1 / mx
    return rest, arch


def _row_lhs_cmp(core: int, arch: Fraction | None, threshold: Fraction,
                 precision: int) -> int:
    lhs = LogReal.log_of_int(core)
    if arch is not None:
        lhs = lhs + LogReal.log_of_fraction(arch)
    return lhs.cmp(threshold, precision)


def tube_inequality_holds(a: int, b: int, kappa: int, m: int, n: int,
                          precision: int = DEFAULT_PRECISION) -> bool:
    """Exact check of |a*m - b*n| <= kappa * log max(m, n)."""
    diff = abs(a * m - b * n)
    return LogReal({max(m, n): Fraction(kappa)}).cmp(Fraction(diff), precision) >= 0


def _cluster_flagged(flagged: list[ScanRow], max_ab: int, kappa: int,
                     precision: int):
    """Greedy assignment of flagged pairs to tubes around lines a*m = b*n,
    coprime 1 <= a, b <= max_ab, narrow lines first."""
    candidates = sorted(
        (
            (a, b)
            for a in range(1, max_ab + 1)
            for b in range(1, max_ab + 1)
            if igcd(a, b) == 1
        ),
        key=lambda ab: (max(ab), ab),
    )
    unassigned = list(flagged)
    clusters: list[TubeCluster] = []
    assignment: dict[tuple[int, int], int] = {}
    for a, b in candidates:
        members = [
            r for r in unassigned if tube_inequality_holds(a, b, kappa, r.m, r.n, precision)
        ]
        if not members:
            continue
        cid = len(clusters) + 1
        kappa_hat = 0.0
        for r in members:
            mx = max(r.m, r.n)
            if mx > 1:
                kappa_hat = max(
                    kappa_hat, abs(a * r.m - b * r.n) / float(LogReal.log_of_int(mx).to_float())
                )
            assignment[(r.m, r.n)] = cid
        clusters.append(
            TubeCluster(cid, a, b, kappa, tuple((r.m, r.n) for r in members), kappa_hat)
        )
        unassigned = [r for r in unassigned if (r.m, r.n) not in assignment]
        if not unassigned:
            break
    return clusters, assignment, unassigned


def run_lrs_scan(cfg: ScanConfig) -> ScanReport:
    S0 = compute_S0(cfg.F.roots, cfg.G.roots)
    S_used = S0.union(cfg.extra_S)
    s_primes = S_used.finite_primes
    s_arch = S_used.contains_archimedean
    N = cfg.N
    F_vals = [None] + [cfg.F.eval(i) for i in range(1, N + 1)]
    G_vals = [None] + [cfg.G.eval(i) for i in range(1, N + 1)]

    if cfg.mode == "diagonal":
        grid = ((i, i) for i in range(1, N + 1))
    else:
        grid = itertools.product(range(1, N + 1), range(1, N + 1))

    rows: list[ScanRow] | None = [] if cfg.keep_rows else None
    flagged: list[ScanRow] = []
    zero_rows: list[tuple[int, int, str]] = []
    eps = cfg.epsilon
    nrows = 0
    for m, n in grid:
        a, b = F_vals[m], G_vals[n]
        if a == 0 or b == 0:
            which = "F(m)=0" if a == 0 else "G(n)=0"
            if a == 0 and b == 0:
                which = "F(m)=G(n)=0"
            zero_rows.append((m, n, which))
            if rows is not None:
                rows.append(ScanRow(m, n, 1, None, False, None, which))
            continue
        nrows += 1
        core, arch = _scan_row(m, n, a, b, s_primes, s_arch)
        threshold = eps * max(m, n)
        is_flagged = _row_lhs_cmp(core, arch, threshold, cfg.precision) > 0
        row = ScanRow(m, n, core, arch, is_flagged)
        if is_flagged:
            flagged.append(row)
        if rows is not None:
            rows.append(row)

    clusters, assignment, sporadic = _cluster_flagged(
        flagged, cfg.tube_max_ab, cfg.tube_kappa, cfg.precision
    )
    # rewrite rows with cluster ids (rows are frozen; rebuild the flagged ones)
    flagged = [
        ScanRow(r.m, r.n, r.core, r.arch, True, assignment.get((r.m, r.n)),
                "" if (r.m, r.n) in assignment else "sporadic")
        for r in flagged
    ]
    if rows is not None:
        by_key = {(r.m, r.n): r for r in flagged}
        rows = [by_key.get((r.m, r.n), r) for r in rows]
    sporadic = [r for r in flagged if r.cluster is None]
    return ScanReport(
        config=cfg,
        S0=S0,
        S_used=S_used,
        nrows=nrows,
        flagged=flagged,
        clusters=clusters,
        sporadic=sporadic,
        zero_rows=zero_rows,
        zero_structure_F=zero_scan(cfg.F, N),
        zero_structure_G=zero_scan(cfg.G, N),
        max_flagged_extent=max((max(r.m, r.n) for r in flagged), default=0),
        rows=rows,
    )


def scan_csv_rows(report: ScanReport, digits: int = 12):
    """Rows for the scan CSV: m, n, lhs_logreal, lhs_decimal,
    threshold_decimal, flagged, cluster_id, notes."""
    if report.rows is None:
        raise DomainError("scan was run without keep_rows")
    eps = report.config.epsilon
    for r in report.rows:
        lhs = r.lhs
        threshold = eps * max(r.m, r.n)
        yield (
            r.m,
            r.n,
            str(lhs),
            lhs.decimal(digits),
            mpmath.nstr(mpmath.mpf(threshold.numerator) / threshold.denominator, digits),
            int(r.flagged),
            r.cluster if r.cluster is not None else "",
            r.note,
        )


SCAN_CSV_HEADER = (
    "m", "n", "lhs_logreal", "lhs_decimal", "threshold_decimal",
    "flagged", "cluster_id", "notes",
)


# ---------------------------------------------------------------------
# polynomial gcd sampling audits
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class SampleConfig:
    f: MultiPoly
    g: MultiPoly
    S: PlaceSet
    delta: Fraction
    count: int = 50
    generator_exponent_bound: int = 6
    perturbation_bound: int = 1
    max_retries: int = 200
    signed_units: bool = True
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        object.__setattr__(self, "delta", Fraction(self.delta))
        from .multipoly import coprime

        if not 0 < self.delta < 1:
            raise DomainError("delta must lie in (0, 1)")
        if not self.S.contains_archimedean:
            raise DomainError("S must contain the archimedean place")
        if not coprime(self.f, self.g):
            raise DomainError("f and g must be coprime")
        if self.f.nvars != self.g.nvars:
            raise DomainError("f and g must share their variables")


@dataclass(frozen=True)
class SampleRow:
    index: int
    u: tuple[Fraction, ...]
    h_sum: LogReal
    lhs_outside: LogReal
    lhs_within: LogReal
    lhs_total: LogReal
    main_ok: bool | None      # None when the comparison was degenerate-zero
    spart_ok: bool | None
    combined_ok: bool | None
    note: str = ""


@dataclass
class PolyGcdReport:
    config: SampleConfig
    constants: object
    spart_degree: int | None
    rows: list[SampleRow]
    degenerate: list[tuple[int, tuple[Fraction, ...], str]]
    sampler_failures: int
    violations: list[SampleRow]


def _sqrt_scaled_cmp(lhs: LogReal, coeff: Fraction, delta: Fraction,
                     H: LogReal, precision: int):
    """Certified sign of lhs - coeff * sqrt(delta) * H; None only in the
    (never observed) case the interval refuses to separate."""
    root = sqrt_fraction_exact(delta)
    if root is not None:
        return (lhs - (coeff * root) * H).sign(precision)
    if lhs.is_zero and H.is_zero:
        return 0

    def fn(prec):
        iv = mpmath.iv
        return lhs.interval(prec) - fraction_interval(coeff, prec) * iv.sqrt(
            fraction_interval(delta, prec)
        ) * H.interval(prec)

    return escalating_sign(fn, precision)


def sample_almost_unit_point(rng, nvars: int, S: PlaceSet, delta: Fraction,
                             exp_bound: int, pert_bound: int,
                             signed: bool = True, max_retries: int = 200,
                             precision: int = DEFAULT_PRECISION):
    """An exact member of the almost-(S, delta) class: S-unit core times a
    perturbation supported outside S, rejection-filtered by the exact
    predicate.  None if the filter never passed."""
    primes = S.finite_primes
    cfg = AlmostUnitConfig(S, delta)
    s_set = set(primes)
    pert_choices = [
        q
        for q in (
            Fraction(a, b)
            for a in range(1, pert_bound + 1)
            for b in range(1, pert_bound + 1)
        )
        if all(p not in s_set for p in _support(q))
    ]
    for _ in range(max_retries):
        coords = []
        for _ in range(nvars):
            val = Fraction(1)
            for p in primes:
                val *= Fraction(p) ** rng.randint(-exp_bound, exp_bound)
            if signed and rng.random() < 0.5:
                val = -val
            if pert_choices:
                val *= rng.choice(pert_choices)
            coords.append(val)
        u = TorusPoint(coords)
        if is_almost_unit(u, cfg, precision):
            return u
    return None


def _support(q: Fraction):
    from .arith import factorize

    out = set()
    if abs(q.numerator) != 1:
        out.update(factorize(abs(q.numerator)))
    if q.denominator != 1:
        out.update(factorize(q.denominator))
    return out


def run_poly_gcd_experiment(cfg: SampleConfig, seed: int = 0) -> PolyGcdReport:
    import random

    rng = random.Random(seed)
    n = cfg.f.nvars
    d1, d2 = cfg.f.degree(), cfg.g.degree()
    consts = inequality_constants(n, d1, d2, cfg.delta)
    # the S-part bound needs a polynomial that does not vanish at the origin
    spart_poly = None
    for cand in sorted((cfg.f, cfg.g), key=lambda p: p.degree()):
        if not cand.vanishes_at_origin():
            spart_poly = cand
            break
    spart_degree = spart_poly.degree() if spart_poly is not None else None
    combined_available = spart_poly is not None

    rows: list[SampleRow] = []
    degenerate = []
    violations = []
    failures = 0
    for idx in range(cfg.count):
        u = sample_almost_unit_point(
            rng, n, cfg.S, cfg.delta, cfg.generator_exponent_bound,
            cfg.perturbation_bound, cfg.signed_units, cfg.max_retries,
            cfg.precision,
        )
        if u is None:
            failures += 1
            continue
        fv, gv = cfg.f.eval(u.coords), cfg.g.eval(u.coords)
        if fv == 0 or gv == 0:
            degenerate.append(
                (idx, u.coords, "f(u)=0" if fv == 0 else "g(u)=0")
            )
            continue
        H = logreal_sum(height(c) for c in u.coords)
        lhs_out = log_gcd_outside(fv, gv, cfg.S).value
        lhs_in = log_gcd_within(fv, gv, cfg.S).value
        lhs_tot = log_gcd(fv, gv).value
        s_main = _sqrt_scaled_cmp(lhs_out, Fraction(consts.C_main), cfg.delta, H, cfg.precision)
        main_ok = None if s_main is None else s_main < 0
        if spart_poly is not None:
            spart_rhs = Fraction(4 * n * spart_degree) * cfg.delta * H
            lhs_single = -_neg_log_within(spart_poly.eval(u.coords), cfg.S)
            spart_ok = (spart_rhs - lhs_single).sign(cfg.precision) > 0
        else:
            spart_ok = None
        if combined_available:
            s_comb = _sqrt_scaled_cmp(
                lhs_tot, Fraction(consts.C_combined), cfg.delta, H, cfg.precision
            )
            combined_ok = None if s_comb is None else s_comb < 0
        else:
            combined_ok = None
        row = SampleRow(
            idx, u.coords, H, lhs_out, lhs_in, lhs_tot, main_ok, spart_ok, combined_ok
        )
        rows.append(row)
        if main_ok is False or spart_ok is False or combined_ok is False:
            violations.append(row)
    return PolyGcdReport(
        cfg, consts, spart_degree, rows, degenerate, failures, violations
    )


def _neg_log_within(value: Fraction, S: PlaceSet) -> LogReal:
    """sum over v in S of log^- |value|_v (a nonpositive LogReal)."""
    if value == 0:
        raise DomainError("zero value")
    from .places import valuation as val

    total = LogReal.zero()
    if S.contains_archimedean and abs(value) < 1:
        total = total + LogReal.log_of_fraction(value)  # log|value| < 0
    for p in S.finite_primes:
        w = val(value, p)
        if w > 0:  # |value|_p < 1
            total = total + LogReal({p: Fraction(-w)})
    return total


POLY_GCD_CSV_HEADER = (
    "index", "u", "h_sum", "lhs_outside", "rhs_main", "lhs_within",
    "rhs_spart", "lhs_total", "rhs_combined", "main_ok", "spart_ok",
    "combined_ok", "note",
)


def poly_gcd_csv_rows(report: PolyGcdReport, digits: int = 12):
    cfg = report.config
    consts = report.constants
    with mpmath.workdps(digits + 10):
        sqrt_delta = mpmath.sqrt(
            mpmath.mpf(cfg.delta.numerator) / cfg.delta.denominator
        )
        for r in report.rows:
            h = mpmath.mpf(r.h_sum.decimal(digits + 5)) if not r.h_sum.is_zero else mpmath.mpf(0)
            rhs_main = mpmath.nstr(consts.C_main * sqrt_delta * h, digits)
            rhs_comb = mpmath.nstr(consts.C_combined * sqrt_delta * h, digits)
            if report.spart_degree is not None:
                rhs_spart = mpmath.nstr(
                    4 * cfg.f.nvars * report.spart_degree
                    * mpmath.mpf(cfg.delta.numerator) / cfg.delta.denominator * h,
                    digits,
                )
            else:
                rhs_spart = ""
            yield (
                r.index,
                "(" + ", ".join(format_rational(c) for c in r.u) + ")",
                r.h_sum.decimal(digits),
                r.lhs_outside.decimal(digits),
                rhs_main,
                r.lhs_within.decimal(digits),
                rhs_spart,
                r.lhs_total.decimal(digits),
                rhs_comb,
                _tri(r.main_ok), _tri(r.spart_ok), _tri(r.combined_ok),
                r.note,
            )


def _tri(x):
    return "" if x is None else int(x)


# ---------------------------------------------------------------------
# the prime-power coincidence family
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class PkRow:
    k: int
    m: int
    n: int
    value_equal: bool      # F(m) == G(n) exactly
    lhs: LogReal
    threshold: Fraction
    flagged: bool
    in_tube: bool          # |m - n| <= 2 log2 max(m, n), exactly


@dataclass
class PkReport:
    p: int
    epsilon: Fraction
    rows: list[PkRow]
    max_collinear: int     # largest number of the pairs on a single line
    kappa_hat: float       # observed max |m-n| / log max(m,n)


def pk_sequences(p: int) -> tuple[PowerSum, PowerSum]:
    """F(m) = m p^m + 1 and G(n) = p^n + 1."""
    F = PowerSum.of(([0, 1], p), ([1], 1))
    G = PowerSum.of(([1], p), ([1], 1))
    return F, G


def run_example_pk(p: int, epsilon: Fraction, kmax: int,
                   precision: int = DEFAULT_PRECISION) -> PkReport:
    from .arith import is_prime

    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    epsilon = Fraction(epsilon)
    if LogReal({p: Fraction(1)}).cmp(epsilon, precision) <= 0:
        raise DomainError("epsilon must be smaller than log p")
    F, G = pk_sequences(p)
    rows = []
    points = []
    kappa_hat = 0.0
    for k in range(1, kmax + 1):
        m = p**k
        n = p**k + k
        fv, gv = F.eval(m), G.eval(n)
        lhs = log_gcd(fv, gv).value
        threshold = epsilon * n
        flagged = lhs.cmp(threshold, precision) > 0
        # |m - n| = k <= 2 log2 max = exact integer check 2^k <= max^2
        in_tube = 2 ** abs(m - n) <= max(m, n) ** 2
        rows.append(PkRow(k, m, n, fv == gv, lhs, threshold, flagged, in_tube))
        points.append((m, n))
        kappa_hat = max(kappa_hat, k / LogReal.log_of_int(n).to_float())
    max_col = _max_collinear(points)
    return PkReport(p, epsilon, rows, max_col, kappa_hat)


def _max_collinear(points: list[tuple[int, int]]) -> int:
    if len(points) < 3:
        return len(points)
    best = 2
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            (x1, y1), (x2, y2) = points[i], points[j]
            count = 2
            for k2 in range(j + 1, len(points)):
                x3, y3 = points[k2]
                if (x2 - x1) * (y3 - y1) == (y2 - y1) * (x3 - x1):
                    count += 1
            best = max(best, count)
    return best


# ---------------------------------------------------------------------
# sharpness of the linear delta dependence
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class SharpnessRow:
    m: int
    n: int
    h_P: LogReal
    h_sbar_P: LogReal
    lhs: LogReal           # generalized log gcd of (x+1, u(x+1))
    bound_ok: bool         # lhs >= delta/2 * h(P)
    ratio: float           # lhs / (delta * h(P)), lands in [1/2, 1]


@dataclass
class SharpnessReport:
    p: int
    delta: Fraction
    rows: list[SharpnessRow]
    skipped: list[tuple[int, str]]


def sharpness_window_holds(p: int, m: int, n: int, delta: Fraction,
                           precision: int = DEFAULT_PRECISION):
    """Exact check of delta/2 * h(P) <= h_sbar(P) <= delta * h(P) for
    P = (p^m, p^n (p^m + 1)) with S = {oo, p}."""
    S = PlaceSet.of(p)
    x = Fraction(p) ** m
    P = TorusPoint([x, Fraction(p) ** n * (x + 1)])
    hP = torus_height(P)
    hbar = h_sbar(P, S)
    upper = (Fraction(delta) * hP - hbar).sign(precision) >= 0
    lower = (hbar - Fraction(delta) / 2 * hP).sign(precision) >= 0
    return lower and upper, P, hP, hbar


def run_sharpness(p: int, delta: Fraction, trials: int, m_start: int = 4,
                  n_cap: int = 10_000,
                  precision: int = DEFAULT_PRECISION) -> SharpnessReport:
    from .arith import is_prime

    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise DomainError("delta must lie in (0, 1)")
    S = PlaceSet.of(p)
    rows: list[SharpnessRow] = []
    skipped: list[tuple[int, str]] = []
    m = m_start
    while len(rows) < trials:
        # the window in n is roughly [m (1-delta)/delta, m (2-delta)/delta];
        # walk n upward from below with the exact predicate
        n = max(1, int(m * (1 - delta) / delta) - 2)
        found = None
        while n <= n_cap:
            ok, P, hP, hbar = sharpness_window_holds(p, m, n, delta, precision)
            if ok:
                found = (n, P, hP, hbar)
                break
            # past the upper end of the window: h_sbar < delta/2 h(P)
            if (hbar - delta / 2 * hP).sign(precision) < 0:
                break
            n += 1
        if found is None:
            skipped.append((m, "window unsatisfiable"))
            m += 1
            continue
        n, P, hP, hbar = found
        fv = P.coords[0] + 1
        gv = P.coords[1]
        lhs = log_gcd(fv, gv).value
        bound_ok = (lhs - delta / 2 * hP).sign(precision) >= 0
        denom = (delta * hP).to_float()
        rows.append(
            SharpnessRow(m, n, hP, hbar, lhs, bound_ok,
                         lhs.to_float() / denom if denom else float("nan"))
        )
        m += 1
    return SharpnessReport(p, delta, rows, skipped)


# ---------------------------------------------------------------------
# single-place decay scan
# ---------------------------------------------------------------------

@dataclass
class Rec1Report:
    epsilon: Fraction
    N: int
    violators: list[int]
    max_violator: int | None
    zero_indices: list[int]


def run_rec1_scan(F: PowerSum, v, epsilon: Fraction, N: int,
                  precision: int = DEFAULT_PRECISION) -> Rec1Report:
    """All n <= N with -log|F(n)|_v >= epsilon * n (the decay inequality
    violators); the hypothesis needs some root with |root|_v >= 1 and a
    nondegenerate F."""
    from .places import Place, valuation

    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    if F.is_degenerate():
        raise DomainError("degenerate recurrence")
    if F.is_zero:
        raise DomainError("zero recurrence")
    if v.is_archimedean:
        if not any(abs(r) >= 1 for r in F.roots):
            raise DomainError("every root is small at the archimedean place")
    else:
        if not any(valuation(r, v.prime) <= 0 for r in F.roots):
            raise DomainError(f"every root is small at {v}")
    violators = []
    zeros = []
    for n in range(N + 1):
        val = F.eval(n)
        if val == 0:
            zeros.append(n)
            continue
        if v.is_archimedean:
            neg_log = -LogReal.log_of_fraction(val)
        else:
            w = valuation(val, v.prime)
            neg_log = LogReal({v.prime: Fraction(w)})
        if neg_log.cmp(epsilon * n, precision) >= 0:
            violators.append(n)
    return Rec1Report(epsilon, N, violators,
                      max(violators) if violators else None, zeros)


# ---------------------------------------------------------------------
# unit equation enumeration
# ---------------------------------------------------------------------

@dataclass
class UnitEquationReport:
    S: PlaceSet
    n: int
    bound: int
    solutions: list[tuple[Fraction, ...]]           # no vanishing proper subsum
    degenerate: list[tuple[Fraction, ...]]          # some proper subsum vanishes
    truncated: bool
    coordinate_frequency: Counter
    almost_unit_flags: dict | None                  # per-solution tuple of bools


def s_unit_values(S: PlaceSet, bound: int) -> list[Fraction]:
    """All +-prod p^e with p in S and |e| <= bound, canonically ordered."""
    vals = [Fraction(1)]
    for p in S.finite_primes:
        vals = [
            v * Fraction(p) ** e for v in vals for e in range(-bound, bound + 1)
        ]
    vals = sorted(set(vals))
    return sorted([v for v in vals] + [-v for v in vals])


def _proper_subsum_vanishes(x: tuple[Fraction, ...]) -> bool:
    n = len(x)
    for size in range(1, n):
        for subset in itertools.combinations(range(n), size):
            if sum(x[i] for i in subset) == 0:
                return True
    return False


# ---------------------------------------------------------------------
# combinatorial self-verification sweep
# ---------------------------------------------------------------------

def random_form(rng, nvars: int, degree: int, max_terms: int = 4) -> MultiPoly:
    """Sparse random homogeneous form with small nonzero integer
    coefficients."""
    from .hilbert import monomials_exact

    monos = monomials_exact(nvars, degree)
    count = min(len(monos), rng.randint(2, max_terms))
    chosen = rng.sample(monos, count)
    terms = {}
    for e in chosen:
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[e] = Fraction(c)
    return MultiPoly(nvars, terms)


def random_coprime_forms(rng, nvars: int, d1: int, d2: int,
                         tries: int = 200) -> tuple[MultiPoly, MultiPoly]:
    from .multipoly import coprime

    for _ in range(tries):
        F1 = random_form(rng, nvars, d1)
        F2 = random_form(rng, nvars, d2)
        if F1.is_zero or F2.is_zero:
            continue
        if coprime(F1, F2):
            return F1, F2
    raise RuntimeError("could not sample a coprime pair")


@dataclass
class VerifyCheck:
    name: str
    instances: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def run_hilbert_verify(seed: int = 0, pairs_per_cell: int = 5,
                       greedy_instances: int = 50) -> list[VerifyCheck]:
    """The combinatorial oracle sweep: enumeration vs closed form for the
    multi-index sum, quotient dimension formula vs brute-force rank (with
    order-sum bounds on a quotient monomial basis), and greedy dominance on
    random truncated ideals."""
    import random

    from .hilbert import (
        dim_quotient_bruteforce,
        dim_quotient_formula,
        graded_ideal_rank,
        greedy_dominance_violations,
        greedy_monomial_basis,
        monomials_exact,
        multiindex_sum,
        multiindex_sum_closed_form,
        ord_sum_check,
        truncated_ideal,
    )
    from .linalg import LinearSpan
    from .multipoly import coprime
    from .places import Place

    rng = random.Random(seed)
    checks = []

    count = fail = 0
    for nn in range(1, 6):
        for mm in range(1, 11):
            count += 1
            if multiindex_sum(nn, mm) != multiindex_sum_closed_form(nn, mm):
                fail += 1
    checks.append(VerifyCheck("multiindex-sum identity (n<=5, m<=10)", count, fail))

    count = fail = 0
    for n in (1, 2, 3):
        for d1 in (1, 2, 3):
            for d2 in (1, 2, 3):
                for _ in range(pairs_per_cell):
                    F1, F2 = random_coprime_forms(rng, n + 1, d1, d2)
                    for l in range(d1 + d2 + 4):
                        count += 1
                        if dim_quotient_formula(n, l, d1, d2) != dim_quotient_bruteforce(F1, F2, l):
                            fail += 1
    checks.append(
        VerifyCheck("quotient dimension formula vs brute-force rank", count, fail)
    )

    count = fail = 0
    for n in (2, 3):
        for d1 in (1, 2):
            for d2 in (1, 2):
                F1, F2 = random_coprime_forms(rng, n + 1, d1, d2)
                m = d1 + d2 + 1
                # quotient monomial basis at degree m by greedy completion
                cols = {e: j for j, e in enumerate(monomials_exact(n + 1, m))}
                span = LinearSpan(len(cols))
                for F in (F1, F2):
                    for a in monomials_exact(n + 1, m - F.degree()):
                        row = [Fraction(0)] * len(cols)
                        for e, c in F.terms.items():
                            row[cols[tuple(x + y for x, y in zip(a, e))]] = c
                        span.add(row)
                B = []
                for e in monomials_exact(n + 1, m):
                    row = [Fraction(0)] * len(cols)
                    row[cols[e]] = Fraction(1)
                    if span.add(row):
                        B.append(e)
                for i in range(n + 1):
                    count += 1
                    if not ord_sum_check(B, i, d1, d2, m, n):
                        fail += 1
    checks.append(VerifyCheck("order-sum bound on quotient bases", count, fail))

    count = fail = 0
    places = [Place.archimedean(), Place.finite(2), Place.finite(3)]
    made = 0
    while made < greedy_instances:
        d1, d2 = rng.randint(1, 2), rng.randint(1, 2)

        def rand_affine(d):
            # affine polynomial of degree <= d in 2 variables
            from .hilbert import monomials_upto

            monos = monomials_upto(2, d)
            terms = {}
            for e in rng.sample(monos, min(len(monos), rng.randint(2, 4))):
                terms[e] = Fraction(rng.choice([-2, -1, 1, 2]))
            return MultiPoly(2, terms)

        f, g = rand_affine(d1), rand_affine(d2)
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
        v = rng.choice(places)
        T = truncated_ideal(f, g, m)
        if T.Nprime == 0:
            continue
        gb = greedy_monomial_basis(T, u, v)
        made += 1
        count += 1
        if greedy_dominance_violations(gb):
            fail += 1
    checks.append(VerifyCheck("greedy dominance (random instances)", count, fail))
    return checks


# ---------------------------------------------------------------------
# unit equation enumeration
# ---------------------------------------------------------------------

def solve_unit_equation(S: PlaceSet, n: int, exponent_bound: int,
                        delta: Fraction | None = None,
                        budget: int = 2_000_000) -> UnitEquationReport:
    """Exhaustive tuples (x_0, ..., x_n) of S-units from the exponent box
    with x_0 + ... + x_n = 1; tuples with a vanishing proper subsum are
    listed separately.  Hitting the budget yields a truncated report."""
    if n < 1 or exponent_bound < 1:
        raise DomainError("need n >= 1 and exponent_bound >= 1")
    values = s_unit_values(S, exponent_bound)
    value_set = set(values)
    total = len(values) ** n
    truncated = total > budget
    solutions = []
    degenerate = []
    count = 0
    for head in itertools.product(values, repeat=n):
        count += 1
        if count > budget:
            break
        last = 1 - sum(head)
        if last not in value_set:
            continue
        x = tuple(head) + (last,)
        if _proper_subsum_vanishes(x):
            degenerate.append(x)
        else:
            solutions.append(x)
    solutions.sort()
    degenerate.sort()
    freq = Counter()
    for x in solutions:
        freq.update(x)
    flags = None
    if delta is not None:
        cfg = AlmostUnitConfig(S, Fraction(delta))
        flags = {
            x: tuple(is_almost_unit(c, cfg) for c in x) for x in solutions
        }
    return UnitEquationReport(
        S, n, exponent_bound, solutions, degenerate, truncated, freq, flags
    )

"""Global pair search (Method B) and Method-A refinement.

For a pair (k, s) the key coefficient is

    c(k, s) = ln 2 - ln gamma(k)/phi(k) - ln gamma(s)/phi(s),

an exact rational combination of logarithms of primes, so its sign (and
in particular exact vanishing, which happens for (4, 4)) is decidable
without numerics.  Pairs with c <= 0 are *exceptional* and are handled
by Method A over F_{k,s}; non-exceptional pairs survive only when

    (ln C - ln sin(pi/k) - ln sin(pi/s)) / c(k, s) > phi([k,s]) / (2 rho)

with C = 7 for the path family and C = 8 for the star family.  The
search scans k up to k_max with a conservative float pre-filter (wide
safety margins; every reported survivor and every near-boundary discard
is re-certified with interval arithmetic), then computes the two floor
bounds per survivor with certified rounding and refines any bound above
120 through the least-N solver.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, log, pi, sin

import numpy as np

from . import balls
from .balls import PI, AlgConst, Const, E, Expr, Ln, Sin, Sqrt, certify_sign
from .bounds import BoundProblem, solve
from .cyclo import euler_phi, gamma_norm_constant
from .errors import ExceptionalPair, UndecidableError
from .fields import RealCyclotomicField, field_discriminant, norm_4sin2_closed_form

LN2 = log(2.0)
LN3_HALF = log(3.0) / 2
REFINE_THRESHOLD = 120
# absolute + relative slop for the float pre-filter; the double-precision
# evaluation of ~10 elementary terms is accurate to ~1e-12 relative, so a
# 1e-6 cushion certifies discards far beyond rounding error
FILTER_ABS = 1e-6
FILTER_REL = 1e-9


class PairKind(enum.Enum):
    GAMMA5 = "gamma5"  # constant ln 7, pairs k >= s >= 3
    GAMMA4 = "gamma4"  # constant ln 8, r in {3,4,5}, k >= 7

    @property
    def log_constant(self) -> int:
        return 7 if self is PairKind.GAMMA5 else 8

    @property
    def minimality_square(self) -> int:
        # exceptional-interval radius: 14^2 for the path family (alpha = u^2),
        # 16^2 for the star family (alpha = u-tilde)
        return 14**2 if self is PairKind.GAMMA5 else 16**2


@dataclass(frozen=True)
class PairReport:
    kind: PairKind
    k: int
    s: int
    coefficient: float
    field_degree: int
    bound_kf: int
    bound_k: int
    refined_kf: int | None
    final_bound: int
    published_bound_kf: int | None = None
    published_bound_k: int | None = None
    published_final: int | None = None

    @property
    def intermediates_match(self) -> bool | None:
        if self.published_bound_kf is None:
            return None
        return (self.bound_kf, self.bound_k) == (self.published_bound_kf, self.published_bound_k)


# intermediates printed for two pairs; (kf, k, refined, final)
PUBLISHED_PAIR_DATA = {
    (PairKind.GAMMA5, 23, 3): (281, 3091, 8, 88),
    (PairKind.GAMMA5, 31, 3): (11, 165, 8, 120),
}

PUBLISHED_EXCEPTIONAL_GAMMA5 = tuple(
    [(k, 3) for k in (3, 4, 5, 7, 8, 9, 11, 13, 17, 19)]
    + [(4, 4), (5, 4), (5, 5), (7, 5)]
)


# -- exact coefficient ------------------------------------------------------


def _log_combo(k: int, s: int) -> dict:
    """c(k, s) as {prime: rational multiplier} for sum q_p ln p."""
    combo: dict[int, Fraction] = {2: Fraction(1)}
    for x in (k, s):
        g = gamma_norm_constant(x)
        if g != 1:
            combo[g] = combo.get(g, Fraction(0)) - Fraction(1, euler_phi(x))
    return {p: q for p, q in combo.items() if q != 0}


def coefficient_expr(k: int, s: int) -> Expr:
    expr: Expr | None = None
    for p, q in sorted(_log_combo(k, s).items()):
        term = Const(q) * Ln(Const(Fraction(p)))
        expr = term if expr is None else expr + term
    return expr if expr is not None else Const(Fraction(0))


def coefficient_sign(k: int, s: int) -> str:
    """Certified sign of c(k, s); exact zero detected symbolically
    (logarithms of distinct primes are linearly independent over Q)."""
    combo = _log_combo(k, s)
    if not combo:
        return balls.EQUAL
    return certify_sign(coefficient_expr(k, s))


def is_exceptional(k: int, s: int) -> bool:
    sign = coefficient_sign(k, s)
    if sign == balls.UNDECIDED:
        raise UndecidableError(f"coefficient sign of ({k}, {s}) undecided")
    return sign != balls.GREATER


def pair_field_degree(k: int, s: int) -> int:
    g = gcd(k, s)
    rho = 2 if g in (1, 2) else 1
    # phi(lcm) = phi(k) phi(s) / phi(gcd); avoids factoring the lcm
    phi_lcm = euler_phi(k) * euler_phi(s) // euler_phi(g)
    return phi_lcm // (2 * rho)


def rhs_expr(k: int, s: int, kind: PairKind) -> Expr:
    c = Const(Fraction(kind.log_constant))
    return Ln(c) - Ln(Sin(PI / Const(Fraction(k)))) - Ln(Sin(PI / Const(Fraction(s))))


def survives(k: int, s: int, kind: PairKind) -> bool:
    """Certified check of the survival inequality for a non-exceptional pair."""
    if is_exceptional(k, s):
        raise ExceptionalPair(f"({k}, {s})")
    deg = pair_field_degree(k, s)
    slack = rhs_expr(k, s, kind) - Const(Fraction(deg)) * coefficient_expr(k, s)
    sign = certify_sign(slack)
    if sign == balls.UNDECIDED:
        raise UndecidableError(f"survival of ({k}, {s}) undecided")
    return sign == balls.GREATER


# -- exceptional pairs -------------------------------------------------------

_EXCEPTIONAL_SCAN_LIMIT = 64  # prime powers >= 64 have g <= 2 ln 64/64 < ln 2 - g(3)


def _prime_powers(limit: int) -> list[int]:
    out = []
    for x in range(3, limit):
        if gamma_norm_constant(x) != 1:
            out.append(x)
    return out


def exceptional_pairs(kind: PairKind) -> list[tuple[int, int]]:
    """All pairs with certified coefficient <= 0, in (s, k) order.

    Completeness: c(k, s) <= 0 needs g(k) + g(s) >= ln 2 with
    g(x) = ln gamma(x)/phi(x); since g(x) <= 2 ln x / x < ln 2 - g(3)
    for x >= 64, both members lie below 64 and the scan is exhaustive.
    """
    found = _all_exceptional_pairs()
    if kind is PairKind.GAMMA5:
        return list(found)
    return [(k, r) for k, r in found if r in (3, 4, 5) and k >= 7]


_EXCEPTIONAL_CACHE: tuple | None = None


def _all_exceptional_pairs() -> tuple:
    global _EXCEPTIONAL_CACHE
    if _EXCEPTIONAL_CACHE is None:
        pps = _prime_powers(_EXCEPTIONAL_SCAN_LIMIT)
        found = [
            (k, s) for s in pps for k in pps if k >= s and is_exceptional(k, s)
        ]
        found.sort(key=lambda p: (p[1], p[0]))
        _EXCEPTIONAL_CACHE = tuple(found)
    return _EXCEPTIONAL_CACHE


# -- certified floors and per-pair bounds ------------------------------------


def certified_floor_ratio(num: Expr, den: Expr, cap_bits: int = 4096) -> int:
    """floor(num/den) with directed rounding; precision rises until the
    enclosure stays inside one integer step."""
    from .balls import eval_ball, mpf_to_fraction

    ratio = num / den
    bits = 64
    while bits <= cap_bits:
        ball = eval_ball(ratio, bits)
        lo = mpf_to_fraction(ball.lower)
        hi = mpf_to_fraction(ball.upper)
        flo, fhi = lo.numerator // lo.denominator, hi.numerator // hi.denominator
        if flo == fhi:
            return int(flo)
        bits *= 2
    raise UndecidableError("floor of pair ratio straddles an integer")


def pair_report(k: int, s: int, kind: PairKind, refine_above: int = REFINE_THRESHOLD) -> PairReport:
    """Method-B bounds for a non-exceptional pair, refined when poor."""
    if k < s and kind is PairKind.GAMMA5:
        k, s = s, k
    if kind is PairKind.GAMMA4 and (s not in (3, 4, 5) or k < 7):
        raise ValueError("star-family pairs need r in {3, 4, 5} and k >= 7")
    if is_exceptional(k, s):
        raise ExceptionalPair(f"({k}, {s})")
    deg = pair_field_degree(k, s)
    coeff = coefficient_expr(k, s)
    rhs = rhs_expr(k, s, kind)
    bound_kf = certified_floor_ratio(rhs, Const(Fraction(deg)) * coeff)
    bound_k = bound_kf * deg
    refined = None
    final = bound_k
    if bound_k > refine_above:
        refined = refine(k, s, kind)
        final = min(bound_k, refined * deg)
    published = PUBLISHED_PAIR_DATA.get((kind, k, s))
    return PairReport(
        kind=kind, k=k, s=s,
        coefficient=_coefficient_float(k, s),
        field_degree=deg, bound_kf=bound_kf, bound_k=bound_k,
        refined_kf=refined, final_bound=final,
        published_bound_kf=published[0] if published else None,
        published_bound_k=published[1] if published else None,
        published_final=published[3] if published else None,
    )


def _coefficient_float(k: int, s: int) -> float:
    out = LN2
    for x in (k, s):
        g = gamma_norm_constant(x)
        if g != 1:
            out -= log(g) / euler_phi(x)
    return out


def refinement_problem(k: int, s: int, kind: PairKind) -> BoundProblem:
    """Method-A data over F = F_{k,s}:

    R = sqrt(N(sin^2(pi/k) sin^2(pi/s))),   B = sqrt(|disc F|),
    S = C^2 e / (2 sin^2(pi/k) sin^2(pi/s)),  C = 14 or 16.
    """
    F = RealCyclotomicField([x for x in (k, s) if x > 2])
    M = F.degree
    norm = (
        norm_4sin2_closed_form(F, k) * norm_4sin2_closed_form(F, s) / Fraction(16) ** M
    )
    r_expr = Sqrt(Const(norm))
    sin2k, sin2s = F.sin2(k), F.sin2(s)
    prod = sin2k * sin2s
    denom = AlgConst(prod) if not prod.is_rational() else Const(prod.as_rational())
    s_expr = Const(Fraction(kind.minimality_square)) * E / (2 * denom)
    disc = field_discriminant(F)
    return BoundProblem(
        m_field_degree=M,
        b_disc_root=Sqrt(Const(Fraction(disc))),
        r_ratio=r_expr,
        s_factor=s_expr,
        exceptional_count=1,
    )


def refine(k: int, s: int, kind: PairKind) -> int:
    """Least-N bound for [K : F_{k,s}] via Method A."""
    return solve(refinement_problem(k, s, kind)).least_n


def exceptional_bound(k: int, s: int, kind: PairKind) -> tuple[int, int]:
    """(least_n, degree bound) for an exceptional pair via Method A."""
    deg = pair_field_degree(k, s)
    n = refine(k, s, kind)
    return n, n * deg


# -- sieves ------------------------------------------------------------------

_SIEVE_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def sieve_tables(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(phi, g) arrays for 0..limit: Euler totients and ln gamma / phi."""
    for cached in sorted(_SIEVE_CACHE):
        if cached >= limit:
            phi, g = _SIEVE_CACHE[cached]
            return phi, g
    phi = np.arange(limit + 1, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    primes = np.flatnonzero(is_prime)
    for p in primes:
        phi[p::p] -= phi[p::p] // p
    g = np.zeros(limit + 1, dtype=np.float64)
    if len(primes):
        g[primes] = np.log(primes.astype(np.float64)) / (primes - 1).astype(np.float64)
    for p in primes[primes <= isqrt(limit)]:
        q = int(p) * int(p)
        while q <= limit:
            g[q] = log(int(p)) / int(phi[q])
            q *= int(p)
    if len(_SIEVE_CACHE) > 2:
        _SIEVE_CACHE.clear()
    _SIEVE_CACHE[limit] = (phi, g)
    return phi, g


@dataclass(frozen=True)
class SearchResult:
    kind: PairKind
    k_max: int
    survivors: tuple  # PairReport, sorted by (k, s)
    exceptional: tuple
    candidate_k_count: int
    checked_pairs: int


def _candidate_ks(kind: PairKind, k_max: int) -> np.ndarray:
    """k values that could possibly carry a surviving pair.

    Uses sin(pi/x) >= 2/x, phi([k,s]) >= phi(k), and the per-k minimum
    coefficient ln 2 - g(k) - ln(3)/2; discards are conservative by a wide
    float margin.
    """
    phi, g = sieve_tables(k_max)
    lo = 3 if kind is PairKind.GAMMA5 else 7
    k = np.arange(lo, k_max + 1, dtype=np.int64)
    cmin = LN2 - g[lo : k_max + 1] - LN3_HALF
    if kind is PairKind.GAMMA5:
        rhs_max = log(kind.log_constant) + 2.0 * np.log(k / 2.0)
    else:
        rhs_max = log(kind.log_constant) + np.log(k / 2.0) + log(5.0 / 2.0)
    budget = 4.0 * rhs_max * (1.0 + FILTER_REL) + FILTER_ABS
    keep = (cmin <= FILTER_ABS) | (phi[lo : k_max + 1].astype(np.float64) * cmin < budget)
    return k[keep]


def search(kind: PairKind, k_max: int = 10**7, jobs: int = 1) -> SearchResult:
    """All non-exceptional pairs passing the survival inequality.

    The float phase only prunes with wide margins; every reported
    survivor is certified by interval arithmetic, and near-boundary pairs
    are certified individually before being kept or discarded.  Results
    are deterministic and independent of `jobs` (workers only parallelize
    the certification step).
    """
    if k_max < 31:
        raise ValueError("k_max must cover the known argmax (>= 31)")
    phi, g = sieve_tables(k_max)
    exceptional = set(exceptional_pairs(kind))
    candidates = _candidate_ks(kind, k_max)
    near: list[tuple[int, int]] = []
    checked = 0
    for k in candidates.tolist():
        if kind is PairKind.GAMMA5:
            s = np.arange(3, k + 1, dtype=np.int64)
        else:
            s = np.array([3, 4, 5], dtype=np.int64)
        coeff = LN2 - g[k] - g[s]
        gcds = np.gcd(s, k)
        rho = np.where((gcds == 1) | (gcds == 2), 2, 1)
        deg = phi[k] * phi[s] // phi[gcds] // (2 * rho)
        rhs = log(kind.log_constant) - log(sin(pi / k)) - np.log(np.sin(pi / s))
        slack = rhs - coeff * deg
        margin = FILTER_ABS + FILTER_REL * (np.abs(rhs) + np.abs(coeff) * deg)
        mask = (slack > -margin) & (coeff > FILTER_ABS)
        checked += len(s)
        for si in s[mask].tolist():
            if (k, si) not in exceptional:
                near.append((k, si))
        # coefficients that look nonpositive must be known exceptional pairs
        for si in s[coeff <= FILTER_ABS].tolist():
            if (k, si) not in exceptional:
                if not is_exceptional(k, si):
                    near.append((k, si))
    survivors = []
    confirm = _certify_batch(near, kind, jobs)
    for (k, si), ok in sorted(zip(near, confirm)):
        if ok:
            survivors.append(pair_report(k, si, kind))
    survivors.sort(key=lambda r: (r.k, r.s))
    return SearchResult(
        kind=kind, k_max=k_max, survivors=tuple(survivors),
        exceptional=tuple(sorted(exceptional, key=lambda p: (p[1], p[0]))),
        candidate_k_count=len(candidates), checked_pairs=checked,
    )


def _certify_batch(pairs, kind: PairKind, jobs: int) -> list[bool]:
    if jobs <= 1 or len(pairs) < 8:
        return [survives(k, s, kind) for k, s in pairs]
    import concurrent.futures as cf

    with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_survives_star, [(k, s, kind.value) for k, s in pairs]))


def _survives_star(args) -> bool:
    k, s, kind_value = args
    return survives(k, s, PairKind(kind_value))


# -- global bounds -------------------------------------------------------------


@dataclass(frozen=True)
class GlobalBound:
    kind: PairKind
    maximum: int
    argmax: tuple
    search_result: SearchResult | None
    exceptional_bounds: tuple
    method_a_small_k_max: int | None = None


def global_bound(kind: PairKind, k_max: int = 10**7, jobs: int = 1) -> GlobalBound:
    """Family maximum over exceptional pairs (Method A) and surviving
    non-exceptional pairs (Method B, refined when above 120)."""
    if kind is PairKind.GAMMA4 and k_max < 7:
        from .graphs import Family, family_bound

        table = family_bound(Family.G4, range(2, k_max + 1))
        case = table.argmax
        return GlobalBound(kind=kind, maximum=table.maximum,
                           argmax=(case.k, case.s, case.r), search_result=None,
                           exceptional_bounds=(), method_a_small_k_max=table.maximum)
    best = 0
    arg = None
    exc_rows = []
    for k, s in exceptional_pairs(kind):
        n, bound = exceptional_bound(k, s, kind)
        exc_rows.append((k, s, n, bound))
        if bound > best:
            best, arg = bound, (k, s)
    small_k_max = None
    if kind is PairKind.GAMMA4:
        from .graphs import Family, family_bound

        table = family_bound(Family.G4, range(2, 7))
        small_k_max = table.maximum
        if table.maximum > best:
            case = table.argmax
            best, arg = table.maximum, (case.k, case.s, case.r)
    result = search(kind, k_max=k_max, jobs=jobs)
    for report in result.survivors:
        if report.final_bound > best:
            best, arg = report.final_bound, (report.k, report.s)
    return GlobalBound(kind=kind, maximum=best, argmax=arg, search_result=result,
                       exceptional_bounds=tuple(exc_rows),
                       method_a_small_k_max=small_k_max)


def tail_void_certificate(k_max: int = 10**7) -> dict:
    """Why no pair with k > k_max survives: phi(k) >= 0.19439 k / ln ln k
    for k >= 6, the minimum non-exceptional coefficient is the (23, 3)
    value, and the survival inequality forces phi(k) below a logarithmic
    budget.  Returns the two sides at k = k_max (slack must be > 1)."""
    c_min = _coefficient_float(23, 3)
    phi_lower = 0.19439 * k_max / log(log(k_max))
    budget = 4.0 * (log(8) + 2.0 * log(k_max / 2.0)) / c_min
    return {
        "k_max": k_max,
        "phi_lower_bound": phi_lower,
        "survival_budget": budget,
        "void": phi_lower > budget,
        "min_nonexceptional_coefficient": c_min,
    }

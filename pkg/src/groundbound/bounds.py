"""Least-N solver for the degree-bound inequality.

Given positive data (M, B, R, S) with R < 1, find the least natural N with

    N ln(1/R) - M ln(2N + 2) - ln B >= ln S,

then [K:F] <= N and [K:Q] <= N*M (or N*M/m when m > 1 exceptional
embeddings were used).  All comparisons are certified with adaptive
interval arithmetic; S is replaced by 1 when S <= 1, which keeps the
conclusion valid and the logarithm nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import balls
from .balls import Const, Expr, Ln, certify_compare, certify_sign, sqrt
from .errors import HypothesisViolated, UndecidableError
from .fields import RealCyclotomicField, field_discriminant

SOLVE_LIMIT = 1_000_000


@dataclass(frozen=True)
class BoundProblem:
    """The quadruple (M, B, R, S) plus the exceptional-interval count m."""

    m_field_degree: int
    b_disc_root: Expr
    r_ratio: Expr
    s_factor: Expr
    exceptional_count: int = 1

    def __post_init__(self):
        if self.m_field_degree < 1:
            raise ValueError("M must be >= 1")
        if self.exceptional_count < 1:
            raise ValueError("m must be >= 1")


@dataclass(frozen=True)
class BoundResult:
    least_n: int
    degree_bound: int
    problem: BoundProblem


@dataclass(frozen=True)
class IntervalSystem:
    """Rational base intervals per embedding plus exceptional intervals.

    `base` maps each embedding of the field to a rational interval
    [a_sigma, b_sigma]; `exceptional` lists (embedding, [s_i, t_i]) pairs
    for the embeddings of F(alpha) that escape their base interval.
    """

    field: RealCyclotomicField
    base: dict
    exceptional: list = field(default_factory=list)

    def __post_init__(self):
        embeddings = self.field.embeddings()
        if set(self.base) != set(embeddings):
            raise ValueError("base intervals must cover every embedding exactly once")
        if len(self.exceptional) < 1:
            raise ValueError("at least one exceptional interval is required")


def assemble(system: IntervalSystem) -> BoundProblem:
    """Build (M, B, R, S) from rational interval data.

    R^2 = prod (b-a)/4 (must be certified < 1); S multiplies one factor
    2 e r_i / (b_sigma_i - a_sigma_i) per exceptional interval, with
    r_i = max(|t_i - a_sigma_i|, |b_sigma_i - s_i|).
    """
    prod = Fraction(1)
    for emb, (a, b) in system.base.items():
        a, b = Fraction(a), Fraction(b)
        if b <= a:
            raise ValueError(f"empty base interval for {emb}")
        prod *= (b - a) / 4
    if prod >= 1:
        raise HypothesisViolated(f"prod (b-a)/4 = {prod} >= 1")
    r_expr = sqrt(Const(prod))

    s_rational = Fraction(1)
    for emb, (s_i, t_i) in system.exceptional:
        a, b = map(Fraction, system.base[emb])
        r_i = max(abs(Fraction(t_i) - a), abs(b - Fraction(s_i)))
        s_rational *= 2 * r_i / (b - a)
    m = len(system.exceptional)
    s_expr = Const(s_rational) * balls.ExpNode(Const(Fraction(m)))

    disc = field_discriminant(system.field)
    return BoundProblem(
        m_field_degree=system.field.degree,
        b_disc_root=sqrt(Const(Fraction(disc))),
        r_ratio=r_expr,
        s_factor=s_expr,
        exceptional_count=m,
    )


def solve(problem: BoundProblem, precision_cap: int = balls.DEFAULT_CAP_BITS) -> BoundResult:
    """Least N satisfying the inequality, with N-1 certified to fail.

    The scan starts at N = 1; every rejection and the final acceptance
    are certified comparisons (UNDECIDED raises UndecidableError).
    """
    sign_r = certify_compare(problem.r_ratio, Const(Fraction(1)), cap_bits=precision_cap)
    if sign_r != balls.LESS:
        raise HypothesisViolated(f"R must be certified < 1 (got {sign_r})")

    ln_inv_r = -Ln(problem.r_ratio)
    ln_b = Ln(problem.b_disc_root)
    # S <= 1 would make ln S negative; the theorem's proof assumes S > 1,
    # so clamp conservatively (but never on an undecided comparison).
    s_cmp = certify_compare(problem.s_factor, Const(Fraction(1)), cap_bits=precision_cap)
    if s_cmp == balls.UNDECIDED:
        raise UndecidableError("S vs 1 undecided below the precision cap")
    ln_s = Ln(problem.s_factor) if s_cmp == balls.GREATER else Const(Fraction(0))

    m_deg = Fraction(problem.m_field_degree)
    for n in range(1, SOLVE_LIMIT + 1):
        lhs = (
            Const(Fraction(n)) * ln_inv_r
            - Const(m_deg) * Ln(Const(Fraction(2 * n + 2)))
            - ln_b
            - ln_s
        )
        sign = certify_sign(lhs, cap_bits=precision_cap)
        if sign == balls.UNDECIDED:
            raise UndecidableError(
                f"inequality at N={n} undecided below {precision_cap} bits"
            )
        if sign != balls.LESS:  # >= 0 certified (GREATER or exact EQUAL)
            bound = n * problem.m_field_degree // problem.exceptional_count
            return BoundResult(least_n=n, degree_bound=bound, problem=problem)
    raise UndecidableError(f"no solution found below N = {SOLVE_LIMIT}")

"""Combinatorial-polytope and Fuchsian-group bounds.

Everything in the dimension elimination is exact rational arithmetic
(the n = 10 case is a tie, 180 vs 180, and must not depend on rounding).
The Takeuchi degree bound uses the quoted decimal constants exactly and
certified rounding for the final floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .balls import PI, Const, Ln, Pow, as_expr, eval_ball, exact_value
from .errors import InadmissibleQuery, InadmissibleSignature, UndecidableError

TAKEUCHI_A = Fraction("29.099")
TAKEUCHI_B = Fraction("8.3185")


@dataclass(frozen=True)
class FaceAverageQuery:
    i: int
    k: int
    m: int

    def validate(self):
        if not (0 <= self.i <= self.k and 2 <= self.k and 2 * self.k - 1 <= self.m):
            raise InadmissibleQuery(f"(i, k, m) = ({self.i}, {self.k}, {self.m})")


def face_average_bound(i: int, k: int, m: int) -> Fraction:
    """Upper bound for the average number of i-faces in k-faces of a
    simple m-polytope:

        C(m-i, k-i) * (C([m/2], i) + C(m-[m/2], i))
        -------------------------------------------
              C([m/2], k) + C(m-[m/2], k)
    """
    FaceAverageQuery(i, k, m).validate()
    h = m // 2
    num = comb(m - i, k - i) * (comb(h, i) + comb(m - h, i))
    den = comb(h, k) + comb(m - h, k)
    return Fraction(num, den)


def narrow_face_vertex_bound(n: int) -> Fraction:
    """Vertex-average bound 4 + 4/(n-2) (n even) or 4 + 4/(n-3) (n odd)
    for 2-faces of a narrow face of an n-dimensional chamber."""
    if n < 4:
        raise InadmissibleQuery(f"n = {n} < 4")
    return Fraction(4) + (Fraction(4, n - 2) if n % 2 == 0 else Fraction(4, n - 3))


def narrow_face_note(n: int) -> str:
    """Reporting helper for the strict '< 5' threshold at small n."""
    bound = narrow_face_vertex_bound(n)
    if bound < 5:
        return f"bound {bound} < 5; triangle or quadrangle face forced"
    if bound == 5:
        return "< 5 not satisfied; quadrangle/triangle face forced for n >= 6 since bound <= 5"
    return f"bound {bound} > 5; no small-face conclusion"


@dataclass(frozen=True)
class TakeuchiInput:
    genus: int
    periods: int
    a: Fraction = TAKEUCHI_A
    b: Fraction = TAKEUCHI_B

    def weight(self) -> int:
        return 2 * self.genus + self.periods - 2


@dataclass(frozen=True)
class ExistenceCheck:
    n: int
    lhs: Fraction
    rhs: Fraction
    holds: bool


def counting_chain(n: int) -> dict:
    """Verbose breakdown of the non-right-angle counting argument.

    vertex_factor * alpha_0 >= A >= (5 - bound) * alpha_2 together with
    alpha_0 * edges = alpha_2 * bound assemble into the final inequality
    bound * (edges + vertex_factor_term) > 5 * edges.
    """
    if n < 4:
        raise InadmissibleQuery(f"n = {n} < 4")
    bound = narrow_face_vertex_bound(n)
    edges = Fraction((n - 1) * (n - 2), 2)
    vertex_factor = Fraction((n - 1) // 2)
    half = Fraction(n - 2, 2) if n % 2 == 0 else Fraction(n - 1, 2)
    check = existence_inequality(n)
    return {
        "vertex_average_bound": bound,
        "edges_per_vertex_pairs": edges,
        "angles_per_vertex_cap": vertex_factor,
        "assembled_half_term": half,
        "lhs": check.lhs,
        "rhs": check.rhs,
        "holds": check.holds,
    }


def existence_inequality(n: int) -> ExistenceCheck:
    """The counting inequality whose failure eliminates dimension n:

        (4 + 4/(n-2)) ((n-1)(n-2)/2 + (n-2)/2) > 5 (n-1)(n-2)/2   (n even)
        (4 + 4/(n-3)) ((n-1)(n-2)/2 + (n-1)/2) > 5 (n-1)(n-2)/2   (n odd)

    holds=True means existence is not yet contradicted.
    """
    if n < 4:
        raise InadmissibleQuery(f"n = {n} < 4")
    edges = Fraction((n - 1) * (n - 2), 2)
    half = Fraction(n - 2, 2) if n % 2 == 0 else Fraction(n - 1, 2)
    lhs = narrow_face_vertex_bound(n) * (edges + half)
    rhs = 5 * edges
    return ExistenceCheck(n=n, lhs=lhs, rhs=rhs, holds=lhs > rhs)


def max_admissible_dimension(n_max: int) -> int:
    """Largest n <= n_max for which the existence inequality still holds."""
    if n_max < 10:
        raise InadmissibleQuery(f"n_max = {n_max} < 10")
    best = 0
    for n in range(4, n_max + 1):
        if existence_inequality(n).holds:
            best = n
    return best


def takeuchi_c(g: int, t: int):
    """C(g, t) = 2^(2g+t-2) * (2g+t-2)^(2/3) as a certified expression."""
    w = 2 * g + t - 2
    if w < 1:
        raise InadmissibleSignature(f"2g + t - 2 = {w} < 1")
    return Const(Fraction(2**w)) * Pow(Const(Fraction(w)), Fraction(2, 3))


def takeuchi_bound(g: int, t: int) -> int:
    """Degree bound n0 = floor((b + ln C(g,t)) / ln(a / (2 pi)^(4/3)))."""
    if g < 0 or t < 1:
        raise InadmissibleSignature(f"(g, t) = ({g}, {t})")
    num = Const(TAKEUCHI_B) + Ln(takeuchi_c(g, t))
    den = Ln(Const(TAKEUCHI_A) / Pow(Const(2) * PI, Fraction(4, 3)))
    return certified_floor(num / den)


def fuchsian_t_bound(area_bound) -> int:
    """Largest t with 2 pi (t - 2 - t/2) <= area_bound.

    Accepts an expression (e.g. 128*pi/3); exact rational multiples of pi
    are resolved exactly, including ties such as area = 2 pi.
    """
    area = as_expr(area_bound)
    # 2 pi (t/2 - 2) <= area  <=>  pi (t - 4) <= area
    ratio = area / PI + Const(Fraction(4))
    over_pi = _rational_over_pi(area)
    if over_pi is not None:
        q = over_pi + 4
        return int(q.numerator // q.denominator)
    t = certified_floor(ratio)
    # floor of an exact integer value cannot be certified by intervals
    # alone; certified_floor raises in that case, so reaching here is fine
    return t


def _rational_over_pi(expr) -> Fraction | None:
    """Fraction q with expr == q * pi, if syntactically recognizable."""
    from . import balls

    if isinstance(expr, balls.Mul):
        for a, b in ((expr.left, expr.right), (expr.right, expr.left)):
            if isinstance(b, balls._PiConst):
                q = exact_value(a)
                if isinstance(q, Fraction):
                    return q
    if isinstance(expr, balls.Div):
        inner = _rational_over_pi(expr.left)
        if inner is not None:
            q = exact_value(expr.right)
            if isinstance(q, Fraction) and q != 0:
                return inner / q
    if isinstance(expr, balls._PiConst):
        return Fraction(1)
    return None


def certified_floor(expr, cap_bits: int = 4096) -> int:
    """floor(expr) with the enclosing interval certified inside one integer
    step; raises UndecidableError when the value sits on an integer that
    interval arithmetic cannot separate."""
    expr = as_expr(expr)
    exact = exact_value(expr)
    if isinstance(exact, Fraction):
        return exact.numerator // exact.denominator
    bits = 64
    while bits <= cap_bits:
        ball = eval_ball(expr, bits)
        from .balls import mpf_to_fraction

        lo = mpf_to_fraction(ball.lower)
        hi = mpf_to_fraction(ball.upper)
        flo = lo.numerator // lo.denominator
        fhi = hi.numerator // hi.denominator
        if flo == fhi:
            return int(flo)
        bits *= 2
    raise UndecidableError("floor straddles an integer below the precision cap")

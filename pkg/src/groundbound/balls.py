"""Certified real evaluation: expression trees, interval balls, comparisons.

Expressions are immutable trees over exact leaves (rationals, cyclotomic
elements, algebraic reals, pi, e) with ln/exp/sqrt/sin and rational-power
nodes.  `eval_ball` encloses the exact value in an outward-rounded interval
computed with mpmath's interval arithmetic; `certify_compare` decides
orderings adaptively, doubling precision up to a cap, with an exact path
for algebraic equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import iv, mp

from .algreal import AlgebraicReal
from .cyclo import CycloElement
from .errors import DomainError, UndecidableError

DEFAULT_START_BITS = 64
DEFAULT_CAP_BITS = 4096

LESS = "LESS"
GREATER = "GREATER"
EQUAL = "EQUAL"
UNDECIDED = "UNDECIDED"


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of an mpf (mpf values are dyadic)."""
    raw = x._mpf_ if hasattr(x, "_mpf_") else mpmath.mpf(x)._mpf_
    sign, man, exponent, _ = raw
    if man == 0 and exponent == 0:
        return Fraction(0)
    value = Fraction(int(man)) * (Fraction(2) ** exponent)
    return -value if sign else value


@dataclass(frozen=True)
class Ball:
    """Interval enclosure of a real number.

    `lower` and `upper` are exact dyadic endpoints (every mpf is exact);
    `center` and `radius` are derived views with the radius padded so
    that [center - radius, center + radius] always covers [lower, upper].
    """

    lower: mpmath.mpf
    upper: mpmath.mpf
    precision_bits: int

    @property
    def center(self):
        with mp.workprec(self.precision_bits + 32):
            return (mp.mpf(self.lower) + mp.mpf(self.upper)) / 2

    @property
    def radius(self):
        lo, hi = mpf_to_fraction(self.lower), mpf_to_fraction(self.upper)
        center = mpf_to_fraction(self.center)
        spread = max(hi - center, center - lo, Fraction(0))
        with mp.workprec(64):
            return mp.mpf(spread.numerator) / mp.mpf(spread.denominator) * (1 + mp.mpf(2) ** -40)

    def contains(self, q) -> bool:
        """Exact containment test for a rational (or float) value."""
        if isinstance(q, (int, float)):
            q = Fraction(q)
        return mpf_to_fraction(self.lower) <= q <= mpf_to_fraction(self.upper)

    def certainly_positive(self) -> bool:
        return self.lower > 0

    def certainly_negative(self) -> bool:
        return self.upper < 0

    def __repr__(self):
        return f"Ball({mpmath.nstr(self.center, 17)} +/- {mpmath.nstr(self.radius, 5)}, bits={self.precision_bits})"


# -- expression nodes ---------------------------------------------------


class Expr:
    """Immutable real-expression tree node."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, as_expr(other))

    def __radd__(self, other):
        return Add(as_expr(other), self)

    def __sub__(self, other):
        return Sub(self, as_expr(other))

    def __rsub__(self, other):
        return Sub(as_expr(other), self)

    def __mul__(self, other):
        return Mul(self, as_expr(other))

    def __rmul__(self, other):
        return Mul(as_expr(other), self)

    def __truediv__(self, other):
        return Div(self, as_expr(other))

    def __rtruediv__(self, other):
        return Div(as_expr(other), self)

    def __neg__(self):
        return Neg(self)

    def __pow__(self, exponent):
        return Pow(self, Fraction(exponent))


@dataclass(frozen=True)
class Const(Expr):
    __slots__ = ("value",)
    value: Fraction

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class AlgConst(Expr):
    """Exact cyclotomic value at the identity embedding."""

    __slots__ = ("value",)
    value: CycloElement

    def __str__(self):
        if self.value.is_rational():
            return str(self.value.as_rational())
        return f"cyclo(n={self.value.n}, {list(self.value.coeffs)})"


@dataclass(frozen=True)
class RootConst(Expr):
    __slots__ = ("value",)
    value: AlgebraicReal

    def __str__(self):
        return f"root({list(self.value.minpoly)} in {self.value.interval})"


class _PiConst(Expr):
    __slots__ = ()

    def __str__(self):
        return "pi"


class _EConst(Expr):
    __slots__ = ()

    def __str__(self):
        return "e"


PI = _PiConst()
E = _EConst()


def _binary_str(op, a, b):
    return f"({a} {op} {b})"


@dataclass(frozen=True)
class Add(Expr):
    __slots__ = ("left", "right")
    left: Expr
    right: Expr

    def __str__(self):
        return _binary_str("+", self.left, self.right)


@dataclass(frozen=True)
class Sub(Expr):
    __slots__ = ("left", "right")
    left: Expr
    right: Expr

    def __str__(self):
        return _binary_str("-", self.left, self.right)


@dataclass(frozen=True)
class Mul(Expr):
    __slots__ = ("left", "right")
    left: Expr
    right: Expr

    def __str__(self):
        return _binary_str("*", self.left, self.right)


@dataclass(frozen=True)
class Div(Expr):
    __slots__ = ("left", "right")
    left: Expr
    right: Expr

    def __str__(self):
        return _binary_str("/", self.left, self.right)


@dataclass(frozen=True)
class Neg(Expr):
    __slots__ = ("arg",)
    arg: Expr

    def __str__(self):
        return f"(-{self.arg})"


@dataclass(frozen=True)
class Sqrt(Expr):
    __slots__ = ("arg",)
    arg: Expr

    def __str__(self):
        return f"sqrt({self.arg})"


@dataclass(frozen=True)
class Ln(Expr):
    __slots__ = ("arg",)
    arg: Expr

    def __str__(self):
        return f"ln({self.arg})"


@dataclass(frozen=True)
class ExpNode(Expr):
    __slots__ = ("arg",)
    arg: Expr

    def __str__(self):
        return f"exp({self.arg})"


@dataclass(frozen=True)
class Sin(Expr):
    __slots__ = ("arg",)
    arg: Expr

    def __str__(self):
        return f"sin({self.arg})"


@dataclass(frozen=True)
class Pow(Expr):
    """arg ** exponent for an exact rational exponent; arg > 0 unless the
    exponent is a nonnegative integer."""

    __slots__ = ("arg", "exponent")
    arg: Expr
    exponent: Fraction

    def __str__(self):
        return f"({self.arg})^({self.exponent})"


def as_expr(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (int, Fraction)):
        return Const(Fraction(x))
    if isinstance(x, CycloElement):
        return AlgConst(x)
    if isinstance(x, AlgebraicReal):
        return RootConst(x)
    raise TypeError(f"cannot build an expression from {x!r}")


def ln(x) -> Expr:
    return Ln(as_expr(x))


def exp(x) -> Expr:
    return ExpNode(as_expr(x))


def sqrt(x) -> Expr:
    return Sqrt(as_expr(x))


def sin(x) -> Expr:
    return Sin(as_expr(x))


# -- interval evaluation -------------------------------------------------


def _iv_fraction(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _iv_cyclo(x: CycloElement):
    beta = 2 * iv.cos(2 * iv.pi / x.n)
    acc = iv.mpf(0)
    for c in reversed(x.coeffs):
        acc = acc * beta + _iv_fraction(c)
    return acc


def _iv_eval(expr: Expr, bits: int):
    if isinstance(expr, Const):
        return _iv_fraction(expr.value)
    if isinstance(expr, AlgConst):
        return _iv_cyclo(expr.value)
    if isinstance(expr, RootConst):
        lo, hi = expr.value.refine_bits(bits + 8)
        return iv.mpf([_iv_fraction(lo).a, _iv_fraction(hi).b])
    if isinstance(expr, _PiConst):
        return +iv.pi
    if isinstance(expr, _EConst):
        return +iv.e
    if isinstance(expr, Add):
        return _iv_eval(expr.left, bits) + _iv_eval(expr.right, bits)
    if isinstance(expr, Sub):
        return _iv_eval(expr.left, bits) - _iv_eval(expr.right, bits)
    if isinstance(expr, Mul):
        return _iv_eval(expr.left, bits) * _iv_eval(expr.right, bits)
    if isinstance(expr, Div):
        denom = _iv_eval(expr.right, bits)
        if denom.a <= 0 <= denom.b:
            raise _Inconclusive("division by an interval containing zero")
        return _iv_eval(expr.left, bits) / denom
    if isinstance(expr, Neg):
        return -_iv_eval(expr.arg, bits)
    if isinstance(expr, Sqrt):
        arg = _iv_eval(expr.arg, bits)
        if arg.b < 0:
            raise DomainError("sqrt of a certified-negative value")
        if arg.a < 0:
            raise _Inconclusive("sqrt argument not certified nonnegative")
        return iv.sqrt(arg)
    if isinstance(expr, Ln):
        arg = _iv_eval(expr.arg, bits)
        if arg.b <= 0:
            raise DomainError("ln of a certified-nonpositive value")
        if arg.a <= 0:
            raise _Inconclusive("ln argument not certified positive")
        return iv.log(arg)
    if isinstance(expr, ExpNode):
        return iv.exp(_iv_eval(expr.arg, bits))
    if isinstance(expr, Sin):
        return iv.sin(_iv_eval(expr.arg, bits))
    if isinstance(expr, Pow):
        arg = _iv_eval(expr.arg, bits)
        e = expr.exponent
        if e.denominator == 1:
            k = e.numerator
            if k >= 0:
                return arg**k
            if arg.a <= 0 <= arg.b:
                raise _Inconclusive("negative power of an interval containing zero")
            return arg**k
        if arg.b < 0:
            raise DomainError("rational power of a certified-negative value")
        if arg.a <= 0:
            raise _Inconclusive("rational power argument not certified positive")
        return iv.exp(iv.log(arg) * _iv_fraction(e))
    raise TypeError(f"unknown expression node {expr!r}")


class _Inconclusive(Exception):
    """Internal: the interval is too wide to evaluate at this precision."""


def eval_ball(expr: Expr, precision_bits: int = DEFAULT_START_BITS) -> Ball:
    """Enclose the exact value of `expr` in a `Ball`.

    Raises DomainError when a sub-expression is certified outside its
    domain and UndecidableError when the enclosure cannot be computed at
    any precision up to the cap (e.g. sqrt of an exact zero approached
    from below).
    """
    expr = as_expr(expr)
    bits = precision_bits
    last_exc = None
    while bits <= max(DEFAULT_CAP_BITS, precision_bits):
        old = iv.prec
        try:
            iv.prec = bits + 16
            val = _iv_eval(expr, bits)
            # make_mpf keeps the exact endpoint mantissas (no rounding)
            lo_raw, hi_raw = val._mpi_
            return Ball(lower=mp.make_mpf(lo_raw), upper=mp.make_mpf(hi_raw),
                        precision_bits=bits)
        except _Inconclusive as exc:
            last_exc = exc
            bits *= 2
        finally:
            iv.prec = old
    raise UndecidableError(f"evaluation failed below the precision cap: {last_exc}")


# -- exact simplification ----------------------------------------------


def exact_value(expr: Expr):
    """Fraction/CycloElement value when the tree is exactly algebraic, else None.

    Handles field operations over exact leaves, sin of rational multiples
    of pi, integer powers, sqrt of rational squares, ln(1) and exp(0).
    """
    expr = as_expr(expr)
    try:
        return _exact(expr)
    except _NotExact:
        return None


class _NotExact(Exception):
    pass


def _exact(expr: Expr):
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, AlgConst):
        v = expr.value
        return v.as_rational() if v.is_rational() else v
    if isinstance(expr, _PiConst) or isinstance(expr, _EConst):
        raise _NotExact
    if isinstance(expr, RootConst):
        lo, hi = expr.value.interval
        if lo == hi:
            return lo
        raise _NotExact
    if isinstance(expr, Add):
        return _exact(expr.left) + _exact(expr.right)
    if isinstance(expr, Sub):
        return _exact(expr.left) - _exact(expr.right)
    if isinstance(expr, Mul):
        return _exact(expr.left) * _exact(expr.right)
    if isinstance(expr, Div):
        denom = _exact(expr.right)
        if denom == 0:
            raise DomainError("division by exact zero")
        return _exact(expr.left) / denom
    if isinstance(expr, Neg):
        return -_exact(expr.arg)
    if isinstance(expr, Sin):
        coeff = _pi_multiple(expr.arg)
        if coeff is None:
            raise _NotExact
        # sin(pi*a/b) = cos(2pi*(b-2a)/(4b))
        num, den = coeff.numerator, coeff.denominator
        value = CycloElement.cos2pi(den - 2 * num, 4 * den)
        return value.as_rational() if value.is_rational() else value
    if isinstance(expr, Pow):
        e = expr.exponent
        if e.denominator == 1 and e.numerator >= 0:
            return _exact(expr.arg) ** e.numerator
        base = _exact(expr.arg)
        if e.denominator == 1:  # negative integer power
            if base == 0:
                raise DomainError("negative power of exact zero")
            return (Fraction(1) / base) ** (-e.numerator) if isinstance(base, Fraction) else base ** e.numerator
        raise _NotExact
    if isinstance(expr, Sqrt):
        arg = _exact(expr.arg)
        if isinstance(arg, Fraction):
            if arg < 0:
                raise DomainError("sqrt of a certified-negative value")
            rn, rd = _isqrt_exact(arg.numerator), _isqrt_exact(arg.denominator)
            if rn is not None and rd is not None:
                return Fraction(rn, rd)
        raise _NotExact
    if isinstance(expr, Ln):
        arg = _exact(expr.arg)
        if arg == 1:
            return Fraction(0)
        raise _NotExact
    if isinstance(expr, ExpNode):
        arg = _exact(expr.arg)
        if arg == 0:
            return Fraction(1)
        raise _NotExact
    raise _NotExact


def _pi_multiple(expr: Expr):
    """Fraction q with expr == q*pi, else None."""
    if isinstance(expr, _PiConst):
        return Fraction(1)
    if isinstance(expr, Mul):
        for a, b in ((expr.left, expr.right), (expr.right, expr.left)):
            if isinstance(a, Const) and isinstance(b, _PiConst):
                return a.value
    if isinstance(expr, Div) and isinstance(expr.right, Const):
        inner = _pi_multiple(expr.left)
        if inner is not None and expr.right.value != 0:
            return inner / expr.right.value
    if isinstance(expr, Neg):
        inner = _pi_multiple(expr.arg)
        return None if inner is None else -inner
    return None


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _algebraic_sign(value, cap_bits: int) -> int:
    """Sign of an exact nonzero Fraction/CycloElement (0 for exact zero)."""
    if isinstance(value, Fraction):
        return (value > 0) - (value < 0)
    if value.is_zero():
        return 0
    if value.is_rational():
        q = value.as_rational()
        return (q > 0) - (q < 0)
    bits = DEFAULT_START_BITS
    while bits <= cap_bits * 16:  # nonzero algebraic: guaranteed to separate
        ball = eval_ball(AlgConst(value), bits)
        if ball.certainly_positive():
            return 1
        if ball.certainly_negative():
            return -1
        bits *= 2
    raise UndecidableError("sign of cyclotomic value did not separate")


def certify_compare(
    a,
    b,
    start_bits: int = DEFAULT_START_BITS,
    cap_bits: int = DEFAULT_CAP_BITS,
) -> str:
    """Certified ordering of two real expressions.

    LESS/GREATER are returned only from disjoint enclosures; EQUAL only
    when both sides reduce to the same exact algebraic value; UNDECIDED
    only after the precision cap is exhausted.
    """
    ea, eb = as_expr(a), as_expr(b)
    diff = Sub(ea, eb)
    exact = exact_value(diff)
    if exact is not None:
        sign = _algebraic_sign(exact, cap_bits)
        return EQUAL if sign == 0 else (GREATER if sign > 0 else LESS)
    bits = start_bits
    while bits <= cap_bits:
        try:
            ball = eval_ball(diff, bits)
        except UndecidableError:
            return UNDECIDED
        if ball.certainly_positive():
            return GREATER
        if ball.certainly_negative():
            return LESS
        bits *= 2
    return UNDECIDED


def certify_sign(expr, start_bits: int = DEFAULT_START_BITS, cap_bits: int = DEFAULT_CAP_BITS) -> str:
    return certify_compare(expr, Const(Fraction(0)), start_bits, cap_bits)


def ball_str(expr, digits: int = 12, bits: int = 192) -> str:
    """Deterministic decimal rendering of an expression's ball midpoint."""
    ball = eval_ball(as_expr(expr), bits)
    with mp.workprec(bits):
        return mpmath.nstr(ball.center, digits, strip_zeros=False)

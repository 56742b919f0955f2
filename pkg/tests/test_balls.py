from fractions import Fraction

import mpmath
import pytest

from groundbound.balls import (
    EQUAL,
    GREATER,
    LESS,
    PI,
    UNDECIDED,
    Const,
    Div,
    E,
    ExpNode,
    Ln,
    Mul,
    Pow,
    Sin,
    Sqrt,
    Sub,
    certify_compare,
    eval_ball,
    exact_value,
    mpf_to_fraction,
)
from groundbound.algreal import AlgebraicReal
from groundbound.balls import RootConst
from groundbound.errors import DomainError

# frozen oracle value: ln(4/3) at 60 digits via mpmath
LN_4_3 = Fraction("0.287682072451780927439219005993827431503509710897761056506666")


def test_pi_ball_tight():
    ball = eval_ball(PI, 64)
    assert ball.radius < mpmath.mpf(2) ** -60
    with mpmath.mp.workprec(200):
        pi_ref = mpf_to_fraction(+mpmath.mp.pi)  # within 2^-200 of pi
    assert ball.contains(pi_ref)


def test_ln_one_exact_zero():
    ball = eval_ball(Ln(Const(Fraction(1))), 64)
    assert ball.contains(Fraction(0))
    assert exact_value(Ln(Const(Fraction(1)))) == 0


def test_ln2_minus_ln32_128_bits():
    expr = Sub(Ln(Const(Fraction(2))), Ln(Const(Fraction(3, 2))))
    ball = eval_ball(expr, 128)
    assert ball.radius < mpmath.mpf(2) ** -120
    assert ball.contains(LN_4_3)


def test_containment_across_precisions():
    for expr in (Mul(Sin(Div(PI, Const(Fraction(3)))), Sin(Div(PI, Const(Fraction(3))))),
                 Sqrt(Const(Fraction(9, 4))),
                 Sub(Ln(Const(Fraction(2))), Ln(Const(Fraction(3, 2))))):
        b64 = eval_ball(expr, 64)
        b256 = eval_ball(expr, 256)
        assert mpf_to_fraction(b64.lower) <= mpf_to_fraction(b256.lower)
        assert mpf_to_fraction(b256.upper) <= mpf_to_fraction(b64.upper)
    # known closed forms are contained
    assert eval_ball(Sqrt(Const(Fraction(9, 4))), 64).contains(Fraction(3, 2))
    sin2 = Mul(Sin(Div(PI, Const(Fraction(3)))), Sin(Div(PI, Const(Fraction(3)))))
    assert eval_ball(sin2, 64).contains(Fraction(3, 4))


def test_compare_examples():
    assert certify_compare(Const(Fraction(3, 4)), Const(Fraction(1))) == LESS
    coeff = (
        Ln(Const(Fraction(2)))
        - Div(Ln(Const(Fraction(31))), Const(Fraction(30)))
        - Div(Ln(Const(Fraction(3))), Const(Fraction(2)))
    )
    assert certify_compare(coeff, Const(Fraction(0))) == GREATER
    sin2 = Mul(Sin(Div(PI, Const(Fraction(3)))), Sin(Div(PI, Const(Fraction(3)))))
    assert certify_compare(sin2, Const(Fraction(3, 4))) == EQUAL


def test_monotone_certification():
    a = Ln(Const(Fraction(2)))
    b = Const(Fraction(7, 10))
    first = certify_compare(a, b, start_bits=64)
    assert first == LESS
    for bits in (128, 256, 1024):
        assert certify_compare(a, b, start_bits=bits) == first


def test_undecided_at_cap():
    # ln(4) and 2 ln(2) denote the same transcendental; intervals never separate
    assert certify_compare(
        Ln(Const(Fraction(4))), Const(Fraction(2)) * Ln(Const(Fraction(2))),
        cap_bits=256,
    ) == UNDECIDED


def test_domain_errors():
    with pytest.raises(DomainError):
        eval_ball(Ln(Const(Fraction(-1))), 64)
    with pytest.raises(DomainError):
        eval_ball(Sqrt(Const(Fraction(-4))), 64)


def test_rational_power():
    ball = eval_ball(Pow(Const(Fraction(8)), Fraction(2, 3)), 64)
    assert ball.contains(Fraction(4))
    assert exact_value(Pow(Const(Fraction(3, 2)), Fraction(2))) == Fraction(9, 4)


def test_algebraic_real_leaf():
    sqrt2 = AlgebraicReal((-2, 0, 1), (Fraction(1), Fraction(2)))
    ball = eval_ball(RootConst(sqrt2) * RootConst(sqrt2), 96)
    assert ball.contains(Fraction(2))


def test_exp_identity():
    assert exact_value(ExpNode(Const(Fraction(0)))) == 1
    ball = eval_ball(ExpNode(Const(Fraction(1))) - E, 64)
    assert ball.contains(Fraction(0))

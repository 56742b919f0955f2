import random
from fractions import Fraction as F

import pytest

from groundbound.balls import (
    Const,
    E,
    ExpNode,
    Mul,
    PI,
    Sin,
    Sqrt,
    as_expr,
    eval_ball,
    exact_value,
)
from groundbound.bounds import BoundProblem, IntervalSystem, assemble, solve
from groundbound.errors import HypothesisViolated
from groundbound.fields import RealCyclotomicField


def prob(M, B, R, S, m=1):
    return BoundProblem(M, as_expr(B), as_expr(R), as_expr(S), m)


def test_solve_unit_examples():
    r = solve(prob(1, 1, Const(F(1)) / Sqrt(Const(F(2))), Const(F(16)) * E))
    assert r.least_n == 22 and r.degree_bound == 22
    r = solve(prob(1, 1, Const(F(1, 2)), Const(F(32)) * E))
    assert r.least_n == 12 and r.degree_bound == 12


def test_solve_big_field_example():
    r315 = Sqrt(Const(F(31) * F(3) ** 15)) / Const(F(4) ** 15)
    s315 = Const(F(98)) * E / (Sin(PI / Const(F(31))) * Sin(PI / Const(F(31))) * Const(F(3, 4)))
    r = solve(prob(15, Const(F(31) ** 7), r315, s315))
    assert r.least_n == 8


def test_minimality_certified():
    # N is accepted and N-1 rejected by direct certified evaluation
    from groundbound.balls import GREATER, LESS, Ln, certify_sign

    problem = prob(1, 1, Const(F(1)) / Sqrt(Const(F(2))), Const(F(16)) * E)
    n = solve(problem).least_n

    def lhs(nn):
        return (
            Const(F(nn)) * -Ln(problem.r_ratio)
            - Const(F(problem.m_field_degree)) * Ln(Const(F(2 * nn + 2)))
            - Ln(problem.b_disc_root)
            - Ln(problem.s_factor)
        )

    assert certify_sign(lhs(n)) == GREATER
    assert certify_sign(lhs(n - 1)) == LESS


def test_assemble_g5_exceptional_example():
    field = RealCyclotomicField.rationals()
    emb = field.identity_embedding()
    system = IntervalSystem(field, {emb: (F(0), F(9, 4))}, [(emb, (F(4), F(196)))])
    p = assemble(system)
    assert p.m_field_degree == 1
    assert exact_value(p.r_ratio) == F(3, 4)
    ball = eval_ball(p.s_factor - Const(F(1568, 9)) * E, 64)
    assert ball.contains(F(0))


def test_assemble_hypothesis_violated():
    field = RealCyclotomicField.rationals()
    emb = field.identity_embedding()
    with pytest.raises(HypothesisViolated):
        assemble(IntervalSystem(field, {emb: (F(-2), F(2))}, [(emb, (F(2), F(14)))]))


def test_assemble_quadratic_field_example():
    field = RealCyclotomicField([5])
    e0, e1 = field.embeddings()
    system = IntervalSystem(
        field, {e0: (F(1), F(2)), e1: (F(0), F(1))}, [(e0, (F(2), F(14)))]
    )
    p = assemble(system)
    assert p.m_field_degree == 2
    assert exact_value(p.r_ratio) == F(1, 4)
    ball = eval_ball(p.s_factor - Const(F(26)) * E, 64)
    assert ball.contains(F(0))
    assert eval_ball(p.b_disc_root * p.b_disc_root, 64).contains(F(5))


def test_s_clamped_to_one():
    # a tiny exceptional interval can push S below 1; the solver clamps
    field = RealCyclotomicField.rationals()
    emb = field.identity_embedding()
    system = IntervalSystem(
        field, {emb: (F(0), F(2))}, [(emb, (F(0), F(1, 100)))]
    )
    p = assemble(system)
    result = solve(p)
    assert result.least_n >= 1


def test_monotonicity_random():
    rng = random.Random(20240814)
    for _ in range(12):
        M = rng.choice([1, 2, 3])
        r = F(rng.randint(10, 80), 100)
        s = F(rng.randint(2, 500))
        b = F(rng.randint(1, 40))
        base = solve(prob(M, Const(b), Const(r), Const(s) * E)).least_n
        bigger_s = solve(prob(M, Const(b), Const(r), Const(s * 4) * E)).least_n
        bigger_b = solve(prob(M, Const(b * 9), Const(r), Const(s) * E)).least_n
        r_up = r + (1 - r) / 3
        bigger_r = solve(prob(M, Const(b), Const(r_up), Const(s) * E)).least_n
        assert bigger_s >= base
        assert bigger_b >= base
        assert bigger_r >= base


def test_asymptotic_ratio():
    # for fixed R and huge S, N ~ ln S / ln(1/R) within 10%
    import math

    ln_s = 120
    r = solve(prob(1, 1, Const(F(1, 2)), ExpNode(Const(F(ln_s)))))
    ratio = r.least_n / ln_s
    assert abs(ratio - 1 / math.log(2)) / (1 / math.log(2)) < 0.10


def test_m2_division():
    s1 = Const(F(32)) * E
    r = solve(prob(1, 1, Const(F(1, 2)), Mul(s1, s1), m=2))
    assert r.least_n == 19 and r.degree_bound == 9

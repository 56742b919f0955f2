from fractions import Fraction

import pytest

from groundbound import polyint as P


def test_cyclotomic_small():
    assert P.cyclotomic(1) == (-1, 1)
    assert P.cyclotomic(2) == (1, 1)
    assert P.cyclotomic(3) == (1, 1, 1)
    assert P.cyclotomic(4) == (1, 0, 1)
    assert P.cyclotomic(12) == (1, 0, -1, 0, 1)
    assert P.cyclotomic(105)[7] == -2  # first coefficient outside {0, +-1}


def test_cos_minpoly_degree_and_value():
    from groundbound.cyclo import euler_phi

    for n in (3, 4, 5, 7, 8, 9, 12, 15, 31, 60):
        psi = P.cos_minpoly(n)
        assert P.degree(psi) == euler_phi(n) // 2
        assert psi[-1] == 1  # monic
    # psi_5(y) = y^2 + y - 1 has root 2cos(72 deg) = (sqrt5 - 1)/2
    assert P.cos_minpoly(5) == (-1, 1, 1)
    assert P.cos_minpoly(12) == (-3, 0, 1)


def test_cos_minpoly_at_two_is_gamma():
    from groundbound.cyclo import gamma_norm_constant

    for l in range(3, 121):
        assert P.peval(P.cos_minpoly(l), 2) == gamma_norm_constant(l)


def test_dickson_identity():
    import math

    for m in range(7):
        x = 2 * math.cos(0.7)
        assert abs(P.peval(P.dickson(m), x) - 2 * math.cos(m * 0.7)) < 1e-12


def test_divmod_and_gcd():
    p = P.pmul((1, 1), (2, 0, 1))  # (x+1)(x^2+2)
    q, r = P.pdivmod(p, (1, 1))
    assert r == () and q == (2, 0, 1)
    g = P.pgcd(P.pmul((1, 1), (1, 1, 1)), P.pmul((1, 1), (3, 1)))
    assert g == (1, 1)


def test_sturm_isolation():
    poly = (-2, 0, 1)  # x^2 - 2
    roots = P.isolate_real_roots(poly)
    assert len(roots) == 2
    assert P.count_real_roots(poly, Fraction(1), Fraction(2)) == 1
    # x^2 + 1 has no real roots
    assert P.isolate_real_roots((1, 0, 1)) == []


def test_squarefree_required():
    with pytest.raises(ValueError):
        P.isolate_real_roots(P.pmul((1, 1), (1, 1)))


def test_mod_p_irreducibility():
    assert P.is_irreducible_mod_p((-2, 0, 1), 3)  # x^2 - 2 mod 3
    assert not P.is_irreducible_mod_p((-1, 0, 1), 3)  # (x-1)(x+1)
    assert P.is_irreducible_mod_p((1, 1, 0, 1), 2)  # x^3 + x + 1 over F_2

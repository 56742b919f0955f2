"""Exact arithmetic in maximal real cyclotomic fields Q(cos 2pi/n).

A `CycloElement` stores rational coordinates in the power basis of
b = 2*cos(2*pi/n), whose minimal polynomial `cos_minpoly(n)` has degree
phi(n)/2 for n >= 3.  Addition, multiplication, Galois conjugation and
embedding into a larger modulus are all exact.

All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidModulus
from . import polyint as P


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidModulus(f"modulus {n} < 1")
    result, x, p = n, n, 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


@lru_cache(maxsize=None)
def gamma_norm_constant(n: int) -> int:
    """p if n = p^t > 2 for a prime p, else 1 (n >= 3).

    Equals the norm of 4*sin^2(pi/n) from Q(cos 2pi/n) down to Q.
    """
    if n < 3:
        raise InvalidModulus(f"modulus {n} < 3")
    x, p = n, 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            return p if x == 1 else 1
        p += 1
    return x  # n prime


def field_degree(n: int) -> int:
    """[Q(cos 2pi/n) : Q] = phi(n)/2 for n >= 3, 1 for n in {1, 2}."""
    return 1 if n <= 2 else euler_phi(n) // 2


class CycloElement:
    """An element of Q(cos 2pi/n), exact."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        if n < 1:
            raise InvalidModulus(f"modulus {n} < 1")
        d = field_degree(n)
        c = [Fraction(x) for x in coeffs]
        if len(c) > d:
            c = list(_reduce(tuple(c), n))
        c += [Fraction(0)] * (d - len(c))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *args):
        raise AttributeError("CycloElement is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, n: int, value) -> "CycloElement":
        return cls(n, (Fraction(value),))

    @classmethod
    def generator(cls, n: int) -> "CycloElement":
        """2*cos(2*pi/n)."""
        return cls(n, (0, 1) if field_degree(n) > 1 else (P.peval(P.cos_minpoly(n), 0) * -1,))

    @classmethod
    def cos2pi(cls, num: int, den: int, n: int | None = None) -> "CycloElement":
        """cos(2*pi*num/den) as an element of Q(cos 2pi/n), n a multiple of den."""
        num %= den
        g = gcd(num, den) if num else den
        num, den = num // g, den // g
        if n is None:
            n = den
        if n % den:
            raise InvalidModulus(f"{den} does not divide {n}")
        m = num * (n // den)
        return cls(n, P.dickson(m)) / 2

    def __getstate__(self):
        return (self.n, self.coeffs)

    def __setstate__(self, state):
        object.__setattr__(self, "n", state[0])
        object.__setattr__(self, "coeffs", state[1])

    # -- ring operations ----------------------------------------------

    def _pair(self, other):
        """Coerce to a common modulus; None signals an unsupported operand."""
        if isinstance(other, CycloElement):
            if other.n == self.n:
                return self, other
            if self.n % other.n == 0:
                return self, other.to_modulus(self.n)
            if other.n % self.n == 0:
                return self.to_modulus(other.n), other
            m = self.n * other.n // gcd(self.n, other.n)
            return self.to_modulus(m), other.to_modulus(m)
        if isinstance(other, (int, Fraction)):
            return self, CycloElement.rational(self.n, other)
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElement(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycloElement) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        prod = P.pmul(P.trim(a.coeffs), P.trim(b.coeffs))
        return CycloElement(a.n, _reduce(prod, a.n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return CycloElement(self.n, [a / Fraction(other) for a in self.coeffs])
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloElement.rational(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        a = P.cos_minpoly(self.n)
        b = P.trim(self.coeffs)
        # extended gcd over Q: s*a + t*b = g (constant)
        r0, r1 = a, b
        t0, t1 = (), (Fraction(1),)
        while r1:
            q, r = P.pdivmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, P.psub(t0, P.pmul(q, t1))
        assert P.degree(r0) == 0, "minimal polynomial must be irreducible"
        inv = P.pscale(t0, 1 / Fraction(r0[0]))
        return CycloElement(self.n, _reduce(inv, self.n))

    # -- predicates & conversions ---------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloElement):
            if self.n == other.n:
                return self.coeffs == other.coeffs
            m = self.n * other.n // gcd(self.n, other.n)
            return self.to_modulus(m).coeffs == other.to_modulus(m).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"CycloElement(n={self.n}, coeffs={self.coeffs})"

    # -- Galois action --------------------------------------------------

    def conjugate(self, a: int) -> "CycloElement":
        """Apply the automorphism 2cos(2pi/n) -> 2cos(2pi a/n), gcd(a, n) = 1."""
        if gcd(a, self.n) != 1:
            raise InvalidModulus(f"{a} not coprime to {self.n}")
        image = _generator_power_images(self.n, a % self.n)
        out = ()
        for i, c in enumerate(self.coeffs):
            if c:
                out = P.padd(out, P.pscale(image[i], c))
        return CycloElement(self.n, out)

    def to_modulus(self, m: int) -> "CycloElement":
        """Embed into Q(cos 2pi/m) for n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise InvalidModulus(f"{self.n} does not divide {m}")
        beta = P.dickson(m // self.n)  # 2cos(2pi/n) in terms of 2cos(2pi/m)
        beta = _reduce(beta, m)
        out = ()
        power = (Fraction(1),)
        for c in self.coeffs:
            if c:
                out = P.padd(out, P.pscale(power, c))
            power = _reduce(P.pmul(power, beta), m)
        return CycloElement(m, out)

    def eval_float(self) -> float:
        """Crude float value at the identity embedding (diagnostics only)."""
        import math

        b = 2 * math.cos(2 * math.pi / self.n)
        return float(sum(float(c) * b**i for i, c in enumerate(self.coeffs)))


@lru_cache(maxsize=None)
def _reduce_cached(coeffs: tuple, n: int) -> tuple:
    rem = P.pdivmod(coeffs, P.cos_minpoly(n))[1]
    return rem


def _reduce(coeffs, n: int):
    coeffs = P.trim(coeffs)
    if len(coeffs) <= field_degree(n):
        return coeffs
    return _reduce_cached(tuple(coeffs), n)


@lru_cache(maxsize=None)
def _generator_power_images(n: int, a: int) -> tuple:
    """Powers of D_a(b) mod the minimal polynomial, for conjugation."""
    img = _reduce(P.dickson(a), n)
    out = [(Fraction(1),)]
    for _ in range(field_degree(n) - 1):
        out.append(_reduce(P.pmul(out[-1], img), n))
    return tuple(out)


# -- trigonometric constructors ---------------------------------------


def cos_pi_over(l: int, n: int) -> CycloElement:
    """cos(pi/l) in Q(cos 2pi/n); requires 2l | n."""
    return CycloElement.cos2pi(1, 2 * l, n)


def cos2_pi_over(l: int, n: int) -> CycloElement:
    """cos^2(pi/l) = (1 + cos(2pi/l))/2 in Q(cos 2pi/n); requires l | n."""
    return (CycloElement.cos2pi(1, l, n) + 1) / 2


def sin2_pi_over(l: int, n: int) -> CycloElement:
    """sin^2(pi/l) = (1 - cos(2pi/l))/2 in Q(cos 2pi/n); requires l | n."""
    return (1 - CycloElement.cos2pi(1, l, n)) / 2

"""Invariants of real cyclotomic fields F = Q(cos^2(pi/l), ...).

A field is described by the moduli whose squared cosines generate it.
Moduli in {3, 4, 6} contribute rational cosines and are normalized away;
what remains is a subfield of Q(cos 2pi/n) for n = lcm(moduli), cut out
by the fixing group H = {a mod n : a = +-1 mod each modulus}.

Conventions
-----------
* degree = phi(n) / |H|, which reproduces phi(l)/2 for one modulus and
  phi([l,m]) / (2 rho(l,m)) for two.
* embeddings are residue classes of (Z/n)* modulo H, canonicalized as
  the smallest representative; the identity embedding is the class of 1.
* norms are exact products of conjugates (with a fast resultant-style
  path for linear elements of the full field); discriminants come from
  the conductor-discriminant formula over Dirichlet characters trivial
  on H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import polyint as P
from .cyclo import CycloElement, euler_phi, field_degree, gamma_norm_constant, sin2_pi_over
from .errors import ElementNotInField, InvalidModulus

RATIONAL_COSINE_MODULI = frozenset({3, 4, 6})


def invariants(l: int) -> dict:
    """phi(l) and the norm constant gamma(l) (p if l = p^t, else 1)."""
    if l < 3:
        raise InvalidModulus(f"modulus {l} < 3")
    return {"phi": euler_phi(l), "gamma": gamma_norm_constant(l)}


def compositum_info(l: int, m: int) -> dict:
    """lcm, rho and degree of Q(cos^2(pi/l), cos^2(pi/m))."""
    if l < 3 or m < 3:
        raise InvalidModulus("moduli must be >= 3")
    n = lcm(l, m)
    rho = 2 if gcd(l, m) in (1, 2) else 1
    return {"lcm": n, "rho": rho, "degree": euler_phi(n) // (2 * rho)}


@dataclass(frozen=True)
class Embedding:
    """A real embedding of the field: residue class a mod n, modulo +-H."""

    field: "RealCyclotomicField"
    representative: int

    @property
    def is_identity(self) -> bool:
        return self.representative == 1 or self.field.degree == 1

    def apply(self, x: CycloElement) -> CycloElement:
        if self.field.n == 1:
            return x
        return x.conjugate(self.representative)

    def __repr__(self):
        return f"Embedding({self.representative} mod {self.field.n})"


class RealCyclotomicField:
    """Compositum of maximal real subfields Q(cos 2pi/l)."""

    __slots__ = ("moduli", "n", "fixing_group", "degree")

    def __init__(self, moduli):
        ms = []
        for m in moduli:
            m = int(m)
            if m < 3:
                raise InvalidModulus(f"modulus {m} < 3")
            if m not in RATIONAL_COSINE_MODULI:
                ms.append(m)
        ms = sorted(set(ms))
        n = 1
        for m in ms:
            n = lcm(n, m)
        if n > 2:
            fixing = tuple(
                a
                for a in range(1, n)
                if gcd(a, n) == 1 and all(a % m in (1, m - 1) for m in ms)
            )
            degree = euler_phi(n) // len(fixing)
        else:
            n = 1
            fixing = (1,)
            degree = 1
        object.__setattr__(self, "moduli", tuple(ms))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "fixing_group", fixing)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, *a):
        raise AttributeError("RealCyclotomicField is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, RealCyclotomicField)
            and self.n == other.n
            and self.fixing_group == other.fixing_group
        )

    def __hash__(self):
        return hash((self.n, self.fixing_group))

    def __repr__(self):
        if self.degree == 1:
            return "RealCyclotomicField(Q)"
        return f"RealCyclotomicField(moduli={self.moduli}, degree={self.degree})"

    @classmethod
    def rationals(cls) -> "RealCyclotomicField":
        return cls(())

    # -- embeddings -----------------------------------------------------

    def embeddings(self) -> list[Embedding]:
        """All real embeddings, identity first, then by representative."""
        if self.n == 1:
            return [Embedding(self, 1)]
        reps = set()
        for a in range(1, self.n):
            if gcd(a, self.n) == 1:
                reps.add(self._canonical(a))
        out = sorted(reps)
        assert len(out) == self.degree
        out.remove(1)
        return [Embedding(self, 1)] + [Embedding(self, a) for a in out]

    def _canonical(self, a: int) -> int:
        orbit = []
        for h in self.fixing_group:
            v = a * h % self.n
            orbit.append(v)
            orbit.append(self.n - v)
        return min(orbit)

    def identity_embedding(self) -> Embedding:
        return Embedding(self, 1)

    # -- membership and elements ----------------------------------------

    def element(self, x) -> CycloElement:
        """Coerce a rational/CycloElement into Q(cos 2pi/n)."""
        if isinstance(x, (int, Fraction)):
            return CycloElement.rational(self.n, x)
        if isinstance(x, CycloElement):
            if x.n == self.n:
                return x
            if self.n % x.n == 0:
                return x.to_modulus(self.n)
        raise ElementNotInField(f"{x!r} does not embed in modulus {self.n}")

    def contains(self, x: CycloElement) -> bool:
        x = self.element(x)
        if self.n == 1:
            return True
        return all(x.conjugate(h) == x for h in self.fixing_group)

    def sin2(self, l: int) -> CycloElement:
        """sin^2(pi/l) as an element of the ambient Q(cos 2pi/n)."""
        if l in RATIONAL_COSINE_MODULI or l == 2:
            value = {2: Fraction(1), 3: Fraction(3, 4), 4: Fraction(1, 2), 6: Fraction(1, 4)}[l]
            return CycloElement.rational(self.n, value)
        if self.n % l:
            raise InvalidModulus(f"{l} does not divide ambient modulus {self.n}")
        return sin2_pi_over(l, self.n)


def field_norm(field: RealCyclotomicField, x) -> Fraction:
    """Exact norm N_{F/Q}(x): the product of x over all embeddings of F."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x) ** field.degree
    x = field.element(x)
    if not field.contains(x):
        raise ElementNotInField(f"{x!r} is not fixed by the fixing group")
    if field.degree == field_degree(field.n) and P.degree(P.trim(x.coeffs)) <= 1:
        # full real cyclotomic field, linear element a + b*beta:
        # N = (-b)^d * psi(-a/b) with psi the minimal polynomial of beta
        psi = P.cos_minpoly(field.n)
        d = P.degree(psi)
        a = x.coeffs[0]
        b = x.coeffs[1] if len(x.coeffs) > 1 else Fraction(0)
        if b == 0:
            return a**d
        return (-b) ** d * P.peval(psi, -a / b)
    prod = CycloElement.rational(field.n, 1)
    for emb in field.embeddings():
        prod = prod * emb.apply(x)
    if not prod.is_rational():
        raise ElementNotInField("norm did not land in Q; element not in field?")
    return prod.as_rational()


def norm_4sin2_closed_form(field: RealCyclotomicField, l: int) -> Fraction:
    """gamma(l)^(degree / (phi(l)/2)): the norm of 4 sin^2(pi/l) from F.

    Requires F to contain Q(cos 2pi/l), i.e. l one of the field's moduli
    (or a rational-cosine modulus).
    """
    if l in RATIONAL_COSINE_MODULI:
        value = {3: Fraction(3), 4: Fraction(2), 6: Fraction(1)}[l]
        return value**field.degree
    if l not in field.moduli and field.n % l:
        raise InvalidModulus(f"{l} is not a modulus of {field!r}")
    sub_degree = euler_phi(l) // 2
    if field.degree % sub_degree:
        raise InvalidModulus(f"Q(cos 2pi/{l}) is not a subfield of {field!r}")
    return Fraction(gamma_norm_constant(l)) ** (field.degree // sub_degree)


# -- conductor-discriminant ------------------------------------------------


def _unit_group_generators(n: int) -> list[tuple[int, int]]:
    """Generators (g, order) of (Z/n)* via CRT on prime powers."""
    if n <= 2:
        return []
    factors = []
    x, p = n, 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            factors.append((p, e))
        p += 1
    if x > 1:
        factors.append((x, 1))
    gens = []
    for p, e in factors:
        q = p**e
        rest = n // q
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                gens.append((_crt_lift(3, q, rest, n), 2))
            else:
                gens.append((_crt_lift(q - 1, q, rest, n), 2))
                gens.append((_crt_lift(5, q, rest, n), 2 ** (e - 2)))
        else:
            g = _primitive_root(q, p)
            gens.append((_crt_lift(g, q, rest, n), euler_phi(q)))
    return gens


def _crt_lift(g: int, q: int, rest: int, n: int) -> int:
    """Element of (Z/n)* that is g mod q and 1 mod rest."""
    if rest == 1:
        return g % n
    inv = pow(q, -1, rest)
    return (g + q * ((1 - g) * inv % rest)) % n


def _primitive_root(q: int, p: int) -> int:
    order = euler_phi(q)
    prime_factors = set()
    m, r = order, 2
    while r * r <= m:
        if m % r == 0:
            prime_factors.add(r)
            while m % r == 0:
                m //= r
        r += 1
    if m > 1:
        prime_factors.add(m)
    for g in range(2, q):
        if gcd(g, q) != 1:
            continue
        if all(pow(g, order // f, q) != 1 for f in prime_factors):
            return g
    raise RuntimeError(f"no primitive root mod {q}")


@lru_cache(maxsize=None)
def _dlog_table(n: int) -> tuple:
    """(generators, {a: exponent vector}) for (Z/n)*."""
    gens = _unit_group_generators(n)
    table = {1: tuple(0 for _ in gens)}
    frontier = [(1, tuple(0 for _ in gens))]
    # BFS over the group; sizes here are tiny (n <= a few hundred)
    while frontier:
        a, vec = frontier.pop()
        for i, (g, order) in enumerate(gens):
            b = a * g % n
            if b not in table:
                nv = list(vec)
                nv[i] = (nv[i] + 1) % order
                table[b] = tuple(nv)
                frontier.append((b, tuple(nv)))
    assert len(table) == euler_phi(n)
    return tuple(gens), table


def _characters_trivial_on(n: int, subgroup) -> list[tuple]:
    """Exponent tuples t of characters of (Z/n)* trivial on `subgroup`.

    chi_t(a) = exp(2 pi i * sum_i t_i * dlog_i(a) / order_i).
    """
    gens, table = _dlog_table(n)
    orders = [o for _, o in gens]

    def trivial_on(t, a):
        vec = table[a % n]
        return sum(Fraction(ti * vi, oi) for ti, vi, oi in zip(t, vec, orders)) % 1 == 0

    out = []

    def rec(prefix):
        if len(prefix) == len(orders):
            if all(trivial_on(prefix, h) for h in subgroup):
                out.append(tuple(prefix))
            return
        for t in range(orders[len(prefix)]):
            rec(prefix + [t])

    rec([])
    return out


def _conductor(n: int, t: tuple) -> int:
    """Conductor of the character with exponent tuple t: the least f | n
    such that the character is trivial on the kernel of (Z/n)* -> (Z/f)*."""
    gens, table = _dlog_table(n)
    orders = [o for _, o in gens]

    def is_trivial_at(a):
        vec = table[a]
        return sum(Fraction(ti * vi, oi) for ti, vi, oi in zip(t, vec, orders)) % 1 == 0

    divisors = sorted(d for d in range(1, n + 1) if n % d == 0)
    for f in divisors:
        kernel = [a for a in range(1, n) if gcd(a, n) == 1 and a % f == 1 % f]
        if all(is_trivial_at(a) for a in kernel):
            return f
    return n


@lru_cache(maxsize=None)
def field_discriminant(field: RealCyclotomicField) -> int:
    """|disc F| by the conductor-discriminant formula."""
    if field.degree == 1:
        return 1
    n = field.n
    subgroup = field.fixing_group
    disc = 1
    for t in _characters_trivial_on(n, subgroup):
        disc *= _conductor(n, t)
    return disc

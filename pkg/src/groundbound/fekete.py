"""Constructive small-sup-norm integer polynomials on prescribed intervals.

The existence statement is proved via Minkowski's theorem on the linear
forms A_{k,sigma} given by the Chebyshev coefficients of P^sigma on
[a_sigma, b_sigma]; here the witness is actually constructed: lattice
reduction proposes small integer coefficient vectors, every candidate is
certified exactly (the coefficient-sum bound sum_k |A_{k,sigma}| is an
exact algebraic number), and a bounded box search backs up the reduction.
A certificate whose sup bounds exceed the theoretical bound is never
returned; exhausting the box raises SearchExhausted, which the theory
says cannot happen and is treated as a bug signal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import balls
from .balls import AlgConst, Const, Expr, Pow, certify_compare, certify_sign
from .cyclo import CycloElement
from .errors import GroundboundError, SearchExhausted
from .fields import Embedding, RealCyclotomicField, field_discriminant


# -- Chebyshev expansions ----------------------------------------------------


def chebyshev_coefficients(a: Fraction, b: Fraction, n: int) -> list[tuple]:
    """Row i holds the exact T_k coefficients of ((a+b)/2 + ((b-a)/2) x)^i.

    Multiplication by x in the Chebyshev basis sends T_k to
    (T_{k+1} + T_{|k-1|}) / 2.
    """
    alpha, beta = (Fraction(a) + Fraction(b)) / 2, (Fraction(b) - Fraction(a)) / 2
    rows = [(Fraction(1),)]
    for _ in range(n):
        prev = rows[-1]
        out = [Fraction(0)] * (len(prev) + 1)
        for k, c in enumerate(prev):
            if c == 0:
                continue
            out[k] += alpha * c
            out[k + 1] += beta * c / 2
            out[abs(k - 1)] += beta * c / 2
        rows.append(tuple(out))
    return [tuple(row) + (Fraction(0),) * (n + 1 - len(row)) for row in rows]


def integral_basis(field: RealCyclotomicField) -> tuple[CycloElement, ...]:
    """Z-basis of the ring of integers; supported for degree <= 2."""
    if field.degree == 1:
        return (CycloElement.rational(field.n, 1),)
    if field.degree != 2:
        raise GroundboundError("integral bases implemented for degree <= 2 only")
    disc = field_discriminant(field)
    d = disc if disc % 4 == 1 else disc // 4
    sqrt_d = _field_sqrt(field, d)
    one = CycloElement.rational(field.n, 1)
    if disc % 4 == 1:
        return (one, (one + sqrt_d) / 2)
    return (one, sqrt_d)


def _field_sqrt(field: RealCyclotomicField, d: int) -> CycloElement:
    """The positive square root of the squarefree integer d inside F."""
    beta = CycloElement.generator(field.n)
    trace = CycloElement.rational(field.n, 0)
    for h in field.fixing_group:
        trace = trace + beta.conjugate(h)
    emb = field.embeddings()
    t_conj = emb[1].apply(trace)
    p = trace + t_conj
    q = trace * t_conj
    if not (p.is_rational() and q.is_rational()):
        raise GroundboundError("trace generator did not produce rational invariants")
    disc0 = p.as_rational() ** 2 - 4 * q.as_rational()
    ratio = disc0 / d
    f2 = ratio.numerator * ratio.denominator
    f = Fraction(isqrt(ratio.numerator), isqrt(ratio.denominator))
    if f * f != ratio:
        raise GroundboundError(f"disc0/d = {ratio} is not a rational square")
    sq = (2 * trace - p.as_rational()) / f
    if certify_sign(AlgConst(sq)) == balls.LESS:
        sq = -sq
    assert (sq * sq) == d
    return sq


@dataclass(frozen=True)
class ChebyshevForms:
    """Exact matrix of the linear forms A_{k,sigma} = sum c_{k sigma i j} a_{ij}.

    Rows are indexed by (k, sigma) and columns by (i, j), both
    lexicographically; c_{k sigma i j} = gamma_j^sigma * cheb_{sigma}[i][k],
    which vanishes for i < k and carries 2((b-a)/4)^k on the diagonal.
    """

    field: RealCyclotomicField
    degree_n: int
    intervals: tuple  # ((Embedding, (a, b)), ...) in embedding order
    basis: tuple  # integral basis as CycloElements
    cheb: tuple  # cheb[sigma_idx][i][k] rational

    def entry(self, k: int, sigma_idx: int, i: int, j: int) -> CycloElement:
        emb = self.intervals[sigma_idx][0]
        gamma = emb.apply(self.basis[j])
        return gamma * self.cheb[sigma_idx][i][k]

    def row_indices(self):
        return [(k, s) for k in range(self.degree_n + 1) for s in range(len(self.intervals))]

    def col_indices(self):
        return [(i, j) for i in range(self.degree_n + 1) for j in range(len(self.basis))]

    def float_matrix(self) -> list[list[float]]:
        rows = []
        for k, s in self.row_indices():
            row = []
            for i, j in self.col_indices():
                v = self.entry(k, s, i, j)
                row.append(v.eval_float())
            rows.append(row)
        return rows

    def exact_determinant(self):
        """det over the ambient cyclotomic field, computed by fraction-free
        elimination; used to verify the block-triangular identity."""
        idx_r, idx_c = self.row_indices(), self.col_indices()
        size = len(idx_r)
        mat = [[self.entry(k, s, i, j) for (i, j) in idx_c] for (k, s) in idx_r]
        n_amb = self.field.n
        det = CycloElement.rational(n_amb, 1)
        for col in range(size):
            pivot = None
            for row in range(col, size):
                if not mat[row][col].is_zero():
                    pivot = row
                    break
            if pivot is None:
                return CycloElement.rational(n_amb, 0)
            if pivot != col:
                mat[col], mat[pivot] = mat[pivot], mat[col]
                det = -det
            det = det * mat[col][col]
            inv = mat[col][col].inverse()
            for row in range(col + 1, size):
                if mat[row][col].is_zero():
                    continue
                factor = mat[row][col] * inv
                mat[row] = [x - factor * y for x, y in zip(mat[row], mat[col])]
        return det


def chebyshev_linear_forms(field: RealCyclotomicField, intervals: dict, n: int) -> ChebyshevForms:
    embeddings = field.embeddings()
    ordered = tuple((emb, (Fraction(intervals[emb][0]), Fraction(intervals[emb][1])))
                    for emb in embeddings)
    cheb = tuple(tuple(chebyshev_coefficients(a, b, n)) for _, (a, b) in ordered)
    return ChebyshevForms(field=field, degree_n=n, intervals=ordered,
                          basis=integral_basis(field), cheb=cheb)


# -- certification -----------------------------------------------------------


def fekete_bound_expr(field: RealCyclotomicField, intervals: dict, n: int,
                      weight: Fraction = Fraction(1)) -> Expr:
    """lambda * |disc F|^(1/2M) * 2^(n/(n+1)) * (n+1) * (prod (b-a)/4)^(n/2M).

    `weight` is the per-embedding factor lambda_sigma of the weighted
    statement; the weights must multiply to 1 over all embeddings.  The
    bound pipelines always use lambda = 1.
    """
    m = field.degree
    prod = Fraction(1)
    for a, b in intervals.values():
        prod *= (Fraction(b) - Fraction(a)) / 4
    disc = field_discriminant(field)
    out: Expr = Const(Fraction(n + 1) * weight)
    if disc != 1:
        out = out * Pow(Const(Fraction(disc)), Fraction(1, 2 * m))
    if n:
        out = out * Pow(Const(Fraction(2)), Fraction(n, n + 1))
        out = out * Pow(Const(prod), Fraction(n, 2 * m))
    return out


def _abs_exact(x: CycloElement):
    sign = certify_sign(AlgConst(x))
    if sign == balls.LESS:
        return -x
    return x


def certify_sup_norm(coeffs, embedding: Embedding, interval) -> CycloElement:
    """Upper bound sum_k |A_k| for sup |P^sigma| on the interval, exact.

    `coeffs` are the polynomial coefficients as field elements (constant
    first).  The bound is always >= the true sup and <= (n+1) max |A_k|.
    """
    a, b = Fraction(interval[0]), Fraction(interval[1])
    n = len(coeffs) - 1
    cheb = chebyshev_coefficients(a, b, n)
    field_n = embedding.field.n
    total = CycloElement.rational(field_n, 0)
    for k in range(n + 1):
        a_k = CycloElement.rational(field_n, 0)
        for i, c in enumerate(coeffs):
            if cheb[i][k] == 0:
                continue
            c_el = c if isinstance(c, CycloElement) else CycloElement.rational(field_n, c)
            a_k = a_k + embedding.apply(c_el) * cheb[i][k]
        total = total + _abs_exact(a_k)
    return total


@dataclass(frozen=True)
class FeketeCertificate:
    field: RealCyclotomicField
    degree_n: int
    alpha: tuple  # integer coordinates alpha[i][j] over the integral basis
    coefficients: tuple  # polynomial coefficients as field elements
    sup_bounds: tuple  # exact per-embedding bounds, in embedding order
    theoretical_bound: Expr

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.alpha)


def _coefficients_from_alpha(field, basis, alpha):
    out = []
    for row in alpha:
        acc = CycloElement.rational(field.n, 0)
        for j, x in enumerate(row):
            if x:
                acc = acc + basis[j] * x
        out.append(acc)
    return tuple(out)


def find_small_polynomial(field: RealCyclotomicField, intervals: dict, n: int,
                          box_radius: int = 2,
                          weights: dict | None = None) -> FeketeCertificate:
    """Nonzero integral polynomial of degree <= n with certified sup norms
    below the theoretical bound on every embedding's interval.

    Search: LLL on the columns of the Chebyshev-form matrix, then small
    integer combinations of the reduced basis, then an exhaustive box
    over the shortest reduced vectors.  `weights` optionally supplies the
    per-embedding factors of the weighted statement (product must be 1);
    the bound pipelines never set them.
    """
    if field.degree > 2:
        raise GroundboundError("search implemented for fields of degree <= 2")
    if weights is not None:
        total = Fraction(1)
        for w in weights.values():
            total *= Fraction(w)
        if total != 1:
            raise GroundboundError("embedding weights must multiply to 1")
    forms = chebyshev_linear_forms(field, intervals, n)
    bound = fekete_bound_expr(field, intervals, n)
    basis = forms.basis
    emb_intervals = forms.intervals

    def bound_for(emb) -> Expr:
        if weights is None:
            return bound
        return fekete_bound_expr(field, intervals, n, Fraction(weights[emb]))

    def certify(alpha) -> FeketeCertificate | None:
        coeffs = _coefficients_from_alpha(field, basis, alpha)
        sups = []
        for emb, (a, b) in emb_intervals:
            sup = certify_sup_norm(coeffs, emb, (a, b))
            cmp = certify_compare(AlgConst(sup), bound_for(emb))
            if cmp == balls.GREATER or cmp == balls.UNDECIDED:
                return None
            sups.append(sup)
        return FeketeCertificate(field=field, degree_n=n, alpha=alpha,
                                 coefficients=coeffs, sup_bounds=tuple(sups),
                                 theoretical_bound=bound)

    if n == 0:
        unit = tuple(tuple(1 if j == 0 else 0 for j in range(field.degree))
                     for _ in range(1))
        cert = certify(unit)
        if cert is None:
            raise SearchExhausted("constant polynomial 1 failed certification")
        return cert

    dim = (n + 1) * field.degree
    matrix = forms.float_matrix()
    reduced, transform = _lll(matrix)
    col_idx = forms.col_indices()

    def vec_to_alpha(vec) -> tuple:
        rows = [[0] * field.degree for _ in range(n + 1)]
        for (i, j), x in zip(col_idx, vec):
            rows[i][j] = int(x)
        return tuple(tuple(r) for r in rows)

    candidates = []
    seen = set()

    def push(vec, score):
        key = tuple(int(x) for x in vec)
        if key in seen or not any(key):
            return
        neg = tuple(-x for x in key)
        if neg in seen:
            return
        seen.add(key)
        candidates.append((score, key))

    for idx, col in enumerate(transform):
        push(col, _max_form(matrix, col))
    short = sorted(range(len(transform)), key=lambda i: _norm2(reduced[i]))[:4]
    for coeffs_combo in itertools.product((-1, 0, 1), repeat=len(short)):
        if not any(coeffs_combo):
            continue
        vec = [0] * dim
        for c, i in zip(coeffs_combo, short):
            if c:
                for t in range(dim):
                    vec[t] += c * transform[i][t]
        push(vec, _max_form(matrix, vec))
    candidates.sort(key=lambda item: (item[0], item[1]))
    for _, vec in candidates:
        cert = certify(vec_to_alpha(vec))
        if cert is not None:
            return cert
    # exhaustive fallback over the two shortest reduced directions
    for combo in itertools.product(range(-box_radius, box_radius + 1), repeat=min(3, len(short))):
        if not any(combo):
            continue
        vec = [0] * dim
        for c, i in zip(combo, short):
            if c:
                for t in range(dim):
                    vec[t] += c * transform[i][t]
        cert = certify(vec_to_alpha(vec))
        if cert is not None:
            return cert
    raise SearchExhausted(
        "no certificate inside the search box; this contradicts the existence "
        "theorem and indicates a bug"
    )


def _norm2(v) -> float:
    return sum(x * x for x in v)


def _max_form(matrix, alpha) -> float:
    worst = 0.0
    for row in matrix:
        val = abs(sum(r * a for r, a in zip(row, alpha)))
        worst = max(worst, val)
    return worst


def _lll(matrix, delta: float = 0.99):
    """Floating-point LLL on the column lattice of `matrix`.

    Returns (reduced_vectors, transform): reduced_vectors[i] is the image
    of integer vector transform[i].  Proposals only; all certification is
    exact downstream.
    """
    dim = len(matrix)
    cols = [[matrix[r][c] for r in range(dim)] for c in range(len(matrix[0]))]
    basis = [list(col) for col in cols]
    transform = [[1 if i == j else 0 for j in range(len(cols))] for i in range(len(cols))]

    def gso(bs):
        ortho, mu = [], [[0.0] * len(bs) for _ in range(len(bs))]
        for i, b in enumerate(bs):
            w = list(b)
            for j in range(i):
                denom = _norm2(ortho[j])
                mu[i][j] = 0.0 if denom == 0 else _dot(b, ortho[j]) / denom
                w = [x - mu[i][j] * y for x, y in zip(w, ortho[j])]
            ortho.append(w)
        return ortho, mu

    k = 1
    guard = 0
    while k < len(basis) and guard < 10000:
        guard += 1
        ortho, mu = gso(basis)
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[j])]
                transform[k] = [x - q * y for x, y in zip(transform[k], transform[j])]
                ortho, mu = gso(basis)
        if _norm2(ortho[k]) >= (delta - mu[k][k - 1] ** 2) * _norm2(ortho[k - 1]):
            k += 1
        else:
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            transform[k], transform[k - 1] = transform[k - 1], transform[k]
            k = max(k - 1, 1)
    return basis, transform


def _dot(a, b) -> float:
    return sum(x * y for x, y in zip(a, b))


# -- Lagrange growth ----------------------------------------------------------


@dataclass(frozen=True)
class GrowthBound:
    factorial_bound: Fraction
    stirling_bound: float
    exponential_bound: float


def lagrange_growth_bound(m0, a, b, n: int, x) -> GrowthBound:
    """Bounds for |Q_n(x)| at x >= b given sup |Q_n| <= m0 on [a, b]:

        M0 (x-a)^n n^n / (((b-a)/2)^n n!)          (exact)
        M0 (x-a)^n e^n / (((b-a)/2)^n sqrt(2 pi n)) (Stirling form)
        M0 (x-a)^n e^n / ((b-a)/2)^n               (weakest form)
    """
    from math import exp as fexp, factorial, pi as fpi, sqrt as fsqrt

    if n < 1:
        raise ValueError("n must be >= 1")
    m0, a, b, x = Fraction(m0), Fraction(a), Fraction(b), Fraction(x)
    if not (a < b <= x):
        raise ValueError("need a < b <= x")
    half = (b - a) / 2
    exact = m0 * (x - a) ** n * Fraction(n) ** n / (half**n * factorial(n))
    scale = float(m0) * float(x - a) ** n / float(half) ** n
    return GrowthBound(
        factorial_bound=exact,
        stirling_bound=scale * fexp(n) / fsqrt(2 * fpi * n),
        exponential_bound=scale * fexp(n),
    )

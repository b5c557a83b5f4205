"""Schur polynomials and conversions between the alpha, Chern and Schur bases.

Conventions: s_lambda is the ordinary Schur polynomial in the Chern roots
(s_11 = sum_{i<j} a_i a_j, s_2 = sum_{i<=j} a_i a_j), and c_k denotes the
k-th elementary symmetric polynomial of the roots.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache

from .orbits import alpha_vars, chern_vars
from .partitions import partition
from .poly import Poly, _norm


class NotSymmetricError(ValueError):
    """Input polynomial is not symmetric in the required variables."""


# -- Schur polynomials ------------------------------------------------

def _interlacings(lam):
    """All mu with lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... >= 0."""
    if not lam:
        yield ()
        return
    bounds = [(lam[i + 1] if i + 1 < len(lam) else 0, lam[i]) for i in range(len(lam))]

    def rec(i):
        if i == len(bounds):
            yield ()
            return
        lo, hi = bounds[i]
        for v in range(hi, lo - 1, -1):
            for rest in rec(i + 1):
                yield (v,) + rest

    for mu in rec(0):
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        yield mu


@lru_cache(maxsize=None)
def _schur_terms(lam, n):
    """Raw term dict of s_lambda(a_1..a_n), via the branching rule."""
    if len(lam) > n:
        return {}
    if n == 0:
        return {(): 1}
    out = {}
    d = sum(lam)
    for mu in _interlacings(lam):
        k = d - sum(mu)
        for e, c in _schur_terms(mu, n - 1).items():
            ke = e + (k,)
            out[ke] = out.get(ke, 0) + c
    return out


def schur_poly(lam, n):
    """The Schur polynomial s_lambda in n variables (zero if len(lam) > n)."""
    lam = partition(lam)
    return Poly(alpha_vars(n), dict(_schur_terms(lam, n)), _clean=False)


def schur_dict_to_alpha(coeffs, n, max_deg=None):
    """Expand {partition: coeff} into a polynomial in a_1..a_n."""
    acc = {}
    for lam, c in coeffs.items():
        if c == 0 or len(lam) > n:
            continue
        if max_deg is not None and sum(lam) > max_deg:
            continue
        for e, k in _schur_terms(partition(lam), n).items():
            s = acc.get(e, 0) + c * k
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
    return Poly(alpha_vars(n), acc)


# -- alternant (bialternant) extraction -------------------------------

def alternant_schur_coeffs(poly, n_alt):
    """Schur coefficients of Alt(poly) / Vandermonde over the first n_alt vars.

    Alt is the full signed symmetrization over S_{n_alt} and the Vandermonde
    is prod_{i<j}(a_i - a_j).  By the bialternant identity each monomial
    a^e (e with distinct entries) contributes +-s_{sort(e) - delta}; monomials
    with a repeated exponent cancel.  Trailing variables are passive: the
    result maps (partition, passive exponent tuple) -> coefficient.  Extracted
    per monomial, so truncated input yields truncated output.
    """
    out = {}
    for e, c in poly.terms.items():
        head = e[:n_alt]
        # sign = parity of the descending sort; a tie kills the monomial
        inv = 0
        dup = False
        for i in range(n_alt):
            hi = head[i]
            for j in range(i + 1, n_alt):
                if hi < head[j]:
                    inv += 1
                elif hi == head[j]:
                    dup = True
                    break
            if dup:
                break
        if dup:
            continue
        mu = sorted(head, reverse=True)
        lam = []
        ok = True
        for i, m in enumerate(mu):
            p = m - (n_alt - 1 - i)
            if p < 0:
                ok = False
                break
            lam.append(p)
        if not ok:
            continue
        while lam and lam[-1] == 0:
            lam.pop()
        key = (tuple(lam), e[n_alt:])
        s = out.get(key, 0) + (c if inv % 2 == 0 else -c)
        if s:
            out[key] = _norm(s)
        elif key in out:
            del out[key]
    return out


def alternant_schur_pure(poly, n_alt):
    """alternant_schur_coeffs for a polynomial with no passive variables."""
    return {lam: c for (lam, _), c in alternant_schur_coeffs(poly, n_alt).items()}


# -- elementary symmetric basis ----------------------------------------

@lru_cache(maxsize=None)
def elementary_terms(k, n):
    """Raw terms of e_k(a_1..a_n)."""
    from itertools import combinations
    if k == 0:
        return {(0,) * n: 1}
    if k > n:
        return {}
    out = {}
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def elementary_poly(k, n):
    return Poly(alpha_vars(n), dict(elementary_terms(k, n)), _clean=False)


@lru_cache(maxsize=None)
def _elem_power_product(kvec, n):
    """Terms of prod_k e_k^{kvec[k-1]} in the alpha variables."""
    from .poly import _mul_dict
    acc = {(0,) * n: 1}
    for k, mult in enumerate(kvec, start=1):
        ek = elementary_terms(k, n)
        for _ in range(mult):
            acc = _mul_dict(acc, ek)
    return acc


def _greedy_decompose(poly, n, leading_product):
    """Shared greedy loop: peel graded-lex leading terms of a symmetric
    polynomial using leading_product(mu) -> term dict with leading monomial mu.

    Homogeneous pieces are independent, so each degree slice is processed on
    its own (lowest first), which keeps truncated series consistent.
    """
    out = {}
    slices = poly.by_degree()
    for d in sorted(slices):
        work = dict(slices[d])
        heap = [(tuple(-x for x in e)) for e in work]
        heapq.heapify(heap)
        while work:
            ne = heapq.heappop(heap)
            e = tuple(-x for x in ne)
            c = work.get(e)
            if c is None:
                continue
            if any(e[i] < e[i + 1] for i in range(n - 1)):
                raise NotSymmetricError(
                    f"not symmetric: leading monomial {e} is not dominant")
            prod = leading_product(e)
            for pe, pc in prod.items():
                s = work.get(pe, 0) - c * pc
                if s:
                    if pe not in work:
                        heapq.heappush(heap, tuple(-x for x in pe))
                    work[pe] = _norm(s)
                elif pe in work:
                    del work[pe]
            out[e] = _norm(c)
    return out


def to_chern_basis(p, n=None):
    """Rewrite a symmetric polynomial in the elementary basis c_1..c_n."""
    if n is None:
        n = len(p.vars)
    if p.is_zero():
        return Poly.zero(chern_vars(n))

    def lead(mu):
        kvec = tuple(mu[i] - (mu[i + 1] if i + 1 < n else 0) for i in range(n))
        return _elem_power_product(kvec, n)

    decomposed = _greedy_decompose(p, n, lead)
    terms = {}
    for mu, c in decomposed.items():
        kvec = tuple(mu[i] - (mu[i + 1] if i + 1 < n else 0) for i in range(n))
        terms[kvec] = c
    return Poly(chern_vars(n), terms)


def chern_to_alpha(p, n=None):
    """Expand a polynomial in c_1..c_n back into the Chern roots."""
    if n is None:
        n = len(p.vars)
    acc = {}
    for kvec, c in p.terms.items():
        for e, k in _elem_power_product(tuple(kvec), n).items():
            s = acc.get(e, 0) + c * k
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
    return Poly(alpha_vars(n), acc)


def to_schur_basis(p, n=None):
    """Schur coefficients {partition: coeff} of a symmetric polynomial.

    Accepts a Poly or a TruncSeries (converted degreewise, lowest degree
    first, so truncation is respected).
    """
    from .poly import TruncSeries
    if isinstance(p, TruncSeries):
        p = p.poly
    if n is None:
        n = len(p.vars)
    if p.is_zero():
        return {}

    def lead(mu):
        lam = tuple(x for x in mu if x)
        return _schur_terms(lam, n)

    decomposed = _greedy_decompose(p, n, lead)
    return {partition(mu): c for mu, c in decomposed.items()}


def chern_weighted_degree(exps):
    """Total alpha-degree of a Chern monomial: sum i * exp_i."""
    return sum((i + 1) * x for i, x in enumerate(exps))


def _det(rows):
    """Exact determinant by fraction Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def schur_value(lam, vals):
    """s_lambda at an exact rational point with distinct coordinates,
    via the ratio of alternant determinants."""
    n = len(vals)
    lam = partition(lam)
    if len(lam) > n:
        return Fraction(0)
    padded = list(lam) + [0] * (n - len(lam))
    num = _det([[Fraction(v) ** (padded[j] + n - 1 - j) for j in range(n)] for v in vals])
    den = _det([[Fraction(v) ** (n - 1 - j) for j in range(n)] for v in vals])
    return num / den


def schur_dict_value(coeffs, vals):
    """Evaluate a Schur coefficient dict at an exact rational point."""
    total = Fraction(0)
    for lam, c in coeffs.items():
        total += c * schur_value(lam, vals)
    return total

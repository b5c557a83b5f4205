"""CSM classes of the corank orbits via symmetrized interpolation polynomials.

The W-function of an orbit is a subset sum of rational functions whose
denominators are root differences; the sum collapses to an integer symmetric
polynomial equal to the equivariant CSM class of the orbit.

Computation route: every subset/permutation term is the signed permutation
image of the term attached to the base subset {1..r} (with blocks
(1,2),(3,4),... inside the complement), so after clearing denominators to the
full Vandermonde the sum becomes a full signed symmetrization of a single
polynomial numerator.  Dividing the antisymmetrization by the Vandermonde is
done per monomial by the bialternant identity, which yields the Schur
expansion directly.  A direct rational-point evaluator of the defining sum
serves as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .classes import ClassExpr, schur_class, truncate_schur
from .orbits import Family, OrbitId, alpha_vars, as_family, total_chern
from .poly import ExactDivisionError, Poly, TruncSeries, product
from .schur import alternant_schur_pure, schur_dict_to_alpha, to_schur_basis


# -- numerators for the base subset ------------------------------------

def _pair_blocks(k):
    """Standard blocks (1,2),(3,4),... among 1..k; odd k leaves k unpaired."""
    return [(2 * b - 1, 2 * b) for b in range(1, k // 2 + 1)]


def _inner_numerator(family, k, variables, bound=None):
    """Cleared numerator of the identity term of the inner symmetrization.

    Cross pairs (those not forming a block) contribute
    (a_i + a_j)(1 + a_i + a_j); each block contributes its family-specific
    factor times the Vandermonde factor (a_{2b-1} - a_{2b}) left over from
    clearing.
    """
    blocks = set(_pair_blocks(k))
    v = lambda i: f"a{i}"
    factors = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if (i, j) in blocks:
                continue
            factors.append(Poly.linear(variables, 0, **{v(i): 1, v(j): 1}))
            factors.append(Poly.linear(variables, 1, **{v(i): 1, v(j): 1}))
    for (p, q) in blocks:
        if family is Family.WEDGE:
            factors.append(Poly.linear(variables, 0, **{v(p): 1, v(q): -1}))
        else:
            # block factor (-a_q)(1 + 2 a_p)(1 - a_p + a_q), with the
            # matching Vandermonde factor already cancelled symbolically
            factors.append(Poly.linear(variables, 0, **{v(q): -1}))
            factors.append(Poly.linear(variables, 1, **{v(p): 2}))
            factors.append(Poly.linear(variables, 1, **{v(p): -1, v(q): 1}))
    if not factors:
        return Poly.const(variables, 1)
    return product(factors, variables, bound=bound)


def _inner_stabilizer(family, k):
    m = k // 2
    return (2 ** m) * factorial(m) if family is Family.WEDGE else factorial(m)


def w_inner_schur(family, k, max_deg=None):
    """Schur coefficients of the inner function W_k (k even for wedge)."""
    return _w_inner_schur(as_family(family), k, max_deg)


@lru_cache(maxsize=None)
def _w_inner_schur(family, k, max_deg):
    if family is Family.WEDGE and k % 2 != 0:
        raise ValueError(f"parity violation: inner wedge function needs even k, got {k}")
    if k == 0:
        return {(): 1}
    av = alpha_vars(k)
    bound = None if max_deg is None else max_deg + comb(k, 2)
    num = _inner_numerator(family, k, av, bound=bound)
    coeffs = alternant_schur_pure(num, k)
    stab = _inner_stabilizer(family, k)
    out = {}
    for lam, c in coeffs.items():
        q = Fraction(c, stab)
        if q:
            out[lam] = q.numerator if q.denominator == 1 else q
    return out


@lru_cache(maxsize=None)
def w_inner(family, k):
    """The inner function W_k as an exact polynomial in a_1..a_k."""
    family = as_family(family)
    return schur_dict_to_alpha(w_inner_schur(family, k), k)


def _outer_numerator(orbit, bound=None):
    """Cleared numerator of the base-subset term of W_{n,r}.

    Base subset I = {1..r}; complement carries the inner function.  The
    missing Vandermonde factors (pairs inside I and inside the complement)
    multiply the numerator.
    """
    family, n, r = orbit.family, orbit.n, orbit.r
    av = alpha_vars(n)
    inner = w_inner(family, n - r).map_vars(
        av, {f"a{i}": f"a{i + r}" for i in range(1, n - r + 1)})
    factors = []
    for i in range(1, r + 1):
        rng = range(i, r + 1) if family is Family.SYM else range(i + 1, r + 1)
        for j in rng:
            if i == j:
                factors.append(Poly.linear(av, 0, **{f"a{i}": 2}))
            else:
                factors.append(Poly.linear(av, 0, **{f"a{i}": 1, f"a{j}": 1}))
    for i in range(1, r + 1):
        for j in range(r + 1, n + 1):
            factors.append(Poly.linear(av, 0, **{f"a{i}": 1, f"a{j}": 1}))
            factors.append(Poly.linear(av, 1, **{f"a{i}": 1, f"a{j}": 1}))
    for grp in (range(1, r + 1), range(r + 1, n + 1)):
        grp = list(grp)
        for x in range(len(grp)):
            for y in range(x + 1, len(grp)):
                factors.append(Poly.linear(av, 0, **{f"a{grp[x]}": 1, f"a{grp[y]}": -1}))
    acc = inner
    for f in factors:
        acc = acc.mul_trunc(f, bound) if bound is not None else acc * f
    return acc


def w_schur(orbit, max_deg=None):
    """Schur coefficients of W_{n,r} = csm(Sigma_{n,r}).

    With max_deg set, only coefficients of partitions of size <= max_deg are
    produced (the numerator product is truncated accordingly).
    """
    return _w_schur(orbit, max_deg)


@lru_cache(maxsize=None)
def _w_schur(orbit, max_deg):
    family, n, r = orbit.family, orbit.n, orbit.r
    if r == 0:
        d = w_inner_schur(family, n, max_deg)
        return dict(d) if max_deg is None else truncate_schur(d, max_deg)
    bound = None if max_deg is None else max_deg + comb(n, 2)
    num = _outer_numerator(orbit, bound=bound)
    coeffs = alternant_schur_pure(num, n)
    stab = factorial(r) * factorial(n - r)
    out = {}
    for lam, c in coeffs.items():
        if max_deg is not None and sum(lam) > max_deg:
            continue
        q = Fraction(c, stab)
        if q:
            out[lam] = q.numerator if q.denominator == 1 else q
    return out


@dataclass
class WFunction:
    """An orbit's interpolation polynomial: exact, symmetric, integral."""

    orbit: OrbitId
    poly: Poly

    @property
    def schur(self):
        return w_schur(self.orbit)

    def top_degree(self):
        return self.poly.total_degree()

    def expected_top_degree(self):
        n, r = self.orbit.n, self.orbit.r
        if self.orbit.family is Family.WEDGE:
            return (n * n - 2 * n + r) // 2
        return n * (n + 1) // 2 - (n - r + 1) // 2


@lru_cache(maxsize=None)
def w_function(orbit):
    """The W-function of an orbit; equals csm(Sigma) by interpolation."""
    poly = schur_dict_to_alpha(w_schur(orbit), orbit.n)
    for c in poly.terms.values():
        if not isinstance(c, int):
            raise AssertionError(f"non-integer coefficient in W for {orbit}: {c}")
    return WFunction(orbit, poly)


def csm_class(orbit, closure=False):
    """csm as a ClassExpr (Schur basis, exact)."""
    if not closure:
        return schur_class("csm", orbit, w_schur(orbit))
    from .classes import add_schur
    parts = [w_schur(OrbitId(orbit.family, orbit.n, m))
             for m in _suborbit_coranks(orbit)]
    return schur_class("csm", orbit, add_schur(*parts), closure=True)


def _suborbit_coranks(orbit):
    step = 2 if orbit.family is Family.WEDGE else 1
    return range(orbit.r, orbit.n + 1, step)


def csm_to_ssm(csm, D):
    """ssm = csm / c(V): multiply by the inverted total Chern class.

    Accepts a ClassExpr (or a raw Schur dict plus family/n via ClassExpr);
    returns a Schur-basis ClassExpr truncated at D.
    """
    family, n = csm.family, csm.n
    cv = TruncSeries(total_chern(family, n, bound=D), D)
    num = TruncSeries(csm.alpha_poly().truncate(D), D)
    ser = cv.divide_into(num)
    coeffs = to_schur_basis(ser, n)
    out = ClassExpr("ssm", "schur", family, n, csm.r, coeffs, D, csm.closure)
    return out


def ssm_interp(orbit, D, closure=False):
    """ssm via the interpolation route."""
    return csm_to_ssm(csm_class(orbit, closure=closure), D)


def ssm_stable_schur(family, r, D):
    """Stable Schur coefficients of ssm(Sigma_{., r}) through degree D.

    Coefficients of partitions with more than n parts are invisible at level
    n; by stability they are recovered by recomputing at the smallest level
    n' >= max(r, D) of matching parity.  Level-n coefficients of partitions
    with at most n parts agree with the stable ones.
    """
    family = as_family(family)
    n = max(r, D, 1)
    if family is Family.WEDGE and (n - r) % 2 != 0:
        n += 1
    orbit = OrbitId(family, n, r)
    csm = schur_class("csm", orbit, w_schur(orbit, max_deg=D), trunc=D)
    return csm_to_ssm(csm, D).payload


# -- direct evaluation of the defining sum (independent oracle) --------

def _f_val(x, y):
    return (1 + x + y) * (x + y) / (x - y)


@lru_cache(maxsize=None)
def _perms_with_sign(k):
    out = []
    for p in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if p[i] > p[j])
        out.append((p, -1 if inv % 2 else 1))
    return out


def w_inner_value(family, k, vals):
    """Evaluate the inner symmetrized sum at exact rational points.

    Uses the factorization: every permutation term shares the full product
    of pair factors up to sign, so the sum is a common factor times a signed
    sum of block-factor products over all permutations.
    """
    family = as_family(family)
    if k == 0:
        return Fraction(1)
    vals = [Fraction(v) for v in vals]
    common = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            common *= _f_val(vals[i], vals[j])

    blocks = _pair_blocks(k)
    if family is Family.WEDGE:
        def g(a, b):
            return 1 / _f_val(a, b)
    else:
        def g(a, b):
            return -b * (1 + 2 * a) * (1 - a + b) / ((a + b) * (1 + a + b))

    total = Fraction(0)
    for p, sign in _perms_with_sign(k):
        term = Fraction(sign)
        for (x, y) in blocks:
            term *= g(vals[p[x - 1]], vals[p[y - 1]])
        total += term
    return common * total / _inner_stabilizer(family, k)


def w_value(orbit, vals):
    """Evaluate W_{n,r} at a point with pairwise distinct coordinates."""
    family, n, r = orbit.family, orbit.n, orbit.r
    vals = [Fraction(v) for v in vals]
    if len(vals) != n:
        raise ValueError(f"need {n} coordinates")
    total = Fraction(0)
    for I in itertools.combinations(range(n), r):
        Iset = set(I)
        rest = [i for i in range(n) if i not in Iset]
        term = w_inner_value(family, n - r, [vals[i] for i in rest])
        if family is Family.SYM:
            for x in range(len(I)):
                for y in range(x, len(I)):
                    term *= vals[I[x]] + vals[I[y]]
        else:
            for x in range(len(I)):
                for y in range(x + 1, len(I)):
                    term *= vals[I[x]] + vals[I[y]]
        for i in I:
            for j in rest:
                term *= (vals[i] + vals[j]) * (1 + vals[i] + vals[j]) / (vals[i] - vals[j])
        total += term
    return total


# -- restriction data and the interpolation axioms ---------------------

@dataclass
class RestrictionData:
    """Restriction to an orbit's stabilizer torus (skew-symmetric family).

    substitution sends a_1..a_n to (s_1, -s_1, ..., s_h, -s_h,
    a_{n-m+1}, ..., a_n); tangent_factors multiply to c(T_Sigma) and
    normal_factors to e(N_Sigma).
    """

    orbit: OrbitId
    vars: tuple
    substitution: dict
    tangent_factors: list
    normal_factors: list

    @property
    def tangent_chern(self):
        return product(self.tangent_factors, self.vars)

    @property
    def normal_euler(self):
        return product(self.normal_factors, self.vars)

    def restrict(self, poly):
        return poly.substitute(self.substitution, self.vars)

    def bound_degree(self):
        """deg c(T)e(N) = binom(n,2) - (n-m)/2."""
        n, m = self.orbit.n, self.orbit.r
        return comb(n, 2) - (n - m) // 2


def restriction_data(orbit):
    if orbit.family is not Family.WEDGE:
        raise ValueError("restriction data is only available for the wedge family")
    n, m = orbit.n, orbit.r
    h = (n - m) // 2
    rvars = tuple(f"s{i}" for i in range(1, h + 1)) + tuple(
        f"a{i}" for i in range(n - m + 1, n + 1))
    sub = {}
    for i in range(1, n - m + 1):
        name = f"s{(i + 1) // 2}"
        img = Poly.variable(rvars, name)
        sub[f"a{i}"] = img if i % 2 == 1 else img.scale(-1)
    for i in range(n - m + 1, n + 1):
        sub[f"a{i}"] = Poly.variable(rvars, f"a{i}")

    tangent = []
    for i in range(1, h + 1):
        for j in range(i + 1, h + 1):
            for si in (1, -1):
                for sj in (1, -1):
                    tangent.append(Poly.linear(rvars, 1, **{f"s{i}": si, f"s{j}": sj}))
    for i in range(1, h + 1):
        for j in range(n - m + 1, n + 1):
            for si in (1, -1):
                tangent.append(Poly.linear(rvars, 1, **{f"s{i}": si, f"a{j}": 1}))
    normal = []
    for i in range(n - m + 1, n + 1):
        for j in range(i + 1, n + 1):
            normal.append(Poly.linear(rvars, 0, **{f"a{i}": 1, f"a{j}": 1}))
    return RestrictionData(orbit, rvars, sub, tangent, normal)


@dataclass
class AxiomCheck:
    probe: OrbitId
    axiom1: bool = None
    axiom2: bool = None
    axiom3: bool = None
    vanishing: bool = None

    @property
    def ok(self):
        return all(v is not False for v in
                   (self.axiom1, self.axiom2, self.axiom3, self.vanishing))


@dataclass
class AxiomReport:
    orbit: OrbitId
    checks: list

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


def verify_axioms(orbit, candidate=None):
    """Check the interpolation axioms for a candidate csm polynomial.

    For every orbit Omega of the same representation: equality with
    c(T)e(N) at Omega = Sigma, exact divisibility of the restriction by
    c(T_Omega), the strict degree bound for Omega != Sigma, and vanishing
    on orbits not contained in the closure.
    """
    if orbit.family is not Family.WEDGE:
        raise ValueError("axiom verification is only available for the wedge family")
    if candidate is None:
        candidate = w_function(orbit).poly
    n, r = orbit.n, orbit.r
    checks = []
    for m in range(n % 2, n + 1, 2):
        probe = OrbitId(Family.WEDGE, n, m)
        data = restriction_data(probe)
        image = data.restrict(candidate)
        entry = AxiomCheck(probe)
        if m < r:
            entry.vanishing = image.is_zero()
        if m == r:
            entry.axiom1 = (image == data.tangent_chern * data.normal_euler)
        rem = image
        ok2 = True
        for f in data.tangent_factors:
            try:
                rem = rem.exact_divide(f)
            except ExactDivisionError:
                ok2 = False
                break
        entry.axiom2 = ok2
        if m != r:
            entry.axiom3 = image.total_degree() < data.bound_degree()
        checks.append(entry)
    return AxiomReport(orbit, checks)

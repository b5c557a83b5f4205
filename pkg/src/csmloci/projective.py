"""Projectivized classes, linear-section Euler characteristics, closed formulas.

Substituting a_i -> xi/2 into the equivariant csm polynomial of an orbit
yields the ordinary (non-equivariant) CSM class of its projectivization in
Q[xi]/xi^N, N the ambient matrix-space dimension.  Since Schur polynomials
are homogeneous, the substitution factors through the Schur expansion:
s_lambda(xi/2, ..., xi/2) = #SSYT(lambda, n) * (xi/2)^|lambda|.

The degree-i coefficients of the J-involution of the resulting polynomial
are the Euler characteristics of general linear sections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .classes import add_schur
from .interp import w_schur
from .orbits import Family, OrbitId, ambient_dim, as_family, codim, coranks
from .partitions import count_ssyt
from .poly import ExactDivisionError, Poly


@dataclass
class ProjClass:
    """csm (or ssm) of P(Sigma) in Q[xi]/xi^N as an exact coefficient list."""

    orbit: OrbitId
    kind: str
    ambient: int          # N; the ambient projective space is P^{N-1}
    coeffs: list          # coeffs[i] multiplies xi^i, 0 <= i < N
    closure: bool = False

    def poly(self):
        return Poly(("xi",), {(i,): c for i, c in enumerate(self.coeffs) if c})

    def first_nonzero(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i, c
        return None, 0

    def integral(self):
        """Coefficient of xi^(N-1): the Euler characteristic of P(Sigma)."""
        return self.coeffs[-1] if self.coeffs else 0


def _xi_coeffs_from_schur(schur_coeffs, n, N):
    out = [Fraction(0)] * N
    for lam, c in schur_coeffs.items():
        d = sum(lam)
        if d >= N:
            continue
        out[d] += Fraction(c) * count_ssyt(lam, n) / (2 ** d)
    coeffs = []
    for v in out:
        if v.denominator != 1:
            raise AssertionError(f"non-integer projectivized coefficient {v}")
        coeffs.append(v.numerator)
    return coeffs


def projectivize(orbit, kind="csm", closure=False):
    """Reduce csm|_{a_i -> xi/2} modulo xi^N (coefficients must be integers).

    kind "ssm" divides by the ambient total Chern class (1+xi)^N first.
    """
    if kind not in ("csm", "ssm"):
        raise ValueError(f"unknown class kind {kind!r}")
    N = ambient_dim(orbit.family, orbit.n)
    step = 2 if orbit.family is Family.WEDGE else 1
    if closure:
        parts = [w_schur(OrbitId(orbit.family, orbit.n, m))
                 for m in range(orbit.r, orbit.n + 1, step)]
        sch = add_schur(*parts)
    else:
        sch = w_schur(orbit)
    coeffs = _xi_coeffs_from_schur(sch, orbit.n, N)
    if kind == "ssm":
        # multiply by the inverse of (1+xi)^N mod xi^N
        out = []
        for i in range(N):
            v = sum(coeffs[j] * comb(N + (i - j) - 1, i - j) * (-1) ** (i - j)
                    for j in range(i + 1))
            out.append(v)
        coeffs = out
    return ProjClass(orbit, kind, N, coeffs, closure)


def general_projectivize(p, weights, w):
    """Equivariant projectivization substitution a_i -> a_i + (w_i / w) xi.

    No quotient-ring reduction is performed; the ambient relation
    prod_j (xi - sigma_j) = 0 is left to the caller.
    """
    if w == 0:
        raise ValueError("scalar weight w must be nonzero")
    tvars = p.vars + ("xi",)
    images = {}
    for name, wi in zip(p.vars, weights):
        images[name] = Poly.linear(tvars, 0, **{name: 1}) + \
            Poly.variable(tvars, "xi").scale(Fraction(wi, w))
    return p.substitute(images, tvars)


def aluffi_J(p):
    """The involution J(p)(t) = (t p(-t-1) + p(0)) / (t+1) on Q[t].

    Exchanges the CSM coefficient polynomial of a locally closed subset of
    projective space with its linear-section Euler-characteristic polynomial.
    The division by t+1 is exact; a remainder signals malformed input.
    """
    tv = ("t",)
    if not isinstance(p, Poly):
        p = Poly(tv, {(i,): c for i, c in enumerate(p)})
    t = Poly.variable(tv, "t")
    shifted = p.substitute({"t": Poly.linear(tv, -1, t=-1)}, tv)
    num = t * shifted + Poly.const(tv, p.coefficient((0,)))
    try:
        return num.exact_divide(Poly.linear(tv, 1, t=1))
    except ExactDivisionError:
        raise ExactDivisionError("J-transform input is not a CSM coefficient polynomial")


def gamma_coeffs(proj):
    """gamma_X(t) = sum a_i t^(M-i) for csm = sum a_i xi^i on P^M."""
    M = proj.ambient - 1
    out = [0] * (M + 1)
    for i, c in enumerate(proj.coeffs):
        out[M - i] = c
    return out


def section_euler_chars(proj):
    """[chi(X_0), ..., chi(X_M)]: Euler characteristics of generic linear
    sections, read off the J-involution of gamma."""
    g = gamma_coeffs(proj)
    jt = aluffi_J(g)
    M = proj.ambient - 1
    return [(-1) ** i * jt.coefficient((i,)) for i in range(M + 1)]


@dataclass
class CharPolyPair:
    """gamma_X and chi_X, exchanged by the J involution; equal degrees."""

    gamma: Poly
    chi: Poly

    @classmethod
    def from_proj(cls, proj):
        gamma = Poly(("t",), {(i,): c for i, c in enumerate(gamma_coeffs(proj)) if c})
        return cls(gamma, aluffi_J(gamma))


@dataclass
class EulerTable:
    family: Family
    n: int
    closure: bool
    coranks: list
    rows: list           # rows[k][i] = chi(X_i) for orbit coranks[k]

    def column_sums(self):
        return [sum(row[i] for row in self.rows) for i in range(len(self.rows[0]))]


def euler_char_table(family, n, closure=False):
    """Linear-section Euler characteristics for the orbits with nonempty
    projectivization (corank <= n-2 in the skew family, <= n-1 symmetric)."""
    family = as_family(family)
    rmax = n - 2 if family is Family.WEDGE else n - 1
    rs = [r for r in coranks(family, n) if r <= rmax]
    rows = [section_euler_chars(projectivize(OrbitId(family, n, r), closure=closure))
            for r in rs]
    return EulerTable(family, n, closure, rs, rows)


@dataclass
class ClosedInvariants:
    orbit: OrbitId
    codim: int
    degree: int
    euler_char: int


def closed_invariants(orbit):
    """Codimension, closure degree and orbit Euler characteristic of the
    projectivized locus, by the classical closed formulas.

    Empty projectivizations (r = n skew/symmetric, r = n-1 skew) get
    degree 0 and chi 0.
    """
    family, n, r = orbit.family, orbit.n, orbit.r
    cd = codim(orbit)
    if family is Family.WEDGE:
        if r > n - 2:
            return ClosedInvariants(orbit, cd, 0, 0)
        if r == 0:
            deg = 1
        else:
            val = Fraction(1, 2 ** (r - 1))
            for i in range(r - 1):
                val *= Fraction(comb(n + i, r - 1 - i), comb(2 * i + 1, i))
            assert val.denominator == 1
            deg = val.numerator
        if r == n - 2:
            chi = comb(n, 2)
        else:
            chi = 0
        return ClosedInvariants(orbit, cd, deg, chi)
    if r > n - 1:
        return ClosedInvariants(orbit, cd, 0, 0)
    val = Fraction(1)
    for i in range(r):
        val *= Fraction(comb(n + i, r - i), comb(2 * i + 1, i))
    assert val.denominator == 1
    deg = val.numerator
    if r == n - 1:
        chi = n
    elif r == n - 2:
        chi = comb(n, 2)
    else:
        chi = 0
    return ClosedInvariants(orbit, cd, deg, chi)


def derived_invariants(orbit):
    """The same three invariants re-derived from the classes: codim and
    degree from the first nonzero coefficient of the projectivized closure
    class, chi from the top coefficient of the orbit class."""
    closure = projectivize(orbit, closure=True)
    idx, lead = closure.first_nonzero()
    chi = projectivize(orbit).integral()
    if idx is None:
        return ClosedInvariants(orbit, codim(orbit), 0, 0)
    return ClosedInvariants(orbit, idx, lead, chi)

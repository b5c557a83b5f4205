"""Tagged characteristic-class values with basis conversions.

A ClassExpr is a symmetric class together with its basis (alpha monomials,
Chern classes c_i, or Schur coefficients), the orbit it belongs to, and an
optional truncation degree (None means the payload is an exact polynomial).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .orbits import Family, OrbitId
from .partitions import partition
from .poly import TruncSeries, _norm
from .schur import chern_to_alpha, schur_dict_to_alpha, to_chern_basis, to_schur_basis

ALPHA, CHERN, SCHUR = "alpha", "chern", "schur"


def add_schur(*dicts, coeffs=None):
    """Linear combination of Schur coefficient dicts."""
    if coeffs is None:
        coeffs = [1] * len(dicts)
    out = {}
    for d, k in zip(dicts, coeffs):
        if k == 0:
            continue
        for lam, c in d.items():
            s = out.get(lam, 0) + k * c
            if s:
                out[lam] = _norm(s)
            elif lam in out:
                del out[lam]
    return out


def truncate_schur(d, bound):
    return {lam: c for lam, c in d.items() if sum(lam) <= bound}


@dataclass
class ClassExpr:
    """A class value in a declared basis.

    kind is a free-form label (csm, ssm, phi, w, mather); basis is one of
    alpha, chern, schur.  For basis schur the payload is {partition: coeff},
    otherwise a Poly.  trunc None means exact.
    """

    kind: str
    basis: str
    family: Family
    n: int
    r: int = None
    payload: object = None
    trunc: int = None
    closure: bool = False
    warnings: list = field(default_factory=list)

    @property
    def orbit(self):
        return None if self.r is None else OrbitId(self.family, self.n, self.r)

    # -- conversions ----------------------------------------------------

    def schur_coeffs(self):
        if self.basis == SCHUR:
            return dict(self.payload)
        p = self.payload if self.basis == ALPHA else chern_to_alpha(self.payload, self.n)
        d = to_schur_basis(p, self.n)
        if self.trunc is not None:
            d = truncate_schur(d, self.trunc)
        return d

    def alpha_poly(self):
        if self.basis == ALPHA:
            return self.payload
        if self.basis == CHERN:
            p = chern_to_alpha(self.payload, self.n)
        else:
            p = schur_dict_to_alpha(self.payload, self.n, max_deg=self.trunc)
        return p.truncate(self.trunc) if self.trunc is not None else p

    def alpha_series(self, bound=None):
        bound = self.trunc if bound is None else bound
        if bound is None:
            raise ValueError("exact class: pass an explicit bound for a series view")
        return TruncSeries(self.alpha_poly().truncate(bound), bound)

    def chern_poly(self):
        if self.basis == CHERN:
            return self.payload
        return to_chern_basis(self.alpha_poly(), self.n)

    def in_basis(self, basis):
        if basis == self.basis:
            return self
        if basis == ALPHA:
            payload = self.alpha_poly()
        elif basis == CHERN:
            payload = self.chern_poly()
        elif basis == SCHUR:
            payload = self.schur_coeffs()
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return ClassExpr(self.kind, basis, self.family, self.n, self.r, payload,
                         self.trunc, self.closure, list(self.warnings))

    # -- structure ------------------------------------------------------

    def same_value(self, other):
        """Equality of the underlying class (after aligning bases)."""
        if (self.family, self.n) != (other.family, other.n):
            return False
        a, b = self.schur_coeffs(), other.schur_coeffs()
        if self.trunc is not None or other.trunc is not None:
            bounds = [t for t in (self.trunc, other.trunc) if t is not None]
            d = min(bounds)
            a, b = truncate_schur(a, d), truncate_schur(b, d)
        return a == b

    def lowest_term(self):
        """(degree, {partition: coeff}) of the minimal-degree Schur slice."""
        d = self.schur_coeffs()
        if not d:
            return None, {}
        lo = min(sum(lam) for lam in d)
        return lo, {lam: c for lam, c in d.items() if sum(lam) == lo}


def alpha_class(kind, orbit, poly, trunc=None, closure=False):
    return ClassExpr(kind, ALPHA, orbit.family, orbit.n, orbit.r, poly, trunc, closure)


def schur_class(kind, orbit, coeffs, trunc=None, closure=False):
    coeffs = {partition(lam): _norm(c) for lam, c in coeffs.items() if c}
    return ClassExpr(kind, SCHUR, orbit.family, orbit.n, orbit.r, coeffs, trunc, closure)

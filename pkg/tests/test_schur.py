"""Partitions, Schur polynomials and basis conversions."""

import random
from fractions import Fraction

import pytest

from csmloci.orbits import Family, alpha_vars, euler_class
from csmloci.partitions import (conjugate, count_ssyt, partition, partitions_upto,
                                staircase)
from csmloci.poly import Poly, TruncSeries
from csmloci.schur import (NotSymmetricError, chern_to_alpha, schur_dict_to_alpha,
                           schur_poly, to_chern_basis, to_schur_basis)


def test_partition_normalization():
    assert partition([3, 2, 0, 0]) == (3, 2)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition([1, 2])


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)


def test_staircase():
    assert staircase(4) == (3, 2, 1)
    assert staircase(1) == ()


def test_schur_s11():
    av = alpha_vars(3)
    expect = Poly(av, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert schur_poly((1, 1), 3) == expect


def test_schur_s2():
    av = alpha_vars(2)
    expect = Poly(av, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur_poly((2,), 2) == expect


def test_schur_s21_jacobi_trudi():
    # oracle: 2x2 determinant h2*h1 - h3 in the elementary basis reads e1e2 - e3
    got = to_chern_basis(schur_poly((2, 1), 3))
    assert got == Poly(("c1", "c2", "c3"), {(1, 1, 0): 1, (0, 0, 1): -1})


def test_schur_too_long_partition_vanishes():
    assert schur_poly((1, 1, 1), 2).is_zero()


def test_staircase_schur_is_weight_product():
    for n in (2, 3, 4):
        assert schur_poly(staircase(n), n) == euler_class(Family.WEDGE, n)


def test_count_ssyt_matches_expansion():
    for lam in [(2, 1), (3,), (2, 2, 1)]:
        for n in (2, 3, 4):
            ones = {f"a{i}": Fraction(1) for i in range(1, n + 1)}
            assert schur_poly(lam, n).eval(ones) == count_ssyt(lam, n)


def test_to_chern_basis_examples():
    av = alpha_vars(2)
    assert to_chern_basis(Poly.linear(av, 0, a1=1, a2=1)) == \
        Poly(("c1", "c2"), {(1, 0): 1})
    with pytest.raises(NotSymmetricError):
        to_chern_basis(Poly.variable(av, "a1"))


def test_chern_roundtrip_random_symmetric():
    rng = random.Random(17)
    n = 3
    for _ in range(10):
        coeffs = {lam: rng.randint(-5, 5) for lam in partitions_upto(4, max_len=n)}
        p = schur_dict_to_alpha(coeffs, n)
        assert chern_to_alpha(to_chern_basis(p), n) == p


def test_to_schur_basis_examples():
    av = alpha_vars(3)
    c1sq = Poly.linear(av, 0, a1=1, a2=1, a3=1) ** 2
    assert to_schur_basis(c1sq) == {(2,): 1, (1, 1): 1}
    assert to_schur_basis(Poly.const(av, 1)) == {(): 1}
    with pytest.raises(NotSymmetricError):
        to_schur_basis(Poly.linear(av, 0, a1=1, a2=1))


def test_schur_roundtrip_exact():
    rng = random.Random(23)
    n = 3
    for _ in range(10):
        coeffs = {lam: Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                  for lam in partitions_upto(4, max_len=n)}
        coeffs = {k: v for k, v in coeffs.items() if v}
        p = schur_dict_to_alpha(coeffs, n)
        assert to_schur_basis(p) == coeffs


def test_to_schur_degreewise_on_series():
    av = alpha_vars(2)
    e1 = Poly.linear(av, 0, a1=1, a2=1)
    ser = TruncSeries(Poly.const(av, 1) + e1 + e1 * e1, 2)
    d = to_schur_basis(ser)
    assert d == {(): 1, (1,): 1, (2,): 1, (1, 1): 1}

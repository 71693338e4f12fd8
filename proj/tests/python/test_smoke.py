from fractions import Fraction

import pytest

import qtmom


def test_exact_moments():
    r = qtmom.moment_jacobi(2, 2, 2, 0, 0)
    assert r["value"] == Fraction(11, 15)
    assert not r["omitted_phi"]

    r = qtmom.moment_laguerre_neg(1, 1, 2, 3)
    assert r["value"] == Fraction(2, 3)
    assert r["omitted_phi"]

    assert qtmom.moment_selberg_like(2, 1, 2, 2, 1)["value"] == Fraction(4, 3)


def test_special_functions():
    assert qtmom.binom_ext(-3, 2) == 6
    assert qtmom.pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert qtmom.narayana_poly(3, 2) == 22
    assert qtmom.jacobi_poly(1, 1, 0, 3) == 5
    assert qtmom.gen_bernoulli(1, 1, 0) == Fraction(-1, 2)


def test_coefficients_and_genfun():
    assert qtmom.delay_coeff(2, 2, 1, 3) == 0
    assert qtmom.trans_coeff(2, 0, 2, 0, 1)["value"] == Fraction(3, 8)
    g = qtmom.genfun("d0", 2, order=6)
    assert g["coefficients"][1:6] == [1, 2, 6, 22, 90]
    assert not g["conjecture"]
    c = qtmom.genfun("t2-beta1-conjectured", 2, order=4, beta=1, delta=2)
    assert c["conjecture"]


def test_errors_are_typed():
    with pytest.raises(qtmom.QtmomError):
        qtmom.moment_laguerre_neg(1, 1, 3, 3)  # odd n for beta=1
    with pytest.raises(qtmom.QtmomError):
        qtmom.delay_coeff(4, 2, 2, 2)  # unsupported order


def test_oracles():
    xs = qtmom.sample_ensemble("jacobi", 2, 3, 0, 1, seed=5)
    assert xs == qtmom.sample_ensemble("jacobi", 2, 3, 0, 1, seed=5)
    assert all(0.0 <= x <= 1.0 for x in xs)

    q = qtmom.quadrature_moment("jacobi", 2, 2, 2, 0, 0)
    assert abs(q - 11.0 / 15.0) < 1e-10

    est = qtmom.mc_moment("laguerre", 2, -1, 2, 0, 2, samples=20000, seed=7)
    assert abs(est["mean"] - 1.0) < 4 * est["stderr"]

    assert abs(qtmom.limiting_moment("jacobi-limit", 1, 1, 1) - 0.125) < 1e-8


def test_verify_suite():
    checks = qtmom.verify_suite("coker", kmax=10)
    assert checks and all(c["pass"] for c in checks)

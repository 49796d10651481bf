import math

import pytest

from besselasym import (DomainError, NoApplicableBoundError, SectorError,
                        SurfaceComplex, bound_complex_nu, bound_real_nu,
                        chi, coeff_a, family_remainder_series, olver_bound,
                        sign_ratio_check)


def test_total_is_product_of_factors():
    z = SurfaceComplex(10.0, 0.7)
    for bb in (bound_real_nu("K", z, 1.0, 5),
               bound_complex_nu("Jp", z, 1.0 + 1.0j, 5),
               olver_bound(z, 2.0 + 1.0j, 5)):
        assert bb.total == pytest.approx(
            bb.first_term_mag * bb.sup_factor * bb.nu_ratio, rel=1e-14)


def test_theorem_labels():
    z = SurfaceComplex(8.0, 0.0)
    assert bound_real_nu("K", z, 0.5, 3).theorem == "thm3"
    assert bound_real_nu("Kp", z, 0.5, 3).theorem == "thm4"
    assert bound_complex_nu("J", z, 1j, 3).theorem == "thm6"
    assert bound_complex_nu("Jp", z, 1j, 3).theorem == "thm7"
    assert olver_bound(z, 1j, 3).theorem == "olver"


def test_preconditions_raise():
    z = SurfaceComplex(8.0, 0.0)
    with pytest.raises(NoApplicableBoundError):
        bound_real_nu("K", z, 4.0, 3)          # needs |nu| < N + 1/2
    with pytest.raises(NoApplicableBoundError):
        bound_real_nu("Kp", z, 2.5, 3)         # needs |nu| < N - 1/2
    with pytest.raises(NoApplicableBoundError):
        bound_complex_nu("Kp", z, 3.0 + 1j, 0)
    with pytest.raises(SectorError):
        bound_real_nu("J", SurfaceComplex(8.0, math.pi), 0.0, 3)
    with pytest.raises(SectorError):
        bound_real_nu("K", SurfaceComplex(8.0, 1.5 * math.pi), 0.0, 3)
    with pytest.raises(DomainError):
        bound_real_nu("X", z, 0.0, 3)


def test_positive_axis_sup_factor_is_one():
    bb = bound_real_nu("K", SurfaceComplex(10.0, 0.0), 1.0, 4)
    assert bb.sup_factor == 1.0
    assert bb.nu_ratio == 1.0
    assert bb.total == pytest.approx(abs(coeff_a(1.0, 4)) / 10.0 ** 4)


def test_olver_sector_formulas():
    nu = 2.0 + 1.0j
    N = 10
    mu = abs(nu * nu - 0.25)
    first = abs(coeff_a(nu, N)) / 15.0 ** N
    # closed right half plane (arg z = pi/2 included): 2 exp(mu/|z|)
    z = SurfaceComplex(15.0, 0.5 * math.pi)
    assert olver_bound(z, nu, N).total == pytest.approx(
        2.0 * math.exp(mu / 15.0) * first, rel=1e-13)
    # middle sector: 2 chi(N) exp(pi mu / (2|z|))
    z = SurfaceComplex(15.0, 0.6 * math.pi)
    assert olver_bound(z, nu, N).total == pytest.approx(
        2.0 * chi(N) * math.exp(0.5 * math.pi * mu / 15.0) * first, rel=1e-13)
    # outer sector carries the |cos(arg z)|^{-N} inflation
    z = SurfaceComplex(15.0, 1.2 * math.pi)
    c = abs(math.cos(1.2 * math.pi))
    assert olver_bound(z, nu, N).total == pytest.approx(
        4.0 * chi(N) * c ** -N * math.exp(math.pi * mu / (15.0 * c)) * first,
        rel=1e-13)


def test_complex_bound_sharper_than_olver_here():
    z = SurfaceComplex(10.0, 0.0)
    nu = 2.0 + 1.0j
    assert bound_complex_nu("K", z, nu, 5).total <= olver_bound(z, nu, 5).total


def test_near_odd_real_part_limit_is_finite_and_sound():
    z = SurfaceComplex(10.0, 0.0)
    nu = 0.5 + 1.0j  # 2 Re nu exactly odd: cos(pi Re nu) = 0
    bb = bound_complex_nu("K", z, nu, 4)
    assert math.isfinite(bb.total) and bb.total > 0.0
    truth = abs(complex(family_remainder_series("K", z, nu, 4)[4]))
    assert truth <= bb.total
    # a hair off the odd line must agree with the limiting form
    bb2 = bound_complex_nu("K", z, nu + 1e-12, 4)
    assert bb2.total == pytest.approx(bb.total, rel=1e-3)


def test_sign_ratio_on_positive_axis():
    z = 6.0
    rem = family_remainder_series("J", SurfaceComplex(z, 0.0), 0.25, 6)
    for N in (2, 3, 6):
        rep = sign_ratio_check("J", z, 0.25, N, complex(rem[N]))
        assert rep.in_unit_interval and rep.sign_matches


def test_sign_ratio_rejects_terminating_order():
    rem = family_remainder_series("K", SurfaceComplex(5.0, 0.0), 0.5, 2)
    with pytest.raises(DomainError):
        sign_ratio_check("K", 5.0, 0.5, 2, complex(rem[2]))

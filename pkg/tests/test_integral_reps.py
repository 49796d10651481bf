import math

import pytest

from besselasym import (DomainError, IntegralRepConfig, SectorError,
                        SurfaceComplex, coeff_a, coeff_a_via_integral,
                        family_remainder_series, remainder_J_via_thm1,
                        remainder_K_via_thm1, remainder_via_boyd)


def test_coefficient_identity():
    for nu, N in [(0.0, 0), (0.0, 4), (1.0 / 3.0, 6), (2.0 + 1.0j, 5)]:
        got = coeff_a_via_integral(nu, N)
        want = coeff_a(nu, N)
        assert got == pytest.approx(want, rel=1e-10)


def test_routes_agree_with_each_other_and_with_truth():
    z = SurfaceComplex(10.0, 0.0)
    nu = 1.0 / 3.0
    N = 5
    truth_k = complex(family_remainder_series("K", z, nu, N)[N])
    truth_j = complex(family_remainder_series("J", z, nu, N)[N])
    assert remainder_K_via_thm1(z, nu, N) == pytest.approx(truth_k, rel=1e-8)
    assert remainder_via_boyd("K", z, nu, N) == pytest.approx(truth_k, rel=1e-8)
    assert remainder_J_via_thm1(z, nu, N) == pytest.approx(truth_j, rel=1e-8)
    assert remainder_via_boyd("J", z, nu, N) == pytest.approx(truth_j, rel=1e-8)


def test_terminant_route_off_axis():
    z = SurfaceComplex(10.0, 0.8 * math.pi)
    nu = 0.0
    N = 4
    truth = complex(family_remainder_series("K", z, nu, N)[N])
    assert remainder_K_via_thm1(z, nu, N) == pytest.approx(truth, rel=1e-8)


def test_derivative_families():
    z = SurfaceComplex(10.0, 0.0)
    for family in ("Kp", "Jp"):
        truth = complex(family_remainder_series(family, z, 0.25, 4)[4])
        assert remainder_via_boyd(family, z, 0.25, 4) == pytest.approx(truth, rel=1e-8)


def test_domain_and_sector_checks():
    z_ok = SurfaceComplex(10.0, 0.0)
    with pytest.raises(DomainError):
        remainder_K_via_thm1(z_ok, 6.0, 3)           # needs |Re nu| < N + 1/2
    with pytest.raises(DomainError):
        remainder_via_boyd("Kp", z_ok, 0.0, 0)       # b-channel needs N >= 1
    with pytest.raises(SectorError):
        remainder_via_boyd("J", SurfaceComplex(10.0, 0.6 * math.pi), 0.0, 3)
    with pytest.raises(SectorError):
        remainder_via_boyd("K", SurfaceComplex(10.0, 1.1 * math.pi), 0.0, 3)


def test_config_validation():
    with pytest.raises(DomainError):
        IntegralRepConfig(hyp_parameter=1.0)   # only the closed-form kernel
    with pytest.raises(DomainError):
        IntegralRepConfig(quad_abs_tol=-1.0)


def test_quad_tol_env_override(monkeypatch):
    monkeypatch.setenv("BESSELASYM_QUAD_TOL", "1e-9")
    assert IntegralRepConfig().quad_abs_tol == 1e-9
    monkeypatch.setenv("BESSELASYM_QUAD_TOL", "zero")
    with pytest.raises(DomainError):
        IntegralRepConfig()
    monkeypatch.delenv("BESSELASYM_QUAD_TOL")
    assert IntegralRepConfig().quad_abs_tol == 1e-12

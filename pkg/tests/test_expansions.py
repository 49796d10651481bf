import math

import mpmath
import pytest

from besselasym import (EXPANSION_KINDS, SectorError, SurfaceComplex,
                        evaluate_certified, expansion_sector,
                        remainder_from_oracle, reference)


@pytest.mark.parametrize("kind", EXPANSION_KINDS)
def test_certified_value_within_bound(kind):
    z = SurfaceComplex(12.0, 0.4)
    nu = 1.0 / 3.0
    cv = evaluate_certified(kind, z, nu, 8)
    truth = reference(kind, z, nu).as_complex()
    assert cv.sector_ok
    # small additive slack for the double rounding of the partial sum itself
    assert abs(cv.value - truth) <= cv.value_bound * (1.0 + 1e-12) \
        + 5e-16 * abs(truth)
    assert cv.remainder_bound > 0.0


@pytest.mark.parametrize("kind,theta", [
    ("K", 1.3 * math.pi), ("H1", 1.8 * math.pi), ("H2", -1.8 * math.pi),
    ("I_upper", 1.3 * math.pi), ("I_lower", -1.3 * math.pi),
])
def test_wide_sector_evaluation(kind, theta):
    z = SurfaceComplex(15.0, theta)
    nu = 0.5 + 0.25j
    cv = evaluate_certified(kind, z, nu, 10)
    truth = reference(kind, z, nu).as_complex()
    assert abs(cv.value - truth) <= cv.value_bound * (1.0 + 1e-12)


def test_half_integer_series_terminates():
    z = SurfaceComplex(3.0, 0.0)
    cv = evaluate_certified("K", z, 0.5, 1)
    assert cv.bound_source == "exact-termination"
    assert cv.remainder_bound == 0.0
    # K_{1/2}(z) = sqrt(pi/(2z)) e^{-z} exactly
    assert cv.value == pytest.approx(math.sqrt(math.pi / 6.0) * math.exp(-3.0),
                                     rel=1e-15)


def test_out_of_sector_strict_raises():
    z = SurfaceComplex(10.0, 1.2 * math.pi)
    with pytest.raises(SectorError):
        evaluate_certified("J", z, 0.0, 5)


def test_out_of_sector_relaxed_flags():
    z = SurfaceComplex(10.0, 1.2 * math.pi)
    cv = evaluate_certified("J", z, 0.0, 5, strict=False)
    assert not cv.sector_ok
    assert cv.bound_source == "none-out-of-sector"
    assert math.isinf(cv.remainder_bound) and math.isinf(cv.value_bound)


def test_sectors_are_as_documented():
    lo, hi = expansion_sector("H1")
    assert (lo, hi) == (-math.pi, 2.0 * math.pi)
    lo, hi = expansion_sector("K")
    assert hi == pytest.approx(1.5 * math.pi)


def test_remainder_from_oracle_matches_bound_quality():
    z = SurfaceComplex(10.0, 0.25 * math.pi)
    nu = 2.0 + 1.0j
    for N in (3, 7, 12):
        cv = evaluate_certified("K", z, nu, N)
        rem = abs(complex(remainder_from_oracle("K", z, nu, N)))
        # the certified remainder bound really bounds the principal channel
        assert rem <= cv.value_bound * (1.0 + 1e-12)


def test_oscillatory_value_matches_bessel_j():
    z = SurfaceComplex(20.0, 0.0)
    nu = 1.0
    cv = evaluate_certified("J", z, nu, 10)
    want = complex(mpmath.besselj(1, 20))
    assert cv.value == pytest.approx(want, rel=1e-12)
    assert abs(cv.value - want) <= cv.value_bound + 1e-14 * abs(want)

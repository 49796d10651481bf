import math

import pytest

from besselasym import (DomainError, SectorError, SurfaceComplex,
                        TruncationPair, family_remainder_series,
                        optimal_truncation, reexpand, reexpand_tail_bound,
                        sign_ratio_reexp)


def test_truncation_pair_ordering():
    TruncationPair(10, 4)
    with pytest.raises(DomainError):
        TruncationPair(4, 10)
    with pytest.raises(DomainError):
        TruncationPair(4, 4)


def test_optimal_truncation_rounding():
    pair = optimal_truncation(5.0)
    assert (pair.N, pair.M) == (20, 10)
    # banker's rounding at the .5 boundary, and M clamped below N
    assert optimal_truncation(1.125).N == 4   # round(4.5) -> 4
    assert optimal_truncation(0.3).M < optimal_truncation(0.3).N
    with pytest.raises(DomainError):
        optimal_truncation(0.0)


@pytest.mark.parametrize("family", ["K", "Kp", "J", "Jp"])
def test_leftover_below_tail_bound(family):
    mod = 5.0
    pair = optimal_truncation(mod)
    z = SurfaceComplex(mod, 0.3)
    nu = 1.0 / 3.0
    approx = reexpand(family, z, nu, pair)
    truth = complex(family_remainder_series(family, z, nu, pair.N)[pair.N])
    assert abs(truth - approx.series_part) <= approx.tail_bound
    # exponentially small relative to the remainder scale
    assert approx.tail_bound <= 1e3 * mod ** -0.5 * math.exp(-4.0 * mod)


def test_reexpansion_beats_plain_truncation():
    mod = 6.0
    pair = optimal_truncation(mod)
    z = SurfaceComplex(mod, 0.0)
    approx = reexpand("K", z, 0.0, pair)
    truth = complex(family_remainder_series("K", z, 0.0, pair.N)[pair.N])
    assert abs(truth - approx.series_part) < 1e-6 * abs(truth)


def test_sector_is_closed_at_the_boundary():
    pair = TruncationPair(16, 8)
    # arg z = pi is allowed for the Lambda families...
    reexpand("K", SurfaceComplex(4.0, math.pi), 0.0, pair)
    # ...but beyond it is not, and the Pi families stop at pi/2
    with pytest.raises(SectorError):
        reexpand("K", SurfaceComplex(4.0, math.pi + 1e-6), 0.0, pair)
    reexpand("J", SurfaceComplex(4.0, 0.5 * math.pi), 0.0, pair)
    with pytest.raises(SectorError):
        reexpand("J", SurfaceComplex(4.0, 0.5 * math.pi + 1e-6), 0.0, pair)


def test_tail_bound_is_oracle_free_and_positive():
    pair = TruncationPair(20, 10)
    val = reexpand_tail_bound("Kp", SurfaceComplex(5.0, 2.0), 0.25, pair)
    assert val > 0.0 and math.isfinite(val)


def test_sign_ratio_on_positive_axis():
    mod = 5.0
    pair = optimal_truncation(mod)
    for family in ("K", "J"):
        truth = complex(family_remainder_series(
            family, SurfaceComplex(mod, 0.0), 0.0, pair.N)[pair.N])
        rep = sign_ratio_reexp(family, mod, 0.0, pair, truth)
        assert rep.in_unit_interval

import cmath
import math

import pytest
from hypothesis import given, strategies as st

from besselasym import DomainError, SurfaceComplex


def test_roundtrip():
    z = SurfaceComplex.from_complex(3.0 + 4.0j)
    assert z.modulus == pytest.approx(5.0)
    assert complex(z) == pytest.approx(3.0 + 4.0j)


def test_argument_preserved_beyond_pi():
    z = SurfaceComplex(2.0, 4.0)  # arg > pi stays 4.0, not wrapped
    assert z.argument == 4.0
    assert complex(z) == pytest.approx(2.0 * cmath.exp(4.0j))


def test_rotated_and_scaled():
    z = SurfaceComplex(2.0, 1.0)
    assert z.rotated(2.5).argument == pytest.approx(3.5)
    assert z.scaled(3.0).modulus == pytest.approx(6.0)
    with pytest.raises(DomainError):
        z.scaled(-1.0)


def test_power_uses_surface_branch():
    # z^{1/2} at arg 3 pi / 2 lands at arg 3 pi / 4, not in the principal sheet
    z = SurfaceComplex(4.0, 1.5 * math.pi)
    w = z.power(0.5)
    assert w == pytest.approx(2.0 * cmath.exp(0.75j * math.pi))
    assert z.sqrt() == pytest.approx(w)


def test_log_conjugate():
    z = SurfaceComplex(math.e, -2.0)
    assert z.log() == pytest.approx(1.0 - 2.0j)
    assert z.conjugate().argument == 2.0


def test_rejects_degenerate():
    with pytest.raises(DomainError):
        SurfaceComplex(0.0, 0.0)
    with pytest.raises(DomainError):
        SurfaceComplex(1.0, math.inf)


@given(st.floats(1e-6, 1e6), st.floats(-4.0 * math.pi, 4.0 * math.pi))
def test_power_additivity(mod, theta):
    z = SurfaceComplex(mod, theta)
    lhs = z.power(0.5) * z.power(0.5)
    assert lhs == pytest.approx(complex(z), rel=1e-12)

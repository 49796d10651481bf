import math

import mpmath
import pytest

from besselasym import AccuracyError, DomainError, SurfaceComplex, reference
from besselasym.errors import DomainError as DE

def mp_point(z):
    """The surface point as an mpmath complex, without a double round-trip."""
    return mpmath.mpf(z.modulus) * mpmath.exp(mpmath.mpc(0, z.argument))


_KINDS_MP = {
    "K": mpmath.besselk, "J": mpmath.besselj, "Y": mpmath.bessely,
    "I": mpmath.besseli, "H1": mpmath.hankel1, "H2": mpmath.hankel2,
}


@pytest.mark.parametrize("kind", sorted(_KINDS_MP))
def test_matches_mpmath_on_principal_sheet(kind):
    z = SurfaceComplex(9.0, 0.35)
    nu = 0.75 + 0.5j
    got = reference(kind, z, nu)
    with mpmath.workdps(60):
        want = _KINDS_MP[kind](mpmath.mpc(nu), mp_point(z))
        rel = abs(got.value - want) / abs(want)
        assert rel < 1e-30
    assert got.guaranteed_digits >= 25


def test_derivative_kinds():
    z = SurfaceComplex(7.0, 0.0)
    nu = 1.0 / 3.0
    got = reference("Kp", z, nu)
    with mpmath.workdps(60):
        nu_mp = mpmath.mpf(nu)
        want = -(mpmath.besselk(nu_mp + 1, 7.0) + mpmath.besselk(nu_mp - 1, 7.0)) / 2
        assert abs(got.value - want) / abs(want) < 1e-30


def test_integer_order_handled():
    # integer order hits the removable singularity of the series route
    z = SurfaceComplex(6.0, 0.2)
    for nu in (0.0, 3.0):
        got = reference("Y", z, nu)
        with mpmath.workdps(60):
            want = mpmath.bessely(nu, mp_point(z))
            assert abs(got.value - want) / abs(want) < 1e-25


def test_wronskian_identity():
    z = SurfaceComplex(11.0, 0.5)
    nu = 1.0 + 0.5j
    with mpmath.workdps(60):
        k = reference("K", z, nu).value
        kp = reference("Kp", z, nu).value
        i = reference("I", z, nu).value
        ip = reference("Ip", z, nu).value
        z_mp = mpmath.mpf(z.modulus) * mpmath.exp(mpmath.mpc(0, z.argument))
        resid = k * ip - kp * i - 1 / z_mp
        assert abs(resid) * abs(z_mp) < 1e-25


def test_hankel_connection():
    # H1 = (J + iY), H2 = (J - iY)
    z = SurfaceComplex(8.0, -0.4)
    nu = 0.25
    with mpmath.workdps(60):
        j = reference("J", z, nu).value
        y = reference("Y", z, nu).value
        h1 = reference("H1", z, nu).value
        h2 = reference("H2", z, nu).value
        scale = max(abs(h1), abs(h2))
        assert abs(h1 - (j + 1j * y)) / scale < 1e-25
        assert abs(h2 - (j - 1j * y)) / scale < 1e-25


def test_off_principal_sheet_continuation():
    # K continued through arg z = pi: K(z e^{i pi}) = e^{-i pi nu} K(z) - i pi I(z).
    # The test angle is the double approximation of pi, so the identity only
    # holds to about |z| * ulp(pi) relative; that still pins down both signs.
    nu = 0.3
    mod = 5.0
    with mpmath.workdps(50):
        k_up = reference("K", SurfaceComplex(mod, math.pi), nu).value
        k0 = reference("K", SurfaceComplex(mod, 0.0), nu).value
        i0 = reference("I", SurfaceComplex(mod, 0.0), nu).value
        want = mpmath.exp(-1j * mpmath.pi * nu) * k0 - 1j * mpmath.pi * i0
        assert abs(k_up - want) / abs(want) < 1e-13


def test_envelope_enforced():
    with pytest.raises((DomainError, DE, AccuracyError)):
        reference("K", SurfaceComplex(100.0, 0.0), 0.0)
    with pytest.raises((DomainError, DE, AccuracyError)):
        reference("K", SurfaceComplex(10.0, 0.0), 20.0)

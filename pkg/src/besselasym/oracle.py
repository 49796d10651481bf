"""Extended-precision reference values for the Bessel family.

Everything here is built on the ascending Maclaurin series of I_nu, summed
termwise in mpmath with an explicit error budget:

    I_nu(z) = (z/2)^nu * sum_k (z^2/4)^k / (k! Gamma(nu+k+1))

The (z/2)^nu prefactor is taken with the surface branch of the logarithm, so
the series gives the analytic continuation of I_nu to any sheet directly.
K_nu is formed as (pi/2)(I_{-nu} - I_nu)/sin(pi nu), with a Richardson limit
across nu +/- h when nu sits within 1e-12 of an integer.  J comes from I by
quarter-turn rotation, Y by the cosecant connection formula, H by K at
rotated arguments, and all derivatives by three-term recurrences.

Every intermediate carries a rigorous absolute error bound: series tails are
bounded by a geometric majorant once the term ratio drops below 1/2, rounding
by max-term counts, and the bounds are propagated through each arithmetic
operation.  ``guaranteed_digits`` is derived from that budget, not assumed.

This module never imports the asymptotic machinery; it is the independent
ground truth that the rest of the package is validated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mp

from .errors import AccuracyError, DomainError
from .surface import SurfaceComplex

__all__ = ["OracleValue", "reference", "ORACLE_MAX_MOD", "ORACLE_MAX_NU"]

ORACLE_MAX_MOD = 60.0
ORACLE_MAX_NU = 8.0

_INTEGER_TOL = 1e-12
_RICHARDSON_H = 1e-8


@dataclass(frozen=True)
class OracleValue:
    """An extended-precision value with a certified digit count."""

    value: object          # mpmath mpc
    guaranteed_digits: int

    def as_complex(self) -> complex:
        return complex(self.value)


class _Acc:
    """A value together with a rigorous absolute error bound."""

    __slots__ = ("val", "err")

    def __init__(self, val, err=0):
        self.val = mpmath.mpc(val)
        self.err = mpmath.mpf(err)

    def __add__(self, other):
        if isinstance(other, _Acc):
            return _Acc(self.val + other.val, self.err + other.err)
        return _Acc(self.val + other, self.err)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _Acc):
            return _Acc(self.val - other.val, self.err + other.err)
        return _Acc(self.val - other, self.err)

    def __mul__(self, other):
        if isinstance(other, _Acc):
            err = (self.err * abs(other.val) + other.err * abs(self.val)
                   + self.err * other.err)
            return _Acc(self.val * other.val, err + _ulp(self.val * other.val))
        return _Acc(self.val * other, self.err * abs(mpmath.mpc(other))
                    + _ulp(self.val * other))

    __rmul__ = __mul__

    def __neg__(self):
        return _Acc(-self.val, self.err)

    def __truediv__(self, other):
        if not isinstance(other, _Acc):
            other = _Acc(other)
        d = abs(other.val)
        if d <= other.err:
            raise AccuracyError("division by a quantity indistinguishable from zero")
        q = self.val / other.val
        err = (self.err + abs(q) * other.err) / (d - other.err)
        return _Acc(q, err + _ulp(q))

    def rel_digits(self) -> float:
        a = abs(self.val)
        if a == 0:
            return 0.0
        if self.err == 0:
            return mp.dps
        return float(mpmath.log10(a / self.err))


def _ulp(v):
    return abs(mpmath.mpc(v)) * mpmath.mpf(10) ** (-mp.dps + 2)


def _working_dps(z_mod: float, richardson: bool) -> int:
    # 0.9*|z| covers the worst cancellation (forming K from two I's that are
    # each ~e^{|z|} while K ~ e^{-|z|}); the flat parts cover the target
    # digits plus headroom for the near-integer sine division.
    return 44 + int(math.ceil(0.9 * z_mod)) + (20 if richardson else 0)


def _check_envelope(z: SurfaceComplex, nu: complex):
    if z.modulus > ORACLE_MAX_MOD:
        raise DomainError(f"oracle envelope is |z| <= {ORACLE_MAX_MOD}, got {z.modulus}")
    if abs(nu) > ORACLE_MAX_NU:
        raise DomainError(f"oracle envelope is |nu| <= {ORACLE_MAX_NU}, got {abs(nu)}")


def _i_series(mod: float, theta: float, nu, quarter: int = 0) -> _Acc:
    """I_nu at modulus*e^{i*(theta + quarter*pi/2)}, in the current precision.

    ``quarter`` counts exact quarter turns so that the connection-formula
    rotations stay exact instead of being rounded into a float angle.
    """
    nu = mpmath.mpc(nu)
    angle = mpmath.mpf(theta) + quarter * mpmath.pi / 2
    zsq4 = (mpmath.mpf(mod) * mpmath.exp(mpmath.mpc(0, 1) * angle)) ** 2 / 4
    # Entire-part sum; the branch lives entirely in the prefactor below.
    term = _Acc(1 / mpmath.gamma(nu + 1))
    total = term.val
    max_mag = abs(term.val)
    k = 0
    tail = None
    tiny = mpmath.mpf(10) ** (-mp.dps - 8)
    while True:
        k += 1
        term = _Acc(term.val * zsq4 / (k * (nu + k)))
        total += term.val
        mag = abs(term.val)
        if mag > max_mag:
            max_mag = mag
        ratio = abs(zsq4) / ((k + 1) * abs(nu + k + 1))
        if ratio < 0.5 and mag < tiny * max(max_mag, mpmath.mpf(1)):
            tail = 2 * mag * ratio
            break
        if k > 100000:
            raise AccuracyError("modified Bessel series failed to converge")
    round_err = (k + 2) * max_mag * mpmath.mpf(10) ** (-mp.dps + 2)
    entire = _Acc(total, tail + round_err)
    logpref = nu * (mpmath.log(mpmath.mpf(mod) / 2) + mpmath.mpc(0, 1) * angle)
    pref = mpmath.exp(logpref)
    return entire * _Acc(pref, _ulp(pref))


def _k_ratio(mod: float, theta: float, nu, quarter: int = 0) -> _Acc:
    """(pi/2)(I_{-nu} - I_nu)/sin(pi nu); requires nu away from the integers."""
    nu = mpmath.mpc(nu)
    diff = _i_series(mod, theta, -nu, quarter) - _i_series(mod, theta, nu, quarter)
    s = mpmath.sin(mpmath.pi * nu)
    return diff * (mpmath.pi / 2) / _Acc(s, _ulp(s))


def _richardson_limit(f, nu, h):
    """Two-level Richardson extrapolation of the even function h -> (f(nu+h)+f(nu-h))/2."""
    levels = []
    for k in range(3):
        hk = mpmath.mpf(h) / 2 ** k
        levels.append((f(nu + hk) + f(nu - hk)) * mpmath.mpf(0.5))
    b1 = (4 * levels[1] - levels[0]) / mpmath.mpf(3)
    b2 = (4 * levels[2] - levels[1]) / mpmath.mpf(3)
    c = (16 * b2 - b1) / mpmath.mpf(15)
    trunc = abs(b2.val - b1.val)
    return _Acc(c.val, c.err + trunc)


def _k_value(mod: float, theta: float, nu, quarter: int = 0) -> _Acc:
    nu_c = complex(nu)
    near = (abs(nu_c.imag) < _INTEGER_TOL
            and abs(nu_c.real - round(nu_c.real)) < _INTEGER_TOL)
    if not near:
        return _k_ratio(mod, theta, nu, quarter)
    return _richardson_limit(lambda m: _k_ratio(mod, theta, m, quarter),
                             mpmath.mpc(nu), _RICHARDSON_H)


def _j_value(mod: float, theta: float, nu) -> _Acc:
    nu = mpmath.mpc(nu)
    # J_nu(z) = e^{+nu pi i/2} I_nu(z e^{-pi i/2}) = e^{-nu pi i/2} I_nu(z e^{+pi i/2});
    # rotate towards the real axis to keep the intermediate argument small.
    if theta >= 0:
        rot = mpmath.exp(nu * mpmath.pi * mpmath.mpc(0, 1) / 2)
        inner = _i_series(mod, theta, nu, quarter=-1)
    else:
        rot = mpmath.exp(-nu * mpmath.pi * mpmath.mpc(0, 1) / 2)
        inner = _i_series(mod, theta, nu, quarter=1)
    return inner * _Acc(rot, _ulp(rot))


def _y_ratio(mod: float, theta: float, nu) -> _Acc:
    nu = mpmath.mpc(nu)
    c = mpmath.cos(mpmath.pi * nu)
    num = _j_value(mod, theta, nu) * _Acc(c, _ulp(c)) - _j_value(mod, theta, -nu)
    s = mpmath.sin(mpmath.pi * nu)
    return num / _Acc(s, _ulp(s))


def _y_value(mod: float, theta: float, nu) -> _Acc:
    nu_c = complex(nu)
    near = (abs(nu_c.imag) < _INTEGER_TOL
            and abs(nu_c.real - round(nu_c.real)) < _INTEGER_TOL)
    if not near:
        return _y_ratio(mod, theta, nu)
    return _richardson_limit(lambda m: _y_ratio(mod, theta, m), mpmath.mpc(nu),
                             _RICHARDSON_H)


@lru_cache(maxsize=100000)
def _cached(tag: str, mod: float, theta: float, nu_re: float, nu_im: float,
            dps: int, quarter: int = 0, shift: int = 0):
    # ``shift`` adds an exact integer to nu inside the working precision, so
    # that orders like 1/3 - 1 are not re-rounded to a nearby double.
    with mpmath.workdps(dps):
        nu = mpmath.mpc(nu_re, nu_im) + shift
        if tag == "I":
            acc = _i_series(mod, theta, nu, quarter)
        elif tag == "K":
            acc = _k_value(mod, theta, nu, quarter)
        elif tag == "J":
            acc = _j_value(mod, theta, nu)
        elif tag == "Y":
            acc = _y_value(mod, theta, nu)
        else:  # pragma: no cover
            raise ValueError(tag)
        return acc.val, acc.err, acc.rel_digits()


def _base(tag: str, z: SurfaceComplex, nu: complex, quarter: int = 0,
          shift: int = 0) -> _Acc:
    nu_c = complex(nu)
    rich = (abs(nu_c.imag) < _INTEGER_TOL
            and abs(nu_c.real + shift - round(nu_c.real + shift)) < _INTEGER_TOL
            and tag in ("K", "Y"))
    dps = _working_dps(z.modulus, rich)
    val, err, _ = _cached(tag, float(z.modulus), float(z.argument),
                          nu_c.real, nu_c.imag, dps, quarter, shift)
    return _Acc(val, err)


def _value(kind: str, z: SurfaceComplex, nu: complex) -> _Acc:
    """The requested function as an error-carrying accumulator."""
    if kind in ("I_upper", "I_lower", "I"):
        return _base("I", z, nu)
    if kind in ("Ip_upper", "Ip_lower", "Ip"):
        return (_base("I", z, nu, shift=1) + _base("I", z, nu, shift=-1)) * mpmath.mpf(0.5)
    if kind == "K":
        return _base("K", z, nu)
    if kind == "Kp":
        return -(_base("K", z, nu, shift=1) + _base("K", z, nu, shift=-1)) * mpmath.mpf(0.5)
    if kind == "J":
        return _base("J", z, nu)
    if kind == "Jp":
        return (_base("J", z, nu, shift=-1) - _base("J", z, nu, shift=1)) * mpmath.mpf(0.5)
    if kind == "Y":
        return _base("Y", z, nu)
    if kind == "Yp":
        return (_base("Y", z, nu, shift=-1) - _base("Y", z, nu, shift=1)) * mpmath.mpf(0.5)
    if kind in ("H1", "H1p", "H2", "H2p"):
        # H^{(1)}_nu(z) = (2/(pi i)) e^{-pi i nu/2} K_nu(z e^{-pi i/2}) and the
        # conjugate-direction twin; derivatives by the three-term recurrence.
        sign = -1.0 if kind.startswith("H1") else 1.0
        base = "K"
        nu_c = complex(nu)
        with mpmath.workdps(_working_dps(z.modulus, True) + 8):
            rot = mpmath.exp(sign * mpmath.pi * mpmath.mpc(0, 1) * nu_c / 2)
            front = -sign * 2 / (mpmath.pi * mpmath.mpc(0, 1)) * rot
            q = 1 if sign > 0 else -1
            if kind in ("H1", "H2"):
                inner = _base(base, z, nu_c, quarter=q)
                return inner * _Acc(front, _ulp(front))
            kp = -(_base(base, z, nu_c, quarter=q, shift=1)
                   + _base(base, z, nu_c, quarter=q, shift=-1)) * mpmath.mpf(0.5)
            # H' picks up a factor e^{-/+ pi i/2} from the chain rule on the
            # rotated argument: d/dz K(ze^{ia}) = e^{ia} K'(ze^{ia}).
            chain = mpmath.mpc(0, sign)  # e^{i*sign*pi/2} exactly
            return kp * _Acc(front * chain, _ulp(front))
    raise DomainError(f"unknown oracle kind {kind!r}")


@lru_cache(maxsize=500000)
def k_positive_axis(t: float, nu_re: float, nu_im: float, deriv: bool = False) -> complex:
    """K_nu(t) (or K'_nu(t)) on the positive axis at ~20 reliable digits.

    A cheaper precision schedule than ``reference``, meant for quadrature
    nodes of the integral-representation cross-checks where double output
    is all that survives anyway.
    """
    if t <= 0.0:
        raise DomainError("k_positive_axis needs t > 0")
    nu = mpmath.mpc(nu_re, nu_im)
    dps = 28 + int(math.ceil(0.87 * t))
    with mpmath.workdps(dps):
        if deriv:
            acc = -(_k_value(t, 0.0, nu + 1) + _k_value(t, 0.0, nu - 1)) * mpmath.mpf(0.5)
        else:
            acc = _k_value(t, 0.0, nu)
        return complex(acc.val)


def reference(kind: str, z: SurfaceComplex, nu: complex) -> OracleValue:
    """Extended-precision reference value of the requested function.

    ``kind`` is one of K, Kp, I/I_upper/I_lower, Ip/Ip_upper/Ip_lower, J, Jp,
    Y, Yp, H1, H1p, H2, H2p.  The upper/lower variants of I denote the same
    function; the distinction only matters for the asymptotic expansion.
    """
    _check_envelope(z, complex(nu))
    with mpmath.workdps(_working_dps(z.modulus, True) + 8):
        acc = _value(kind, z, nu)
        digits = int(math.floor(acc.rel_digits())) - 1
    if z.modulus <= 40.0 and abs(complex(nu)) <= 5.0 and digits < 25:
        raise AccuracyError(
            f"oracle precision shortfall: {digits} digits for {kind} at |z|={z.modulus}",
            partial=acc.val, est_abs_err=acc.err)
    return OracleValue(value=acc.val, guaranteed_digits=digits)

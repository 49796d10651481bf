"""Large-argument expansions of the Bessel family with certified error bounds.

Every supported function is assembled from at most two *channels*, each of
which is one of the four base series (a- or b-coefficients against Lambda- or
Pi-type remainders) evaluated at a possibly rotated argument:

    K_nu(z)  ~ sqrt(pi/2z) e^{-z} sum a_n / z^n           one Lambda channel
    H, I     ~ K-type channels at arg z -/+ pi/2 or -/+ pi
    J, Y     ~ a cos(omega) even channel and a sin(omega) odd channel,
               each with Pi-type remainders; omega = z - pi*nu/2 - pi/4

``evaluate_certified`` returns the truncated value together with a rigorous
bound on the principal channel's series remainder and a bound on the absolute
error of the returned value (all channels combined by the triangle
inequality).  The bound source is chosen in a fixed priority order:
exact termination, the real-order theorems, the complex-order theorems, then
the variation-norm bound; if none applies an error is raised.

``remainder_from_oracle`` and ``family_remainder_series`` produce the *true*
remainders in extended precision for validation; they use the independent
oracle and never the bounds above.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import mpmath

from . import oracle
from .bounds import (BoundBreakdown, bound_complex_nu, bound_real_nu,
                     olver_bound)
from .coefficients import coeff_a, coeff_a_mp, coeff_b, coeff_b_mp
from .errors import DomainError, NoApplicableBoundError, SectorError
from .surface import SurfaceComplex

__all__ = ["EXPANSION_KINDS", "ExpansionContext", "CertifiedValue",
           "partial_sum", "evaluate_certified", "remainder_from_oracle",
           "family_remainder_series", "expansion_sector"]

EXPANSION_KINDS = ("K", "Kp", "I_upper", "I_lower", "Ip_upper", "Ip_lower",
                   "J", "Jp", "Y", "Yp", "H1", "H1p", "H2", "H2p")

# sector of validity (lower, upper) for arg z, open at both ends
_SECTORS = {
    "K": (-1.5 * math.pi, 1.5 * math.pi),
    "Kp": (-1.5 * math.pi, 1.5 * math.pi),
    "J": (-math.pi, math.pi), "Jp": (-math.pi, math.pi),
    "Y": (-math.pi, math.pi), "Yp": (-math.pi, math.pi),
    "H1": (-math.pi, 2.0 * math.pi), "H1p": (-math.pi, 2.0 * math.pi),
    "H2": (-2.0 * math.pi, math.pi), "H2p": (-2.0 * math.pi, math.pi),
    "I_upper": (-0.5 * math.pi, 1.5 * math.pi),
    "Ip_upper": (-0.5 * math.pi, 1.5 * math.pi),
    "I_lower": (-1.5 * math.pi, 0.5 * math.pi),
    "Ip_lower": (-1.5 * math.pi, 0.5 * math.pi),
}

_TERMINATION_TOL = 1e-13


@dataclass(frozen=True)
class ExpansionContext:
    """Evaluation point and truncation orders of one expansion."""

    z: SurfaceComplex
    nu: complex
    omega: complex
    N: int
    M: int


@dataclass(frozen=True)
class CertifiedValue:
    """A truncated expansion value with rigorous error information.

    ``remainder_bound`` bounds the principal channel's series remainder;
    ``value_bound`` bounds |returned value - true function value| with every
    channel's remainder weighted by its prefactor magnitude.
    """

    value: complex
    remainder_bound: float
    value_bound: float
    bound_source: str
    sector_ok: bool


def expansion_sector(kind: str):
    if kind not in _SECTORS:
        raise DomainError(f"unknown expansion kind {kind!r}")
    return _SECTORS[kind]


def make_context(kind: str, z: SurfaceComplex, nu: complex, N: int,
                 M: Optional[int] = None) -> ExpansionContext:
    if kind not in _SECTORS:
        raise DomainError(f"unknown expansion kind {kind!r}")
    if N < 0:
        raise DomainError("truncation order N must be non-negative")
    if M is None:
        M = N
    if M < 0:
        raise DomainError("truncation order M must be non-negative")
    z_c = complex(z)
    omega = z_c - 0.5 * math.pi * complex(nu) - 0.25 * math.pi
    return ExpansionContext(z=z, nu=complex(nu), omega=omega, N=int(N), M=int(M))


def _in_sector(kind: str, z: SurfaceComplex) -> bool:
    lo, hi = _SECTORS[kind]
    return lo < z.argument < hi


# --------------------------------------------------------------- channels
#
# Each channel: (coefficient family 'a'/'b', per-term phase factor s with the
# n-th term s^n c_n / z^n, bound family, rotation of the bound argument,
# parity: None for full series of length N, 'even'/'odd' for the oscillatory
# split, and which truncation order it uses, 'N' or 'M').

_CH = {
    "K":  [("a", 1.0, "K", 0.0, None, "N")],
    "Kp": [("b", 1.0, "Kp", 0.0, None, "N")],
    "H1": [("a", 1j, "K", -0.5 * math.pi, None, "N")],
    "H1p": [("b", 1j, "Kp", -0.5 * math.pi, None, "N")],
    "H2": [("a", -1j, "K", 0.5 * math.pi, None, "N")],
    "H2p": [("b", -1j, "Kp", 0.5 * math.pi, None, "N")],
    "I_upper": [("a", -1.0, "K", -math.pi, None, "N"),
                ("a", 1.0, "K", 0.0, None, "M")],
    "I_lower": [("a", -1.0, "K", math.pi, None, "N"),
                ("a", 1.0, "K", 0.0, None, "M")],
    "Ip_upper": [("b", -1.0, "Kp", -math.pi, None, "N"),
                 ("b", 1.0, "Kp", 0.0, None, "M")],
    "Ip_lower": [("b", -1.0, "Kp", math.pi, None, "N"),
                 ("b", 1.0, "Kp", 0.0, None, "M")],
    "J":  [("a", 1.0, "J", 0.0, "even", "N"), ("a", 1.0, "J", 0.0, "odd", "M")],
    "Jp": [("b", 1.0, "Jp", 0.0, "even", "N"), ("b", 1.0, "Jp", 0.0, "odd", "M")],
    "Y":  [("a", 1.0, "J", 0.0, "even", "N"), ("a", 1.0, "J", 0.0, "odd", "M")],
    "Yp": [("b", 1.0, "Jp", 0.0, "even", "N"), ("b", 1.0, "Jp", 0.0, "odd", "M")],
}


def _channel_sum(coeffs, s: complex, z_c: complex, parity, count: int) -> complex:
    """sum of s^n c_n / z^n over the channel's index set, truncated to count terms."""
    total = 0.0 + 0.0j
    if parity is None:
        zp = 1.0 + 0.0j
        for n in range(count):
            total += (s ** n) * coeffs[n] * zp
            zp /= z_c
        return total
    step = z_c * z_c
    if parity == "even":
        zp = 1.0 + 0.0j
        for n in range(count):
            total += (-1.0) ** n * coeffs[2 * n] * zp
            zp /= step
    else:
        zp = 1.0 / z_c
        for m in range(count):
            total += (-1.0) ** m * coeffs[2 * m + 1] * zp
            zp /= step
    return total


def _prefactors(kind: str, ctx: ExpansionContext):
    """Per-channel complex prefactors, aligned with _CH[kind]."""
    z = ctx.z
    z_c = complex(z)
    nu = ctx.nu
    if kind in ("K", "Kp"):
        pref = cmath.sqrt(math.pi / 2.0) / z.sqrt() * cmath.exp(-z_c)
        return [pref if kind == "K" else -pref]
    if kind in ("H1", "H1p", "H2", "H2p"):
        base = cmath.sqrt(2.0 / math.pi) / z.sqrt()
        if kind in ("H1", "H1p"):
            pref = base * cmath.exp(1j * ctx.omega)
            return [pref if kind == "H1" else 1j * pref]
        pref = base * cmath.exp(-1j * ctx.omega)
        return [pref if kind == "H2" else -1j * pref]
    if kind.startswith("I") :
        base = 1.0 / (cmath.sqrt(2.0 * math.pi) * z.sqrt())
        grow = cmath.exp(z_c) * base
        if kind in ("I_upper", "Ip_upper"):
            circ = 1j * cmath.exp(1j * math.pi * nu)
        else:
            circ = -1j * cmath.exp(-1j * math.pi * nu)
        decay = circ * cmath.exp(-z_c) * base
        if kind.startswith("Ip"):
            # the recessive channel of I' carries the opposite sign
            decay = -decay
        return [grow, decay]
    # J / Y families
    base = cmath.sqrt(2.0 / math.pi) / z.sqrt()
    c, s = cmath.cos(ctx.omega), cmath.sin(ctx.omega)
    if kind == "J":
        return [base * c, -base * s]
    if kind == "Y":
        return [base * s, base * c]
    if kind == "Jp":
        return [-base * s, -base * c]
    # Yp
    return [base * c, -base * s]


def partial_sum(kind: str, ctx: ExpansionContext) -> complex:
    """The truncated expansion value (prefactors applied, remainders dropped)."""
    z_c = complex(ctx.z)
    prefs = _prefactors(kind, ctx)
    total = 0.0 + 0.0j
    for pref, (fam, s, _bf, _rot, parity, which) in zip(prefs, _CH[kind]):
        count = ctx.N if which == "N" else ctx.M
        top = count if parity is None else 2 * count
        coeffs = [(coeff_a if fam == "a" else coeff_b)(ctx.nu, n) for n in range(top)]
        total += pref * _channel_sum(coeffs, s, z_c, parity, count)
    return total


def _terminates(fam: str, nu: complex, order: int) -> bool:
    """True when every coefficient of the channel from ``order`` on vanishes."""
    if abs(nu.imag) > _TERMINATION_TOL:
        return False
    two_nu = 2.0 * abs(nu.real)
    k = round(two_nu)
    if k % 2 == 0 or abs(two_nu - k) > 2 * _TERMINATION_TOL:
        return False
    half = abs(nu.real)
    if fam == "a":
        return order >= half + 0.5
    return order >= half + 1.5


def _channel_bound(bound_fam: str, z_ch: SurfaceComplex, nu: complex,
                   order: int) -> BoundBreakdown:
    """Best applicable remainder bound for one channel, by fixed priority."""
    coeff_fam = "a" if bound_fam in ("K", "J") else "b"
    if _terminates(coeff_fam, nu, order):
        return BoundBreakdown(first_term_mag=0.0, sup_factor=0.0, nu_ratio=1.0,
                              total=0.0, theorem="exact-termination")
    if abs(nu.imag) <= _TERMINATION_TOL:
        try:
            return bound_real_nu(bound_fam, z_ch, nu.real, order)
        except NoApplicableBoundError:
            pass
    try:
        return bound_complex_nu(bound_fam, z_ch, nu, order)
    except NoApplicableBoundError:
        pass
    if bound_fam == "K":
        return olver_bound(z_ch, nu, order)
    if bound_fam == "J":
        # an oscillatory remainder is the mean of two rotated K remainders
        up = olver_bound(z_ch.rotated(0.5 * math.pi), nu, order)
        dn = olver_bound(z_ch.rotated(-0.5 * math.pi), nu, order)
        tot = 0.5 * (up.total + dn.total)
        return BoundBreakdown(first_term_mag=up.first_term_mag,
                              sup_factor=tot / up.first_term_mag
                              if up.first_term_mag > 0.0 else math.inf,
                              nu_ratio=1.0, total=tot, theorem="olver")
    raise NoApplicableBoundError(
        f"no remainder bound covers channel {bound_fam} at order {order} for nu={nu}")


def evaluate_certified(kind: str, z: SurfaceComplex, nu: complex, N: int,
                       M: Optional[int] = None, strict: bool = True) -> CertifiedValue:
    """Evaluate one expansion with a certified error bound.

    With ``strict`` (default) an argument outside the expansion's sector
    raises ``SectorError``; otherwise the raw truncated value is returned
    with infinite bounds and ``sector_ok=False``.
    """
    ctx = make_context(kind, z, nu, N, M)
    if not _in_sector(kind, z):
        if strict:
            lo, hi = _SECTORS[kind]
            raise SectorError(
                f"{kind} expansion needs arg z in ({lo:.6g}, {hi:.6g}), got {z.argument}")
        return CertifiedValue(value=partial_sum(kind, ctx),
                              remainder_bound=math.inf, value_bound=math.inf,
                              bound_source="none-out-of-sector", sector_ok=False)
    value = partial_sum(kind, ctx)
    prefs = _prefactors(kind, ctx)
    rem_bound = None
    source = None
    vbound = 0.0
    for pref, (fam, _s, bound_fam, rot, parity, which) in zip(prefs, _CH[kind]):
        count = ctx.N if which == "N" else ctx.M
        order = count if parity is None else (2 * count if parity == "even"
                                              else 2 * count + 1)
        bb = _channel_bound(bound_fam, z.rotated(rot), ctx.nu, order)
        if rem_bound is None:
            rem_bound = bb.total
            source = bb.theorem
        vbound += abs(pref) * bb.total
    return CertifiedValue(value=value, remainder_bound=rem_bound,
                          value_bound=vbound, bound_source=source, sector_ok=True)


# --------------------------------------------------- oracle-based remainders

def _mp_dps(z: SurfaceComplex) -> int:
    return 50 + int(math.ceil(0.9 * z.modulus))


def _k_scaled(z: SurfaceComplex, nu: complex, deriv: bool):
    """K_nu(z) (or -K'_nu(z)) divided by its expansion prefactor, in mpmath."""
    val = oracle.reference("Kp" if deriv else "K", z, nu).value
    logz = mpmath.log(mpmath.mpf(z.modulus)) + mpmath.mpc(0, z.argument)
    pref = mpmath.sqrt(mpmath.pi / 2) * mpmath.exp(-mpmath.mpf(0.5) * logz
                                                   - mpmath.exp(logz))
    scaled = val / pref
    return -scaled if deriv else scaled


def family_remainder_series(family: str, z: SurfaceComplex, nu: complex,
                            n_max: int):
    """True channel remainders R_n for n = 0..n_max, in extended precision.

    ``family`` is one of K, Kp, J, Jp.  R_n is the remainder of the n-term
    truncation of the channel's unit-prefactor series, so that e.g. for K:
    K_nu(z) = pref * (sum_{k<n} a_k / z^k + R_n).  The oscillatory families
    are reduced to rotated K / Kp remainders through the connection formulas.
    """
    if family in ("K", "Kp"):
        with mpmath.workdps(_mp_dps(z)):
            base = _k_scaled(z, nu, family == "Kp")
            coeffs = (coeff_a_mp if family == "K" else coeff_b_mp)(nu, n_max)
            logz = mpmath.log(mpmath.mpf(z.modulus)) + mpmath.mpc(0, z.argument)
            zinv = mpmath.exp(-logz)
            out = [base]
            zp = mpmath.mpc(1)
            for n in range(n_max):
                out.append(out[-1] - coeffs[n] * zp)
                zp *= zinv
            return out
    if family == "J":
        up = family_remainder_series("K", z.rotated(0.5 * math.pi), nu, n_max)
        dn = family_remainder_series("K", z.rotated(-0.5 * math.pi), nu, n_max)
        half_i = 1 / (2 * mpmath.mpc(0, 1))
        return [(u + d) / 2 if n % 2 == 0 else (u - d) * half_i
                for n, (u, d) in enumerate(zip(up, dn))]
    if family == "Jp":
        hi = family_remainder_series("J", z, complex(nu) + 1, n_max)
        lo = family_remainder_series("J", z, complex(nu) - 1, n_max)
        return [(a + b) / 2 for a, b in zip(hi, lo)]
    raise DomainError(f"unknown remainder family {family!r}")


def remainder_from_oracle(kind: str, z: SurfaceComplex, nu: complex, N: int,
                          M: Optional[int] = None):
    """True error of the truncated expansion, oracle value minus partial sum.

    Computed entirely in extended precision; the result is an mpmath complex.
    """
    ctx = make_context(kind, z, nu, N, M)
    with mpmath.workdps(_mp_dps(z) + 10):
        truth = oracle.reference(kind, z, nu).value
        logz = mpmath.log(mpmath.mpf(z.modulus)) + mpmath.mpc(0, z.argument)
        z_mp = mpmath.exp(logz)
        nu_mp = mpmath.mpc(ctx.nu)
        omega = z_mp - mpmath.pi * nu_mp / 2 - mpmath.pi / 4
        prefs = _prefactors_mp(kind, z, nu_mp, logz, z_mp, omega)
        total = mpmath.mpc(0)
        zinv = mpmath.exp(-logz)
        for pref, (fam, s, _bf, _rot, parity, which) in zip(prefs, _CH[kind]):
            count = ctx.N if which == "N" else ctx.M
            top = count if parity is None else 2 * count
            coeffs = (coeff_a_mp if fam == "a" else coeff_b_mp)(ctx.nu, max(top - 1, 0))
            acc = mpmath.mpc(0)
            if parity is None:
                zp = mpmath.mpc(1)
                s_mp = mpmath.mpc(s)
                sp = mpmath.mpc(1)
                for n in range(count):
                    acc += sp * coeffs[n] * zp
                    zp *= zinv
                    sp *= s_mp
            elif parity == "even":
                zp = mpmath.mpc(1)
                for n in range(count):
                    acc += (-1) ** n * coeffs[2 * n] * zp
                    zp *= zinv * zinv
            else:
                zp = zinv
                for m in range(count):
                    acc += (-1) ** m * coeffs[2 * m + 1] * zp
                    zp *= zinv * zinv
            total += pref * acc
        return truth - total


def _prefactors_mp(kind: str, z: SurfaceComplex, nu, logz, z_mp, omega):
    """mpmath twin of _prefactors, sharing the channel layout."""
    i = mpmath.mpc(0, 1)
    if kind in ("K", "Kp"):
        pref = mpmath.sqrt(mpmath.pi / 2) * mpmath.exp(-logz / 2 - z_mp)
        return [pref if kind == "K" else -pref]
    if kind in ("H1", "H1p", "H2", "H2p"):
        base = mpmath.sqrt(2 / mpmath.pi) * mpmath.exp(-logz / 2)
        if kind in ("H1", "H1p"):
            pref = base * mpmath.exp(i * omega)
            return [pref if kind == "H1" else i * pref]
        pref = base * mpmath.exp(-i * omega)
        return [pref if kind == "H2" else -i * pref]
    if kind.startswith("I"):
        base = mpmath.exp(-logz / 2) / mpmath.sqrt(2 * mpmath.pi)
        grow = mpmath.exp(z_mp) * base
        if kind in ("I_upper", "Ip_upper"):
            circ = i * mpmath.exp(i * mpmath.pi * nu)
        else:
            circ = -i * mpmath.exp(-i * mpmath.pi * nu)
        decay = circ * mpmath.exp(-z_mp) * base
        if kind.startswith("Ip"):
            decay = -decay
        return [grow, decay]
    base = mpmath.sqrt(2 / mpmath.pi) * mpmath.exp(-logz / 2)
    c, s = mpmath.cos(omega), mpmath.sin(omega)
    if kind == "J":
        return [base * c, -base * s]
    if kind == "Y":
        return [base * s, base * c]
    if kind == "Jp":
        return [-base * s, -base * c]
    return [base * c, -base * s]

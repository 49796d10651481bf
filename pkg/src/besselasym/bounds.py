"""Rigorous remainder bounds for the four base expansions.

Families are named by their coefficient/terminant channel:

    "K"  -- a_n coefficients, Lambda terminants   (modified Bessel K)
    "Kp" -- b_n coefficients, Lambda terminants   (derivative of K)
    "J"  -- a_n coefficients, Pi terminants       (oscillatory channel)
    "Jp" -- b_n coefficients, Pi terminants       (oscillatory derivative)

All bounds have the shape

    |R_N| <= nu_ratio * first_term_mag * sup_factor

where first_term_mag is the magnitude of the first omitted term (up to the
order-dependent normalization), sup_factor bounds the relevant terminant
uniformly over all moduli on the ray arg w = arg 2z, and nu_ratio carries the
|cos(pi nu)| / |cos(pi Re nu)| inflation of the complex-order theorems.  The
``total`` field of the returned breakdown always equals the product of the
other three.

On the positive real axis with real order the remainder equals the first
omitted term times a factor in (0, 1); ``sign_ratio_check`` verifies that
property against an externally supplied high-precision remainder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln

from .coefficients import coeff_a, coeff_b
from .errors import DomainError, NoApplicableBoundError, SectorError
from .surface import SurfaceComplex
from .terminants import chi, sup_lambda_bound, sup_pi_bound

__all__ = ["BoundBreakdown", "SignRatioReport", "bound_real_nu",
           "bound_complex_nu", "olver_bound", "sign_ratio_check", "FAMILIES"]

FAMILIES = ("K", "Kp", "J", "Jp")

_NEAR_ODD_TOL = 1e-10


@dataclass(frozen=True)
class BoundBreakdown:
    """A remainder bound split into its mathematical factors."""

    first_term_mag: float
    sup_factor: float
    nu_ratio: float
    total: float
    theorem: str


@dataclass(frozen=True)
class SignRatioReport:
    """Remainder / first-omitted-term ratio on the positive real axis."""

    theta: float
    in_unit_interval: bool
    sign_matches: bool


def _check_family(family: str):
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _check_sector(family: str, z: SurfaceComplex):
    limit = 1.5 * math.pi if family in ("K", "Kp") else math.pi
    if not abs(z.argument) < limit:
        raise SectorError(
            f"family {family} bound needs |arg z| < {limit:.6g}, got {z.argument}")


def _sup(family: str, p: float, theta: float) -> float:
    if family in ("K", "Kp"):
        return sup_lambda_bound(p, theta)
    return sup_pi_bound(p, theta)


def bound_real_nu(family: str, z: SurfaceComplex, nu: float, N: int) -> BoundBreakdown:
    """Remainder bound for real order.

    Needs |nu| < N + 1/2 for the a-channel, |nu| < N - 1/2 (and N >= 1) for
    the b-channel.  The terminant order is N + max(0, 1/2 - |nu|) in the
    a-channel and exactly N in the b-channel.
    """
    _check_family(family)
    _check_sector(family, z)
    nu = float(nu)
    if family in ("K", "J"):
        if not abs(nu) < N + 0.5:
            raise NoApplicableBoundError(
                f"real-order a-channel bound needs |nu| < N + 1/2 (nu={nu}, N={N})")
        p = N + max(0.0, 0.5 - abs(nu))
        first = abs(coeff_a(nu, N)) / z.modulus ** N
        theorem = "thm3"
    else:
        if N < 1 or not abs(nu) < N - 0.5:
            raise NoApplicableBoundError(
                f"real-order b-channel bound needs |nu| < N - 1/2, N >= 1 (nu={nu}, N={N})")
        p = float(N)
        first = abs(coeff_b(nu, N)) / z.modulus ** N
        theorem = "thm4"
    sup = _sup(family, p, z.argument)
    return BoundBreakdown(first_term_mag=first, sup_factor=sup, nu_ratio=1.0,
                          total=first * sup * 1.0, theorem=theorem)


def _a_limit_first(nu: complex, N: int, mod: float) -> float:
    # |cos(pi nu)| Gamma(N+1/2+x) Gamma(N+1/2-x) / (pi 2^N N!), x = Re nu;
    # the finite limit of nu_ratio * |a_N(x)| as 2x approaches an odd integer.
    x = nu.real
    lg = (gammaln(N + 0.5 + x) + gammaln(N + 0.5 - x)
          - math.lgamma(N + 1) - N * math.log(2.0) - math.log(math.pi))
    return abs(_cos_pi(nu)) * math.exp(lg) / mod ** N


def _b_limit_first(nu: complex, N: int, mod: float) -> float:
    x = nu.real
    lg = (gammaln(N - 0.5 + x) + gammaln(N - 0.5 - x)
          - math.lgamma(N + 1) - (N + 2) * math.log(2.0) - math.log(math.pi))
    return abs(_cos_pi(nu)) * math.exp(lg) * (4.0 * x * x + 4.0 * N * N - 1.0) / mod ** N


def _cos_pi(nu: complex) -> complex:
    import cmath
    return cmath.cos(math.pi * complex(nu))


def bound_complex_nu(family: str, z: SurfaceComplex, nu: complex, N: int) -> BoundBreakdown:
    """Remainder bound for complex order, with terminant order N + 1/2.

    Needs |Re nu| < N + 1/2 (a-channel) or |Re nu| < N - 1/2, N >= 1
    (b-channel).  When 2 Re nu sits essentially on an odd integer the
    cos-ratio and the vanishing real-order coefficient are combined into
    their finite limit.
    """
    _check_family(family)
    _check_sector(family, z)
    nu = complex(nu)
    x = nu.real
    a_channel = family in ("K", "J")
    if a_channel:
        if not abs(x) < N + 0.5:
            raise NoApplicableBoundError(
                f"complex-order a-channel bound needs |Re nu| < N + 1/2 (nu={nu}, N={N})")
        theorem = "thm6"
    else:
        if N < 1 or not abs(x) < N - 0.5:
            raise NoApplicableBoundError(
                f"complex-order b-channel bound needs |Re nu| < N - 1/2, N >= 1 (nu={nu}, N={N})")
        theorem = "thm7"
    p = N + 0.5
    sup = _sup(family, p, z.argument)
    near_odd = abs(2.0 * x - round(2.0 * x)) < _NEAR_ODD_TOL and round(2.0 * x) % 2 != 0
    if near_odd:
        first = (_a_limit_first(nu, N, z.modulus) if a_channel
                 else _b_limit_first(nu, N, z.modulus))
        ratio = 1.0
    else:
        cos_ratio = abs(_cos_pi(nu)) / abs(math.cos(math.pi * x))
        coeff = coeff_a(x, N) if a_channel else coeff_b(x, N)
        first = abs(coeff) / z.modulus ** N
        ratio = cos_ratio
    return BoundBreakdown(first_term_mag=first, sup_factor=sup, nu_ratio=ratio,
                          total=first * sup * ratio, theorem=theorem)


def olver_bound(z: SurfaceComplex, nu: complex, N: int) -> BoundBreakdown:
    """Variation-norm remainder bound for the a-channel (any complex order).

    Sector-dependent composite factor; valid on |arg z| < 3*pi/2.  For a
    positive real argument with real order the doubling of the error-control
    factor is unnecessary and dropped.
    """
    _check_sector("K", z)
    nu = complex(nu)
    t = abs(z.argument)
    mu = abs(nu * nu - 0.25)
    positive_axis = z.argument == 0.0 and nu.imag == 0.0
    n_eff = max(N, 1)  # variation of t^{-1} also controls the N = 0 bound
    if t <= 0.5 * math.pi:
        var = z.modulus ** -n_eff
        exp_arg = mu / z.modulus
        double = 2.0
    elif t <= math.pi:
        var = chi(n_eff) * z.modulus ** -n_eff
        exp_arg = 0.5 * math.pi * mu / z.modulus
        double = 2.0
    else:
        c = abs(math.cos(z.argument))
        if c == 0.0:
            raise NoApplicableBoundError("variation bound degenerates at |arg z| = 3*pi/2")
        var = 2.0 * chi(n_eff) * (z.modulus * c) ** -n_eff
        exp_arg = math.pi * mu / (z.modulus * c)
        double = 2.0
    if positive_axis:
        double = 1.0
    if N == 0:
        # |R_0| <= exp(mu * V_1); mu * V_1 coincides with exp_arg in every
        # sector because chi(1) = pi/2 exactly.
        total = math.exp(exp_arg)
        first = 1.0
        sup = total
    else:
        first = abs(coeff_a(nu, N)) / z.modulus ** N
        sup = double * var * z.modulus ** N * math.exp(exp_arg)
        total = first * sup
    return BoundBreakdown(first_term_mag=first, sup_factor=sup, nu_ratio=1.0,
                          total=total, theorem="olver")


def sign_ratio_check(family: str, z_pos: float, nu_real: float, N: int,
                     oracle_remainder: complex) -> SignRatioReport:
    """Check remainder = (first omitted term) * theta with theta in (0, 1).

    ``oracle_remainder`` must be the true remainder of the family's expansion
    at positive real z, computed independently (see the oracle helpers).
    """
    _check_family(family)
    if z_pos <= 0.0:
        raise DomainError("sign_ratio_check needs a positive real argument")
    nu = float(nu_real)
    coeff = coeff_a(nu, N) if family in ("K", "J") else coeff_b(nu, N)
    sign = 1.0 if family in ("K", "Kp") else (-1.0) ** math.ceil(N / 2)
    term = sign * coeff.real / z_pos ** N
    if term == 0.0:
        raise DomainError("expansion terminates at this order; ratio undefined")
    ratio = complex(oracle_remainder) / term
    theta = ratio.real
    return SignRatioReport(theta=theta,
                           in_unit_interval=bool(0.0 < theta < 1.0),
                           sign_matches=bool(theta > 0.0))

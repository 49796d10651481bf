"""Exponentially improved re-expansion of the series remainders.

The remainder of each base channel, truncated near its optimal order
N ~ 4|z|, is itself expanded into a short series of terminant functions:

    R_N = sign * cos(pi nu) / (2^N pi z^N)
          * sum_{m<M} 2^m c_m(nu) Gamma(N-m) T_{N-m}(2z)  +  R_{N,M}

with (c, T, sign) = (a, Lambda, (-1)^N) for K, (b, Lambda, (-1)^{N+1}) for
Kp, (a, Pi, (-1)^{floor(N/2)}) for J and (b, Pi, (-1)^{floor(N/2)+1}) for Jp.
With N ~ 4|z| and M ~ 2|z| the leftover R_{N,M} is O(|z|^{-1/2} e^{-4|z|}),
i.e. exponentially small compared to the remainder itself.

The tail bound is fully analytic (no oracle): the inner remainder factor is
bounded through the positive-axis bound of the corresponding theorem, and the
terminant magnitude enters as an evaluated factor.  On the positive real axis
the leftover equals the first omitted terminant term times a factor in (0,1),
which ``sign_ratio_reexp`` checks.

Valid on |arg z| <= pi for the Lambda families and |arg z| <= pi/2 for the
Pi families (closed sectors).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bounds import SignRatioReport, bound_complex_nu, bound_real_nu
from .coefficients import coeff_a, coeff_b
from .errors import DomainError, SectorError
from .surface import SurfaceComplex
from .terminants import lambda_terminant, pi_terminant

__all__ = ["TruncationPair", "ReexpandedRemainder", "reexpand",
           "reexpand_tail_bound", "sign_ratio_reexp", "optimal_truncation"]

_REAL_TOL = 1e-13


@dataclass(frozen=True)
class TruncationPair:
    """Outer truncation order N and terminant-series length M, 0 <= M < N."""

    N: int
    M: int

    def __post_init__(self):
        if not 0 <= self.M < self.N:
            raise DomainError(f"need 0 <= M < N, got N={self.N}, M={self.M}")


@dataclass(frozen=True)
class ReexpandedRemainder:
    """Terminant-series approximation of a channel remainder."""

    series_part: complex
    tail_bound: float
    pair: TruncationPair


def _family_parts(family: str):
    if family == "K":
        return coeff_a, lambda_terminant, lambda n: (-1.0) ** n
    if family == "Kp":
        return coeff_b, lambda_terminant, lambda n: (-1.0) ** (n + 1)
    if family == "J":
        return coeff_a, pi_terminant, lambda n: (-1.0) ** (n // 2)
    if family == "Jp":
        return coeff_b, pi_terminant, lambda n: (-1.0) ** (n // 2 + 1)
    raise DomainError(f"unknown re-expansion family {family!r}")


def _check_sector(family: str, z: SurfaceComplex):
    limit = math.pi if family in ("K", "Kp") else 0.5 * math.pi
    if abs(z.argument) > limit:
        raise SectorError(
            f"re-expansion of family {family} needs |arg z| <= {limit:.6g}, "
            f"got {z.argument}")


def optimal_truncation(z_mod: float, rho: float = 0.0,
                       sigma: float = 0.0) -> TruncationPair:
    """N = round(4|z| + rho), M = round(2|z| + sigma), ties to even, M < N."""
    if z_mod <= 0.0:
        raise DomainError("optimal_truncation needs |z| > 0")
    N = round(4.0 * z_mod + rho)
    M = round(2.0 * z_mod + sigma)
    if N < 1:
        raise DomainError("optimal truncation degenerates: N < 1")
    if M >= N:
        M = N - 1
    if M < 0:
        M = 0
    return TruncationPair(N=int(N), M=int(M))


def _log_front(N: int, m: int, logz: complex) -> complex:
    # log of Gamma(N-m) 2^m / (2^N pi z^N); always in log space so the
    # individual gamma and power factors cannot overflow
    return (math.lgamma(N - m) + (m - N) * math.log(2.0)
            - math.log(math.pi) - N * logz)


def reexpand(family: str, z: SurfaceComplex, nu: complex,
             pair: TruncationPair) -> ReexpandedRemainder:
    """Terminant-series value of R_N and an analytic bound on the leftover."""
    _check_sector(family, z)
    coeff, terminant, sign_of = _family_parts(family)
    nu = complex(nu)
    cos_nu = cmath.cos(math.pi * nu)
    logz = z.log()
    w2z = z.scaled(2.0)
    total = 0.0 + 0.0j
    for m in range(pair.M):
        t = terminant(float(pair.N - m), w2z).value
        c = coeff(nu, m)
        total += cmath.exp(_log_front(pair.N, m, logz)) * c * t
    series = sign_of(pair.N) * cos_nu * total
    return ReexpandedRemainder(series_part=series,
                               tail_bound=reexpand_tail_bound(family, z, nu, pair),
                               pair=pair)


def _positive_axis_coeff_bound(family: str, z_mod: float, nu: complex,
                               M: int) -> float:
    """Bound on |z|^M |R_M(|z|, nu)| and on nu_ratio |c_M(Re nu)|, whichever
    theorem applies; both reduce to the same product on the positive axis."""
    z_pos = SurfaceComplex(z_mod, 0.0)
    if abs(nu.imag) <= _REAL_TOL:
        bb = bound_real_nu(family if family in ("K", "Kp") else
                           ("K" if family == "J" else "Kp"), z_pos, nu.real, M)
    else:
        bb = bound_complex_nu(family if family in ("K", "Kp") else
                              ("K" if family == "J" else "Kp"), z_pos, nu, M)
    return bb.total * z_mod ** M


def reexpand_tail_bound(family: str, z: SurfaceComplex, nu: complex,
                        pair: TruncationPair) -> float:
    """Analytic bound on |R_{N,M}|, with no oracle input.

    Requires |Re nu| < M + 1/2 for the a-families and |Re nu| < M - 1/2,
    M >= 1 for the b-families (so the positive-axis bound of the inner
    remainder applies).
    """
    _check_sector(family, z)
    nu = complex(nu)
    N, M = pair.N, pair.M
    coeff, terminant, _ = _family_parts(family)
    inner = _positive_axis_coeff_bound(family, z.modulus, nu, M)
    t_mag = abs(terminant(float(N - M), z.scaled(2.0)).value)
    front = (abs(cmath.cos(math.pi * nu)) / math.pi
             * math.exp(math.lgamma(N - M) + (M - N) * math.log(2.0)
                        - N * math.log(z.modulus)))
    return front * inner * (t_mag + 1.0)


def sign_ratio_reexp(family: str, z_pos: float, nu_real: float,
                     pair: TruncationPair,
                     oracle_remainder: complex) -> SignRatioReport:
    """Check leftover = (first omitted terminant term) * Theta, Theta in (0,1).

    ``oracle_remainder`` is the true channel remainder R_N at positive real
    argument; the terminant series is subtracted here.
    """
    if z_pos <= 0.0:
        raise DomainError("sign_ratio_reexp needs a positive real argument")
    z = SurfaceComplex(float(z_pos), 0.0)
    nu = float(nu_real)
    coeff, terminant, sign_of = _family_parts(family)
    approx = reexpand(family, z, nu, pair)
    leftover = complex(oracle_remainder) - approx.series_part
    t = terminant(float(pair.N - pair.M), z.scaled(2.0)).value
    omitted = (sign_of(pair.N) * math.cos(math.pi * nu)
               * cmath.exp(_log_front(pair.N, pair.M, z.log()))
               * coeff(nu, pair.M) * t)
    if omitted == 0:
        raise DomainError("first omitted terminant term vanishes; ratio undefined")
    ratio = leftover / omitted
    theta = ratio.real
    return SignRatioReport(theta=theta,
                           in_unit_interval=bool(0.0 < theta < 1.0),
                           sign_matches=bool(theta > 0.0))

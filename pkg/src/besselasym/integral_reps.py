"""Integral representations of the series remainders, used as cross-checks.

Two independent routes to the same remainders:

* the terminant-kernel route: the remainder of the K (or J) series equals a
  half-line integral of an algebraic kernel times Lambda (or Pi) evaluated
  along the ray arg w = arg z,

      R_N = (-1)^N cos(pi nu)/pi * Gamma(N+1/2)/2^N * z^{-N}
            * int_0^inf t^{-1/2} (1+t)^{-(N+1/2)} F(t) T_{N+1/2}(2z(1+t)) dt

  where F is the closed form of the regularized Gauss hypergeometric
  function at parameter 1/2 (note the 1/Gamma(1/2) normalization),

      F(t) = [ (sqrt(1+t)+sqrt(t))^{2 nu} + (sqrt(1+t)-sqrt(t))^{2 nu} ]
             / (2 sqrt(pi) sqrt(1+t));

* the Bessel-kernel route: the same remainders as a Cauchy-type transform of
  K_nu (or K'_nu) on the positive axis,

      R_N = (-1)^{sgn} sqrt(2/pi) cos(pi nu)/pi * z^{-N}
            * int_0^inf t^{N-1/2} e^{-t} kernel(t, z) K_nu(t) dt.

Dropping the terminant factor from the first route yields the coefficient
a_N itself, which gives an end-to-end identity test of the kernel, the
normalization and the quadrature.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import gammaln

from . import oracle
from .errors import DomainError, SectorError
from .quadrature import integrate_half_line
from .surface import SurfaceComplex
from .terminants import _lambda_batch

__all__ = ["IntegralRepConfig", "remainder_K_via_thm1", "remainder_J_via_thm1",
           "remainder_via_boyd", "coeff_a_via_integral"]

_BOYD_CUTOFF = 45.0  # e^{-t} K_nu(t) ~ e^{-2t}: beyond this everything is noise


def _flatten(t):
    """Flatten a quadrature abscissa array; return it with a shape restorer."""
    t = np.asarray(t)
    if np.iscomplexobj(t):
        # the quadrature driver promotes the abscissae to the result dtype;
        # the imaginary parts are identically zero
        t = t.real
    t = t.astype(float)
    shape = t.shape
    return t.reshape(-1), lambda v: np.asarray(v).reshape(shape)


def _default_tol() -> float:
    raw = os.environ.get("BESSELASYM_QUAD_TOL", "")
    if raw:
        try:
            val = float(raw)
        except ValueError as exc:
            raise DomainError(f"bad BESSELASYM_QUAD_TOL value {raw!r}") from exc
        if not val > 0.0:
            raise DomainError("BESSELASYM_QUAD_TOL must be positive")
        return val
    return 1e-12


@dataclass(frozen=True)
class IntegralRepConfig:
    """Quadrature settings for the integral-representation cross-checks."""

    hyp_parameter: float = 0.5        # the free parameter of the algebraic kernel
    quad_abs_tol: float = field(default_factory=_default_tol)
    max_nodes: int = 4096

    def __post_init__(self):
        if self.hyp_parameter != 0.5:
            raise DomainError(
                "only the closed-form kernel at parameter 1/2 is implemented")
        if not self.quad_abs_tol > 0.0:
            raise DomainError("quad_abs_tol must be positive")

    @property
    def maxlevel(self) -> int:
        return max(4, int(math.log2(max(self.max_nodes, 16))))


def _hyp_kernel(t: np.ndarray, nu: complex) -> np.ndarray:
    """The regularized hypergeometric closed form F(t) above (parameter 1/2)."""
    sq = np.sqrt(t)
    sp = np.sqrt(1.0 + t)
    two_nu = 2.0 * complex(nu)
    # (sp - sq)(sp + sq) = 1, so both branch factors come from one stable log
    lg = np.log(sp + sq)
    return (np.exp(two_nu * lg) + np.exp(-two_nu * lg)) / (2.0 * math.sqrt(math.pi) * sp)


def _thm1_front(N: int, z: SurfaceComplex, nu: complex, sign: float) -> complex:
    return (sign * cmath.cos(math.pi * complex(nu)) / math.pi
            * math.exp(gammaln(N + 0.5) - N * math.log(2.0))
            * z.power(-N))


def _thm1_breaks(N: int, z: SurfaceComplex):
    return [1.0, max(1.0, N / (2.0 * z.modulus))]


def remainder_K_via_thm1(z: SurfaceComplex, nu: complex, N: int,
                         config: Optional[IntegralRepConfig] = None) -> complex:
    """R_N of the K channel through the Lambda-kernel integral.

    Valid for |arg z| < 3*pi/2 and |Re nu| < N + 1/2.
    """
    config = config or IntegralRepConfig()
    nu = complex(nu)
    if not abs(nu.real) < N + 0.5:
        raise DomainError(f"needs |Re nu| < N + 1/2 (nu={nu}, N={N})")
    if not abs(z.argument) < 1.5 * math.pi:
        raise SectorError("terminant-kernel route needs |arg z| < 3*pi/2")
    p = N + 0.5

    def integrand(t):
        t, restore = _flatten(t)
        lam = _lambda_batch(p, 2.0 * z.modulus * (1.0 + t), z.argument)
        return restore(t ** -0.5 * (1.0 + t) ** -(N + 0.5)
                       * _hyp_kernel(t, nu) * lam)

    val, _ = integrate_half_line(integrand, _thm1_breaks(N, z),
                                 config.quad_abs_tol, config.maxlevel)
    return _thm1_front(N, z, nu, (-1.0) ** N) * val


def remainder_J_via_thm1(z: SurfaceComplex, nu: complex, N: int,
                         config: Optional[IntegralRepConfig] = None) -> complex:
    """R_N of the J channel through the Pi-kernel integral (|arg z| < pi)."""
    config = config or IntegralRepConfig()
    nu = complex(nu)
    if not abs(nu.real) < N + 0.5:
        raise DomainError(f"needs |Re nu| < N + 1/2 (nu={nu}, N={N})")
    if not abs(z.argument) < math.pi:
        raise SectorError("oscillatory terminant-kernel route needs |arg z| < pi")
    p = N + 0.5

    def integrand(t):
        t, restore = _flatten(t)
        mods = 2.0 * z.modulus * (1.0 + t)
        pi_vals = 0.5 * (_lambda_batch(p, mods, z.argument + 0.5 * math.pi)
                         + _lambda_batch(p, mods, z.argument - 0.5 * math.pi))
        return restore(t ** -0.5 * (1.0 + t) ** -(N + 0.5)
                       * _hyp_kernel(t, nu) * pi_vals)

    val, _ = integrate_half_line(integrand, _thm1_breaks(N, z),
                                 config.quad_abs_tol, config.maxlevel)
    return _thm1_front(N, z, nu, (-1.0) ** (N // 2)) * val


def coeff_a_via_integral(nu: complex, N: int,
                         config: Optional[IntegralRepConfig] = None) -> complex:
    """a_N(nu) from the algebraic-kernel integral (terminant factor dropped)."""
    config = config or IntegralRepConfig()
    nu = complex(nu)
    if not abs(nu.real) < N + 0.5:
        raise DomainError(f"needs |Re nu| < N + 1/2 (nu={nu}, N={N})")

    def integrand(t):
        t, restore = _flatten(t)
        return restore(t ** -0.5 * (1.0 + t) ** -(N + 0.5) * _hyp_kernel(t, nu))

    val, _ = integrate_half_line(integrand, [1.0], config.quad_abs_tol,
                                 config.maxlevel)
    return ((-1.0) ** N * cmath.cos(math.pi * nu) / math.pi
            * math.exp(gammaln(N + 0.5) - N * math.log(2.0)) * val)


def remainder_via_boyd(family: str, z: SurfaceComplex, nu: complex, N: int,
                       config: Optional[IntegralRepConfig] = None) -> complex:
    """R_N of any base channel through the Bessel-kernel transform.

    Sectors: |arg z| < pi for the Lambda families (K, Kp), |arg z| < pi/2 for
    the Pi families (J, Jp).  Orders: |Re nu| < N + 1/2 for the a-channel,
    |Re nu| < N - 1/2 with N >= 1 for the b-channel.
    """
    config = config or IntegralRepConfig()
    nu = complex(nu)
    if family in ("K", "J"):
        deriv = False
        if not abs(nu.real) < N + 0.5:
            raise DomainError(f"needs |Re nu| < N + 1/2 (nu={nu}, N={N})")
    elif family in ("Kp", "Jp"):
        deriv = True
        if N < 1 or not abs(nu.real) < N - 0.5:
            raise DomainError(f"needs |Re nu| < N - 1/2, N >= 1 (nu={nu}, N={N})")
    else:
        raise DomainError(f"unknown remainder family {family!r}")
    square = family in ("J", "Jp")
    limit = 0.5 * math.pi if square else math.pi
    if not abs(z.argument) < limit:
        raise SectorError(f"Bessel-kernel route for {family} needs |arg z| < {limit:.6g}")
    z_c = complex(z)
    sign = (-1.0) ** (N // 2) if square else (-1.0) ** N

    def integrand(t):
        t, restore = _flatten(t)
        kvals = np.array([oracle.k_positive_axis(float(x), nu.real, nu.imag, deriv)
                          for x in t])
        ratio = t / z_c
        kern = 1.0 / (1.0 + (ratio * ratio if square else ratio))
        return restore(t ** (N - 0.5) * np.exp(-t) * kern * kvals)

    # the weight t^{N-1/2} e^{-t} K_nu(t) ~ e^{-2t}: cut the tail explicitly
    pts = [0.0, 1.0, min(0.5 * N + 1.0, _BOYD_CUTOFF), _BOYD_CUTOFF]
    total = 0.0 + 0.0j
    from scipy.integrate import tanhsinh
    for a, b in zip(pts[:-1], pts[1:]):
        if b <= a:
            continue
        res = tanhsinh(integrand, a, b, atol=config.quad_abs_tol,
                       maxlevel=config.maxlevel)
        total += complex(res.integral)
    front = (sign * math.sqrt(2.0 / math.pi) * cmath.cos(math.pi * nu) / math.pi
             * z.power(-N))
    return front * total

"""Terminant functions and their sup bounds.

The basic object is

    Lambda_p(w) = w^p e^w Gamma(1-p, w)
                = (1/Gamma(p)) int_0^inf t^{p-1} e^{-t} / (1 + t/w) dt,

the second form valid for |arg w| < pi, together with its averaged companion

    Pi_p(w) = (Lambda_p(w e^{i pi/2}) + Lambda_p(w e^{-i pi/2})) / 2
            = (1/Gamma(p)) int_0^inf t^{p-1} e^{-t} / (1 + (t/w)^2) dt,

the integral valid for |arg w| < pi/2.  Arguments live on the logarithmic
surface; Lambda is defined for |arg w| < 3*pi/2 (beyond pi via the residue
jump across the Stokes line) and Pi for |arg w| < pi.

Evaluation strategy, chosen by (p, |w|, arg w):

* small-p series     -- p <= 2 and |w| < 2: the incomplete gamma by its
                        ascending series, in extended precision;
* laguerre-quadrature-- |arg w| <= pi/2 (pi/4 for Pi): generalized
                        Gauss-Laguerre nodes against the Cauchy kernel;
* rotated-contour    -- pi/2 < arg w < pi: the same nodes on the ray
                        arg t = phi with phi = arctan(1/sqrt(p)), which keeps
                        the kernel pole at distance;
* analytic-continuation -- pi <= arg w < 3*pi/2: the residue term
                        2*pi*i e^{-pi i p} w^p e^w / Gamma(p) plus the value
                        one sheet down.

Negative arguments are handled by the reflection Lambda_p(conj w) =
conj Lambda_p(w).

The sup-bound functions return the best of several analytic majorants of
|Lambda_p| / |Pi_p| over each sector, including the sharp one obtained by
optimally tilting the integration ray (``solve_meijer_angle``).  These bounds
depend only on p and arg w, so they also bound the supremum over all moduli
that the remainder theorems require.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from scipy.special import gammaln, hyp2f1, roots_genlaguerre

from .errors import AccuracyError, DomainError
from .surface import SurfaceComplex

__all__ = [
    "TerminantResult", "MeijerAngle", "lambda_terminant", "pi_terminant",
    "chi", "hyp_bound_kernel", "solve_meijer_angle",
    "sup_lambda_bound", "sup_pi_bound",
]

_MAX_P = 170.0
_REL_TARGET = 1e-13


@dataclass(frozen=True)
class TerminantResult:
    """A terminant value with an evaluation-error estimate and method tag."""

    value: complex
    est_abs_err: float
    method: str


@dataclass(frozen=True)
class MeijerAngle:
    """The optimal contour-tilt angle behind the sharp sector bound."""

    p: float
    theta: float
    phi: float


@lru_cache(maxsize=256)
def _gl_nodes(n: int, alpha: float):
    x, w = roots_genlaguerre(n, alpha)
    s = w.sum()
    return x, w / s  # weights normalized to total mass 1 (= Gamma(p) scaled out)


def _check_p(p: float):
    if not (0.0 < p <= _MAX_P):
        raise DomainError(f"terminant order must lie in (0, {_MAX_P}], got {p}")


# ----------------------------------------------------------------- evaluation

def _series_incgamma(p: float, w: SurfaceComplex):
    """w^p e^w Gamma(1-p, w) by the ascending series, in extended precision."""
    with mpmath.workdps(40):
        wm = mpmath.mpf(w.modulus) * mpmath.exp(mpmath.mpc(0, w.argument))
        logw = mpmath.log(mpmath.mpf(w.modulus)) + mpmath.mpc(0, w.argument)
        if abs(p - round(p)) < 1e-12 and round(p) >= 1:
            m = int(round(p))
            # Gamma(0, w) = -gamma - log w - sum_{k>=1} (-w)^k / (k k!)
            g0 = -mpmath.euler - logw
            term = mpmath.mpc(1)
            for k in range(1, 200):
                term *= -wm / k
                g0 -= term / k
                if abs(term) < mpmath.mpf(10) ** -40:
                    break
            g = g0
            for j in range(1, m):
                # Gamma(-j, w) = (Gamma(1-j, w) - w^{-j} e^{-w}) / (-j)
                g = (g - mpmath.exp(-j * logw - wm)) / (-j)
        else:
            # Gamma(1-p, w) = Gamma(1-p) - w^{1-p} sum_k (-w)^k / (k! (1-p+k))
            a = mpmath.mpf(1) - p
            ssum = mpmath.mpc(0)
            term = mpmath.mpc(1)
            k = 0
            while True:
                ssum += term / (a + k)
                k += 1
                term *= -wm / k
                if abs(term) < mpmath.mpf(10) ** -40 and k > 4:
                    break
            g = mpmath.gamma(a) - mpmath.exp(a * logw) * ssum
        val = mpmath.exp(p * logw + wm) * g
        return complex(val), float(abs(val)) * 1e-25


def _small_w_incgamma(p: float, w: SurfaceComplex):
    """Lambda_p(w) via the incomplete gamma in extended precision.

    Used when the kernel pole at t = -w sits too close to the quadrature
    contour (small |w|, or arg w near the negative axis).  Handles the whole
    sector |arg w| < 3*pi/2: beyond the principal sheet the monodromy jump
    Gamma(a, w e^{2 pi i}) = Gamma(a, w) - 2 pi i e^{i pi a} / Gamma(1-a)
    is applied, which stays finite for every order.
    """
    if p <= 2.0 and abs(w.argument) <= math.pi:
        return _series_incgamma(p, w)
    with mpmath.workdps(40):
        theta = mpmath.mpf(w.argument)
        a = 1 - mpmath.mpf(p)
        i = mpmath.mpc(0, 1)
        if w.argument > math.pi:
            w0 = mpmath.mpf(w.modulus) * mpmath.exp(i * (theta - 2 * mpmath.pi))
            g = mpmath.gammainc(a, w0) - 2 * mpmath.pi * i * mpmath.exp(i * mpmath.pi * a) / mpmath.gamma(1 - a)
        elif w.argument < -math.pi:
            w0 = mpmath.mpf(w.modulus) * mpmath.exp(i * (theta + 2 * mpmath.pi))
            g = mpmath.gammainc(a, w0) + 2 * mpmath.pi * i * mpmath.exp(-i * mpmath.pi * a) / mpmath.gamma(1 - a)
        else:
            wm = mpmath.mpf(w.modulus) * mpmath.exp(i * theta)
            g = mpmath.gammainc(a, wm)
        wm = mpmath.mpf(w.modulus) * mpmath.exp(i * theta)
        logw = mpmath.log(mpmath.mpf(w.modulus)) + i * theta
        val = mpmath.exp(p * logw + wm) * g
        return complex(val), float(abs(val)) * 1e-22


def _kernel_sum(p: float, w_c: complex, square: bool, n: int) -> complex:
    x, wt = _gl_nodes(n, p - 1.0)
    t = x / w_c
    kern = 1.0 / (1.0 + (t * t if square else t))
    return complex(np.dot(wt, kern))


def _adaptive(f):
    # scipy's Laguerre nodes go non-finite past n ~ 340, so the ladder stops
    # at 300; n = 100 already resolves the Cauchy kernel to machine accuracy
    # for every reachable (p, w).
    prev = f(100)
    cur = None
    for n in (200, 300):
        cur = f(n)
        diff = abs(cur - prev)
        if diff <= max(1e-300, _REL_TARGET * abs(cur)):
            return cur, diff
        prev = cur
    raise AccuracyError("terminant quadrature did not converge",
                        partial=cur, est_abs_err=abs(cur - prev))


def _rotated_sum(p: float, w: SurfaceComplex, n: int) -> complex:
    phi = math.atan(1.0 / math.sqrt(p))
    x, wt = _gl_nodes(n, p - 1.0)
    w_c = cmath.rect(w.modulus, w.argument)
    ray = cmath.exp(1j * phi)
    # t = u e^{i phi} / cos(phi): e^{-t} = e^{-u} e^{-i u tan(phi)}
    kern = np.exp(-1j * x * math.tan(phi)) / (1.0 + x * ray / (w_c * math.cos(phi)))
    pref = cmath.exp(1j * p * phi) / math.cos(phi) ** p
    return pref * complex(np.dot(wt, kern))


def _lambda_raw(p: float, w: SurfaceComplex) -> TerminantResult:
    """Lambda_p(w) for arg w >= 0; callers reduce negative arguments."""
    theta = w.argument
    if theta >= 1.5 * math.pi:
        raise DomainError(
            f"Lambda_p is only defined for |arg w| < 3*pi/2, got {theta}")
    phi = math.atan(1.0 / math.sqrt(p))
    if w.modulus < 2.0:
        val, err = _small_w_incgamma(p, w)
        return TerminantResult(value=val, est_abs_err=err, method="small-p-series")
    if theta >= math.pi + 0.5 * phi:
        # Residue across the Stokes line plus the value one sheet down.
        logw = complex(math.log(w.modulus), theta)
        res = 2j * math.pi * cmath.exp(-1j * math.pi * p + p * logw
                                       + cmath.rect(w.modulus, theta)
                                       - gammaln(p))
        down = lambda_terminant(p, SurfaceComplex(w.modulus, theta - 2 * math.pi))
        return TerminantResult(value=res + down.value,
                               est_abs_err=down.est_abs_err + abs(res) * 1e-14,
                               method="analytic-continuation")
    if theta <= 0.5 * math.pi:
        w_c = cmath.rect(w.modulus, theta)
        val, diff = _adaptive(lambda n: _kernel_sum(p, w_c, False, n))
        return TerminantResult(value=val, est_abs_err=diff + abs(val) * 1e-15,
                               method="laguerre-quadrature")
    # pi/2 < theta < pi: tilt the ray towards the pole-free half plane
    try:
        val, diff = _adaptive(lambda n: _rotated_sum(p, w, n))
    except AccuracyError:
        # The kernel pole creeps onto the tilted ray as theta -> pi; fall back
        # to the extended-precision incomplete gamma.
        val, err = _small_w_incgamma(p, w)
        return TerminantResult(value=val, est_abs_err=err, method="small-p-series")
    return TerminantResult(value=val, est_abs_err=diff + abs(val) * 1e-15,
                           method="rotated-contour")


def lambda_terminant(p: float, w: SurfaceComplex) -> TerminantResult:
    """Lambda_p(w) on the surface sector |arg w| < 3*pi/2."""
    _check_p(p)
    if w.argument < 0.0:
        r = _lambda_raw(p, w.conjugate())
        return TerminantResult(value=r.value.conjugate(),
                               est_abs_err=r.est_abs_err, method=r.method)
    return _lambda_raw(p, w)


def pi_terminant(p: float, w: SurfaceComplex) -> TerminantResult:
    """Pi_p(w) on the sector |arg w| < pi."""
    _check_p(p)
    theta = abs(w.argument)
    if theta >= math.pi:
        raise DomainError(f"Pi_p is only defined for |arg w| < pi, got {w.argument}")
    if theta <= 0.25 * math.pi and w.modulus >= 2.0:
        w_c = cmath.rect(w.modulus, w.argument)
        val, diff = _adaptive(lambda n: _kernel_sum(p, w_c, True, n))
        return TerminantResult(value=val, est_abs_err=diff + abs(val) * 1e-15,
                               method="laguerre-quadrature")
    up = lambda_terminant(p, w.rotated(0.5 * math.pi))
    dn = lambda_terminant(p, w.rotated(-0.5 * math.pi))
    return TerminantResult(value=0.5 * (up.value + dn.value),
                           est_abs_err=0.5 * (up.est_abs_err + dn.est_abs_err),
                           method=up.method)


def _lambda_batch(p: float, moduli: np.ndarray, theta: float) -> np.ndarray:
    """Lambda_p at many moduli sharing one argument (for the integral checks)."""
    _check_p(p)
    if theta < 0.0:
        return np.conj(_lambda_batch(p, moduli, -theta))
    moduli = np.asarray(moduli, dtype=float)
    if theta >= 1.5 * math.pi:
        raise DomainError("batch terminant outside |arg w| < 3*pi/2")
    if theta > math.pi:
        logmod = np.log(moduli)
        res = 2j * math.pi * np.exp(
            -1j * math.pi * p + (p * 1j * theta - gammaln(p))
            + p * logmod + moduli * cmath.exp(1j * theta))
        return res + np.conj(_lambda_batch(p, moduli, 2 * math.pi - theta))
    if theta > math.pi - 0.3:
        # too close to the Stokes line for the vectorized contours
        return np.array([lambda_terminant(p, SurfaceComplex(float(m), theta)).value
                         for m in moduli])
    small = moduli < 2.0
    out = np.empty(moduli.shape, dtype=complex)

    def eval_block(n: int) -> np.ndarray:
        x, wt = _gl_nodes(n, p - 1.0)
        if theta <= 0.5 * math.pi:
            w_c = moduli * cmath.exp(1j * theta)
            return (wt[None, :] / (1.0 + x[None, :] / w_c[:, None])).sum(axis=1)
        phi = math.atan(1.0 / math.sqrt(p))
        w_c = moduli * cmath.exp(1j * theta)
        ray = cmath.exp(1j * phi)
        pref = cmath.exp(1j * p * phi) / math.cos(phi) ** p
        kern = (np.exp(-1j * x * math.tan(phi))[None, :]
                / (1.0 + x[None, :] * ray / (w_c[:, None] * math.cos(phi))))
        return pref * np.dot(kern, wt)

    prev = eval_block(150)
    cur = eval_block(300)
    if np.max(np.abs(cur - prev)) > _REL_TARGET * max(1.0, np.max(np.abs(cur))):
        raise AccuracyError("batch terminant quadrature did not converge")
    out[:] = cur
    if np.any(small):
        for i in np.nonzero(small)[0]:
            out[i] = lambda_terminant(p, SurfaceComplex(float(moduli[i]), theta)).value
    return out


# ----------------------------------------------------------------- sup bounds

def chi(p: float) -> float:
    """chi(p) = sqrt(pi) Gamma(p/2 + 1) / Gamma(p/2 + 1/2)."""
    if p <= 0:
        raise DomainError("chi requires p > 0")
    return math.exp(0.5 * math.log(math.pi)
                    + gammaln(0.5 * p + 1.0) - gammaln(0.5 * p + 0.5))


def hyp_bound_kernel(p: float, x: float) -> float:
    """Gamma(p/2+1) * regularized 2F1(1/2, p/2; p/2+1; x); equals chi(p) at x=1."""
    if not 0.0 <= x <= 1.0:
        raise DomainError("hyp_bound_kernel requires x in [0, 1]")
    if x == 1.0:
        return chi(p)
    return float(hyp2f1(0.5, 0.5 * p, 0.5 * p + 1.0, x))


def _bisect(g, lo: float, hi: float) -> float:
    """Root of g by bracket scan + bisection to width 1e-13."""
    grid = 400
    flo = g(lo)
    a, fa = lo, flo
    root = None
    for i in range(1, grid + 1):
        b = lo + (hi - lo) * i / grid
        fb = g(b)
        if fa == 0.0:
            return a
        if fa * fb <= 0.0:
            root = (a, b)
            break
        a, fa = b, fb
    if root is None:
        raise AccuracyError("no sign change located for the tilt-angle equation")
    a, b = root
    while b - a > 1e-13:
        m = 0.5 * (a + b)
        if g(a) * g(m) <= 0.0:
            b = m
        else:
            a = m
    return 0.5 * (a + b)


def solve_meijer_angle(p: float, theta: float, primed: bool = False) -> MeijerAngle:
    """The optimal ray-tilt angle for the sharp sector bound.

    For Lambda (``primed=False``) solves (p+1)cos(theta-2phi) = (p-1)cos(theta)
    on the sector pi/2 < |theta| < 3*pi/2; for Pi (``primed=True``) solves
    (p+2)cos(2theta-3phi) = (p-2)cos(2theta-phi) on pi/4 < |theta| < pi.
    Negative theta mirrors to -phi(|theta|).
    """
    _check_p(p)
    if theta < 0.0:
        m = solve_meijer_angle(p, -theta, primed)
        return MeijerAngle(p=p, theta=theta, phi=-m.phi)
    eps = 1e-12
    if not primed:
        if not (0.5 * math.pi < theta < 1.5 * math.pi):
            raise DomainError("tilt-angle bound needs pi/2 < |theta| < 3*pi/2")
        g = lambda f: (p + 1.0) * math.cos(theta - 2.0 * f) - (p - 1.0) * math.cos(theta)
        if theta < math.pi:
            lo, hi = eps, theta - 0.5 * math.pi - eps
        else:
            lo, hi = theta - math.pi + eps, 0.5 * math.pi - eps
    else:
        if not (0.25 * math.pi < theta < math.pi):
            raise DomainError("tilt-angle bound needs pi/4 < |theta| < pi")
        g = lambda f: ((p + 2.0) * math.cos(2.0 * theta - 3.0 * f)
                       - (p - 2.0) * math.cos(2.0 * theta - f))
        if theta < 0.5 * math.pi:
            lo, hi = eps, theta - 0.25 * math.pi - eps
        elif theta < 0.75 * math.pi:
            lo, hi = theta - 0.5 * math.pi + eps, theta - 0.25 * math.pi - eps
        else:
            lo, hi = theta - 0.5 * math.pi + eps, 0.5 * math.pi - eps
    if hi <= lo:
        raise DomainError("degenerate tilt-angle bracket")
    return MeijerAngle(p=p, theta=theta, phi=_bisect(g, lo, hi))


def _meijer_lambda(p: float, theta: float) -> float:
    m = solve_meijer_angle(p, theta, primed=False)
    s = abs(math.sin(theta - m.phi))
    if s == 0.0 or math.cos(m.phi) <= 0.0:
        return math.inf
    return 1.0 / (s * math.cos(m.phi) ** p)


def _meijer_pi(p: float, theta: float) -> float:
    m = solve_meijer_angle(p, theta, primed=True)
    s = abs(math.sin(2.0 * (theta - m.phi)))
    if s == 0.0 or math.cos(m.phi) <= 0.0:
        return math.inf
    return 1.0 / (s * math.cos(m.phi) ** p)


def _csc(x: float) -> float:
    s = abs(math.sin(x))
    return math.inf if s == 0.0 else 1.0 / s


def sup_lambda_bound(p: float, theta: float) -> float:
    """An upper bound for |Lambda_p(w)| valid for every w with arg w = theta.

    Piecewise over |theta|: 1 on the closed right half plane; the best of the
    cosecant, the sqrt(e(p+1/2)) cap, the hypergeometric refinement and the
    tilted-ray bound up to pi; beyond pi, the residue magnitude plus the bound
    one sheet down.
    """
    _check_p(p)
    t = abs(theta)
    if t <= 0.5 * math.pi:
        return 1.0
    if t <= math.pi:
        cands = [_csc(t),
                 math.sqrt(math.e * (p + 0.5)),
                 1.0 + hyp_bound_kernel(p, math.cos(t) ** 2),
                 _meijer_lambda(p, t)]
        return min(cands)
    if t < 1.5 * math.pi:
        jump = math.sqrt(2.0 * math.pi * p) / abs(math.cos(t)) ** p \
            if abs(math.cos(t)) > 0.0 else math.inf
        cands = [_meijer_lambda(p, t),
                 jump + sup_lambda_bound(p, t - 2.0 * math.pi)]
        return min(cands)
    raise DomainError(f"sup bound needs |arg w| < 3*pi/2, got {theta}")


def sup_pi_bound(p: float, theta: float) -> float:
    """An upper bound for |Pi_p(w)| valid for every w with arg w = theta."""
    _check_p(p)
    t = abs(theta)
    if t <= 0.25 * math.pi:
        return 1.0
    if t <= 0.5 * math.pi:
        cands = [_csc(2.0 * t),
                 0.5 * math.sqrt(math.e * (p + 1.5)),
                 1.0 + 0.5 * hyp_bound_kernel(p, math.sin(t) ** 2),
                 _meijer_pi(p, t)]
        return min(cands)
    if t < math.pi:
        s = abs(math.sin(t))
        jump = math.sqrt(2.0 * math.pi * p) / (2.0 * s ** p) if s > 0.0 else math.inf
        cands = [_meijer_pi(p, t),
                 jump + sup_pi_bound(p, t - math.pi)]
        return min(cands)
    raise DomainError(f"sup bound needs |arg w| < pi, got {theta}")

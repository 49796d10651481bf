"""Oracle-backed validation suites.

Each suite runs a fixed deterministic grid and returns a list of violation
descriptions (empty means the suite passed).  The CLI ``validate`` subcommand
and the acceptance tests both drive these functions:

* ``bounds``        -- every applicable remainder bound dominates the true
                       (extended-precision) remainder on a sweep over orders,
                       moduli, arguments and truncations;
* ``signs``         -- on the positive real axis the remainder is the first
                       omitted term times a factor strictly inside (0, 1);
* ``reexpansion``   -- the terminant re-expansion leftover is below its
                       analytic tail bound, the tail bound is exponentially
                       small, and the leftover sign ratio sits in (0, 1);
* ``terminants``    -- recurrence, positivity and sup-bound domination of the
                       terminant functions;
* ``integral-reps`` -- the two independent integral representations agree
                       with each other and reproduce the series coefficients.
"""

from __future__ import annotations

import math

import numpy as np

from .bounds import (FAMILIES, bound_complex_nu, bound_real_nu, olver_bound,
                     sign_ratio_check)
from .coefficients import coeff_a
from .errors import DomainError, NoApplicableBoundError
from .expansions import family_remainder_series
from .integral_reps import (coeff_a_via_integral, remainder_J_via_thm1,
                            remainder_K_via_thm1, remainder_via_boyd)
from .reexpansion import (optimal_truncation, reexpand, sign_ratio_reexp)
from .surface import SurfaceComplex
from .terminants import (lambda_terminant, pi_terminant, sup_lambda_bound,
                         sup_pi_bound)

__all__ = ["SUITES", "run_suite", "suite_bounds", "suite_signs",
           "suite_reexpansion", "suite_terminants", "suite_integral_reps"]

# numerical slack for comparisons that are strict in exact arithmetic
_EPS = 1e-12

_BOUND_NUS = (0.0, 1.0 / 3.0, 1.0, 2.7, 2.0 + 1.0j, 1.0 + 3.0j)
_BOUND_MODS = (5.0, 10.0, 20.0)
_BOUND_ARGS = (0.0, 0.25 * math.pi, -0.25 * math.pi, 0.5 * math.pi,
               -0.5 * math.pi, 0.75 * math.pi, -0.75 * math.pi,
               math.pi - 0.01, -(math.pi - 0.01))


def suite_bounds(report=None) -> list:
    """Remainder-bound domination sweep over all four base families."""
    fails = []
    for family in FAMILIES:
        for nu in _BOUND_NUS:
            real_order = complex(nu).imag == 0.0
            for mod in _BOUND_MODS:
                n_max = math.ceil(2.0 * mod)
                for theta in _BOUND_ARGS:
                    z = SurfaceComplex(mod, theta)
                    rem = family_remainder_series(family, z, nu, n_max)
                    for N in range(1, n_max + 1):
                        truth = abs(complex(rem[N]))
                        checks = []
                        try:
                            if real_order:
                                checks.append(bound_real_nu(family, z,
                                                            complex(nu).real, N))
                            else:
                                checks.append(bound_complex_nu(family, z, nu, N))
                        except NoApplicableBoundError:
                            pass
                        if family == "K":
                            checks.append(olver_bound(z, nu, N))
                        for bb in checks:
                            if not truth <= bb.total * (1.0 + _EPS):
                                fails.append(
                                    f"bounds: {bb.theorem} violated for {family} "
                                    f"nu={nu} |z|={mod} arg={theta:.4f} N={N}: "
                                    f"|R|={truth:.6e} > {bb.total:.6e}")
                        if report is not None:
                            report.append((family, nu, mod, theta, N, truth,
                                           [b.total for b in checks]))
    return fails


def suite_signs() -> list:
    """First-omitted-term factor in (0, 1) on the positive real axis."""
    fails = []
    for family in FAMILIES:
        for z_pos in (2.0, 5.0, 10.0, 20.0):
            n_max = math.ceil(2.0 * z_pos)
            z = SurfaceComplex(z_pos, 0.0)
            for nu in (0.0, 0.25, 1.0, 2.3):
                limit = nu + 0.5 if family in ("K", "J") else nu + 1.5
                rem = family_remainder_series(family, z, nu, n_max)
                for N in range(1, n_max + 1):
                    if not N > limit - 1.0:  # theorem precondition on |nu|
                        continue
                    try:
                        rep = sign_ratio_check(family, z_pos, nu, N,
                                               complex(rem[N]))
                    except DomainError:
                        continue  # terminating order: ratio undefined
                    if not rep.in_unit_interval:
                        fails.append(
                            f"signs: {family} z={z_pos} nu={nu} N={N}: "
                            f"theta={rep.theta!r} not in (0,1)")
    return fails


def suite_reexpansion() -> list:
    """Re-expansion leftover below its analytic tail bound, and tail scale."""
    fails = []
    for family in FAMILIES:
        arg_cap = math.pi if family in ("K", "Kp") else 0.5 * math.pi
        for mod in (4.0, 5.0, 6.0, 8.0):
            pair = optimal_truncation(mod)
            scale_cap = 1e3 * mod ** -0.5 * math.exp(-4.0 * mod)
            for theta in (0.0, math.pi / 3.0, 0.75 * math.pi, math.pi):
                if theta > arg_cap:
                    continue
                for nu in (0.0, 1.0 / 3.0, 1.0 + 0.5j):
                    z = SurfaceComplex(mod, theta)
                    approx = reexpand(family, z, nu, pair)
                    truth = complex(family_remainder_series(
                        family, z, nu, pair.N)[pair.N])
                    leftover = abs(truth - approx.series_part)
                    if not leftover <= approx.tail_bound * (1.0 + _EPS):
                        fails.append(
                            f"reexpansion: {family} |z|={mod} arg={theta:.4f} "
                            f"nu={nu} N={pair.N} M={pair.M}: leftover "
                            f"{leftover:.6e} > tail {approx.tail_bound:.6e}")
                    if not approx.tail_bound <= scale_cap:
                        fails.append(
                            f"reexpansion: {family} |z|={mod} arg={theta:.4f} "
                            f"nu={nu}: tail {approx.tail_bound:.6e} above "
                            f"scale cap {scale_cap:.6e}")
                    if theta == 0.0 and complex(nu).imag == 0.0:
                        rep = sign_ratio_reexp(family, mod, complex(nu).real,
                                               pair, truth)
                        if not rep.in_unit_interval:
                            fails.append(
                                f"reexpansion: {family} z={mod} nu={nu}: "
                                f"Theta={rep.theta!r} not in (0,1)")
    return fails


def suite_terminants() -> list:
    """Recurrence, positivity and sup-bound domination of the terminants."""
    fails = []
    rng = np.random.default_rng(20240331)
    # recurrence p Lambda_{p+1}(w) = w (1 - Lambda_p(w)) on a 500-point grid
    for _ in range(500):
        p = float(rng.uniform(0.5, 40.0))
        theta = float(rng.uniform(-(math.pi - 0.1), math.pi - 0.1))
        mod = float(np.exp(rng.uniform(math.log(0.5), math.log(100.0))))
        w = SurfaceComplex(mod, theta)
        lhs = p * lambda_terminant(p + 1.0, w).value
        rhs = complex(w) * (1.0 - lambda_terminant(p, w).value)
        scale = max(abs(lhs), abs(rhs), 1e-280)
        rel = abs(lhs - rhs) / scale
        if not rel <= 1e-11:
            fails.append(f"terminants: recurrence p={p:.4f} w={mod:.4f}"
                         f"e^{{{theta:.4f}i}}: rel err {rel:.3e}")
    # positivity on the positive real axis
    for p in (0.7, 1.0, 2.5, 7.0, 19.5, 33.0):
        for mod in (0.6, 1.5, 4.0, 12.0, 55.0):
            w = SurfaceComplex(mod, 0.0)
            for name, fn in (("Lambda", lambda_terminant), ("Pi", pi_terminant)):
                v = fn(p, w).value
                ok = abs(v.imag) <= 1e-13 * max(1.0, abs(v)) and 0.0 < v.real < 1.0
                if not ok:
                    fails.append(f"terminants: {name}_{p}({mod}) = {v} "
                                 "not in (0,1)")
    # sup-bound domination, 200 modulus samples per (p, theta) cell
    lam_cells = [(1.5, 0.3 * math.pi), (1.5, 0.8 * math.pi),
                 (5.5, 0.6 * math.pi), (5.5, 1.2 * math.pi),
                 (20.5, 0.97 * math.pi), (20.5, 1.45 * math.pi)]
    pi_cells = [(1.5, 0.2 * math.pi), (5.5, 0.35 * math.pi),
                (20.5, 0.45 * math.pi), (12.0, 0.49 * math.pi)]
    for cells, fn, sup_fn, name in (
            (lam_cells, lambda_terminant, sup_lambda_bound, "Lambda"),
            (pi_cells, pi_terminant, sup_pi_bound, "Pi")):
        for p, theta in cells:
            cap = sup_fn(p, theta)
            mods = np.exp(rng.uniform(math.log(0.1), math.log(50.0), size=200))
            for mod in mods:
                v = abs(fn(p, SurfaceComplex(float(mod), theta)).value)
                if not v <= cap * (1.0 + _EPS):
                    fails.append(
                        f"terminants: sup bound {name} p={p} theta={theta:.4f} "
                        f"|w|={mod:.4f}: |T|={v:.6e} > {cap:.6e}")
    return fails


def suite_integral_reps() -> list:
    """Cross-checks between the two integral routes and the coefficients."""
    fails = []
    for nu in (0.0, 1.0 / 3.0, 2.0 + 1.0j):
        for N in range(0, 9):
            if not abs(complex(nu).real) < N + 0.5:
                continue
            got = coeff_a_via_integral(nu, N)
            want = coeff_a(nu, N)
            err = abs(got - want) / max(1.0, abs(want))
            if not err <= 1e-10:
                fails.append(f"integral-reps: coefficient identity nu={nu} "
                             f"N={N}: rel err {err:.3e}")
    z = SurfaceComplex(10.0, 0.0)
    for nu in (0.0, 1.0 / 3.0):
        for N in (3, 5, 8):
            pairs = ((remainder_K_via_thm1(z, nu, N),
                      remainder_via_boyd("K", z, nu, N), "K"),
                     (remainder_J_via_thm1(z, nu, N),
                      remainder_via_boyd("J", z, nu, N), "J"))
            for via_terminant, via_bessel, fam in pairs:
                err = abs(via_terminant - via_bessel) / abs(via_bessel)
                if not err <= 1e-8:
                    fails.append(f"integral-reps: {fam} routes disagree nu={nu} "
                                 f"N={N}: rel err {err:.3e}")
    return fails


SUITES = {
    "bounds": suite_bounds,
    "signs": suite_signs,
    "reexpansion": suite_reexpansion,
    "terminants": suite_terminants,
    "integral-reps": suite_integral_reps,
}


def run_suite(name: str) -> list:
    """Run one named suite; returns the list of violations (empty = pass)."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise DomainError(f"unknown validation suite {name!r}; "
                          f"expected one of {sorted(SUITES)}")
    return fn()

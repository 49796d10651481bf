"""Piecewise tanh-sinh integration over [0, inf) for complex integrands.

A thin layer over ``scipy.integrate.tanhsinh`` that splits the half line at
caller-chosen breakpoints (the integrands here have a t^{-1/2} endpoint
singularity and a scale change near t ~ N/2|z|), sums the piece estimates and
error bounds, and turns a failed tolerance into ``AccuracyError`` carrying
the partial result.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import tanhsinh

from .errors import AccuracyError

__all__ = ["integrate_half_line"]


def integrate_half_line(f, breakpoints, atol: float, maxlevel: int = 12):
    """integral of ``f`` over [0, inf), split at ``breakpoints``.

    ``f`` maps a numpy array of positive floats to complex values.  Returns
    (value, error_estimate).
    """
    pts = [0.0] + sorted(set(float(b) for b in breakpoints if b > 0.0)) + [math.inf]
    total = 0.0 + 0.0j
    err = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        res = tanhsinh(f, a, b, atol=atol, maxlevel=maxlevel)
        piece_err = float(abs(res.error))
        if not res.success and not piece_err <= atol:
            raise AccuracyError(
                f"tanh-sinh piece [{a}, {b}] did not reach tolerance {atol}",
                partial=total + complex(res.integral),
                est_abs_err=err + piece_err)
        total += complex(res.integral)
        err += piece_err
    return total, err

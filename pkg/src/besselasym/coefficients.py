"""Expansion coefficients a_n(nu) and b_n(nu).

Both families are polynomials in nu**2 of degree n:

    a_n = (4nu^2 - 1^2)(4nu^2 - 3^2) ... (4nu^2 - (2n-1)^2) / (8^n n!)
    b_0 = 1,
    b_n = [(4nu^2 - 1^2) ... (4nu^2 - (2n-3)^2)] * (4nu^2 + 4n^2 - 1) / (8^n n!)

a_n is computed by the ratio recurrence a_n = a_{n-1}(4nu^2-(2n-1)^2)/(8n)
which stays in range far beyond where the raw products would overflow.  b_n is
computed from its own closed form, deliberately *not* through the identity
2 b_n = a_n(nu+1) + a_n(nu-1), so that the identity remains an independent
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath

__all__ = ["CoeffTable", "coeff_a", "coeff_b", "coeff_table",
           "coeff_a_mp", "coeff_b_mp"]


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients a_0..a_N and b_0..b_N at a fixed order nu."""

    nu: complex
    a: tuple
    b: tuple


# Per-nu growing caches of both sequences.  Entries are lists that only ever
# get appended to; returned tables are immutable tuples sliced from them.
_cache: dict = {}


def _sequences(nu: complex, n_max: int):
    key = complex(nu)
    entry = _cache.get(key)
    if entry is None:
        # b's partial product c_n = prod_{j<=n-1}(4nu^2-(2j-1)^2)/(8^n n!),
        # seeded so that b_n = c_n * (4nu^2 + 4n^2 - 1).
        entry = ([1.0 + 0.0j], [1.0 + 0.0j], [None])  # a, b, c (c[0] unused)
        _cache[key] = entry
    a, b, c = entry
    nusq4 = 4.0 * (complex(nu) * complex(nu))
    while len(a) <= n_max:
        n = len(a)
        a.append(a[n - 1] * (nusq4 - (2 * n - 1) ** 2) / (8.0 * n))
        if n == 1:
            c.append(1.0 / 8.0 + 0.0j)
        else:
            c.append(c[n - 1] * (nusq4 - (2 * n - 3) ** 2) / (8.0 * n))
        b.append(c[n] * (nusq4 + 4.0 * n * n - 1.0))
    return a, b


def coeff_a(nu: complex, n: int) -> complex:
    """a_n(nu); total function, a_0 = 1 for every nu."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _sequences(nu, n)[0][n]


def coeff_b(nu: complex, n: int) -> complex:
    """b_n(nu); total function, b_0 = 1 for every nu."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _sequences(nu, n)[1][n]


def coeff_table(nu: complex, n_max: int) -> CoeffTable:
    """Both coefficient sequences up to index n_max as an immutable table."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    a, b = _sequences(nu, n_max)
    return CoeffTable(nu=complex(nu), a=tuple(a[:n_max + 1]), b=tuple(b[:n_max + 1]))


def coeff_a_mp(nu, n_max: int) -> Sequence:
    """a_0..a_{n_max} in the current mpmath working precision."""
    nusq4 = 4 * mpmath.mpmathify(nu) ** 2
    out = [mpmath.mpc(1)]
    for n in range(1, n_max + 1):
        out.append(out[-1] * (nusq4 - (2 * n - 1) ** 2) / (8 * n))
    return out


def coeff_b_mp(nu, n_max: int) -> Sequence:
    """b_0..b_{n_max} in the current mpmath working precision."""
    nusq4 = 4 * mpmath.mpmathify(nu) ** 2
    out = [mpmath.mpc(1)]
    c = None
    for n in range(1, n_max + 1):
        c = mpmath.mpf(1) / 8 if n == 1 else c * (nusq4 - (2 * n - 3) ** 2) / (8 * n)
        out.append(c * (nusq4 + 4 * n * n - 1))
    return out

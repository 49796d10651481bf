"""Points on the Riemann surface of the logarithm.

The expansions implemented in this package are valid on sectors wider than
(-pi, pi], so a complex argument cannot be carried as an ordinary ``complex``:
the unreduced angle matters.  ``SurfaceComplex`` stores (modulus, argument)
with the argument left unreduced, and all fractional powers are taken as

    z**s = exp(s * (log|z| + i*arg z))

with the surface argument, never the principal branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["SurfaceComplex"]


@dataclass(frozen=True)
class SurfaceComplex:
    """A nonzero point ``modulus * exp(i*argument)`` with unreduced argument."""

    modulus: float
    argument: float

    def __post_init__(self):
        if not (math.isfinite(self.modulus) and self.modulus > 0.0):
            raise DomainError(f"modulus must be finite and positive, got {self.modulus}")
        if not math.isfinite(self.argument):
            raise DomainError(f"argument must be finite, got {self.argument}")

    @classmethod
    def from_complex(cls, z: complex) -> "SurfaceComplex":
        """Lift an ordinary complex number using its principal argument."""
        z = complex(z)
        if z == 0:
            raise DomainError("cannot represent 0 on the logarithmic surface")
        return cls(abs(z), cmath.phase(z))

    def to_complex(self) -> complex:
        return complex(self.modulus * math.cos(self.argument),
                       self.modulus * math.sin(self.argument))

    __complex__ = to_complex

    def rotated(self, delta: float) -> "SurfaceComplex":
        """The point ``z * exp(i*delta)`` on the surface (argument unreduced)."""
        return SurfaceComplex(self.modulus, self.argument + delta)

    def scaled(self, factor: float) -> "SurfaceComplex":
        """The point ``factor * z`` for positive real ``factor``."""
        return SurfaceComplex(self.modulus * factor, self.argument)

    def conjugate(self) -> "SurfaceComplex":
        return SurfaceComplex(self.modulus, -self.argument)

    def power(self, s: complex) -> complex:
        """``z**s`` with the surface branch of the logarithm."""
        log_z = complex(math.log(self.modulus), self.argument)
        return cmath.exp(s * log_z)

    def sqrt(self) -> complex:
        """``z**(1/2) = exp(log|z|/2 + i*arg(z)/2)`` with the surface argument."""
        return cmath.rect(math.sqrt(self.modulus), 0.5 * self.argument)

    def log(self) -> complex:
        return complex(math.log(self.modulus), self.argument)

"""Physical constants, pinned to CODATA 2018.

==========================  =======================  ====================
constant                    value                    origin
==========================  =======================  ====================
c    (speed of light)       299792458 m/s            exact (SI definition)
h    (Planck constant)      6.62607015e-34 J s       exact (SI definition)
hbar (reduced Planck)       h / 2pi                  derived
mu0  (vacuum permeability)  1.25663706212e-6 N/A^2   CODATA 2018
eps0 (vacuum permittivity)  1 / (mu0 c^2)            derived
==========================  =======================  ====================

eps0 is derived rather than pinned so that c^2 * mu0 * eps0 == 1 holds to
machine precision; the derived value agrees with the published CODATA 2018
figure (8.8541878128e-12 F/m) to all quoted digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SPEED_OF_LIGHT = 299_792_458.0
PLANCK = 6.626_070_15e-34
REDUCED_PLANCK = PLANCK / (2.0 * math.pi)
VACUUM_PERMEABILITY = 1.256_637_062_12e-6
VACUUM_PERMITTIVITY = 1.0 / (VACUUM_PERMEABILITY * SPEED_OF_LIGHT**2)


@dataclass(frozen=True)
class PhysicalConstants:
    """Bundle of the constants a field/force evaluation depends on."""

    c: float = SPEED_OF_LIGHT
    mu0: float = VACUUM_PERMEABILITY
    eps0: float = VACUUM_PERMITTIVITY
    hbar: float = REDUCED_PLANCK

    def __post_init__(self):
        for name in ("c", "mu0", "eps0", "hbar"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"constant {name} must be positive")
        residual = self.c * self.c * self.mu0 * self.eps0 - 1.0
        if abs(residual) > 1e-12:
            raise ValueError(
                f"inconsistent constants: c^2*mu0*eps0 - 1 = {residual:.3e}"
            )

    def as_header_items(self):
        """(key, value) pairs for dataset provenance headers."""
        return (
            ("constants.c_m_s", self.c),
            ("constants.mu0_N_A2", self.mu0),
            ("constants.eps0_F_m", self.eps0),
            ("constants.hbar_J_s", self.hbar),
        )


CODATA2018 = PhysicalConstants()

"""Two-level atom, selection-rule branches, Rabi and saturation functions.

The vector mode drives the two dipole-allowed transitions (the azimuthal
quantum number changing by +1 or -1).  Every branch-resolved quantity is
carried in a :class:`TransitionPair` with ``plus``/``minus`` fields.  The
coupling to the axially polarised transition involves only the axial field
component, which is negligible for the waists considered here, so it is
identically zero in this model (``coupling_pi_requested`` reports when a
caller asks for it anyway).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Generic, TypeVar

from .beams import (
    CODATA2018,
    CylPoint,
    ModeSpec,
    PhysicalConstants,
    branch_amplitudes,
    lg_envelope,
    lg_envelope_with_gradient,
)

log = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class TransitionPair(Generic[T]):
    """Any quantity carried per selection-rule branch."""

    plus: T
    minus: T

    def total(self):
        return self.plus + self.minus

    def map(self, fn):
        return TransitionPair(fn(self.plus), fn(self.minus))


@dataclass(frozen=True)
class AtomSpec:
    """Two-level atom: transition wavelength, linewidth, dipole moment.

    ``d_eg`` must be consistent with the linewidth; build instances through
    :meth:`from_linewidth` unless you have an independent dipole moment.
    """

    wavelength: float  # m
    gamma: float  # spontaneous emission rate, rad/s
    d_eg: float  # reduced dipole matrix element, C m

    def __post_init__(self):
        if not self.wavelength > 0.0:
            raise ValueError("transition wavelength must be positive")
        if not self.gamma > 0.0:
            raise ValueError("linewidth gamma must be positive")
        if not self.d_eg > 0.0:
            raise ValueError("dipole moment d_eg must be positive")

    @property
    def omega_a(self) -> float:
        """Transition angular frequency (rad/s)."""
        return 2.0 * math.pi * CODATA2018.c / self.wavelength

    @classmethod
    def from_linewidth(
        cls, wavelength: float, gamma: float, constants: PhysicalConstants = CODATA2018
    ) -> "AtomSpec":
        return cls(wavelength, gamma, dipole_moment_from_linewidth(wavelength, gamma, constants))


def sodium_d2() -> AtomSpec:
    """Na D2 parameterisation: 589 nm, Gamma = 6.15e7 rad/s."""
    return AtomSpec.from_linewidth(589e-9, 6.15e7)


def dipole_moment_from_linewidth(
    wavelength: float, gamma: float, constants: PhysicalConstants = CODATA2018
) -> float:
    """Dipole matrix element fixed by the spontaneous emission rate (C m).

    d_eg = sqrt(3 pi eps0 hbar c^3 Gamma / omega_a^3), the inverse of the
    free-space decay-rate formula for a two-level dipole.
    """
    if not wavelength > 0.0 or not gamma > 0.0:
        raise ValueError("wavelength and gamma must be positive")
    omega_a = 2.0 * math.pi * constants.c / wavelength
    return math.sqrt(
        3.0 * math.pi * constants.eps0 * constants.hbar * constants.c**3 * gamma / omega_a**3
    )


@dataclass(frozen=True)
class Velocity:
    """Atom velocity in local cylindrical components (m/s)."""

    v_rho: float = 0.0
    v_phi: float = 0.0
    v_z: float = 0.0

    def __post_init__(self):
        for name in ("v_rho", "v_phi", "v_z"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"velocity component {name} must be finite")

    def is_zero(self) -> bool:
        return self.v_rho == 0.0 and self.v_phi == 0.0 and self.v_z == 0.0


@dataclass(frozen=True)
class DetuningSpec:
    """Static detuning (rad/s) plus the atom velocity for the Doppler shift."""

    delta0: float
    velocity: Velocity = field(default_factory=Velocity)

    def __post_init__(self):
        if not math.isfinite(self.delta0):
            raise ValueError("delta0 must be finite")

    @classmethod
    def in_linewidths(cls, n: float, atom: AtomSpec, velocity: Velocity | None = None) -> "DetuningSpec":
        """Detuning given as a multiple of the atomic linewidth."""
        return cls(n * atom.gamma, velocity or Velocity())


@dataclass(frozen=True)
class PhaseGradient:
    """Physical cylindrical components of a phase gradient (rad/m).

    ``axis_singular`` marks that the raw azimuthal term m/rho was singular at
    rho = 0 and has been replaced by its regularised limit 0 (all forces and
    couplings vanish on the axis for m != 0, so nothing downstream depends on
    the discarded value).
    """

    d_rho: float
    d_phi: float
    d_z: float
    axis_singular: bool = False


def rabi_base(
    mode: ModeSpec, atom: AtomSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018
) -> float:
    """Sphere-angle-independent Rabi frequency sqrt(2) k_z c d_eg |envelope| / hbar."""
    return _rabi_scale(mode, atom, constants) * abs(lg_envelope(mode, point, constants))


def rabi_pair(
    mode: ModeSpec, atom: AtomSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018
) -> TransitionPair[float]:
    """Branch Rabi frequencies (base * cos(theta/2), base * sin(theta/2))."""
    base = rabi_base(mode, atom, point, constants)
    cos_half, sin_half = branch_amplitudes(mode.theta_p)
    return TransitionPair(base * cos_half, base * sin_half)


def rabi_gradient(
    mode: ModeSpec, atom: AtomSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018
) -> TransitionPair[tuple[float, float]]:
    """Analytic (d/drho, d/dz) of the branch Rabi frequencies (rad/s per m).

    Differentiates the envelope magnitude only; the phase does not enter.
    On the axis with m >= 1 the envelope vanishes and the radial derivative
    is the outward limit: finite for |m| = 1, zero for |m| >= 2.
    """
    value, d_rho, d_z = lg_envelope_with_gradient(mode, point, constants)
    # at envelope zeros, take the limit from the side where the envelope is
    # positive (outward from the axis / from below a nodal ring)
    sign = math.copysign(1.0, value) if value != 0.0 else 1.0
    scale = _rabi_scale(mode, atom, constants) * sign
    cos_half, sin_half = branch_amplitudes(mode.theta_p)
    base = (scale * d_rho, scale * d_z)
    return TransitionPair(
        (cos_half * base[0], cos_half * base[1]),
        (sin_half * base[0], sin_half * base[1]),
    )


def _rabi_scale(mode: ModeSpec, atom: AtomSpec, constants: PhysicalConstants) -> float:
    return math.sqrt(2.0) * mode.k_z * constants.c * atom.d_eg / constants.hbar


def saturation_pair(
    rabi: TransitionPair[float],
    delta: "float | TransitionPair[float]",
    gamma: float,
) -> TransitionPair[float]:
    """Saturation functions S = (Omega^2 / 2) / (Delta^2 + Gamma^2 / 4).

    ``delta`` may be a single value or a per-branch pair (the Doppler shift
    differs between branches when the atom moves azimuthally).
    """
    if not gamma > 0.0:
        raise ValueError("gamma must be positive")
    if isinstance(delta, TransitionPair):
        d_plus, d_minus = delta.plus, delta.minus
    else:
        d_plus = d_minus = delta
    quarter_gamma_sq = 0.25 * gamma * gamma
    return TransitionPair(
        0.5 * rabi.plus * rabi.plus / (d_plus * d_plus + quarter_gamma_sq),
        0.5 * rabi.minus * rabi.minus / (d_minus * d_minus + quarter_gamma_sq),
    )


def dynamic_detuning(detuning: DetuningSpec, grad_psi: PhaseGradient) -> float:
    """Doppler-shifted detuning Delta = Delta0 - v . grad(Psi) (rad/s)."""
    v = detuning.velocity
    if v.is_zero():
        return detuning.delta0
    shift = v.v_rho * grad_psi.d_rho + v.v_phi * grad_psi.d_phi + v.v_z * grad_psi.d_z
    return detuning.delta0 - shift


def coupling_pi_requested() -> float:
    """Coupling of the axially polarised transition: identically zero here.

    Logged at debug level so a forgotten call path is discoverable.
    """
    log.debug("axially polarised coupling requested; it is zero in this model")
    return 0.0

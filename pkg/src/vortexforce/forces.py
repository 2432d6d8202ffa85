"""Scattering and dipole forces on a two-level atom in a Poincare vortex mode.

Per branch, with S the saturation function and Psi the branch phase:

    F_sca = (hbar Gamma / 2) * S/(1+S) * grad(Psi)
    F_dip = -(hbar Delta / Omega) * S/(1+S) * grad(Omega)
    U_dip = (hbar Delta / 2) * ln(1 + S)

The dipole force is evaluated through the equivalent smooth form

    F_dip = -hbar Delta * Omega grad(Omega) / (2 D + Omega^2),
    D = Delta^2 + Gamma^2/4,

whose value is finite where Omega vanishes (vortex core, nodal rings), and
the azimuthal scattering component S/(1+S) * m/rho is assigned its limit 0
on the axis.  Totals are plain vector sums of the two branches, which are
taken as equally probable.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .atoms import (
    AtomSpec,
    DetuningSpec,
    PhaseGradient,
    TransitionPair,
    _rabi_scale,
    dynamic_detuning,
)
from .beams import (
    CODATA2018,
    CylPoint,
    ModeSpec,
    PhysicalConstants,
    branch_weights,
    gouy_curvature_phase,
    gouy_curvature_phase_gradient,
    lg_envelope_with_gradient,
)


@dataclass(frozen=True)
class ForceVector:
    """Cylindrical force components in newtons."""

    f_rho: float
    f_phi: float
    f_z: float

    def __add__(self, other: "ForceVector") -> "ForceVector":
        return ForceVector(self.f_rho + other.f_rho, self.f_phi + other.f_phi, self.f_z + other.f_z)

    def magnitude(self) -> float:
        return math.sqrt(self.f_rho**2 + self.f_phi**2 + self.f_z**2)

    def is_finite(self) -> bool:
        return all(map(math.isfinite, (self.f_rho, self.f_phi, self.f_z)))


ZERO_FORCE = ForceVector(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class ForceBreakdown:
    """All branch force vectors plus their vector totals."""

    sca_plus: ForceVector
    sca_minus: ForceVector
    dip_plus: ForceVector
    dip_minus: ForceVector
    sca_total: ForceVector
    dip_total: ForceVector
    grand_total: ForceVector


@dataclass(frozen=True)
class PointEvaluation:
    """Everything the reporting layer needs about one (point, velocity)."""

    breakdown: ForceBreakdown
    omega: TransitionPair[float]
    saturation: TransitionPair[float]
    delta: TransitionPair[float]
    potential: TransitionPair[float]


def phase_pair(mode: ModeSpec, point: CylPoint) -> TransitionPair[float]:
    """Branch phases s k_z z +- m phi + (Gouy/curvature phase) in rad."""
    common = mode.s * mode.k_z * point.z + gouy_curvature_phase(mode, point)
    spiral = mode.m * point.phi
    return TransitionPair(common + spiral, common - spiral)


def phase_gradient_pair(mode: ModeSpec, point: CylPoint) -> TransitionPair[PhaseGradient]:
    """Branch phase gradients (rad/m).

    Components: (d xi/drho) rho-hat  +-  (m/rho) phi-hat  +
    (s k_z + d xi/dz) z-hat.  On the axis with m != 0 the azimuthal term is
    singular; it is replaced by 0 and flagged via ``axis_singular``.
    """
    d_rho, d_z = gouy_curvature_phase_gradient(mode, point)
    axial = mode.s * mode.k_z + d_z
    singular = point.rho == 0.0 and mode.m != 0
    azimuthal = 0.0 if (mode.m == 0 or singular) else mode.m / point.rho
    return TransitionPair(
        PhaseGradient(d_rho, azimuthal, axial, axis_singular=singular),
        PhaseGradient(d_rho, -azimuthal, axial, axis_singular=singular),
    )


@dataclass(frozen=True)
class _BranchState:
    # shared intermediates for one (mode, atom, detuning, point)
    grad_psi: TransitionPair[PhaseGradient]
    delta: TransitionPair[float]
    omega_sq: TransitionPair[float]  # branch Rabi frequency squared
    denom: TransitionPair[float]  # 2 D + Omega^2 per branch
    envelope: float
    denv_rho: float
    denv_z: float
    weight: tuple[float, float]  # cos^2, sin^2 of theta/2
    rabi_scale_sq: float
    gamma: float
    hbar: float


def _branch_state(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants,
) -> _BranchState:
    grads = phase_gradient_pair(mode, point)
    delta = TransitionPair(
        dynamic_detuning(detuning, grads.plus), dynamic_detuning(detuning, grads.minus)
    )
    env, denv_rho, denv_z = lg_envelope_with_gradient(mode, point, constants)
    kappa_sq = _rabi_scale(mode, atom, constants) ** 2
    base_sq = kappa_sq * env * env
    w_plus, w_minus = branch_weights(mode.theta_p)
    omega_sq = TransitionPair(w_plus * base_sq, w_minus * base_sq)
    quarter_gamma_sq = 0.25 * atom.gamma * atom.gamma
    denom = TransitionPair(
        2.0 * (delta.plus * delta.plus + quarter_gamma_sq) + omega_sq.plus,
        2.0 * (delta.minus * delta.minus + quarter_gamma_sq) + omega_sq.minus,
    )
    return _BranchState(
        grad_psi=grads,
        delta=delta,
        omega_sq=omega_sq,
        denom=denom,
        envelope=env,
        denv_rho=denv_rho,
        denv_z=denv_z,
        weight=(w_plus, w_minus),
        rabi_scale_sq=kappa_sq,
        gamma=atom.gamma,
        hbar=constants.hbar,
    )


def _scattering_pair(state: _BranchState) -> TransitionPair[ForceVector]:
    def branch(omega_sq: float, denom: float, grad: PhaseGradient) -> ForceVector:
        # S/(1+S) = Omega^2 / (2D + Omega^2)
        pref = 0.5 * state.hbar * state.gamma * omega_sq / denom
        return ForceVector(pref * grad.d_rho, pref * grad.d_phi, pref * grad.d_z)

    return TransitionPair(
        branch(state.omega_sq.plus, state.denom.plus, state.grad_psi.plus),
        branch(state.omega_sq.minus, state.denom.minus, state.grad_psi.minus),
    )


def _dipole_pair(state: _BranchState) -> TransitionPair[ForceVector]:
    # Omega grad(Omega) = weight * kappa^2 * envelope * grad(envelope)
    common_rho = state.rabi_scale_sq * state.envelope * state.denv_rho
    common_z = state.rabi_scale_sq * state.envelope * state.denv_z

    def branch(weight: float, delta: float, denom: float) -> ForceVector:
        pref = -state.hbar * delta * weight / denom
        return ForceVector(pref * common_rho, 0.0, pref * common_z)

    w_plus, w_minus = state.weight
    return TransitionPair(
        branch(w_plus, state.delta.plus, state.denom.plus),
        branch(w_minus, state.delta.minus, state.denom.minus),
    )


def scattering_force(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants = CODATA2018,
) -> TransitionPair[ForceVector]:
    """Branch scattering forces (N); the vector total is ``result.total()``."""
    return _scattering_pair(_branch_state(mode, atom, detuning, point, constants))


def dipole_force(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants = CODATA2018,
) -> TransitionPair[ForceVector]:
    """Branch dipole forces (N); azimuthal component identically zero."""
    return _dipole_pair(_branch_state(mode, atom, detuning, point, constants))


def optical_potential(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants = CODATA2018,
) -> TransitionPair[float]:
    """Branch optical potentials (hbar Delta / 2) ln(1 + S) in joules."""
    state = _branch_state(mode, atom, detuning, point, constants)
    return _potential_pair(state)


def _potential_pair(state: _BranchState) -> TransitionPair[float]:
    def branch(omega_sq: float, delta: float) -> float:
        sat = 0.5 * omega_sq / (delta * delta + 0.25 * state.gamma * state.gamma)
        return 0.5 * state.hbar * delta * math.log1p(sat)

    return TransitionPair(
        branch(state.omega_sq.plus, state.delta.plus),
        branch(state.omega_sq.minus, state.delta.minus),
    )


def potential_large_detuning(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants = CODATA2018,
) -> TransitionPair[float]:
    """First-order potential hbar Omega^2 / (4 Delta) per branch (J).

    Valid for |Delta| much larger than both Omega and Gamma; a warning is
    emitted when |Delta| < 10 max(Omega, Gamma).
    """
    state = _branch_state(mode, atom, detuning, point, constants)

    def branch(omega_sq: float, delta: float) -> float:
        if delta == 0.0:
            raise ValueError("large-detuning expansion undefined at zero detuning")
        if abs(delta) < 10.0 * max(math.sqrt(omega_sq), state.gamma):
            warnings.warn(
                "detuning is not large against the Rabi frequency and linewidth; "
                "the first-order potential is unreliable here",
                stacklevel=3,
            )
        return 0.25 * state.hbar * omega_sq / delta

    return TransitionPair(
        branch(state.omega_sq.plus, state.delta.plus),
        branch(state.omega_sq.minus, state.delta.minus),
    )


def force_breakdown(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants = CODATA2018,
) -> ForceBreakdown:
    """All branch forces and their totals at one point."""
    state = _branch_state(mode, atom, detuning, point, constants)
    return _assemble(state)


def _assemble(state: _BranchState) -> ForceBreakdown:
    sca = _scattering_pair(state)
    dip = _dipole_pair(state)
    sca_total = sca.total()
    dip_total = dip.total()
    return ForceBreakdown(
        sca_plus=sca.plus,
        sca_minus=sca.minus,
        dip_plus=dip.plus,
        dip_minus=dip.minus,
        sca_total=sca_total,
        dip_total=dip_total,
        grand_total=sca_total + dip_total,
    )


def evaluate_point(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    constants: PhysicalConstants = CODATA2018,
) -> PointEvaluation:
    """Force breakdown plus the branch scalars used by the reporting layer."""
    state = _branch_state(mode, atom, detuning, point, constants)
    quarter_gamma_sq = 0.25 * state.gamma * state.gamma
    saturation = TransitionPair(
        0.5 * state.omega_sq.plus / (state.delta.plus**2 + quarter_gamma_sq),
        0.5 * state.omega_sq.minus / (state.delta.minus**2 + quarter_gamma_sq),
    )
    omega = TransitionPair(math.sqrt(state.omega_sq.plus), math.sqrt(state.omega_sq.minus))
    return PointEvaluation(
        breakdown=_assemble(state),
        omega=omega,
        saturation=saturation,
        delta=state.delta,
        potential=_potential_pair(state),
    )

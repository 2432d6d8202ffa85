"""Optical forces on a two-level atom in higher-order Poincare vortex beams."""

__version__ = "0.1.0"

from .atoms import (
    AtomSpec,
    DetuningSpec,
    PhaseGradient,
    TransitionPair,
    Velocity,
    dipole_moment_from_linewidth,
    dynamic_detuning,
    rabi_base,
    rabi_gradient,
    rabi_pair,
    saturation_pair,
    sodium_d2,
)
from .beams import (
    CylPoint,
    ModeSpec,
    ParaxialityWarning,
    PoincareWeights,
    branch_amplitudes,
    branch_weights,
    gouy_curvature_phase,
    gouy_curvature_phase_gradient,
    lg_amplitude,
    lg_envelope,
    lg_envelope_with_gradient,
    normalization_amplitude,
    poincare_weights,
    power_quadrature,
    transverse_amplitudes,
)
from .constants import CODATA2018, PhysicalConstants
from .datafile import SweepResult, read_csv, write_csv
from .errors import (
    ConfigError,
    DataFormatError,
    NumericsError,
    QuadratureConvergenceError,
    VortexForceError,
)
from .forces import (
    ForceBreakdown,
    ForceVector,
    PointEvaluation,
    dipole_force,
    evaluate_point,
    force_breakdown,
    optical_potential,
    phase_gradient_pair,
    phase_pair,
    potential_large_detuning,
    scattering_force,
)
from .laguerre import assoc_laguerre, assoc_laguerre_derivative
from .sweep import (
    SweepSpec,
    default_spec,
    run_radial_profile,
    run_sweep,
    run_theta_scan,
    run_zplane_compare,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Laguerre-Gaussian vector vortex modes on the order-m Poincare sphere.

A mode of order m is the superposition of a right-circular vortex of winding
number +m and a left-circular vortex of winding number -m, weighted by the
complex sphere functions returned by :func:`poincare_weights`.  The shared
scalar envelope is the Laguerre-Gaussian amplitude whose overall scale is
fixed by the applied beam power.

This module evaluates the scalar amplitude (with its phase and analytic
gradients), the Poincare weights, the transverse Cartesian field amplitudes,
and a quadrature that recovers the beam power from the fields themselves,
which serves as the independent check on the normalisation constant.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .errors import QuadratureConvergenceError

# order above which the radial power/exponential product is evaluated in
# log space to dodge intermediate overflow
_LOG_SPACE_ORDER = 100


class ParaxialityWarning(UserWarning):
    """Beam waist too small for the paraxial (negligible axial field) regime."""


@dataclass(frozen=True)
class ModeSpec:
    """One Poincare vortex mode.

    Parameters
    ----------
    m : int
        Winding number (sphere order).  Signed values are accepted; the
        envelope depends on ``|m|`` only, the sign enters the azimuthal
        phase.  All shipped scenarios use m >= 0.
    p : int
        Radial index, >= 0.
    wavelength : float
        Vacuum wavelength in meters.
    w0 : float
        Beam waist at focus in meters.
    power : float
        Applied beam power in watts.
    theta_p, phi_p : float
        Polar and azimuthal Poincare-sphere angles in radians,
        theta_p in [0, pi].
    s : int
        Propagation direction sign along z, +1 or -1.
    """

    m: int
    p: int
    wavelength: float
    w0: float
    power: float
    theta_p: float = 0.0
    phi_p: float = 0.0
    s: int = 1

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"radial index p must be >= 0, got {self.p}")
        if not self.wavelength > 0.0:
            raise ValueError("wavelength must be positive")
        if not self.w0 > 0.0:
            raise ValueError("waist w0 must be positive")
        if not self.power > 0.0:
            raise ValueError("power must be positive")
        if not 0.0 <= self.theta_p <= math.pi:
            raise ValueError(f"theta_p must lie in [0, pi], got {self.theta_p}")
        if not math.isfinite(self.phi_p):
            raise ValueError("phi_p must be finite")
        if self.s not in (1, -1):
            raise ValueError(f"propagation sign s must be +1 or -1, got {self.s}")
        if self.w0 < self.wavelength:
            warnings.warn(
                f"w0 = {self.w0:.3e} m is below one wavelength; axial field "
                "components are no longer negligible",
                ParaxialityWarning,
                stacklevel=2,
            )

    @property
    def k_z(self) -> float:
        """Axial wavenumber 2*pi/wavelength (rad/m)."""
        return 2.0 * math.pi / self.wavelength

    @property
    def rayleigh_range(self) -> float:
        """z_R = w0^2 k_z / 2 (m)."""
        return 0.5 * self.w0 * self.w0 * self.k_z


@dataclass(frozen=True)
class CylPoint:
    """Evaluation point in cylindrical coordinates (rho >= 0, phi, z)."""

    rho: float
    phi: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if self.rho < 0.0:
            raise ValueError(f"rho must be >= 0, got {self.rho}")


@dataclass(frozen=True)
class PoincareWeights:
    """Complex weights of the right- (u_p) and left-circular (v_p) legs."""

    u_p: complex
    v_p: complex

    @property
    def norm_sq(self) -> float:
        """|u_p|^2 + |v_p|^2, equal to 1/2 for any sphere point."""
        return abs(self.u_p) ** 2 + abs(self.v_p) ** 2


def branch_weights(theta_p: float) -> tuple[float, float]:
    """Intensity weights (cos^2(theta/2), sin^2(theta/2)) of the two legs.

    Computed through the half-angle identity (1 +- cos(theta))/2 so that the
    poles give exactly (1, 0) / (0, 1), the equator gives exactly (1/2, 1/2),
    and mirrored angles theta -> pi - theta swap the weights exactly.
    """
    if not 0.0 <= theta_p <= math.pi:
        raise ValueError(f"theta_p must lie in [0, pi], got {theta_p}")
    c = _cos_folded(theta_p)
    return 0.5 * (1.0 + c), 0.5 * (1.0 - c)


def branch_amplitudes(theta_p: float) -> tuple[float, float]:
    """Field-amplitude weights (cos(theta/2), sin(theta/2)), both >= 0."""
    w_plus, w_minus = branch_weights(theta_p)
    return math.sqrt(w_plus), math.sqrt(w_minus)


def _cos_folded(theta: float) -> float:
    # fold onto [0, pi/2] so cos(pi - theta) == -cos(theta) bit-for-bit
    half = 0.5 * math.pi
    if theta == half:
        return 0.0
    if theta > half:
        return -math.cos(math.pi - theta)
    return math.cos(theta)


def poincare_weights(theta_p: float, phi_p: float = 0.0) -> PoincareWeights:
    """Sphere-point weights of the two circular legs.

    u_p = cos(theta/2) exp(-i phi/2) / sqrt(2),
    v_p = sin(theta/2) exp(+i phi/2) / sqrt(2).
    """
    cos_half, sin_half = branch_amplitudes(theta_p)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    phase = cmath.exp(-0.5j * phi_p)
    return PoincareWeights(
        u_p=inv_sqrt2 * cos_half * phase,
        v_p=inv_sqrt2 * sin_half * phase.conjugate(),
    )


def gouy_curvature_phase(mode: ModeSpec, point: CylPoint) -> float:
    """Combined Gouy and wavefront-curvature phase (rad).

    -(2p + |m| + 1) arctan(z/z_R) + k_z z rho^2 / (2 (z^2 + z_R^2))
    """
    zr = mode.rayleigh_range
    n = 2 * mode.p + abs(mode.m) + 1
    z, rho = point.z, point.rho
    return -n * math.atan(z / zr) + mode.k_z * z * rho * rho / (2.0 * (z * z + zr * zr))


def gouy_curvature_phase_gradient(mode: ModeSpec, point: CylPoint) -> tuple[float, float]:
    """Analytic (d/drho, d/dz) of :func:`gouy_curvature_phase` (rad/m).

    d/drho = k_z z rho / (z^2 + z_R^2)
    d/dz   = -(2p+|m|+1) z_R / (z^2 + z_R^2)
             + k_z rho^2 (z_R^2 - z^2) / (2 (z^2 + z_R^2)^2)
    """
    zr = mode.rayleigh_range
    n = 2 * mode.p + abs(mode.m) + 1
    z, rho = point.z, point.rho
    denom = z * z + zr * zr
    d_rho = mode.k_z * z * rho / denom
    d_z = -n * zr / denom + mode.k_z * rho * rho * (zr * zr - z * z) / (2.0 * denom * denom)
    return d_rho, d_z


def normalization_amplitude(mode: ModeSpec, constants: PhysicalConstants = CODATA2018) -> float:
    """Field scale that makes the mode carry ``mode.power`` watts.

    sqrt(4 mu0 P / (pi c k_z^2 w0^2)); independent of m, p and the sphere
    angles.
    """
    kz = mode.k_z
    return math.sqrt(
        4.0 * constants.mu0 * mode.power / (math.pi * constants.c * kz * kz * mode.w0 * mode.w0)
    )


def _c_norm(p: int, am: int) -> float:
    # sqrt(p! / (p+|m|)!), in log space once the factorials get large
    if p + am > 20:
        return math.exp(0.5 * (math.lgamma(p + 1.0) - math.lgamma(p + am + 1.0)))
    return math.sqrt(math.factorial(p) / math.factorial(p + am))


def lg_envelope_with_gradient(
    mode: ModeSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018
) -> tuple[float, float, float]:
    """Signed real envelope of the LG amplitude and its (rho, z) partials.

    The envelope is the amplitude with the phase factor stripped; it is
    negative between nodal rings for p >= 1.  It depends on |m| only and is
    even in z, so the z-partial vanishes identically on the focal plane.

    Returns
    -------
    (value, d/drho, d/dz) in field units (V/m) and (V/m per meter).
    """
    from .laguerre import assoc_laguerre, assoc_laguerre_derivative

    am = abs(mode.m)
    p = mode.p
    zr = mode.rayleigh_range
    z, rho = point.z, point.rho

    sigma_sq = 1.0 + (z / zr) ** 2
    sigma = math.sqrt(sigma_sq)
    ws = mode.w0 * sigma
    x = math.sqrt(2.0) * rho / ws
    u = x * x
    lag = assoc_laguerre(p, am, u)
    dlag = assoc_laguerre_derivative(p, am, u)

    if am >= _LOG_SPACE_ORDER and rho > 0.0:
        log_c = 0.5 * (math.lgamma(p + 1.0) - math.lgamma(p + am + 1.0))
        core = math.exp(log_c + am * math.log(x) - 0.5 * u)
        ring_term = am / rho * core
    else:
        radial_norm = _c_norm(p, am) * math.exp(-0.5 * u)
        core = radial_norm * x**am
        # 0**0 == 1.0 gives the finite am=1 limit at the axis
        ring_term = 0.0 if am == 0 else am * x ** (am - 1) * (math.sqrt(2.0) / ws) * radial_norm

    scale = normalization_amplitude(mode, constants) / sigma
    du_drho = 4.0 * rho / (ws * ws)
    dsigma_dz = z / (zr * zr * sigma)

    value = scale * core * lag
    d_rho = scale * (ring_term * lag + core * du_drho * (dlag - 0.5 * lag))
    d_z = scale * core * (dsigma_dz / sigma) * ((u - am - 1.0) * lag - 2.0 * u * dlag)
    return value, d_rho, d_z


def lg_envelope(mode: ModeSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018) -> float:
    """Signed real envelope of the LG amplitude (V/m)."""
    return lg_envelope_with_gradient(mode, point, constants)[0]


def lg_amplitude(mode: ModeSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018) -> complex:
    """Complex LG amplitude: envelope times exp(i * Gouy/curvature phase)."""
    value = lg_envelope(mode, point, constants)
    return value * cmath.exp(1j * gouy_curvature_phase(mode, point))


def transverse_amplitudes(
    mode: ModeSpec, point: CylPoint, constants: PhysicalConstants = CODATA2018
) -> tuple[complex, complex]:
    """Cartesian transverse electric-field amplitudes (u_x, u_y) in V/m.

    u_x = i k_z c (u_p e^{+im phi} + v_p e^{-im phi}) * amplitude
    u_y =   k_z c (u_p e^{+im phi} - v_p e^{-im phi}) * amplitude

    The common axial phase factor exp(i s k_z z) is not included.
    """
    weights = poincare_weights(mode.theta_p, mode.phi_p)
    amp = lg_amplitude(mode, point, constants)
    kzc = mode.k_z * constants.c
    spiral = cmath.exp(1j * mode.m * point.phi)
    a = weights.u_p * spiral
    b = weights.v_p * spiral.conjugate()
    u_x = 1j * kzc * (a + b) * amp
    u_y = kzc * (a - b) * amp
    return u_x, u_y


def _transverse_b_amplitudes(
    u_x: complex, u_y: complex, constants: PhysicalConstants
) -> tuple[complex, complex]:
    # sum of the two circular magnetic legs; used only by the power quadrature
    return -u_y / constants.c, u_x / constants.c


@lru_cache(maxsize=32)
def _gauss_legendre(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    xs, ws = np.polynomial.legendre.leggauss(n)
    return tuple(xs.tolist()), tuple(ws.tolist())


def power_quadrature(
    mode: ModeSpec,
    constants: PhysicalConstants = CODATA2018,
    *,
    nodes: int = 400,
    rtol: float = 1e-6,
) -> float:
    """Recover the beam power from the fields on the focal plane (watts).

    Integrates |(E* x B)_z| / (2 mu0) over the z = 0 cross-section with
    Gauss-Legendre quadrature in rho on [0, R_max], R_max = w0 (6 + sqrt(2m)).
    The integrand magnitude is azimuth-independent, so the phi integral is
    the analytic factor 2*pi.  Serves as the oracle for the normalisation
    scale: the result must equal ``mode.power``.

    Raises
    ------
    QuadratureConvergenceError
        If halving the node count changes the result by more than ``rtol``
        relative.
    """
    if nodes < 4:
        raise ValueError("need at least 4 quadrature nodes")
    r_max = mode.w0 * (6.0 + math.sqrt(2.0 * abs(mode.m)))

    def recovered(n: int) -> float:
        xs, ws = _gauss_legendre(n)
        total = 0.0
        for xi, wi in zip(xs, ws):
            rho = 0.5 * r_max * (xi + 1.0)
            u_x, u_y = transverse_amplitudes(mode, CylPoint(rho=rho), constants)
            b_x, b_y = _transverse_b_amplitudes(u_x, u_y, constants)
            poynting_z = u_x.conjugate() * b_y - u_y.conjugate() * b_x
            total += 0.5 * r_max * wi * abs(poynting_z) * rho
        return 2.0 * math.pi * total / (2.0 * constants.mu0)

    coarse = recovered(nodes // 2)
    fine = recovered(nodes)
    if abs(fine - coarse) > rtol * abs(fine):
        raise QuadratureConvergenceError(
            f"power quadrature not converged: {nodes // 2} nodes -> {coarse:.9e} W, "
            f"{nodes} nodes -> {fine:.9e} W (rtol {rtol:g})"
        )
    return fine

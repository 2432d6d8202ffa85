"""Parameter sweeps over the force fields, with deterministic row ordering.

Rows are ordered with rho varying fastest, then z, then the sphere polar
angle, then the winding number.  Execution may be spread over worker threads;
the assembled output is independent of the thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import __version__
from .atoms import AtomSpec, DetuningSpec, Velocity, sodium_d2
from .beams import CylPoint, ModeSpec, lg_envelope, transverse_amplitudes
from .constants import CODATA2018, PhysicalConstants
from .datafile import (
    SCHEMA_NAME,
    SCHEMA_VERSION,
    SweepResult,
    columns_for_kind,
    format_float,
)
from .errors import ConfigError, NumericsError
from .forces import PointEvaluation, evaluate_point, phase_pair

SWEEP_KINDS = ("radial-profile", "theta-scan", "zplane-compare", "field-map")

#: newtons -> zeptonewtons at the reporting layer
ZEPTONEWTON_PER_NEWTON = 1e21

SODIUM_WAVELENGTH = 589e-9

#: sphere polar angles used by the default theta scan
DEFAULT_THETA_SCAN = (0.0, 0.25 * math.pi, 0.5 * math.pi, 0.75 * math.pi, math.pi)


@dataclass(frozen=True)
class SweepSpec:
    """Fully resolved description of one sweep (all values SI)."""

    kind: str
    m_values: tuple[int, ...]
    p: int
    wavelength: float
    w0: float
    power: float
    phi_p: float
    s: int
    atom: AtomSpec
    delta0: float
    velocity: Velocity
    samples: int
    z_values: tuple[float, ...]
    theta_values: tuple[float, ...]
    phi: float = 0.0
    rho_range: tuple[float, float] | None = None  # in units of w0; None = per-m default
    phi_samples: int = 64  # field-map only

    def validate(self) -> None:
        if self.kind not in SWEEP_KINDS:
            raise ConfigError(f"unknown sweep kind {self.kind!r}", field="sweep.kind")
        if self.samples < 2:
            raise ConfigError("samples must be >= 2", field="sweep.samples")
        if not self.m_values:
            raise ConfigError("at least one winding number required", field="mode.m")
        for m in self.m_values:
            if m < 0:
                raise ConfigError(f"winding number must be >= 0, got {m}", field="mode.m")
        if self.rho_range is not None:
            lo, hi = self.rho_range
            if lo < 0.0 or hi <= lo:
                raise ConfigError(
                    f"need 0 <= rho_min < rho_max, got ({lo}, {hi})", field="sweep.rho_min"
                )
        for name, values in (("sweep.z_values", self.z_values), ("sweep.theta_values", self.theta_values)):
            if not values:
                raise ConfigError("list must not be empty", field=name)
            for v in values:
                if not math.isfinite(v):
                    raise ConfigError(f"non-finite entry {v!r}", field=name)
        for theta in self.theta_values:
            if not 0.0 <= theta <= math.pi:
                raise ConfigError(
                    f"sphere polar angle must lie in [0, pi], got {theta}",
                    field="sweep.theta_values",
                )
        if self.kind == "zplane-compare":
            for z in self.z_values:
                if -z not in self.z_values:
                    raise ConfigError(
                        f"z = {z} has no mirror -z in the list; the focal-plane "
                        "comparison needs a symmetric z grid",
                        field="sweep.z_values",
                    )
        if self.kind == "field-map" and self.phi_samples < 2:
            raise ConfigError("phi_samples must be >= 2", field="sweep.phi_samples")

    def rho_grid_w0(self, m: int) -> tuple[float, float]:
        """Radial window in units of w0; auto-widened so the ring of large-m
        modes stays inside the grid."""
        if self.rho_range is not None:
            return self.rho_range
        if m <= 5:
            return (0.0, 3.0)
        return (0.0, math.sqrt(2.0 * m) + 3.0)

    def mode_for(self, m: int, theta_p: float) -> ModeSpec:
        return ModeSpec(
            m=m,
            p=self.p,
            wavelength=self.wavelength,
            w0=self.w0,
            power=self.power,
            theta_p=theta_p,
            phi_p=self.phi_p,
            s=self.s,
        )

    @property
    def detuning(self) -> DetuningSpec:
        return DetuningSpec(self.delta0, self.velocity)


def default_spec(kind: str, preset: str = "default") -> SweepSpec:
    """Built-in scenario parameters for each sweep kind.

    All kinds share the Na D2 atom, 589 nm light, 2.5 uW of power and a
    static detuning of +10 linewidths.  ``zplane-compare`` additionally has a
    ``tight`` preset with the waist pulled down to one wavelength, where the
    Gouy and curvature phases change most steeply across the focus.
    """
    atom = sodium_d2()
    lam = SODIUM_WAVELENGTH
    common = dict(
        p=0,
        wavelength=lam,
        w0=5.0 * lam,
        power=2.5e-6,
        phi_p=0.0,
        s=1,
        atom=atom,
        delta0=10.0 * atom.gamma,
        velocity=Velocity(),
        samples=512,
        phi=0.0,
    )
    if preset not in ("default", "tight"):
        raise ConfigError(f"unknown preset {preset!r}", field="preset")
    if preset == "tight" and kind != "zplane-compare":
        raise ConfigError("preset 'tight' applies to the zplane-compare kind only", field="preset")
    if kind == "radial-profile":
        return SweepSpec(
            kind=kind, m_values=(0, 1, 2, 5, 20), z_values=(0.0,), theta_values=(0.0,), **common
        )
    if kind == "theta-scan":
        return SweepSpec(
            kind=kind, m_values=(2,), z_values=(0.0,), theta_values=DEFAULT_THETA_SCAN, **common
        )
    if kind == "zplane-compare":
        if preset == "tight":
            common["w0"] = lam
        return SweepSpec(
            kind=kind, m_values=(2,), z_values=(-lam, 0.0, lam), theta_values=(0.0,), **common
        )
    if kind == "field-map":
        spec = SweepSpec(
            kind=kind, m_values=(2,), z_values=(0.0,), theta_values=(0.0,), **common
        )
        return replace(spec, samples=96, phi_samples=64)
    if kind == "point":
        # single-point evaluation borrows the theta-scan mode defaults
        return SweepSpec(
            kind="radial-profile", m_values=(2,), z_values=(0.0,), theta_values=(0.0,), **common
        )
    raise ConfigError(f"unknown sweep kind {kind!r}", field="sweep.kind")


def run_sweep(
    spec: SweepSpec, *, constants: PhysicalConstants = CODATA2018, threads: int = 1
) -> SweepResult:
    """Execute a sweep and assemble its dataset."""
    spec.validate()
    if spec.kind == "field-map":
        rows = _field_map_rows(spec, constants, threads)
    else:
        rows = _force_rows(spec, constants, threads)
        if spec.kind == "zplane-compare":
            rows = _append_parity_columns(spec, rows)
    for row in rows:
        if not all(math.isfinite(v) for v in row):
            raise NumericsError(f"non-finite value in output row {row!r}")
    return SweepResult(
        header=_header(spec, constants), columns=columns_for_kind(spec.kind), rows=rows
    )


def run_radial_profile(spec: SweepSpec, **kwargs) -> SweepResult:
    _require_kind(spec, "radial-profile")
    return run_sweep(spec, **kwargs)


def run_theta_scan(spec: SweepSpec, **kwargs) -> SweepResult:
    _require_kind(spec, "theta-scan")
    return run_sweep(spec, **kwargs)


def run_zplane_compare(spec: SweepSpec, **kwargs) -> SweepResult:
    _require_kind(spec, "zplane-compare")
    return run_sweep(spec, **kwargs)


def _require_kind(spec: SweepSpec, kind: str) -> None:
    if spec.kind != kind:
        raise ConfigError(f"expected kind {kind!r}, got {spec.kind!r}", field="sweep.kind")


def _rho_values(spec: SweepSpec, m: int) -> list[float]:
    lo, hi = spec.rho_grid_w0(m)
    return np.linspace(lo, hi, spec.samples).tolist()


def _map_tasks(tasks, worker, threads: int) -> list:
    if threads <= 1:
        return [worker(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, tasks))


def _force_rows(spec: SweepSpec, constants: PhysicalConstants, threads: int) -> list[tuple]:
    detuning = spec.detuning
    tasks = []
    for m in spec.m_values:
        rho_w0 = _rho_values(spec, m)
        for theta in spec.theta_values:
            mode = spec.mode_for(m, theta)
            for z in spec.z_values:
                for r in rho_w0:
                    tasks.append((mode, theta, z, r))

    def worker(task) -> tuple:
        mode, theta, z, rho_w0 = task
        point = CylPoint(rho=rho_w0 * spec.w0, phi=spec.phi, z=z)
        ev = evaluate_point(mode, spec.atom, detuning, point, constants)
        return _force_row(mode, theta, point, rho_w0, ev)

    return _map_tasks(tasks, worker, threads)


def _force_row(
    mode: ModeSpec, theta: float, point: CylPoint, rho_w0: float, ev: PointEvaluation
) -> tuple:
    b = ev.breakdown
    zn = ZEPTONEWTON_PER_NEWTON
    return (
        mode.m,
        mode.p,
        theta,
        point.z,
        point.rho,
        rho_w0,
        point.phi,
        ev.delta.plus,
        ev.delta.minus,
        ev.omega.plus,
        ev.omega.minus,
        ev.saturation.plus,
        ev.saturation.minus,
        ev.potential.plus,
        ev.potential.minus,
        b.sca_plus.f_rho * zn,
        b.sca_plus.f_phi * zn,
        b.sca_plus.f_z * zn,
        b.sca_minus.f_rho * zn,
        b.sca_minus.f_phi * zn,
        b.sca_minus.f_z * zn,
        b.sca_total.f_rho * zn,
        b.sca_total.f_phi * zn,
        b.sca_total.f_z * zn,
        b.dip_plus.f_rho * zn,
        b.dip_plus.f_phi * zn,
        b.dip_plus.f_z * zn,
        b.dip_minus.f_rho * zn,
        b.dip_minus.f_phi * zn,
        b.dip_minus.f_z * zn,
        b.dip_total.f_rho * zn,
        b.dip_total.f_phi * zn,
        b.dip_total.f_z * zn,
        b.grand_total.f_rho * zn,
        b.grand_total.f_phi * zn,
        b.grand_total.f_z * zn,
    )


# column offsets within FORCE_COLUMNS used for the parity columns
_SCA_RHO, _SCA_PHI, _SCA_Z = 21, 22, 23
_DIP_RHO, _DIP_Z = 30, 32


def _append_parity_columns(spec: SweepSpec, rows: list[tuple]) -> list[tuple]:
    """parity_sum/diff of component(z) against component(-z), same rho/theta."""
    mirror_z = {j: spec.z_values.index(-z) for j, z in enumerate(spec.z_values)}
    n_z = len(spec.z_values)
    n_rho = spec.samples
    block = n_z * n_rho  # rows per (m, theta) block
    out = []
    for i, row in enumerate(rows):
        base = (i // block) * block
        offset = i - base
        z_idx, r_idx = divmod(offset, n_rho)
        mirror_row = rows[base + mirror_z[z_idx] * n_rho + r_idx]
        parity = []
        for col in (_SCA_RHO, _SCA_PHI, _SCA_Z, _DIP_RHO, _DIP_Z):
            parity.append(row[col] + mirror_row[col])
            parity.append(row[col] - mirror_row[col])
        out.append(row + tuple(parity))
    return out


def _field_map_rows(spec: SweepSpec, constants: PhysicalConstants, threads: int) -> list[tuple]:
    phi_values = np.linspace(0.0, 2.0 * math.pi, spec.phi_samples, endpoint=False).tolist()
    tasks = []
    for m in spec.m_values:
        rho_w0 = _rho_values(spec, m)
        for theta in spec.theta_values:
            mode = spec.mode_for(m, theta)
            for z in spec.z_values:
                for r in rho_w0:
                    for phi in phi_values:
                        tasks.append((mode, theta, z, r, phi))

    def worker(task) -> tuple:
        mode, theta, z, rho_w0, phi = task
        point = CylPoint(rho=rho_w0 * spec.w0, phi=phi, z=z)
        phases = phase_pair(mode, point)
        u_x, u_y = transverse_amplitudes(mode, point, constants)
        env = lg_envelope(mode, point, constants)
        return (
            mode.m,
            mode.p,
            theta,
            z,
            point.rho,
            rho_w0,
            phi,
            phases.plus,
            phases.minus,
            u_x.real,
            u_x.imag,
            u_y.real,
            u_y.imag,
            env,
        )

    return _map_tasks(tasks, worker, threads)


def _fmt_list(values, fmt=format_float) -> str:
    return ",".join(fmt(v) for v in values)


def _header(spec: SweepSpec, constants: PhysicalConstants) -> dict[str, str]:
    items: list[tuple[str, object]] = [
        ("schema", SCHEMA_NAME),
        ("schema_version", SCHEMA_VERSION),
        ("generator", f"vortexforce {__version__}"),
        ("kind", spec.kind),
        ("mode.m_values", ",".join(str(m) for m in spec.m_values)),
        ("mode.p", str(spec.p)),
        ("mode.wavelength_m", format_float(spec.wavelength)),
        ("mode.w0_m", format_float(spec.w0)),
        ("mode.power_W", format_float(spec.power)),
        ("mode.phi_p_rad", format_float(spec.phi_p)),
        ("mode.s", str(spec.s)),
        ("atom.wavelength_m", format_float(spec.atom.wavelength)),
        ("atom.gamma_rad_s", format_float(spec.atom.gamma)),
        ("atom.d_eg_C_m", format_float(spec.atom.d_eg)),
        ("detuning.delta0_rad_s", format_float(spec.delta0)),
        ("detuning.v_rho_m_s", format_float(spec.velocity.v_rho)),
        ("detuning.v_phi_m_s", format_float(spec.velocity.v_phi)),
        ("detuning.v_z_m_s", format_float(spec.velocity.v_z)),
        ("sweep.samples", str(spec.samples)),
        ("sweep.phi_rad", format_float(spec.phi)),
        ("sweep.z_values_m", _fmt_list(spec.z_values)),
        ("sweep.theta_values_rad", _fmt_list(spec.theta_values)),
    ]
    if spec.rho_range is not None:
        items.append(("sweep.rho_range_w0", _fmt_list(spec.rho_range)))
    else:
        items.append(("sweep.rho_range_w0", "auto"))
        for m in spec.m_values:
            items.append((f"sweep.rho_max_w0.m{m}", format_float(spec.rho_grid_w0(m)[1])))
    if spec.kind == "field-map":
        items.append(("sweep.phi_samples", str(spec.phi_samples)))
    items.extend((key, format_float(val)) for key, val in constants.as_header_items())
    return {key: str(val) for key, val in items}

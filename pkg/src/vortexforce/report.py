"""Human- and pipeline-facing views of evaluation results."""

from __future__ import annotations

import math

from .atoms import AtomSpec, DetuningSpec
from .beams import CylPoint, ModeSpec
from .constants import PhysicalConstants
from .datafile import SCHEMA_NAME, SCHEMA_VERSION, SweepResult, columns_for_kind, format_float
from .forces import ForceVector, PointEvaluation
from .sweep import ZEPTONEWTON_PER_NEWTON, SweepSpec, _force_row, _header, default_spec

from . import __version__


def to_zeptonewton(force_newton: float) -> float:
    return force_newton * ZEPTONEWTON_PER_NEWTON


def format_point_report(
    mode: ModeSpec,
    atom: AtomSpec,
    detuning: DetuningSpec,
    point: CylPoint,
    ev: PointEvaluation,
) -> str:
    """Aligned table of the branch quantities and the force breakdown."""
    lines = [
        f"mode: m={mode.m} p={mode.p} wavelength={format_float(mode.wavelength)} m "
        f"w0={format_float(mode.w0)} m power={format_float(mode.power)} W",
        f"      theta_p={format_float(mode.theta_p)} rad phi_p={format_float(mode.phi_p)} rad s={mode.s:+d}",
        f"atom: wavelength={format_float(atom.wavelength)} m gamma={format_float(atom.gamma)} rad/s "
        f"d_eg={format_float(atom.d_eg)} C m",
        f"point: rho={format_float(point.rho)} m ({format_float(point.rho / mode.w0)} w0) "
        f"phi={format_float(point.phi)} rad z={format_float(point.z)} m",
        f"velocity: ({format_float(detuning.velocity.v_rho)}, {format_float(detuning.velocity.v_phi)}, "
        f"{format_float(detuning.velocity.v_z)}) m/s   delta0={format_float(detuning.delta0)} rad/s",
        "",
        f"{'quantity':<26}{'plus':>16}{'minus':>16}  unit",
        f"{'detuning':<26}{ev.delta.plus:>16.6e}{ev.delta.minus:>16.6e}  rad/s",
        f"{'rabi frequency':<26}{ev.omega.plus:>16.6e}{ev.omega.minus:>16.6e}  rad/s",
        f"{'saturation':<26}{ev.saturation.plus:>16.6e}{ev.saturation.minus:>16.6e}  -",
        f"{'optical potential':<26}{ev.potential.plus:>16.6e}{ev.potential.minus:>16.6e}  J",
        "",
        f"{'force [zN]':<14}{'rho':>14}{'phi':>14}{'z':>14}",
    ]
    b = ev.breakdown
    for label, vec in (
        ("sca plus", b.sca_plus),
        ("sca minus", b.sca_minus),
        ("sca total", b.sca_total),
        ("dip plus", b.dip_plus),
        ("dip minus", b.dip_minus),
        ("dip total", b.dip_total),
        ("grand total", b.grand_total),
    ):
        lines.append(_force_line(label, vec))
    return "\n".join(lines)


def _force_line(label: str, vec: ForceVector) -> str:
    return (
        f"{label:<14}{to_zeptonewton(vec.f_rho):>14.6e}"
        f"{to_zeptonewton(vec.f_phi):>14.6e}{to_zeptonewton(vec.f_z):>14.6e}"
    )


def point_result(
    spec: SweepSpec,
    point: CylPoint,
    ev: PointEvaluation,
    constants: PhysicalConstants,
) -> SweepResult:
    """Single-row dataset for one point, sharing the sweep CSV schema."""
    mode = spec.mode_for(spec.m_values[0], spec.theta_values[0])
    header = _header(spec, constants)
    header["kind"] = "point"
    header["point.rho_m"] = format_float(point.rho)
    header["point.phi_rad"] = format_float(point.phi)
    header["point.z_m"] = format_float(point.z)
    row = _force_row(mode, mode.theta_p, point, point.rho / mode.w0, ev)
    return SweepResult(header=header, columns=columns_for_kind("radial-profile"), rows=[row])


def summarize(result: SweepResult) -> str:
    """One-line dataset summary: row count, peak total force, its location."""
    n = len(result.rows)
    if result.header.get("kind") == "field-map" or n == 0:
        return f"rows={n} kind={result.header.get('kind')}"
    idx_rho = result.column_index("rho_over_w0")
    idx_m = result.column_index("m")
    idx_theta = result.column_index("theta_p_rad")
    idx = (
        result.column_index("f_total_rho_zN"),
        result.column_index("f_total_phi_zN"),
        result.column_index("f_total_z_zN"),
    )
    best_row = max(
        result.rows, key=lambda row: math.sqrt(row[idx[0]] ** 2 + row[idx[1]] ** 2 + row[idx[2]] ** 2)
    )
    peak = math.sqrt(best_row[idx[0]] ** 2 + best_row[idx[1]] ** 2 + best_row[idx[2]] ** 2)
    return (
        f"rows={n} peak|F|={peak:.4f} zN at rho/w0={best_row[idx_rho]:.4f} "
        f"(m={best_row[idx_m]}, theta_p={best_row[idx_theta]:.4f} rad)"
    )


def describe_presets() -> str:
    """Printable list of the built-in scenario parameter sets."""
    lines = [f"vortexforce {__version__} built-in scenarios (schema {SCHEMA_NAME}/{SCHEMA_VERSION})"]
    for kind, preset in (
        ("radial-profile", "default"),
        ("theta-scan", "default"),
        ("zplane-compare", "default"),
        ("zplane-compare", "tight"),
        ("field-map", "default"),
    ):
        spec = default_spec(kind, preset)
        name = kind if preset == "default" else f"{kind} --preset {preset}"
        lines.append(f"\n[{name}]")
        lines.append(f"  m values      : {', '.join(str(m) for m in spec.m_values)}   (p = {spec.p})")
        lines.append(
            f"  beam          : wavelength = {format_float(spec.wavelength)} m, "
            f"w0 = {format_float(spec.w0)} m, power = {format_float(spec.power)} W"
        )
        lines.append(
            f"  sphere        : theta_p = {', '.join(format_float(t) for t in spec.theta_values)} rad, "
            f"phi_p = {format_float(spec.phi_p)} rad"
        )
        lines.append(
            f"  atom          : wavelength = {format_float(spec.atom.wavelength)} m, "
            f"gamma = {format_float(spec.atom.gamma)} rad/s"
        )
        lines.append(f"  detuning      : {format_float(spec.delta0)} rad/s (10 linewidths), v = 0")
        lines.append(
            f"  grid          : {spec.samples} radial samples, "
            f"z = {', '.join(format_float(z) for z in spec.z_values)} m"
        )
    return "\n".join(lines)

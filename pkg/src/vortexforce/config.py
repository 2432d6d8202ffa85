"""Key-value configuration files for sweeps.

Grammar
-------
Plain text, UTF-8.  Four sections, introduced by ``[mode]``, ``[atom]``,
``[detuning]`` and ``[sweep]``; below a section header, ``key = value``
lines.  Blank lines and lines starting with ``#`` or ``;`` are ignored, as
is anything after `` #`` on a value line.  Within one file the last
assignment to a key wins; command-line overrides are applied afterwards.

Values carry optional unit suffixes:

* lengths: ``m``, ``mm``, ``um``, ``nm``, ``pm``, plus the beam-relative
  units ``lambda`` (mode wavelength) and ``w0`` (waist); bare numbers are
  meters,
* power: ``W``, ``mW``, ``uW``, ``nW``, ``pW``; bare numbers are watts,
* angles: ``rad``, ``deg``, ``pi`` (multiples of pi); bare numbers are
  radians,
* detuning: ``Gamma`` (multiples of the atomic linewidth); bare numbers are
  rad/s.

Every key has a scenario default, so an empty file is a complete
configuration.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import replace

from .atoms import AtomSpec, Velocity
from .constants import CODATA2018, PhysicalConstants
from .errors import ConfigError
from .sweep import SweepSpec, default_spec

_NUMBER_RE = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([A-Za-z0-9_]*)$")

_LENGTH_SCALE = {"m": 1.0, "mm": 1e-3, "um": 1e-6, "nm": 1e-9, "pm": 1e-12}
_POWER_SCALE = {"W": 1.0, "mW": 1e-3, "uW": 1e-6, "nW": 1e-9, "pW": 1e-12}

#: (section.key, value kind, description) — rendered into the CLI help
CONFIG_KEYS = (
    ("mode.m", "int or int list", "winding number(s), >= 0"),
    ("mode.p", "int", "radial index, >= 0"),
    ("mode.wavelength", "length", "vacuum wavelength (m/mm/um/nm/pm)"),
    ("mode.w0", "length", "waist at focus (absolute units or 'lambda')"),
    ("mode.power", "power", "applied beam power (W/mW/uW/nW/pW)"),
    ("mode.theta_p", "angle", "sphere polar angle in [0, pi] (rad/deg/pi)"),
    ("mode.phi_p", "angle", "sphere azimuthal angle (rad/deg/pi)"),
    ("mode.s", "int", "propagation sign, +1 or -1"),
    ("atom.wavelength", "length", "transition wavelength (absolute units)"),
    ("atom.gamma", "float", "spontaneous emission rate (rad/s)"),
    ("detuning.delta0", "detuning", "static detuning (rad/s or 'Gamma')"),
    ("detuning.v_rho", "float", "radial velocity (m/s)"),
    ("detuning.v_phi", "float", "azimuthal velocity (m/s)"),
    ("detuning.v_z", "float", "axial velocity (m/s)"),
    ("sweep.kind", "name", "must match the subcommand when present"),
    ("sweep.samples", "int", "radial grid points, >= 2"),
    ("sweep.rho_min", "length", "radial window start (units incl. 'w0', 'lambda')"),
    ("sweep.rho_max", "length", "radial window end (default: auto per m)"),
    ("sweep.z_values", "length list", "axial planes to evaluate"),
    ("sweep.theta_values", "angle list", "sphere polar angles (theta-scan)"),
    ("sweep.phi", "angle", "evaluation azimuth"),
    ("sweep.phi_samples", "int", "azimuthal samples (field-map only)"),
)

_KNOWN_KEYS = frozenset(key for key, _, _ in CONFIG_KEYS)
_SECTIONS = ("mode", "atom", "detuning", "sweep")


def config_key_help() -> str:
    width = max(len(key) for key, _, _ in CONFIG_KEYS)
    kind_width = max(len(kind) for _, kind, _ in CONFIG_KEYS)
    lines = ["configuration keys (file sections [mode] [atom] [detuning] [sweep]):"]
    for key, kind, desc in CONFIG_KEYS:
        lines.append(f"  {key.ljust(width)}  {kind.ljust(kind_width)}  {desc}")
    return "\n".join(lines)


class _Entry:
    __slots__ = ("value", "path", "line")

    def __init__(self, value: str, path: str | None, line: int | None):
        self.value = value
        self.path = path
        self.line = line

    def error(self, message: str, field: str) -> ConfigError:
        return ConfigError(message, path=self.path, line=self.line, field=field)


def parse_config_text(text: str, path: str = "<config>") -> dict[str, _Entry]:
    """Parse the raw key/value layer; values stay unconverted strings."""
    entries: dict[str, _Entry] = {}
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(" #", 1)[0].strip()
        if not line or line.startswith(("#", ";")):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in _SECTIONS:
                raise ConfigError(
                    f"unknown section [{section}]; expected one of {', '.join(_SECTIONS)}",
                    path=path,
                    line=lineno,
                )
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"expected 'key = value', got {raw!r}", path=path, line=lineno)
        if section is None:
            raise ConfigError(
                "key outside any section; start with [mode], [atom], [detuning] or [sweep]",
                path=path,
                line=lineno,
            )
        full = f"{section}.{key.strip().lower()}"
        if full not in _KNOWN_KEYS:
            raise ConfigError(f"unknown key {full!r}", path=path, line=lineno, field=full)
        entries[full] = _Entry(value.strip(), path, lineno)
    return entries


def parse_overrides(pairs) -> dict[str, _Entry]:
    entries: dict[str, _Entry] = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        key = key.strip().lower()
        if not sep or not key:
            raise ConfigError(f"override must look like section.key=value, got {pair!r}")
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", field=key)
        entries[key] = _Entry(value.strip(), None, None)
    return entries


def _match_number(entry: _Entry, field: str) -> tuple[float, str]:
    m = _NUMBER_RE.match(entry.value)
    if not m:
        raise entry.error(f"cannot parse number with optional unit from {entry.value!r}", field)
    return float(m.group(1)), m.group(2)


def parse_length(entry: _Entry, field: str, *, wavelength=None, w0=None) -> float:
    value, unit = _match_number(entry, field)
    if unit == "" or unit in _LENGTH_SCALE:
        return value * _LENGTH_SCALE.get(unit, 1.0)
    if unit == "lambda":
        if wavelength is None:
            raise entry.error("unit 'lambda' is not available for this key", field)
        return value * wavelength
    if unit == "w0":
        if w0 is None:
            raise entry.error("unit 'w0' is not available for this key", field)
        return value * w0
    raise entry.error(f"unknown length unit {unit!r}", field)


def parse_power(entry: _Entry, field: str) -> float:
    value, unit = _match_number(entry, field)
    if unit == "":
        return value
    if unit in _POWER_SCALE:
        return value * _POWER_SCALE[unit]
    raise entry.error(f"unknown power unit {unit!r}", field)


def parse_angle(entry: _Entry, field: str) -> float:
    value, unit = _match_number(entry, field)
    if unit in ("", "rad"):
        return value
    if unit == "pi":
        return value * math.pi
    if unit == "deg":
        return math.radians(value)
    raise entry.error(f"unknown angle unit {unit!r}", field)


def parse_detuning(entry: _Entry, field: str, gamma: float) -> float:
    value, unit = _match_number(entry, field)
    if unit == "":
        return value
    if unit.lower() == "gamma":
        return value * gamma
    raise entry.error(f"unknown detuning unit {unit!r}", field)


def parse_float(entry: _Entry, field: str) -> float:
    value, unit = _match_number(entry, field)
    if unit:
        raise entry.error(f"no unit expected here, got {unit!r}", field)
    return value


def parse_int(entry: _Entry, field: str) -> int:
    try:
        return int(entry.value)
    except ValueError:
        raise entry.error(f"expected an integer, got {entry.value!r}", field) from None


def parse_int_list(entry: _Entry, field: str) -> tuple[int, ...]:
    try:
        return tuple(int(item.strip()) for item in entry.value.split(","))
    except ValueError:
        raise entry.error(f"expected integers, got {entry.value!r}", field) from None


def _split_list(entry: _Entry) -> list[_Entry]:
    return [_Entry(item.strip(), entry.path, entry.line) for item in entry.value.split(",")]


def load_config(
    path: str | None,
    *,
    kind: str,
    overrides=(),
    preset: str = "default",
    text: str | None = None,
) -> SweepSpec:
    """Resolve a sweep configuration: kind defaults <- file <- overrides.

    ``path=None`` (and ``text=None``) yields the kind's built-in scenario.
    """
    entries: dict[str, _Entry] = {}
    if text is not None:
        entries.update(parse_config_text(text, path or "<config>"))
    elif path is not None:
        with open(path, "r", encoding="utf-8") as handle:
            entries.update(parse_config_text(handle.read(), path))
    entries.update(parse_overrides(overrides))
    return _resolve(entries, kind=kind, preset=preset)


def _resolve(entries: dict[str, _Entry], *, kind: str, preset: str) -> SweepSpec:
    if "sweep.kind" in entries:
        declared = entries["sweep.kind"].value
        if declared != kind:
            raise entries["sweep.kind"].error(
                f"config declares kind {declared!r} but the command runs {kind!r}",
                "sweep.kind",
            )
    spec = default_spec(kind, preset)

    def has(key: str) -> bool:
        return key in entries

    def get(key: str):
        return entries[key]

    # resolution order matters: wavelength before w0, w0 before the
    # beam-relative lengths, gamma before the detuning
    wavelength = (
        parse_length(get("mode.wavelength"), "mode.wavelength")
        if has("mode.wavelength")
        else spec.wavelength
    )
    if not wavelength > 0.0:
        raise get("mode.wavelength").error("wavelength must be positive", "mode.wavelength")
    if has("mode.w0"):
        w0 = parse_length(get("mode.w0"), "mode.w0", wavelength=wavelength)
    elif wavelength == spec.wavelength:
        w0 = spec.w0
    else:
        # keep the scenario's waist-to-wavelength ratio for a new wavelength
        w0 = spec.w0 / spec.wavelength * wavelength

    atom_wavelength = (
        parse_length(get("atom.wavelength"), "atom.wavelength")
        if has("atom.wavelength")
        else spec.atom.wavelength
    )
    gamma = parse_float(get("atom.gamma"), "atom.gamma") if has("atom.gamma") else spec.atom.gamma
    if not gamma > 0.0:
        raise get("atom.gamma").error("gamma must be positive", "atom.gamma")
    atom = AtomSpec.from_linewidth(atom_wavelength, gamma)

    m_values = (
        parse_int_list(get("mode.m"), "mode.m") if has("mode.m") else spec.m_values
    )
    p = parse_int(get("mode.p"), "mode.p") if has("mode.p") else spec.p
    power = parse_power(get("mode.power"), "mode.power") if has("mode.power") else spec.power
    phi_p = parse_angle(get("mode.phi_p"), "mode.phi_p") if has("mode.phi_p") else spec.phi_p
    s = parse_int(get("mode.s"), "mode.s") if has("mode.s") else spec.s

    theta_values = spec.theta_values
    if has("mode.theta_p"):
        theta_values = (parse_angle(get("mode.theta_p"), "mode.theta_p"),)
    if has("sweep.theta_values"):
        theta_values = tuple(
            parse_angle(item, "sweep.theta_values")
            for item in _split_list(get("sweep.theta_values"))
        )

    if has("detuning.delta0"):
        delta0 = parse_detuning(get("detuning.delta0"), "detuning.delta0", gamma)
    elif gamma == spec.atom.gamma:
        delta0 = spec.delta0
    else:
        # scenario default is expressed in linewidths; track a changed gamma
        delta0 = spec.delta0 / spec.atom.gamma * gamma
    velocity = Velocity(
        v_rho=parse_float(get("detuning.v_rho"), "detuning.v_rho") if has("detuning.v_rho") else 0.0,
        v_phi=parse_float(get("detuning.v_phi"), "detuning.v_phi") if has("detuning.v_phi") else 0.0,
        v_z=parse_float(get("detuning.v_z"), "detuning.v_z") if has("detuning.v_z") else 0.0,
    )

    samples = (
        parse_int(get("sweep.samples"), "sweep.samples") if has("sweep.samples") else spec.samples
    )
    rho_range = spec.rho_range
    if has("sweep.rho_min") or has("sweep.rho_max"):
        lo = (
            parse_length(get("sweep.rho_min"), "sweep.rho_min", wavelength=wavelength, w0=w0) / w0
            if has("sweep.rho_min")
            else 0.0
        )
        if not has("sweep.rho_max"):
            raise get("sweep.rho_min").error(
                "sweep.rho_max is required when sweep.rho_min is given", "sweep.rho_max"
            )
        hi = parse_length(get("sweep.rho_max"), "sweep.rho_max", wavelength=wavelength, w0=w0) / w0
        rho_range = (lo, hi)
    z_values = spec.z_values
    if has("sweep.z_values"):
        z_values = tuple(
            parse_length(item, "sweep.z_values", wavelength=wavelength, w0=w0)
            for item in _split_list(get("sweep.z_values"))
        )
    phi = parse_angle(get("sweep.phi"), "sweep.phi") if has("sweep.phi") else spec.phi
    phi_samples = (
        parse_int(get("sweep.phi_samples"), "sweep.phi_samples")
        if has("sweep.phi_samples")
        else spec.phi_samples
    )

    resolved = replace(
        spec,
        m_values=m_values,
        p=p,
        wavelength=wavelength,
        w0=w0,
        power=power,
        phi_p=phi_p,
        s=s,
        atom=atom,
        delta0=delta0,
        velocity=velocity,
        samples=samples,
        rho_range=rho_range,
        z_values=z_values,
        theta_values=theta_values,
        phi=phi,
        phi_samples=phi_samples,
    )
    resolved.validate()
    return resolved


def parse_length_arg(text: str, field: str, *, wavelength=None, w0=None) -> float:
    """Parse a unit-suffixed length from a command-line argument."""
    return parse_length(_Entry(text.strip(), None, None), field, wavelength=wavelength, w0=w0)


def parse_angle_arg(text: str, field: str) -> float:
    """Parse a unit-suffixed angle from a command-line argument."""
    return parse_angle(_Entry(text.strip(), None, None), field)


def single_mode(spec: SweepSpec):
    """The one mode of a single-point evaluation; rejects m lists."""
    if len(spec.m_values) != 1:
        raise ConfigError(
            "point evaluation needs exactly one winding number; "
            f"got mode.m = {','.join(str(m) for m in spec.m_values)}",
            field="mode.m",
        )
    if len(spec.theta_values) != 1:
        raise ConfigError(
            "point evaluation needs exactly one sphere angle", field="sweep.theta_values"
        )
    return spec.mode_for(spec.m_values[0], spec.theta_values[0])


def resolve_constants() -> PhysicalConstants:
    """Constants table, overridable through VORTEXFORCE_CONSTANTS (testing only).

    The file holds ``name = value`` lines for any of c, mu0, hbar; eps0 is
    re-derived unless given explicitly.
    """
    path = os.environ.get("VORTEXFORCE_CONSTANTS")
    if not path:
        return CODATA2018
    values = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in ("c", "mu0", "eps0", "hbar"):
                raise ConfigError(
                    f"bad constants line {raw!r}", path=path, line=lineno, field=key or None
                )
            values[key] = float(value.strip())
    c = values.get("c", CODATA2018.c)
    mu0 = values.get("mu0", CODATA2018.mu0)
    eps0 = values.get("eps0", 1.0 / (mu0 * c * c))
    hbar = values.get("hbar", CODATA2018.hbar)
    return PhysicalConstants(c=c, mu0=mu0, eps0=eps0, hbar=hbar)

"""CSV dataset format: '#'-prefixed provenance header, then one header row.

All floats are serialised with 17 significant digits so that parsing a
written file reproduces the in-memory values bit for bit.  Any change to a
column list below requires a schema version bump; the golden-file tests pin
both.
"""

from __future__ import annotations

import io
import sys
from dataclasses import dataclass

from .errors import DataFormatError

SCHEMA_NAME = "vortexforce-sweep"
SCHEMA_VERSION = "1"

#: columns shared by every force-sweep kind, in file order
FORCE_COLUMNS = (
    "m",
    "p",
    "theta_p_rad",
    "z_m",
    "rho_m",
    "rho_over_w0",
    "phi_rad",
    "delta_plus_rad_s",
    "delta_minus_rad_s",
    "omega_plus_rad_s",
    "omega_minus_rad_s",
    "sat_plus",
    "sat_minus",
    "u_dip_plus_J",
    "u_dip_minus_J",
    "f_sca_plus_rho_zN",
    "f_sca_plus_phi_zN",
    "f_sca_plus_z_zN",
    "f_sca_minus_rho_zN",
    "f_sca_minus_phi_zN",
    "f_sca_minus_z_zN",
    "f_sca_rho_zN",
    "f_sca_phi_zN",
    "f_sca_z_zN",
    "f_dip_plus_rho_zN",
    "f_dip_plus_phi_zN",
    "f_dip_plus_z_zN",
    "f_dip_minus_rho_zN",
    "f_dip_minus_phi_zN",
    "f_dip_minus_z_zN",
    "f_dip_rho_zN",
    "f_dip_phi_zN",
    "f_dip_z_zN",
    "f_total_rho_zN",
    "f_total_phi_zN",
    "f_total_z_zN",
)

#: focal-plane-crossing datasets append symmetry-check columns:
#: parity_sum  = component(z) + component(-z),
#: parity_diff = component(z) - component(-z)
PARITY_COLUMNS = (
    "parity_sum_sca_rho_zN",
    "parity_diff_sca_rho_zN",
    "parity_sum_sca_phi_zN",
    "parity_diff_sca_phi_zN",
    "parity_sum_sca_z_zN",
    "parity_diff_sca_z_zN",
    "parity_sum_dip_rho_zN",
    "parity_diff_dip_rho_zN",
    "parity_sum_dip_z_zN",
    "parity_diff_dip_z_zN",
)

FIELD_MAP_COLUMNS = (
    "m",
    "p",
    "theta_p_rad",
    "z_m",
    "rho_m",
    "rho_over_w0",
    "phi_rad",
    "psi_plus_rad",
    "psi_minus_rad",
    "u_x_re_V_m",
    "u_x_im_V_m",
    "u_y_re_V_m",
    "u_y_im_V_m",
    "envelope_V_m",
)

_INT_COLUMNS = frozenset({"m", "p"})


def columns_for_kind(kind: str) -> tuple[str, ...]:
    if kind in ("radial-profile", "theta-scan"):
        return FORCE_COLUMNS
    if kind == "zplane-compare":
        return FORCE_COLUMNS + PARITY_COLUMNS
    if kind == "field-map":
        return FIELD_MAP_COLUMNS
    raise ValueError(f"unknown sweep kind {kind!r}")


@dataclass
class SweepResult:
    """A finished sweep: provenance header, column names, data rows."""

    header: dict[str, str]
    columns: tuple[str, ...]
    rows: list[tuple]

    def column_index(self, name: str) -> int:
        try:
            return self.columns.index(name)
        except ValueError:
            raise KeyError(f"dataset has no column {name!r}") from None

    def column(self, name: str) -> list:
        idx = self.column_index(name)
        return [row[idx] for row in self.rows]


def format_float(value: float) -> str:
    return f"{value:.17g}"


def _format_cell(name: str, value) -> str:
    if name in _INT_COLUMNS:
        return str(int(value))
    return format_float(value)


def write_csv(result: SweepResult, destination=None) -> None:
    """Write the dataset as UTF-8 CSV; ``destination`` is a path or a file.

    ``None`` writes to stdout.
    """
    if destination is None:
        _write_stream(result, sys.stdout)
    elif isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__"):
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            _write_stream(result, handle)
    else:
        _write_stream(result, destination)


def _write_stream(result: SweepResult, stream) -> None:
    for key, value in result.header.items():
        stream.write(f"# {key} = {value}\n")
    stream.write(",".join(result.columns) + "\n")
    for row in result.rows:
        stream.write(",".join(_format_cell(n, v) for n, v in zip(result.columns, row)) + "\n")


def dumps_csv(result: SweepResult) -> str:
    buffer = io.StringIO()
    _write_stream(result, buffer)
    return buffer.getvalue()


def read_csv(source) -> SweepResult:
    """Parse a dataset written by :func:`write_csv`.

    Raises :class:`DataFormatError` if the schema tag is missing or does not
    match this package's schema version.
    """
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            return _read_stream(handle, name=str(source))
    return _read_stream(source, name=getattr(source, "name", "<stream>"))


def _read_stream(stream, name: str) -> SweepResult:
    header: dict[str, str] = {}
    columns: tuple[str, ...] | None = None
    rows: list[tuple] = []
    for line in stream:
        line = line.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition(" = ")
            if not sep:
                raise DataFormatError(f"{name}: malformed header line {line!r}")
            header[key] = value
            continue
        if columns is None:
            columns = tuple(line.split(","))
            continue
        cells = line.split(",")
        if len(cells) != len(columns):
            raise DataFormatError(
                f"{name}: row has {len(cells)} cells, expected {len(columns)}"
            )
        rows.append(
            tuple(
                int(cell) if col in _INT_COLUMNS else float(cell)
                for col, cell in zip(columns, cells)
            )
        )
    if header.get("schema") != SCHEMA_NAME:
        raise DataFormatError(f"{name}: not a {SCHEMA_NAME} dataset")
    if header.get("schema_version") != SCHEMA_VERSION:
        raise DataFormatError(
            f"{name}: schema version {header.get('schema_version')!r} does not match "
            f"expected {SCHEMA_VERSION!r}"
        )
    if columns is None:
        raise DataFormatError(f"{name}: no column header found")
    return SweepResult(header=header, columns=columns, rows=rows)

"""Figure presets for the sweep datasets.

Four layouts are shipped, one per dataset family:

* ``scattering-profile``: axial and azimuthal scattering force vs rho/w0,
  one curve per winding number.
* ``dipole-profile``: radial dipole force vs rho/w0, one curve per winding
  number.
* ``sphere-scan``: three panels (axial scattering, azimuthal scattering,
  radial dipole) with one curve per sphere polar angle.
* ``focal-crossing``: scattering and dipole components on both sides of the
  focal plane.

Winding-number colour code (documented contract): m=0 red, m=1 green,
m=2 black, m=5 blue, m=20 gold (the yellow-family curve, kept printable).
Sphere angles: 0 and pi black solid, pi/4 and 3pi/4 red dashed, pi/2 blue
dash-dotted.

Rendering is deterministic: fixed backend, DPI and font handling, no
timestamps, pinned SVG id salt; identical inputs give identical bytes.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .reader import Dataset, DatasetError, read_dataset

#: colour per winding number
COLOR_BY_M = {0: "red", 1: "green", 2: "black", 5: "blue", 20: "gold"}

#: (colour, linestyle) per multiple of pi/4 of the sphere polar angle
STYLE_BY_THETA_QUARTER = {
    0: ("black", "-"),
    1: ("red", "--"),
    2: ("blue", "-."),
    3: ("red", "--"),
    4: ("black", "-"),
}

_RC = {
    "figure.dpi": 110,
    "savefig.dpi": 200,
    "font.size": 11,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.6,
    "svg.hashsalt": "vortexfigs",
    "svg.fonttype": "path",
    "path.simplify": False,
}

_RHO_LABEL = r"$\rho/w_0$"


def _m_label(m: float) -> str:
    return f"$m={int(m)}$"


def _color_for_m(m: float):
    return COLOR_BY_M.get(int(m), "gray")


def _style_for_theta(theta: float):
    quarter = round(theta / (0.25 * math.pi))
    try:
        return STYLE_BY_THETA_QUARTER[quarter]
    except KeyError:
        raise DatasetError(
            f"no line style defined for sphere angle {theta!r}; expected multiples of pi/4"
        ) from None


def _theta_label(theta: float) -> str:
    quarter = round(theta / (0.25 * math.pi))
    names = {0: "0", 1: r"\pi/4", 2: r"\pi/2", 3: r"3\pi/4", 4: r"\pi"}
    return rf"$\Theta_P={names.get(quarter, theta)}$"


def _per_m_panels(data: Dataset, panels: list[tuple]):
    fig, axes = plt.subplots(1, len(panels), figsize=(5.4 * len(panels), 4.2), squeeze=False)
    for ax, (column, ylabel, title) in zip(axes[0], panels):
        data.require("m", "rho_over_w0", column)
        for m in data.unique("m"):
            rows = data.select(m=m)
            ax.plot(
                rows.columns["rho_over_w0"],
                rows.columns[column],
                color=_color_for_m(m),
                label=_m_label(m),
            )
        ax.set_xlabel(_RHO_LABEL)
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        ax.legend(fontsize=9)
    fig.tight_layout()
    return fig


def recipe_scattering_profile(data: Dataset):
    return _per_m_panels(
        data,
        [
            ("f_sca_z_zN", r"$F^{\rm sca}_z$ (zN)", "axial scattering force"),
            ("f_sca_phi_zN", r"$F^{\rm sca}_\phi$ (zN)", "azimuthal scattering force"),
        ],
    )


def recipe_dipole_profile(data: Dataset):
    return _per_m_panels(
        data,
        [("f_dip_rho_zN", r"$F^{\rm dip}_\rho$ (zN)", "radial dipole force")],
    )


def recipe_sphere_scan(data: Dataset):
    panels = [
        ("f_sca_z_zN", r"$F^{\rm sca}_z$ (zN)", "axial scattering force"),
        ("f_sca_phi_zN", r"$F^{\rm sca}_\phi$ (zN)", "azimuthal scattering force"),
        ("f_dip_rho_zN", r"$F^{\rm dip}_\rho$ (zN)", "radial dipole force"),
    ]
    data.require("theta_p_rad", "rho_over_w0", *(p[0] for p in panels))
    fig, axes = plt.subplots(1, 3, figsize=(15.0, 4.2))
    for ax, (column, ylabel, title) in zip(axes, panels):
        seen_labels = set()
        for theta in data.unique("theta_p_rad"):
            rows = data.select(theta_p_rad=theta)
            color, linestyle = _style_for_theta(theta)
            label = _theta_label(theta)
            ax.plot(
                rows.columns["rho_over_w0"],
                rows.columns[column],
                color=color,
                linestyle=linestyle,
                label=None if label in seen_labels else label,
            )
            seen_labels.add(label)
        ax.set_xlabel(_RHO_LABEL)
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        ax.legend(fontsize=9)
    fig.tight_layout()
    return fig


def recipe_focal_crossing(data: Dataset):
    data.require(
        "z_m", "rho_over_w0", "f_sca_rho_zN", "f_sca_phi_zN", "f_sca_z_zN",
        "f_dip_rho_zN", "f_dip_z_zN",
    )
    z_values = data.unique("z_m")
    z_pos, z_neg = float(z_values.max()), float(z_values.min())
    if not (z_neg < 0.0 < z_pos):
        raise DatasetError(f"{data.path}: need planes on both sides of the focus")
    focus = data.select(z_m=0.0) if 0.0 in z_values else None
    up, down = data.select(z_m=z_pos), data.select(z_m=z_neg)

    fig, (ax_sca, ax_dip) = plt.subplots(1, 2, figsize=(11.0, 4.4))
    rho = up.columns["rho_over_w0"]

    ax_sca.plot(rho, up.columns["f_sca_phi_zN"], color="red", label=r"$F_\phi$ at $z=+\lambda$")
    ax_sca.plot(rho, down.columns["f_sca_phi_zN"], color="red", linestyle="--", label=r"$F_\phi$ at $z=-\lambda$")
    ax_sca.plot(rho, up.columns["f_sca_z_zN"], color="blue", label=r"$F_z$ at $z=\pm\lambda$")
    ax_sca.plot(rho, up.columns["f_sca_rho_zN"], color="black", label=r"$F_\rho$ at $z=+\lambda$")
    ax_sca.plot(rho, down.columns["f_sca_rho_zN"], color="gold", label=r"$F_\rho$ at $z=-\lambda$")
    if focus is not None:
        ax_sca.plot(rho, focus.columns["f_sca_rho_zN"], color="green", label=r"$F_\rho$ at $z=0$")
    ax_sca.set_xlabel(_RHO_LABEL)
    ax_sca.set_ylabel(r"$F^{\rm sca}$ (zN)")
    ax_sca.set_title("scattering force across the focus")
    ax_sca.legend(fontsize=8)

    ax_dip.plot(rho, up.columns["f_dip_rho_zN"], color="black", label=r"$F_\rho$ at $z=+\lambda$")
    ax_dip.plot(rho, down.columns["f_dip_rho_zN"], color="black", linestyle="--", label=r"$F_\rho$ at $z=-\lambda$")
    ax_dip.plot(rho, up.columns["f_dip_z_zN"], color="blue", label=r"$F_z$ at $z=+\lambda$")
    if focus is not None:
        ax_dip.plot(rho, focus.columns["f_dip_z_zN"], color="green", label=r"$F_z$ at $z=0$")
    ax_dip.plot(rho, down.columns["f_dip_z_zN"], color="gold", label=r"$F_z$ at $z=-\lambda$")
    ax_dip.set_xlabel(_RHO_LABEL)
    ax_dip.set_ylabel(r"$F^{\rm dip}$ (zN)")
    ax_dip.set_title("dipole force across the focus")
    ax_dip.legend(fontsize=8)

    fig.tight_layout()
    return fig


RECIPES = {
    "scattering-profile": recipe_scattering_profile,
    "dipole-profile": recipe_dipole_profile,
    "sphere-scan": recipe_sphere_scan,
    "focal-crossing": recipe_focal_crossing,
}


def render(
    recipe: str,
    csv_path: str | Path,
    outdir: str | Path,
    formats: tuple[str, ...] = ("png", "svg"),
    stem: str | None = None,
) -> list[Path]:
    """Render one recipe from one dataset; returns the written files."""
    try:
        build = RECIPES[recipe]
    except KeyError:
        raise DatasetError(
            f"unknown recipe {recipe!r}; available: {', '.join(sorted(RECIPES))}"
        ) from None
    data = read_dataset(csv_path)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = stem or recipe
    written: list[Path] = []
    with plt.rc_context(_RC):
        fig = build(data)
        try:
            for fmt in formats:
                target = outdir / f"{stem}.{fmt}"
                metadata = {"Date": None} if fmt == "svg" else None
                fig.savefig(target, format=fmt, metadata=metadata)
                written.append(target)
        finally:
            plt.close(fig)
    return written

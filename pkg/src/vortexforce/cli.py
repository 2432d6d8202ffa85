"""Command-line interface.

Thin orchestration only: parsing, dispatch and exit codes live here; every
numeric step is a library call.  Exit codes: 0 success, 1 configuration
error, 2 I/O error, 3 internal numerical guard, 4 failed validation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import __version__, checks, config, report
from .atoms import Velocity
from .beams import CylPoint
from .datafile import write_csv
from .errors import ConfigError, NumericsError
from .forces import evaluate_point
from .sweep import run_sweep

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_NUMERIC = 3
EXIT_VALIDATION = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vortexforce",
        description=(
            "Optical scattering and dipole forces on a two-level atom in "
            "higher-order Poincare vortex beams: parameter sweeps to CSV, "
            "single-point reports, and a self-validation suite."
        ),
        epilog=config.config_key_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"vortexforce {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", metavar="PATH", help="configuration file")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        metavar="SECTION.KEY=VALUE",
        default=[],
        help="override one configuration key (repeatable; last writer wins)",
    )
    common.add_argument(
        "-o", "--output", metavar="PATH", help="output CSV path (default: stdout)"
    )
    common.add_argument(
        "--threads", type=int, default=1, help="worker threads for the sweep (default 1)"
    )

    profile = sub.add_parser(
        "profile",
        parents=[common],
        help="radial force profiles on the focal plane for a set of winding numbers",
    )
    profile.set_defaults(handler=_cmd_sweep, kind="radial-profile", preset="default")

    sphere = sub.add_parser(
        "sphere-scan",
        parents=[common],
        help="radial profiles at representative Poincare-sphere polar angles",
    )
    sphere.set_defaults(handler=_cmd_sweep, kind="theta-scan", preset="default")

    zplane = sub.add_parser(
        "zplane",
        parents=[common],
        help="force components on planes on both sides of the focus, with parity columns",
    )
    zplane.add_argument(
        "--preset",
        choices=("default", "tight"),
        default="default",
        help="'tight' pulls the waist down to one wavelength",
    )
    zplane.set_defaults(handler=_cmd_sweep, kind="zplane-compare")

    fieldmap = sub.add_parser(
        "field-map",
        parents=[common],
        help="branch phases and transverse field amplitudes over a (rho, phi) grid",
    )
    fieldmap.set_defaults(handler=_cmd_sweep, kind="field-map", preset="default")

    point = sub.add_parser(
        "point",
        parents=[common],
        help="full force breakdown at a single point (table; optional CSV row)",
    )
    point.add_argument("--rho", required=True, help="radial coordinate, e.g. '1.5 w0' or '2.9 um'")
    point.add_argument("--phi", default="0", help="azimuth, e.g. '0.5 pi' (default 0)")
    point.add_argument("--z", default="0", help="axial coordinate, e.g. '-1 lambda' (default 0)")
    point.add_argument("--v-rho", type=float, default=None, help="radial velocity (m/s)")
    point.add_argument("--v-phi", type=float, default=None, help="azimuthal velocity (m/s)")
    point.add_argument("--v-z", type=float, default=None, help="axial velocity (m/s)")
    point.add_argument(
        "--csv", metavar="PATH", help="also write the point as a one-row CSV ('-' for stdout)"
    )
    point.set_defaults(handler=_cmd_point, kind="point", preset="default")

    validate = sub.add_parser(
        "validate", parents=[common], help="run the library invariant suite and report pass/fail"
    )
    validate.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    # testing hooks: deliberately skew inputs to prove the suite notices
    validate.add_argument("--hook-xi-dz-error", type=float, default=0.0, help=argparse.SUPPRESS)
    validate.add_argument("--hook-power-nodes", type=int, default=None, help=argparse.SUPPRESS)
    validate.set_defaults(handler=_cmd_validate, kind=None, preset="default")

    presets = sub.add_parser("presets", parents=[common], help="list the built-in scenario parameters")
    presets.set_defaults(handler=_cmd_presets, kind=None, preset="default")

    return parser


def _cmd_sweep(args) -> int:
    spec = config.load_config(
        args.config, kind=args.kind, overrides=args.overrides, preset=args.preset
    )
    constants = config.resolve_constants()
    result = run_sweep(spec, constants=constants, threads=args.threads)
    write_csv(result, args.output)
    print(report.summarize(result), file=sys.stderr)
    return EXIT_OK


def _cmd_point(args) -> int:
    spec = config.load_config(
        args.config, kind="point", overrides=args.overrides, preset=args.preset
    )
    constants = config.resolve_constants()
    mode = config.single_mode(spec)
    point = CylPoint(
        rho=config.parse_length_arg(args.rho, "rho", wavelength=spec.wavelength, w0=spec.w0),
        phi=config.parse_angle_arg(args.phi, "phi"),
        z=config.parse_length_arg(args.z, "z", wavelength=spec.wavelength, w0=spec.w0),
    )
    velocity = spec.velocity
    if args.v_rho is not None or args.v_phi is not None or args.v_z is not None:
        velocity = Velocity(
            v_rho=args.v_rho if args.v_rho is not None else velocity.v_rho,
            v_phi=args.v_phi if args.v_phi is not None else velocity.v_phi,
            v_z=args.v_z if args.v_z is not None else velocity.v_z,
        )
        spec = replace(spec, velocity=velocity)
    detuning = spec.detuning
    ev = evaluate_point(mode, spec.atom, detuning, point, constants)
    print(report.format_point_report(mode, spec.atom, detuning, point, ev))
    if args.csv:
        result = report.point_result(spec, point, ev, constants)
        write_csv(result, None if args.csv == "-" else args.csv)
    return EXIT_OK


def _cmd_validate(args) -> int:
    results = checks.run_all(
        seed=args.seed,
        xi_dz_perturbation=args.hook_xi_dz_error,
        power_nodes=args.hook_power_nodes,
    )
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    if failed:
        worst = max(failed, key=lambda r: r.worst)
        print(
            f"{len(failed)} of {len(results)} checks failed; worst offender: "
            f"{worst.name} (worst={worst.worst:.3e}, limit={worst.threshold:.0e})",
            file=sys.stderr,
        )
        return EXIT_VALIDATION
    print(f"all {len(results)} checks passed", file=sys.stderr)
    return EXIT_OK


def _cmd_presets(args) -> int:
    print(report.describe_presets())
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return EXIT_IO
    except NumericsError as err:
        print(f"numerical guard tripped: {err}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

import ast
import inspect
import math
from pathlib import Path

import pytest

from vortexforce import cli, read_csv


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSweepCommands:
    def test_profile_writes_dataset_and_summary(self, capsys, tmp_path):
        out = tmp_path / "profile.csv"
        code, stdout, stderr = run_cli(
            capsys, "profile", "--set", "sweep.samples=16", "-o", str(out)
        )
        assert code == 0
        assert stdout == ""
        assert "rows=80" in stderr and "peak|F|" in stderr
        result = read_csv(out)
        assert result.header["kind"] == "radial-profile"
        assert result.header["mode.m_values"] == "0,1,2,5,20"

    def test_default_output_is_stdout(self, capsys):
        code, stdout, stderr = run_cli(
            capsys, "profile", "--set", "sweep.samples=4", "--set", "mode.m=0"
        )
        assert code == 0
        assert stdout.startswith("# schema = vortexforce-sweep")
        assert "peak|F|" in stderr

    def test_sphere_scan_covers_five_angles(self, capsys, tmp_path):
        out = tmp_path / "scan.csv"
        code, _, _ = run_cli(capsys, "sphere-scan", "--set", "sweep.samples=8", "-o", str(out))
        assert code == 0
        result = read_csv(out)
        thetas = sorted(set(result.column("theta_p_rad")))
        assert len(thetas) == 5 and thetas[-1] == math.pi

    def test_zplane_tight_preset(self, capsys, tmp_path):
        out = tmp_path / "zplane.csv"
        code, _, _ = run_cli(
            capsys, "zplane", "--preset", "tight", "--set", "sweep.samples=8", "-o", str(out)
        )
        assert code == 0
        result = read_csv(out)
        assert result.header["mode.w0_m"] == result.header["mode.wavelength_m"]
        assert "parity_sum_sca_rho_zN" in result.columns

    def test_threads_flag_accepted(self, capsys, tmp_path):
        out = tmp_path / "t.csv"
        code, _, _ = run_cli(
            capsys, "profile", "--threads", "4", "--set", "sweep.samples=8", "-o", str(out)
        )
        assert code == 0


class TestPointCommand:
    def test_table_output(self, capsys):
        code, stdout, _ = run_cli(capsys, "point", "--rho", "1 w0", "--z", "0.5 lambda")
        assert code == 0
        assert "grand total" in stdout
        assert "rabi frequency" in stdout

    def test_axis_point_with_vortex_is_finite_and_transverse_free(self, capsys):
        code, stdout, _ = run_cli(capsys, "point", "--rho", "0", "--set", "mode.m=2")
        assert code == 0
        assert "nan" not in stdout and "inf" not in stdout
        for line in stdout.splitlines():
            if line.startswith(("sca total", "dip total")):
                cells = line.split()
                assert float(cells[-3]) == 0.0 and float(cells[-2]) == 0.0

    def test_rest_atom_detunings_match_static(self, capsys):
        code, stdout, _ = run_cli(capsys, "point", "--rho", "0.5 w0")
        assert code == 0
        row = next(line for line in stdout.splitlines() if line.startswith("detuning"))
        _, plus, minus, _ = row.split()
        assert plus == minus == "6.150000e+08"

    def test_north_pole_minus_rows_zero(self, capsys):
        code, stdout, _ = run_cli(capsys, "point", "--rho", "1 w0")
        assert code == 0
        for label in ("sca minus", "dip minus"):
            line = next(l for l in stdout.splitlines() if l.startswith(label))
            values = [abs(float(v)) for v in line.split()[2:]]
            assert values == [0.0, 0.0, 0.0]

    def test_csv_row_matches_schema(self, capsys, tmp_path):
        out = tmp_path / "point.csv"
        code, _, _ = run_cli(capsys, "point", "--rho", "1 w0", "--csv", str(out))
        assert code == 0
        result = read_csv(out)
        assert len(result.rows) == 1
        assert result.header["kind"] == "point"

    def test_velocity_flags_enter_detuning(self, capsys):
        code, stdout, _ = run_cli(capsys, "point", "--rho", "1 w0", "--v-z", "1.0")
        assert code == 0
        row = next(line for line in stdout.splitlines() if line.startswith("detuning"))
        _, plus, _, _ = row.split()
        assert plus != "6.150000e+08"


class TestExitCodes:
    def test_config_error_is_1(self, capsys):
        code, _, stderr = run_cli(capsys, "profile", "--set", "mode.m=-1", "-o", "/dev/null")
        assert code == 1
        assert "config error" in stderr

    def test_io_error_is_2(self, capsys, tmp_path):
        missing = tmp_path / "no" / "such" / "dir" / "x.csv"
        code, _, stderr = run_cli(capsys, "profile", "--set", "sweep.samples=4", "-o", str(missing))
        assert code == 2
        assert "i/o error" in stderr

    def test_validation_failure_is_4(self, capsys):
        code, stdout, stderr = run_cli(capsys, "validate", "--hook-xi-dz-error", "1e-3")
        assert code == 4
        assert "FAIL" in stdout
        assert "worst offender" in stderr

    def test_validate_passes_clean(self, capsys):
        code, stdout, stderr = run_cli(capsys, "validate")
        assert code == 0
        assert stdout.count("PASS") == 17
        assert "all 17 checks passed" in stderr

    def test_starved_quadrature_message(self, capsys):
        code, stdout, _ = run_cli(capsys, "validate", "--hook-power-nodes", "8")
        assert code == 4
        assert "not converged" in stdout


class TestPresets:
    def test_lists_all_scenarios(self, capsys):
        code, stdout, _ = run_cli(capsys, "presets")
        assert code == 0
        for name in ("radial-profile", "theta-scan", "zplane-compare", "tight", "field-map"):
            assert name in stdout


class TestHelpSnapshot:
    def test_help_text_is_pinned(self, monkeypatch):
        monkeypatch.setenv("COLUMNS", "100")
        golden = (Path(__file__).parent / "data" / "help_main.txt").read_text()
        assert cli.build_parser().format_help() == golden


class TestArchitecture:
    def test_cli_contains_no_numeric_formulas(self):
        """The command layer must stay a shell: no arithmetic, no math libs."""
        source = inspect.getsource(cli)
        tree = ast.parse(source)
        imported = set()
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                imported.update(alias.name for alias in node.names)
            elif isinstance(node, ast.ImportFrom) and node.module:
                imported.add(node.module.split(".")[0])
        assert "math" not in imported
        assert "cmath" not in imported
        assert "numpy" not in imported
        binops = [node for node in ast.walk(tree) if isinstance(node, ast.BinOp)]
        assert binops == [], "cli.py must not compute anything"

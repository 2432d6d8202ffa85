import shutil
from pathlib import Path

import pytest

from vortexfigs import DatasetError, SchemaMismatchError, read_dataset, render
from vortexfigs.cli import main

DATA = Path(__file__).parent / "data"

RECIPE_TO_CSV = {
    "scattering-profile": DATA / "radial_profile.csv",
    "dipole-profile": DATA / "radial_profile.csv",
    "sphere-scan": DATA / "sphere_scan.csv",
    "focal-crossing": DATA / "focal_crossing.csv",
}


class TestReader:
    def test_reads_golden(self):
        data = read_dataset(RECIPE_TO_CSV["sphere-scan"])
        assert data.header["kind"] == "theta-scan"
        assert len(data.unique("theta_p_rad")) == 5
        assert len(data) == 480

    def test_select_filters_rows(self):
        data = read_dataset(RECIPE_TO_CSV["scattering-profile"])
        m2 = data.select(m=2.0)
        assert len(m2) == 96
        assert set(m2.columns["m"]) == {2.0}

    def test_schema_version_mismatch_refused(self, tmp_path):
        source = RECIPE_TO_CSV["scattering-profile"].read_text()
        bad = tmp_path / "bad.csv"
        bad.write_text(source.replace("schema_version = 1", "schema_version = 2"))
        with pytest.raises(SchemaMismatchError):
            read_dataset(bad)

    def test_missing_columns_reported_with_diff(self):
        data = read_dataset(RECIPE_TO_CSV["scattering-profile"])
        with pytest.raises(DatasetError, match="missing columns no_such .*present:"):
            data.require("no_such")

    def test_empty_rows_rejected(self, tmp_path):
        lines = RECIPE_TO_CSV["scattering-profile"].read_text().splitlines()
        header_only = [l for l in lines if l.startswith("#")] + [
            next(l for l in lines if not l.startswith("#"))
        ]
        empty = tmp_path / "empty.csv"
        empty.write_text("\n".join(header_only) + "\n")
        with pytest.raises(DatasetError, match="no rows"):
            read_dataset(empty)


@pytest.mark.parametrize("recipe", sorted(RECIPE_TO_CSV))
def test_recipe_renders_both_formats(tmp_path, recipe):
    written = render(recipe, RECIPE_TO_CSV[recipe], tmp_path)
    names = {p.name for p in written}
    assert names == {f"{recipe}.png", f"{recipe}.svg"}
    for path in written:
        assert path.stat().st_size > 10_000


@pytest.mark.parametrize("recipe", sorted(RECIPE_TO_CSV))
def test_axis_labels_carry_zeptonewton_units(tmp_path, recipe):
    written = render(recipe, RECIPE_TO_CSV[recipe], tmp_path, formats=("svg",))
    svg = written[0].read_text()
    assert "(zN)" in svg


def test_rerender_is_byte_identical(tmp_path):
    first = render("sphere-scan", RECIPE_TO_CSV["sphere-scan"], tmp_path / "a")
    second = render("sphere-scan", RECIPE_TO_CSV["sphere-scan"], tmp_path / "b")
    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes(), f"{a.name} differs between renders"


def test_rendering_leaves_input_untouched(tmp_path):
    source = RECIPE_TO_CSV["dipole-profile"]
    copy = tmp_path / source.name
    shutil.copy(source, copy)
    before = copy.read_bytes()
    render("dipole-profile", copy, tmp_path)
    assert copy.read_bytes() == before


class TestCli:
    def test_renders_and_lists_outputs(self, tmp_path, capsys):
        code = main(
            ["scattering-profile", str(RECIPE_TO_CSV["scattering-profile"]), "-o", str(tmp_path)]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "scattering-profile.png" in out and "scattering-profile.svg" in out

    def test_schema_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        code = main(["sphere-scan", str(bad), "-o", str(tmp_path)])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_wrong_dataset_for_recipe_fails_cleanly(self, tmp_path, capsys):
        # the field-map / profile confusion: a profile CSV lacks z planes
        code = main(
            ["focal-crossing", str(RECIPE_TO_CSV["scattering-profile"]), "-o", str(tmp_path)]
        )
        assert code == 1
        assert "both sides of the focus" in capsys.readouterr().err

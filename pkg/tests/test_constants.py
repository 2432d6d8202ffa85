import pytest

from vortexforce import CODATA2018, PhysicalConstants

from conftest import rel_err


def test_pinned_values():
    assert CODATA2018.c == 299792458.0
    assert rel_err(CODATA2018.hbar, 1.054571817e-34) < 1e-9
    assert rel_err(CODATA2018.mu0, 1.25663706212e-6) < 1e-15
    # derived permittivity agrees with the published figure
    assert rel_err(CODATA2018.eps0, 8.8541878128e-12) < 1e-10


def test_internal_consistency():
    residual = CODATA2018.c**2 * CODATA2018.mu0 * CODATA2018.eps0 - 1.0
    assert abs(residual) < 1e-15


def test_rejects_inconsistent_table():
    with pytest.raises(ValueError):
        PhysicalConstants(eps0=8.9e-12)
    with pytest.raises(ValueError):
        PhysicalConstants(c=-1.0)

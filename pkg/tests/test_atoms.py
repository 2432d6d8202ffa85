import math

import pytest

from vortexforce import (
    AtomSpec,
    CylPoint,
    DetuningSpec,
    TransitionPair,
    Velocity,
    dipole_moment_from_linewidth,
    dynamic_detuning,
    phase_gradient_pair,
    rabi_base,
    rabi_gradient,
    rabi_pair,
    saturation_pair,
    sodium_d2,
)

from conftest import GOLDEN, assert_close, make_mode, rel_err


class TestDipoleMoment:
    def test_linewidth_square_root_scaling(self):
        base = dipole_moment_from_linewidth(589e-9, 6.15e7)
        assert_close(dipole_moment_from_linewidth(589e-9, 4 * 6.15e7), 2.0 * base)

    def test_frozen_sodium_value(self):
        atom = sodium_d2()
        assert_close(atom.d_eg, GOLDEN["d_eg_sodium"])
        assert 1e-30 < atom.d_eg < 1e-28

    def test_rabi_comes_out_in_rad_per_s(self, sodium):
        # hbar * Omega must be an energy comparable to d_eg * E
        mode = make_mode(m=0)
        omega = rabi_base(mode, sodium, CylPoint(0.0))
        assert 1e8 < omega < 1e11

    def test_validation(self):
        with pytest.raises(ValueError):
            AtomSpec(wavelength=589e-9, gamma=-1.0, d_eg=1e-29)
        with pytest.raises(ValueError):
            dipole_moment_from_linewidth(-1e-9, 1e7)


class TestRabi:
    def test_vortex_core_dark(self, sodium):
        for m in (1, 2, 5):
            assert rabi_base(make_mode(m=m), sodium, CylPoint(0.0)) == 0.0

    def test_frozen_origin_value(self, sodium):
        assert_close(rabi_base(make_mode(m=0), sodium, CylPoint(0.0)), GOLDEN["omega_origin_m0_p0"])

    def test_peaks_at_ring(self, sodium):
        mode = make_mode(m=2)
        ring = mode.w0 * math.sqrt(1.0)
        at_ring = rabi_base(mode, sodium, CylPoint(ring))
        assert at_ring > rabi_base(mode, sodium, CylPoint(0.97 * ring))
        assert at_ring > rabi_base(mode, sodium, CylPoint(1.03 * ring))

    def test_scales_with_sqrt_power(self, sodium):
        pt = CylPoint(1e-6)
        low = rabi_base(make_mode(power=2.5e-6), sodium, pt)
        high = rabi_base(make_mode(power=1e-5), sodium, pt)
        assert_close(high, 2.0 * low)

    def test_pair_poles_and_equator(self, sodium):
        pt = CylPoint(2e-6)
        base = rabi_base(make_mode(m=2), sodium, pt)
        north = rabi_pair(make_mode(m=2, theta=0.0), sodium, pt)
        assert north.plus == base and north.minus == 0.0
        south = rabi_pair(make_mode(m=2, theta=math.pi), sodium, pt)
        assert south.plus == 0.0 and south.minus == base
        equator = rabi_pair(make_mode(m=2, theta=math.pi / 2), sodium, pt)
        assert equator.plus == equator.minus
        assert_close(equator.plus, base / math.sqrt(2.0))

    def test_independent_of_azimuths(self, sodium):
        ref = rabi_pair(make_mode(m=2, theta=1.0), sodium, CylPoint(2e-6, 0.0, 1e-6))
        for k in range(16):
            phi = 2 * math.pi * k / 16
            pair = rabi_pair(
                make_mode(m=2, theta=1.0, phi_p=phi), sodium, CylPoint(2e-6, phi, 1e-6)
            )
            assert pair.plus == ref.plus and pair.minus == ref.minus

    def test_pythagorean_sum(self, sodium):
        pt = CylPoint(1.3e-6, 0.0, 5e-6)
        for theta in (0.0, 0.4, math.pi / 2, 2.8, math.pi):
            mode = make_mode(m=1, theta=theta)
            pair = rabi_pair(mode, sodium, pt)
            base = rabi_base(mode, sodium, pt)
            assert rel_err(pair.plus**2 + pair.minus**2, base * base) < 1e-12

    def test_branch_swap(self, sodium):
        pt = CylPoint(1.1e-6)
        for theta in (0.0, math.pi / 2, math.pi):
            a = rabi_pair(make_mode(m=2, theta=theta), sodium, pt)
            b = rabi_pair(make_mode(m=2, theta=math.pi - theta), sodium, pt)
            assert a.plus == b.minus and a.minus == b.plus
        for theta in (0.3, 1.1, 2.4):
            a = rabi_pair(make_mode(m=2, theta=theta), sodium, pt)
            b = rabi_pair(make_mode(m=2, theta=math.pi - theta), sodium, pt)
            assert rel_err(a.plus, b.minus) < 1e-14
            assert rel_err(a.minus, b.plus) < 1e-14


class TestRabiGradient:
    def test_axial_derivative_zero_on_focal_plane(self, sodium):
        for m, rho in ((0, 0.5e-6), (2, 2e-6)):
            grad = rabi_gradient(make_mode(m=m), sodium, CylPoint(rho, 0.0, 0.0))
            assert grad.plus[1] == 0.0 and grad.minus[1] == 0.0

    def test_radial_derivative_zero_at_ring(self, sodium):
        mode = make_mode(m=2)
        ring = mode.w0 * math.sqrt(1.0)
        peak = abs(rabi_gradient(mode, sodium, CylPoint(0.3 * ring)).plus[0])
        at_ring = abs(rabi_gradient(mode, sodium, CylPoint(ring)).plus[0])
        assert at_ring < 1e-10 * peak

    def test_axis_limits(self, sodium):
        # |m| = 1: finite outward slope; |m| >= 2: flat
        g1 = rabi_gradient(make_mode(m=1), sodium, CylPoint(0.0)).plus[0]
        assert g1 > 0.0 and math.isfinite(g1)
        near = rabi_gradient(make_mode(m=1), sodium, CylPoint(1e-12)).plus[0]
        assert rel_err(g1, near) < 1e-5
        for m in (2, 5, 20):
            assert rabi_gradient(make_mode(m=m), sodium, CylPoint(0.0)).plus[0] == 0.0

    def test_matches_finite_differences(self, sodium):
        import random

        rng = random.Random(11)
        worst = 0.0
        for _ in range(60):
            mode = make_mode(
                m=rng.choice((0, 1, 2, 5)), p=rng.choice((0, 1)), theta=rng.uniform(0.1, 3.0)
            )
            rho = rng.uniform(0.05, 3.0) * mode.w0
            z = rng.choice((-1, 1)) * rng.uniform(1e-3, 2.0) * mode.rayleigh_range
            grad = rabi_gradient(mode, sodium, CylPoint(rho, 0.0, z))
            h_r, h_z = 1e-6 * mode.w0, 1e-6 * mode.rayleigh_range
            for branch in ("plus", "minus"):
                analytic = getattr(grad, branch)
                fd_r = (
                    getattr(rabi_pair(mode, sodium, CylPoint(rho + h_r, 0.0, z)), branch)
                    - getattr(rabi_pair(mode, sodium, CylPoint(rho - h_r, 0.0, z)), branch)
                ) / (2 * h_r)
                fd_z = (
                    getattr(rabi_pair(mode, sodium, CylPoint(rho, 0.0, z + h_z)), branch)
                    - getattr(rabi_pair(mode, sodium, CylPoint(rho, 0.0, z - h_z)), branch)
                ) / (2 * h_z)
                scale = max(abs(analytic[0]), abs(analytic[1]), abs(fd_r), abs(fd_z))
                if scale == 0.0:
                    continue
                worst = max(worst, abs(analytic[0] - fd_r) / scale, abs(analytic[1] - fd_z) / scale)
        assert worst < 1e-6


class TestSaturation:
    def test_dark_field_is_zero(self, sodium):
        sat = saturation_pair(TransitionPair(0.0, 0.0), sodium.gamma, sodium.gamma)
        assert sat.plus == 0.0 and sat.minus == 0.0

    def test_resonant_unit_saturation(self, sodium):
        omega = sodium.gamma / math.sqrt(2.0)
        sat = saturation_pair(TransitionPair(omega, omega), 0.0, sodium.gamma)
        assert_close(sat.plus, 1.0)

    def test_frozen_origin_value(self, sodium, detuning_10g):
        pair = rabi_pair(make_mode(m=0), sodium, CylPoint(0.0))
        sat = saturation_pair(pair, detuning_10g.delta0, sodium.gamma)
        assert_close(sat.plus, GOLDEN["saturation_origin_10g"])

    def test_branch_sum(self, sodium, detuning_10g):
        pt = CylPoint(1.5e-6)
        for theta in (0.0, 0.7, math.pi / 2, 2.9):
            mode = make_mode(m=2, theta=theta)
            sat = saturation_pair(rabi_pair(mode, sodium, pt), detuning_10g.delta0, sodium.gamma)
            base = rabi_base(mode, sodium, pt)
            total = saturation_pair(
                TransitionPair(base, 0.0), detuning_10g.delta0, sodium.gamma
            ).plus
            assert rel_err(sat.plus + sat.minus, total) < 1e-12

    def test_accepts_per_branch_detuning(self, sodium):
        rabi = TransitionPair(1e8, 1e8)
        sat = saturation_pair(rabi, TransitionPair(0.0, 1e9), sodium.gamma)
        assert sat.plus > sat.minus

    def test_monotone_in_power(self, sodium, detuning_10g):
        values = []
        for power in (2.5e-9, 2.5e-8, 2.5e-7, 2.5e-6):
            pair = rabi_pair(make_mode(m=2, theta=0.8, power=power), sodium, CylPoint(3e-6))
            values.append(saturation_pair(pair, detuning_10g.delta0, sodium.gamma))
        for lo, hi in zip(values, values[1:]):
            assert hi.plus > lo.plus and hi.minus > lo.minus


class TestDynamicDetuning:
    def test_at_rest_returns_static_detuning(self, sodium):
        det = DetuningSpec.in_linewidths(10.0, sodium)
        grads = phase_gradient_pair(make_mode(m=2), CylPoint(1e-6, 0.0, 2e-6))
        assert dynamic_detuning(det, grads.plus) == det.delta0
        assert dynamic_detuning(det, grads.minus) == det.delta0

    def test_axial_doppler_at_origin(self, sodium):
        # on axis, m = p = 0: shift is -v_z (k_z - 1/z_R)
        mode = make_mode(m=0, p=0)
        det = DetuningSpec(0.0, Velocity(v_z=1.0))
        grads = phase_gradient_pair(mode, CylPoint(0.0, 0.0, 0.0))
        assert_close(dynamic_detuning(det, grads.plus), -GOLDEN["kz_minus_inv_zr"])

    def test_azimuthal_doppler_is_branch_antisymmetric(self, sodium):
        mode = make_mode(m=2)
        rho = 1.5e-6
        det = DetuningSpec(0.0, Velocity(v_phi=2.0))
        grads = phase_gradient_pair(mode, CylPoint(rho, 0.0, 0.0))
        plus = dynamic_detuning(det, grads.plus)
        minus = dynamic_detuning(det, grads.minus)
        assert_close(plus, -2.0 * mode.m / rho)
        assert_close(minus, 2.0 * mode.m / rho)

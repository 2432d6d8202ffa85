from vortexforce import checks


def test_all_checks_pass():
    results = checks.run_all()
    failed = [r for r in results if not r.passed]
    assert not failed, "\n".join(r.line() for r in failed)


def test_suite_is_seed_stable():
    a = checks.run_all(seed=123)
    b = checks.run_all(seed=123)
    assert [(r.name, r.worst) for r in a] == [(r.name, r.worst) for r in b]


def test_perturbed_axial_phase_derivative_is_caught():
    results = {r.name: r for r in checks.run_all(xi_dz_perturbation=1e-3)}
    assert not results["phase-gradient-fd"].passed
    others = [r for name, r in results.items() if name != "phase-gradient-fd"]
    assert all(r.passed for r in others)


def test_starved_quadrature_is_caught():
    results = {r.name: r for r in checks.run_all(power_nodes=8)}
    power = results["power-recovery"]
    assert not power.passed
    assert "not converged" in power.detail

import math

import pytest

import qclone


def test_shrink_params_unit_sum():
    mu, nu = qclone.shrink_params("uc")
    assert nu * nu == pytest.approx(1.0 / 6.0, abs=1e-15)
    assert mu * mu + 2.0 * nu * nu == pytest.approx(1.0, abs=1e-15)


def test_ideal_fidelity_is_five_sixths():
    f = qclone.fidelity_closed_form("uc", 0.7, 0.0, 2.0)
    assert f == pytest.approx(5.0 / 6.0, abs=1e-12)
    g = qclone.fidelity_numeric("uc", 0.7, 1.3, 0.0, 2.0)
    assert abs(f - g) <= 1e-12


def test_closed_form_matches_pipeline_when_diluted():
    f = qclone.fidelity_closed_form("pcc", 1.1, 0.35, 0.8)
    g = qclone.fidelity_numeric("pcc", 1.1, 0.4, 0.35, 0.8)
    assert abs(f - g) <= 1e-12


def test_broadcast_werner_point():
    rho = qclone.broadcast_output("global-uc", 2.0**-0.5, 0.0, 1.0)
    verdict = qclone.is_entangled(rho)
    assert verdict["entangled"] is True
    assert verdict["negativity"] == pytest.approx(0.2, abs=1e-12)


def test_partial_trace_is_maximally_mixed():
    rho = qclone.broadcast_output("global-uc", 2.0**-0.5, 0.0, 1.0)
    reduced = qclone.partial_trace(rho, "A")
    assert reduced[0][0].real == pytest.approx(0.5, abs=1e-12)
    assert abs(reduced[0][1]) <= 1e-12


def test_thermal_xx_trace_one():
    rho = qclone.thermal_xx(1.0)
    tr = sum(rho[i][i].real for i in range(4))
    assert tr == pytest.approx(1.0, abs=1e-12)
    assert rho[1][2].real == pytest.approx(-0.23105857863000488, abs=1e-15)


def test_boundary_params_gamma_c():
    b = qclone.boundary_params(0.6, 2.0**-0.5, 1.0)
    assert b["gamma_c"] == pytest.approx(1.4927894250605615, abs=1e-12)


def test_classifier_matches_numeric_verdict():
    for alpha, eps, gamma in [(0.9, 0.1, 2.5), (-0.7, 0.6, 1.1), (0.4, 0.8, 4.0)]:
        table = qclone.classify_table1(0.6, alpha, gamma, eps)
        rho = qclone.broadcast_output("global-uc", alpha, eps, gamma)
        assert table == qclone.is_entangled(rho)["entangled"]


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        qclone.fidelity_closed_form("uc", 0.5, 1.5, 1.0)
    with pytest.raises(ValueError):
        qclone.thermal_xx(-0.1)


def test_uncovered_table_point_raises_lookup_error():
    with pytest.raises(LookupError):
        qclone.classify_table1(0.6, 0.0, 1.0, 0.5)


def test_fidelity_of_identical_states_is_one():
    rho = qclone.thermal_qubit(0.7)
    assert qclone.fidelity(rho, rho) == pytest.approx(1.0, abs=1e-12)


def test_singlet_negativity_is_half():
    singlet = qclone.alpha_singlet(2.0**-0.5)
    proj = [[a * b.conjugate() for b in singlet] for a in singlet]
    assert qclone.negativity(proj) == pytest.approx(0.5, abs=1e-12)
    assert math.isclose(
        qclone.min_eigenvalue(qclone.partial_transpose(proj, "A")), -0.5, abs_tol=1e-12
    )

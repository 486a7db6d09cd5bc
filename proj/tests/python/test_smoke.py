import math

import numpy as np
import pytest

import asymcont as ac


def test_phi_plus_measures():
    phi = ac.phi_plus()
    assert phi.dim_a == 2 and phi.dim_b == 2
    ln = ac.log_negativity(phi)
    assert ln.value == pytest.approx(1.0, abs=1e-12)
    assert ln.kind == "exact"
    assert ac.eof_2x2(phi).value == pytest.approx(1.0, abs=1e-12)
    assert ac.concurrence_2x2(phi) == pytest.approx(1.0, abs=1e-12)
    assert ac.is_ppt(phi)[0] is False


def test_matrix_round_trip_and_validation():
    m = np.eye(4, dtype=complex) / 4
    rho = ac.DensityMatrix(2, 2, m)
    assert np.allclose(rho.matrix, m)
    assert ac.log_negativity(rho).value == 0.0
    with pytest.raises(ac.InvalidState):
        ac.DensityMatrix(2, 2, 0.9 * m)
    with pytest.raises(ac.Error):
        ac.werner_state(1.5)


def test_werner_threshold():
    assert ac.is_ppt(ac.werner_state(0.3))[0]
    assert not ac.is_ppt(ac.werner_state(0.4))[0]
    assert ac.eof_2x2(ac.werner_state(0.3)).value == 0.0


def test_mixing_window_and_bound():
    w = ac.binomial_window(4, 0.5, 0.0)
    assert (w["lo"], w["hi"]) == (2, 2)
    assert w["tail_mass"] == pytest.approx(0.625, abs=1e-14)
    check = ac.verify_mixing_bound(ac.phi_plus(), ac.maximally_mixed(2, 2), 0.5, 3)
    assert check["pass"] and check["tail_mass"] == 0.0
    with pytest.raises(ac.SizeLimitError):
        ac.verify_mixing_bound(ac.phi_plus(), ac.maximally_mixed(2, 2), 0.5, 10)
    rows = ac.tail_mass_scan(0.5, [4, 10000])
    assert rows[1]["tail_mass"] < 1e-6


def test_protocols():
    assert ac.concentration_yield([0.5, 0.5], 2) == pytest.approx(0.25, abs=1e-15)
    scan = ac.eta_continuity_scan(ac.maximally_mixed(2, 2), [0.0, 1e-3])
    assert scan["rows"][1][1] == pytest.approx(0.98994404636529451, abs=1e-12)
    cat = ac.catalytic_rate(0.1, 0.5, 0.25)
    assert cat["factor"] == pytest.approx(0.8)


def test_continuity():
    assert ac.kappa(0.5, 0.5) == pytest.approx(1.0 / 3.0)
    c = ac.ball_constants(ac.werner_state(0.95), 1e-3, samples=50, seed=3)
    assert 0.0 < c["r"] < 1.0
    assert c["delta"] == pytest.approx(c["ec_max_upper"] * (1 - c["r"]) / c["r"])
    with pytest.raises(ac.BallNotCertified):
        ac.ball_constants(ac.werner_state(0.3), 1e-3, samples=5)


def test_state_file_round_trip(tmp_path):
    rho = ac.random_density(2, 3, seed=5)
    path = tmp_path / "state.json"
    ac.write_state_file(path, rho)
    back = ac.read_state_file(path)
    assert np.array_equal(back.matrix, rho.matrix)
    assert math.isclose(ac.trace_distance(rho, back), 0.0, abs_tol=1e-15)

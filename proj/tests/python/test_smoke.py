import numpy as np
import pytest

import skewtrace as st

RHO = np.diag([0.75, 0.25]).astype(complex)
A = np.array([[0, 1j], [-1j, 0]])
B = np.array([[0, 1], [1, 0]], dtype=complex)


def test_published_instance():
    u = st.wyd_U(RHO, A, 1 / 3) * st.wyd_U(RHO, B, 1 / 3)
    assert u == pytest.approx(0.22457296, abs=1e-6)
    report = st.reproduce_published_instance()
    assert report["all_pass"] is True


def test_compute_all_matches_single_quantities():
    q = st.compute_all(RHO, A, 1 / 3)
    assert q["I_alpha"] == pytest.approx(st.wyd_I(RHO, A, 1 / 3), rel=1e-11)
    assert q["V"] == pytest.approx(st.variance(RHO, A))
    assert q["J_alpha"] == pytest.approx(2 * q["V"] - q["I_alpha"], rel=1e-11)


def test_eigh_round_trip():
    h = st.random_observable(5, 3)
    values, vectors = st.eigh(h)
    assert np.all(np.diff(values) <= 0)
    np.testing.assert_allclose(vectors @ np.diag(values) @ vectors.conj().T, h, atol=1e-12)
    np.testing.assert_allclose(values, np.linalg.eigvalsh(h)[::-1], atol=1e-12)


def test_random_density_is_a_state():
    rho = st.random_density(4, 2, 7)
    assert np.trace(rho).real == pytest.approx(1.0)
    assert np.linalg.matrix_rank(rho, tol=1e-10) == 2
    np.testing.assert_array_equal(rho, st.random_density(4, 2, 7))


def test_checks_flag_only_conjectures():
    checks = st.check(RHO, A, B, 1 / 3)
    failing = {c["id"] for c in checks if not c["holds"]}
    assert failing == {"CONJ_2_10", "CONJ_W_RHS"}
    assert all(st.is_conjecture(i) for i in failing)


def test_errors_map_to_python_exceptions():
    with pytest.raises(st.NotPSD):
        st.density_matrix(np.diag([1.5, -0.5]))
    with pytest.raises(st.NotHermitian):
        st.wyd_I(RHO, np.array([[0, 1], [0, 0]], dtype=complex), 0.5)
    with pytest.raises(st.DomainError):
        st.wyd_I(RHO, A, 1.5)
    with pytest.raises(st.DimensionMismatch):
        st.wyd_I(RHO, np.eye(3), 0.5)
    with pytest.raises(ValueError):
        st.run_campaign(trials=0)


def test_campaign_is_deterministic():
    a = st.run_campaign(dims=[2, 3], trials=64, seed=9, threads=1)
    b = st.run_campaign(dims=[2, 3], trials=64, seed=9, threads=3)
    assert a == b
    assert a["theorem_violated"] is False


def test_search_records_replay():
    result = st.search_violations("CONJ_2_10", dims=[2, 3], trials=300, seed=1,
                                  alphas=[], alpha_draws=1, rank_policy="mixed-rank")
    assert result["violations"]
    for record in result["violations"]:
        stored = record["inequality"]["margin"]
        assert abs(st.replay_margin(record) - stored) <= 1e-12

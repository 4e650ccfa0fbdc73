import math

import numpy as np
import pytest

import tempora as tp

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)


def haar(rng, d):
    g = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / math.sqrt(2)
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / abs(np.diag(r)))


def test_swap_pdm():
    r = tp.pdm_bipartite_channel(I2 / 2, [I2])
    swap = np.eye(4)[[0, 2, 1, 3]]
    assert np.array_equal(r, swap / 2)
    assert np.linalg.eigvalsh(r).min() == pytest.approx(-0.5)


def test_pdm_from_correlations_matches_numpy():
    r = tp.pdm_from_correlations({"II": 1.0, "XX": 1.0, "YY": 1.0, "ZZ": 1.0})
    assert np.allclose(r, tp.pdm_bipartite_channel(I2 / 2, [I2]))


def test_pm_pdm_equivalence():
    rng = np.random.default_rng(5)
    slots = [("A_I", 2), ("A_O", 2), ("B_I", 2)]
    for _ in range(10):
        u = haar(rng, 2)
        w = tp.channel_process(I2 / 2, u)
        assert tp.validate_process_matrix(w, slots)["valid"]
        for i in range(1, 4):
            for j in range(1, 4):
                si = tp.pauli_matrix("IXYZ"[i])
                sj = tp.pauli_matrix("IXYZ"[j])
                half = 0.5 * np.trace(sj @ u @ si @ u.conj().T).real
                assert abs(tp.pm_pauli_correlation(w, slots, i, j) - half) < 1e-10


def test_choi_round_trip():
    rng = np.random.default_rng(6)
    u = haar(rng, 2)
    rho = np.array([[0.7, 0.2j], [-0.2j, 0.3]])
    assert np.allclose(tp.choi_apply(tp.choi([u]), rho), u @ rho @ u.conj().T)


def test_causal_demo():
    target = 5 / 16 * (1 + 1 / math.sqrt(2))
    for route in ("pm", "pdm"):
        r = tp.causal_demo(route)
        assert abs(r["gyni"] - target) < 1e-9
        assert not r["causal"]
    assert tp.count_causal_vertices(2, 2, 2, 2) == 112
    assert tp.is_causal(np.full((2, 2, 2, 2), 0.25))


def test_histories_and_otoc():
    rng = np.random.default_rng(7)
    u = haar(rng, 2)
    rho = np.diag([0.6, 0.4]).astype(complex)
    h = tp.correlation_from_histories(rho, [u], ["X", "Z"])
    assert abs(h - tp.temporal_correlation_pair(rho, [u], 1, 3)) < 1e-12
    d = tp.decoherence_matrix(rho, [u], ["X", "Z"])
    assert np.allclose(d, d.conj().T)
    assert tp.otoc_direct(X, Z, I2, I2 / 2) == pytest.approx(-1)
    p0 = np.diag([1.0, 0.0]).astype(complex)
    assert tp.otoc_via_pdm(p0, Z, I2, I2 / 2) == pytest.approx(0.5)


def test_games_and_oscillator():
    assert tp.chsh_classical_optimum() == 0.75
    phi = np.zeros((4, 4), dtype=complex)
    phi[np.ix_([0, 3], [0, 3])] = 0.5
    assert tp.chsh_quantum_value(phi) == pytest.approx(math.cos(math.pi / 8) ** 2)
    p = tp.OscParams()
    assert tp.closed_form_twopoint(p, 1.0, "amplitude") == pytest.approx(1.0820, abs=1e-4)
    assert tp.lattice_twopoint(p, 0.0, 1.0) > 0


def test_errors():
    with pytest.raises(tp.ImpossiblePostselection):
        tp.postselected_correlation(np.diag([1.0, 0]), [I2], 0, 0, np.diag([0, 1.0]))
    with pytest.raises(ValueError):
        tp.pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(tp.DimensionError):
        tp.choi_apply(np.eye(3), I2)


def test_verify_all():
    assert all(r["passed"] for r in tp.verify_all(seed=3))

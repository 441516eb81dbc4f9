import json
import math

import numpy as np
import pytest

import fockparity as fp


def test_hermite_low_orders():
    xi = 0.7 - 0.4j
    eta = -1.1 + 0.3j
    assert fp.hermite_mn(0, 0, xi, eta) == 1.0
    assert abs(fp.hermite_mn(1, 1, xi, eta) - (xi * eta - 1.0)) < 1e-14
    assert abs(fp.hermite_mn(2, 1, xi, eta) - (xi * xi * eta - 2.0 * xi)) < 1e-14


def test_states_shapes_and_norms():
    noon = fp.noon_state(2, 6)
    assert noon.shape == (36,)
    assert abs(np.linalg.norm(noon) - 1.0) < 1e-12

    coh = fp.coherent_state(1.0 + 0.0j, 30)
    assert abs(np.vdot(coh, coh).real - 1.0) < 1e-12

    sq = fp.squeezed_vacuum(0.5, 20)
    assert np.all(sq[1::2] == 0.0)


def test_projector_routes_agree():
    d = 8
    mu_sum = fp.mu_fock(0.0, d)
    mu_conj = fp.mu_conjugation(math.pi / 2, 0.0, d)
    assert fp.compare_projectors(mu_sum, mu_conj, d, d - 1) < 1e-10

    mu_eta = fp.mu_from_eta_quadrature(d, radius=6.0, step=0.1)
    assert fp.compare_projectors(mu_eta, fp.mu_fock(-math.pi / 2, d), d, 4) < 1e-6


def test_parity_signal_matches_closed_form():
    for phi in (0.0, 0.4, 1.7):
        sig = fp.parity_signal("noon:1", phase=phi, cutoff=8)
        assert abs(sig - (-math.sin(phi))) < 1e-10

    closed = fp.cs_sv_parity_closed(0.8 + 0.0j, 0.4, math.pi / 6)
    assert 0.0 < closed < 1.0


def test_phase_sweep_rows():
    rows = fp.phase_sweep("noon:2", 0.0, 2.0 * math.pi, 11, cutoff=8)
    assert len(rows) == 11
    for phi, signal, closed, abs_err, sensitivity in rows:
        assert abs(signal) <= 1.0 + 1e-8
        assert closed is not None and abs_err is not None
        assert abs_err < 1e-8


def test_gaussian_closed_forms():
    assert abs(fp.gauss1d_closed(1.0 + 0j, 0.0 + 0j) - math.sqrt(math.pi)) < 1e-14
    assert abs(fp.gauss2d_closed(-1.0 + 0j, 1.0 + 0j, 1.0 + 0j) - math.e) < 1e-14
    with pytest.raises(Exception):
        fp.gauss2d_closed(0.5 + 0j, 0j, 0j)


def test_verify_suite_json():
    report = json.loads(fp.verify_json("hermite"))
    assert report["suite"] == "hermite"
    assert report["failed"] == 0

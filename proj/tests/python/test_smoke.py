"""Smoke tests for the python bindings, cross-checked against numpy."""

import numpy as np
import pytest

import rindler as R


def ptrace(rho, keep):
    r = np.asarray(rho).reshape(2, 2, 2, 2)
    return np.einsum("ikjk->ij", r) if keep == 0 else np.einsum("kikj->ij", r)


def test_version():
    assert R.__version__


def test_bell_point_measures():
    bell = R.pseudo_entangled(1.0)
    assert R.log_negativity(bell) == pytest.approx(1.0, abs=1e-10)
    assert R.concurrence(bell) == pytest.approx(1.0, abs=1e-9)
    assert R.entanglement_of_formation(bell) == pytest.approx(1.0, abs=1e-9)
    d = R.discord(bell)
    assert d["discord"] == pytest.approx(1.0, abs=1e-9)
    assert d["mutual_information"] == pytest.approx(2.0, abs=1e-9)


def test_channel_reductions_match_numpy_partial_trace():
    p, r = 0.6, 0.5
    tri = np.asarray(R.unruh_channel(R.pseudo_entangled(p), r, "second"))
    assert tri.shape == (8, 8)
    assert np.trace(tri).real == pytest.approx(1.0, abs=1e-12)

    t = tri.reshape(2, 2, 2, 2, 2, 2)
    ai = np.einsum("abkcdk->abcd", t).reshape(4, 4)
    assert np.max(np.abs(ai - np.asarray(R.rho_ai(p, r)))) < 1e-12
    aii = np.einsum("akbckd->abcd", t).reshape(4, 4)
    assert np.max(np.abs(aii - np.asarray(R.rho_aii(p, r)))) < 1e-12


def test_eigenvalues_against_numpy():
    m = np.asarray(R.rho_aii(0.5, np.pi / 6))
    mine = R.hermitian_eigenvalues(m)
    ref = sorted(np.linalg.eigvalsh(m), reverse=True)
    assert np.max(np.abs(np.array(mine) - np.array(ref))) < 1e-12
    spectra = sorted(R.closed_form_spectra("AII", 0.5, np.pi / 6), reverse=True)
    assert np.max(np.abs(np.array(spectra) - np.array(ref))) < 1e-10


def test_partial_transpose_and_entropy():
    rho = np.asarray(R.pseudo_entangled(1.0 / 3.0))
    pt = np.asarray(R.partial_transpose(rho, [2, 2], 1))
    assert min(np.linalg.eigvalsh(pt)) == pytest.approx(0.0, abs=1e-12)
    assert R.von_neumann_entropy(np.eye(2, dtype=complex) / 2) == pytest.approx(1.0)
    assert np.max(np.abs(np.asarray(R.partial_trace(rho, [2, 2], [1])) - ptrace(rho, 1))) < 1e-14


def test_thresholds():
    assert R.critical_p(0.0, "AI") == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert R.critical_p(np.pi / 4, "AI") == pytest.approx(3.0 / 7.0, abs=1e-9)
    assert R.critical_p(0.0, "AII") is None
    cr = R.critical_r(0.4)
    assert cr["kind"] == "threshold"
    assert 0.0 < cr["r"] < np.pi / 4


def test_discord_directions_and_oracle():
    rho = R.rho_ai(0.7, 0.5)
    d2 = R.discord(rho, "second")
    d1 = R.discord(rho, "first")
    assert abs(d2["discord"] - d1["discord"]) > 1e-4
    o2 = R.oracle_discord(rho, "second")
    assert d2["discord"] == pytest.approx(o2["discord"], abs=1e-6)
    assert d2["method"] == "xstate_fast"
    assert o2["method"] == "oracle"


def test_extremal_beta():
    beta, gap = R.extremal_beta(np.pi / 4)
    assert beta == pytest.approx(0.80, abs=0.01)
    assert gap > 0.1


def test_domain_errors():
    with pytest.raises(Exception):
        R.pseudo_entangled(1.5)
    with pytest.raises(Exception):
        R.acceleration_to_r(-1.0, 1.0)

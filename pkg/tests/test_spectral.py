"""Fourier-domain route: transfer matrices, eigensystems, exact evolution."""

import math

import numpy as np
import pytest

from qwalk import (
    DomainError,
    dispersion,
    distribution,
    eigensystem,
    evolve_line,
    evolve_spectral,
    fourier_amplitudes,
    hadamard_coin,
    initial_state,
    theta_coin,
    transfer_matrix,
)

SQRT2 = math.sqrt(2)


def test_transfer_matrix_is_unitary_everywhere():
    rng = np.random.default_rng(3)
    for coin in (hadamard_coin(), theta_coin(0.7), theta_coin(2.4)):
        for k in rng.uniform(-math.pi, math.pi, 100):
            m = transfer_matrix(coin, k).matrix
            assert np.max(np.abs(m.conj().T @ m - np.eye(2))) < 1e-14


def test_hadamard_transfer_matrix_entries():
    k = 0.37
    m = transfer_matrix(hadamard_coin(), k).matrix
    expect = np.array(
        [[np.exp(-1j * k), np.exp(-1j * k)], [np.exp(1j * k), -np.exp(1j * k)]]
    ) / SQRT2
    assert np.max(np.abs(m - expect)) < 1e-15


def test_dispersion_hadamard_branch():
    coin = hadamard_coin()
    assert dispersion(coin, 0.0) == pytest.approx(0.0)
    assert dispersion(coin, math.pi / 2) == pytest.approx(math.pi / 4)
    assert dispersion(coin, -math.pi / 2) == pytest.approx(-math.pi / 4)
    ks = np.linspace(-math.pi, math.pi, 41)
    assert np.allclose(np.sin(dispersion(coin, ks)), np.sin(ks) / SQRT2)


def test_dispersion_theta_branch():
    coin = theta_coin(1.1)
    ks = np.linspace(-math.pi, math.pi, 41)
    w = dispersion(coin, ks)
    assert np.all((0 <= w) & (w <= math.pi))
    assert np.allclose(np.cos(w), math.cos(0.55) * np.cos(ks))


def test_eigensystem_hadamard_quarter_pi():
    coin = hadamard_coin()
    dec = eigensystem(transfer_matrix(coin, math.pi / 2), coin)
    assert dec.omega == pytest.approx(math.pi / 4)
    assert dec.eigenvalues[0] == pytest.approx(np.exp(-1j * math.pi / 4))
    assert dec.eigenvalues[1] == pytest.approx(np.exp(1j * (math.pi + math.pi / 4)))


def test_eigensystem_theta_branch_order():
    coin = theta_coin(2.0)
    for k in (0.0, 0.9, -2.2):
        dec = eigensystem(transfer_matrix(coin, k), coin)
        assert dec.eigenvalues[0] == pytest.approx(np.exp(1j * dec.omega))
        assert dec.eigenvalues[1] == pytest.approx(np.exp(-1j * dec.omega))


def test_eigensystem_reconstructs_matrix():
    rng = np.random.default_rng(5)
    for coin in (hadamard_coin(), theta_coin(0.4), theta_coin(3.0)):
        for k in rng.uniform(-math.pi, math.pi, 100):
            tm = transfer_matrix(coin, k)
            dec = eigensystem(tm, coin)
            v, lam = dec.eigenvectors, dec.eigenvalues
            assert np.max(np.abs(v.conj().T @ v - np.eye(2))) < 1e-12
            rebuilt = v @ np.diag(lam) @ v.conj().T
            assert np.max(np.abs(rebuilt - tm.matrix)) < 1e-12
            assert np.max(np.abs(tm.matrix @ v - v * lam)) < 1e-12


def test_eigensystem_degenerate_identity_coin():
    coin = theta_coin(0.0)
    dec = eigensystem(transfer_matrix(coin, 0.0), coin)
    assert dec.degenerate
    assert np.allclose(np.abs(dec.eigenvalues), 1.0)


def test_fourier_amplitudes_identity_at_t0():
    init = np.array([0.6, 0.8j])
    out = fourier_amplitudes(hadamard_coin(), init, 1.234, 0)
    assert np.max(np.abs(out - init)) < 1e-13


def test_fourier_amplitudes_one_step_left_start():
    # one step from (1, 0): psi~(k, 1) = (e^{-ik}, e^{ik}) / sqrt2
    for k in (0.0, 0.8, -2.5):
        out = fourier_amplitudes(hadamard_coin(), np.array([1.0, 0.0]), k, 1)
        expect = np.array([np.exp(-1j * k), np.exp(1j * k)]) / SQRT2
        assert np.max(np.abs(out - expect)) < 1e-13


def test_fourier_amplitudes_match_closed_form():
    # independent closed form for M_k^t (1, 0)^T in terms of the
    # dispersion angle w with sin w = sin k / sqrt2
    coin = hadamard_coin()
    for k in (0.3, 1.1, -2.0, 2.9):
        w = math.asin(math.sin(k) / SQRT2)
        cosw = math.cos(k) / math.sqrt(1 + math.cos(k) ** 2)
        for t in (1, 2, 7, 40):
            el = 0.5 * (1 + cosw) * np.exp(-1j * w * t) + (
                (-1) ** t / 2
            ) * (1 - cosw) * np.exp(1j * w * t)
            er = (
                np.exp(1j * k)
                / (2 * math.sqrt(1 + math.cos(k) ** 2))
                * (np.exp(-1j * w * t) - (-1) ** t * np.exp(1j * w * t))
            )
            out = fourier_amplitudes(coin, np.array([1.0, 0.0]), k, t)
            assert np.max(np.abs(out - np.array([el, er]))) < 1e-12


def test_fourier_amplitudes_rejects_unnormalised_init():
    with pytest.raises(DomainError):
        fourier_amplitudes(hadamard_coin(), np.array([1.0, 1.0]), 0.0, 1)


@pytest.mark.parametrize("coin_key", ["hadamard", 0.9, 2.6])
@pytest.mark.parametrize("init", ["left", "symmetric"])
def test_spectral_matches_direct_evolution(coin_key, init):
    coin = hadamard_coin() if coin_key == "hadamard" else theta_coin(coin_key)
    psi0 = initial_state(init)
    t = 60
    a = evolve_line(psi0, coin, t)
    b = evolve_spectral(psi0, coin, t)
    assert b.time == t
    assert np.array_equal(a.sites, b.sites)
    assert np.max(np.abs(a.amplitudes - b.amplitudes)) < 1e-12


def test_spectral_identity_coin_point_mass():
    psi = evolve_spectral(initial_state("left"), theta_coin(0.0), 7)
    d = distribution(psi)
    by_site = dict(zip(d.sites.tolist(), d.masses.tolist()))
    assert by_site[-7] == pytest.approx(1.0, abs=1e-12)


def test_spectral_norm_is_exact():
    psi = evolve_spectral(initial_state("symmetric"), hadamard_coin(), 128)
    assert abs(psi.norm() - 1.0) < 1e-12


def test_spectral_oversampling_changes_nothing():
    psi0 = initial_state("left")
    a = evolve_spectral(psi0, hadamard_coin(), 20)
    b = evolve_spectral(psi0, hadamard_coin(), 20, n_samples=137)
    by_a = dict(zip(a.sites.tolist(), a.amplitudes))
    by_b = dict(zip(b.sites.tolist(), b.amplitudes))
    for s in by_a:
        assert np.max(np.abs(by_a[s] - by_b[s])) < 1e-12


def test_spectral_rejects_undersampling():
    with pytest.raises(DomainError):
        evolve_spectral(initial_state("left"), hadamard_coin(), 20, n_samples=11)


def test_spectral_rejects_circle_and_negative_t():
    from qwalk import Circle

    with pytest.raises(DomainError):
        evolve_spectral(initial_state("left", Circle(5)), hadamard_coin(), 3)
    with pytest.raises(DomainError):
        evolve_spectral(initial_state("left"), hadamard_coin(), -1)

"""Direct recurrence evolution on the line and circle."""

import math

import numpy as np
import pytest

from qwalk import (
    Circle,
    DomainError,
    Line,
    distribution,
    evolve_circle,
    evolve_line,
    hadamard_coin,
    initial_state,
    theta_coin,
)

SQRT2 = math.sqrt(2)


def test_single_step_from_left():
    psi = evolve_line(initial_state("left"), hadamard_coin(), 1)
    assert psi.time == 1
    assert psi.topology.offset == -1
    # site -1 carries (1/sqrt2, 0); site +1 carries (0, 1/sqrt2)
    assert np.allclose(psi.amplitudes[0], [1 / SQRT2, 0])
    assert np.allclose(psi.amplitudes[1], [0, 0])
    assert np.allclose(psi.amplitudes[2], [0, 1 / SQRT2])


def test_two_step_probabilities_from_left():
    psi = evolve_line(initial_state("left"), hadamard_coin(), 2)
    d = distribution(psi)
    assert np.allclose(d.sites, [-2, -1, 0, 1, 2])
    assert np.allclose(d.masses, [0.25, 0.0, 0.5, 0.0, 0.25])


def test_three_step_asymmetry_from_left():
    d = distribution(evolve_line(initial_state("left"), hadamard_coin(), 3))
    by_site = dict(zip(d.sites.tolist(), d.masses.tolist()))
    assert by_site[-3] == pytest.approx(1 / 8)
    assert by_site[-1] == pytest.approx(5 / 8)
    assert by_site[1] == pytest.approx(1 / 8)
    assert by_site[3] == pytest.approx(1 / 8)


def test_identity_coin_moves_ballistically_left():
    d = distribution(evolve_line(initial_state("left"), theta_coin(0.0), 40))
    by_site = dict(zip(d.sites.tolist(), d.masses.tolist()))
    assert by_site[-40] == pytest.approx(1.0)


def test_antidiagonal_coin_confines_the_walker():
    # theta = pi swaps chirality every step: support never leaves {-1, 0, 1}
    psi = evolve_line(initial_state("left"), theta_coin(math.pi), 25)
    d = distribution(psi)
    live = d.sites[d.masses > 1e-15]
    assert set(live.tolist()) <= {-1, 0, 1}


def test_norm_conserved_along_the_walk():
    psi = initial_state("symmetric")
    coin = hadamard_coin()
    for _ in range(300):
        psi = evolve_line(psi, coin, 1)
        assert abs(psi.norm() - 1.0) < 1e-12


def test_parity_forbidden_sites_are_exact_zeros():
    psi = evolve_line(initial_state("left"), hadamard_coin(), 101)
    odd = (psi.sites + 101) % 2 == 1
    assert np.all(psi.amplitudes[odd] == 0.0)


def test_adjoint_reverses_evolution():
    psi0 = initial_state("symmetric")
    coin = hadamard_coin()
    fwd = evolve_line(psi0, coin, 200)
    back = evolve_line(fwd, coin, 200, adjoint=True)
    assert back.time == 0
    by_site = dict(zip(back.sites.tolist(), back.amplitudes))
    assert np.max(np.abs(by_site[0] - psi0.amplitudes[0])) < 1e-12
    others = np.array([a for s, a in by_site.items() if s != 0])
    assert np.max(np.abs(others)) < 1e-12


def test_adjoint_cannot_rewind_past_origin():
    psi = evolve_line(initial_state("left"), hadamard_coin(), 3)
    with pytest.raises(DomainError):
        evolve_line(psi, hadamard_coin(), 4, adjoint=True)


def test_negative_steps_rejected():
    with pytest.raises(DomainError):
        evolve_line(initial_state("left"), hadamard_coin(), -1)


def test_topology_mismatch_rejected():
    with pytest.raises(DomainError):
        evolve_line(initial_state("left", Circle(5)), hadamard_coin(), 1)
    with pytest.raises(DomainError):
        evolve_circle(initial_state("left"), hadamard_coin(), 1)


def test_circle_single_step():
    psi = evolve_circle(initial_state("left", Circle(9)), hadamard_coin(), 1)
    assert np.allclose(psi.amplitudes[1], [0, 1 / SQRT2])
    assert np.allclose(psi.amplitudes[8], [1 / SQRT2, 0])


def test_circle_matches_folded_line():
    # before wraparound interference the circle walk is the line walk mod n
    n, t = 31, 14
    coin = hadamard_coin()
    line = evolve_line(initial_state("symmetric"), coin, t)
    circ = evolve_circle(initial_state("symmetric", Circle(n)), coin, t)
    folded = np.zeros((n, 2), dtype=np.complex128)
    for site, amp in zip(line.sites.tolist(), line.amplitudes):
        folded[site % n] += amp
    assert np.max(np.abs(folded - circ.amplitudes)) < 1e-13


def test_circle_wraps_after_half_size():
    # beyond n/2 steps the fold produces genuine interference, norm stays 1
    psi = evolve_circle(initial_state("left", Circle(5)), hadamard_coin(), 10)
    assert abs(psi.norm() - 1.0) < 1e-12


def test_distribution_normalises_and_sites_align():
    psi = evolve_line(initial_state("left"), hadamard_coin(), 100)
    d = distribution(psi)
    assert d.masses.sum() == pytest.approx(1.0, abs=1e-12)
    assert d.sites[0] == -100 and d.sites[-1] == 100
    assert np.all(d.masses >= 0)

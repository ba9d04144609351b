"""Exact Fourier-domain solution of the walk.

Translation invariance makes one step diagonal in wavenumber: the
transform ``psi~(k) = sum_n psi(n) e^{ikn}`` evolves by the 2x2 unitary
transfer matrix ``M_k = e^{ik} M+ + e^{-ik} M-``, so ``psi~(k, t)
= M_k^t psi~(k, 0)``.  Powers are taken through the eigendecomposition
(two scalar phases), never by repeated multiplication.  Sampling k at
``N >= 2t + support`` equally spaced points and inverting the discrete
transform is *exact*: the t-step wavefunction fits in any window of N
consecutive sites, so the sampling incurs no aliasing.

This module is the independent oracle for :mod:`qwalk.evolve`.

Two dispersion-branch conventions coexist on purpose, each tied to its
coin label: the Hadamard branch has ``sin w_k = sin k / sqrt2`` with
``w_k in [-pi/2, pi/2]`` and eigenvalues ``e^{-i w_k}, e^{i(pi+w_k)}``;
the theta-family branch has ``cos w_k = cos(theta/2) cos k`` with
``w_k in [0, pi]`` and eigenvalues ``e^{+-i w_k}``.  Only
branch-invariant quantities (eigenvalue sets, |w''|) agree across the
two conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .core import (
    CoinOperator,
    DomainError,
    Line,
    WaveFunction,
    step_matrices,
)

__all__ = [
    "TransferMatrix",
    "SpectralDecomposition",
    "transfer_matrix",
    "dispersion",
    "eigensystem",
    "fourier_amplitudes",
    "evolve_spectral",
]


@dataclass(frozen=True)
class TransferMatrix:
    """The one-step Fourier-domain matrix at wavenumber ``k``."""

    k: float
    matrix: NDArray[np.complex128]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenpairs of a transfer matrix plus the branch dispersion angle.

    ``eigenvalues[i]`` pairs with column ``eigenvectors[:, i]``; both
    eigenvalues have unit modulus and the eigenvectors are orthonormal.
    """

    k: float
    omega: float
    eigenvalues: NDArray[np.complex128]
    eigenvectors: NDArray[np.complex128]
    degenerate: bool = False


def transfer_matrix(coin: CoinOperator, k: float) -> TransferMatrix:
    """Build ``M_k = e^{ik} M+ + e^{-ik} M-`` for one wavenumber."""
    sm = step_matrices(coin)
    m = np.exp(1j * k) * sm.m_plus + np.exp(-1j * k) * sm.m_minus
    return TransferMatrix(k=float(k), matrix=m)


def dispersion(coin: CoinOperator, k: float | np.ndarray) -> float | np.ndarray:
    """Dispersion angle ``w_k`` on the branch belonging to the coin label.

    Hadamard label: ``arcsin(sin k / sqrt2)`` in [-pi/2, pi/2].
    Theta label: ``arccos(cos(theta/2) cos k)`` in [0, pi].
    """
    if coin.label == "hadamard":
        return np.arcsin(np.sin(k) / math.sqrt(2))
    return np.arccos(np.clip(math.cos(coin.theta / 2) * np.cos(k), -1.0, 1.0))


def _eig_unitary_2x2(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and orthonormal eigenvector columns of 2x2 unitaries.

    ``m`` has shape (..., 2, 2).  Closed-form quadratic solve; the
    (near-)diagonal case, where the generic null-space formula loses
    accuracy, falls back to the standard basis.  A unitary matrix with
    a repeated eigenvalue is a scalar multiple of the identity, so the
    fallback also covers every genuinely degenerate case.
    """
    a, b = m[..., 0, 0], m[..., 0, 1]
    c, d = m[..., 1, 0], m[..., 1, 1]
    tr = a + d
    disc = np.sqrt((a - d) ** 2 + 4 * b * c + 0j)
    lam1 = (tr + disc) / 2
    lam2 = (tr - disc) / 2

    # Null-space vector of (m - lam), taken from the better-conditioned row.
    use_b = np.abs(b) >= np.abs(c)
    v1 = np.where(use_b[..., None],
                  np.stack([b, lam1 - a], axis=-1),
                  np.stack([lam1 - d, c], axis=-1))
    v2 = np.where(use_b[..., None],
                  np.stack([b, lam2 - a], axis=-1),
                  np.stack([lam2 - d, c], axis=-1))

    diag = (np.abs(b) < 1e-14) & (np.abs(c) < 1e-14)
    if np.any(diag):
        e1 = np.array([1.0, 0.0], dtype=np.complex128)
        e2 = np.array([0.0, 1.0], dtype=np.complex128)
        v1 = np.where(diag[..., None], e1, v1)
        v2 = np.where(diag[..., None], e2, v2)
        lam1 = np.where(diag, a, lam1)
        lam2 = np.where(diag, d, lam2)

    v1 = v1 / np.linalg.norm(v1, axis=-1, keepdims=True)
    v2 = v2 / np.linalg.norm(v2, axis=-1, keepdims=True)
    lams = np.stack([lam1, lam2], axis=-1)
    vecs = np.stack([v1, v2], axis=-1)  # columns are eigenvectors
    return lams, vecs


def eigensystem(tm: TransferMatrix, coin: CoinOperator) -> SpectralDecomposition:
    """Eigendecomposition of ``M_k`` ordered to match the branch convention.

    For the Hadamard label the first eigenvalue is ``e^{-i w_k}`` and
    the second ``e^{i(pi + w_k)}``; for the theta label they are
    ``e^{+i w}`` then ``e^{-i w}``.
    """
    lams, vecs = _eig_unitary_2x2(tm.matrix)
    omega = float(dispersion(coin, tm.k))
    if coin.label == "hadamard":
        expected = np.exp(-1j * omega)
    else:
        expected = np.exp(1j * omega)
    if abs(lams[1] - expected) < abs(lams[0] - expected):
        lams = lams[::-1]
        vecs = vecs[:, ::-1]
    degenerate = bool(abs(lams[0] - lams[1]) < 1e-12)
    return SpectralDecomposition(
        k=tm.k, omega=omega, eigenvalues=lams, eigenvectors=vecs,
        degenerate=degenerate,
    )


def _propagate(m: np.ndarray, init: np.ndarray, t: int) -> np.ndarray:
    """Apply ``M^t`` through the eigendecomposition.

    ``m``: (..., 2, 2) unitaries, ``init``: (..., 2) vectors.  The
    scalar powers use ``exp(i t arg(lambda))``, exact for unit-modulus
    eigenvalues at any t.
    """
    lams, vecs = _eig_unitary_2x2(m)
    coeffs = np.einsum("...ji,...j->...i", vecs.conj(), init)
    powers = np.exp(1j * t * np.angle(lams))
    return np.einsum("...ij,...j->...i", vecs, coeffs * powers)


def fourier_amplitudes(
    coin: CoinOperator,
    init: NDArray[np.complex128],
    k: float,
    t: int,
) -> NDArray[np.complex128]:
    """``M_k^t`` applied to a unit chirality pair, via the eigensystem."""
    init = np.asarray(init, dtype=np.complex128)
    if abs(np.linalg.norm(init) - 1.0) > 1e-12:
        raise DomainError("init must have unit norm")
    return _propagate(transfer_matrix(coin, k).matrix, init, t)


def _grid_size(width: int, t: int, n_samples: int | None) -> int:
    need = width + 2 * t
    n = need + (need % 2)  # round up to even
    if n_samples is not None:
        if n_samples < need:
            raise DomainError(f"need at least {need} k-samples, got {n_samples}")
        n = n_samples
    return n

def evolve_spectral(
    init: WaveFunction,
    coin: CoinOperator,
    t: int,
    n_samples: int | None = None,
) -> WaveFunction:
    """Evolve a line wavefunction ``t`` steps in the Fourier domain.

    Samples ``N`` equally spaced wavenumbers ``k_j = -pi + 2 pi j / N``
    (``N`` = support + 2t rounded up to even unless overridden), applies
    the eigendecomposed ``M_k^t`` at each, and inverts the discrete
    transform over the output support.  The result is exact up to
    round-off and must agree with :func:`qwalk.evolve.evolve_line`.

    The assembly sums over the k-grid in index order (a fixed dot
    product), so results are reproducible bit-for-bit.
    """
    if not isinstance(init.topology, Line):
        raise DomainError("evolve_spectral needs line topology")
    if t < 0:
        raise DomainError("t must be nonnegative")

    amps = init.amplitudes
    width = amps.shape[0]
    n = _grid_size(width, t, n_samples)
    k = -math.pi + 2 * math.pi * np.arange(n) / n

    in_sites = init.sites
    # forward transform of the (finite) support
    phases = np.exp(1j * np.outer(k, in_sites))  # (N, width)
    psi_k0 = phases @ amps  # (N, 2)

    sm = step_matrices(coin)
    mk = (np.exp(1j * k)[:, None, None] * sm.m_plus
          + np.exp(-1j * k)[:, None, None] * sm.m_minus)
    psi_kt = _propagate(mk, psi_k0, t)

    out_sites = np.arange(in_sites[0] - t, in_sites[-1] + t + 1)
    inv = np.exp(-1j * np.outer(out_sites, k))  # (n_out, N)
    out = (inv @ psi_kt) / n
    return WaveFunction(Line(offset=int(out_sites[0])), out, init.time + t)

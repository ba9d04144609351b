"""Stationary-phase closed forms for the large-time wavefunction.

At scaled position ``alpha = n/t`` the inverse-transform integrals are
dominated by the stationary points of the phase ``-(w_k + alpha k)``.
Inside the propagation cone ``|alpha| < cos(theta/2)`` this yields a
``1/sqrt(t)`` wavefunction with an explicit oscillatory structure; at
the cone edges the stationary point degenerates to third order and the
amplitude drops to ``t^{-1/3}`` (the frontier peaks); outside, the
amplitude decays faster than any inverse polynomial.

All interior formulas refuse evaluation within ``epsilon`` of the edge:
the ``O(t^{-2/3})``-wide transition profile there is deliberately
unmodeled, and the leading curvature term blows up as ``w'' -> 0``.

Two stationary-point branches are provided, matching the two dispersion
conventions of :mod:`qwalk.spectral`: the Hadamard branch with
``k_alpha in [0, pi]`` (``cos k_alpha = -alpha / sqrt(1 - alpha^2)``)
and the general-theta branch with ``k_alpha in [-pi/2, pi/2]``
(``sin k_alpha = alpha tan(theta/2) / sqrt(1 - alpha^2)``).  Only
branch-invariant quantities (|w''|, eigenvalue sets) coincide.

A note on the oscillatory probability formula: expanding the probability
as |psi_L|^2 + |psi_R|^2 is consistent with the right-chirality envelope
``sqrt(1 - alpha^2) cos(phi t + k_alpha + pi/4)`` (equivalently
``-alpha cos(.) - sqrt(1 - 2 alpha^2) sin(.)``); this rendering is the
one validated against the exact walk and is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError

__all__ = [
    "AsymptoticModel",
    "StationaryPointData",
    "stationary_point",
    "p_asymptotic",
    "p_slow",
    "density",
    "density_moment",
    "density_integral",
    "frontier_peak",
    "asymptotic_wavefunction",
]

SQRT2 = math.sqrt(2)
HADAMARD = "hadamard"

#: Default interior margin (in alpha units) before the cone edge.
DEFAULT_EPSILON = 0.02

#: Panels of the composite Simpson rule used for density quadrature.
QUADRATURE_PANELS = 2000


def support_edge(theta: float | str) -> float:
    """Edge velocity ``cos(theta/2)`` of the propagation cone."""
    if theta == HADAMARD:
        return 1 / SQRT2
    return math.cos(float(theta) / 2)


@dataclass(frozen=True)
class StationaryPointData:
    """Stationary point of the inverse-transform phase at one alpha.

    ``curvature`` is ``|w''|`` at the stationary point; ``phase`` is the
    stationary value of the branch phase (for the Hadamard branch,
    ``phi(alpha) = -(w_{k_alpha} + alpha k_alpha)``).
    """

    alpha: float
    k_alpha: float
    phase: float
    curvature: float


def _require_interior(alpha: float, theta: float | str, epsilon: float) -> None:
    edge = support_edge(theta)
    if abs(alpha) > edge - epsilon:
        raise DomainError(
            f"|alpha| = {abs(alpha):.6g} is within {epsilon} of the cone edge "
            f"{edge:.6g}; the transition region is unmodeled"
        )


def stationary_point(alpha: float, theta: float | str = HADAMARD) -> StationaryPointData:
    """Solve the stationary-phase condition at scaled position ``alpha``.

    Requires ``|alpha| < cos(theta/2)`` strictly (use the frontier/decay
    results otherwise).
    """
    edge = support_edge(theta)
    if abs(alpha) >= edge:
        raise DomainError(f"stationary point needs |alpha| < {edge:.6g}")
    r = alpha / math.sqrt(1 - alpha * alpha)
    if theta == HADAMARD:
        k = math.acos(-r)  # [0, pi]
        w = math.asin(math.sin(k) / SQRT2)
        phase = -(w + alpha * k)
        curv = (1 - alpha * alpha) * math.sqrt(1 - 2 * alpha * alpha)
    else:
        th = float(theta)
        if not 0 < th < math.pi:
            raise DomainError("theta branch needs theta in (0, pi)")
        k = math.asin(r * math.tan(th / 2))  # [-pi/2, pi/2]
        w = math.acos(math.cos(th / 2) * math.cos(k))
        phase = w - alpha * k
        curv = (1 - alpha * alpha) * math.sqrt(edge * edge - alpha * alpha) / math.sin(th / 2)
    return StationaryPointData(alpha=float(alpha), k_alpha=k, phase=phase, curvature=curv)


def asymptotic_wavefunction(
    alpha: float, t: int, epsilon: float = DEFAULT_EPSILON
) -> np.ndarray:
    """Leading-order ``(psi_L, psi_R)`` for the Hadamard walk, left start.

    ``alpha * t`` must be an integer; parity-forbidden sites give an
    exact ``(0, 0)`` through the vanishing parity prefactor.
    """
    _require_interior(alpha, HADAMARD, epsilon)
    n = round(alpha * t)
    if abs(alpha * t - n) > 1e-9:
        raise DomainError("alpha * t must be an integer site")
    if (n + t) % 2:
        return np.zeros(2, dtype=np.complex128)
    sp = stationary_point(alpha, HADAMARD)
    x = sp.phase * t + math.pi / 4
    pref = 2 / math.sqrt(2 * math.pi * t * sp.curvature)
    psi_l = (1 - alpha) * math.cos(x)
    psi_r = math.sqrt(1 - alpha * alpha) * math.cos(x + sp.k_alpha)
    return pref * np.array([psi_l, psi_r], dtype=np.complex128)


def p_asymptotic(alpha: float, t: int, epsilon: float = DEFAULT_EPSILON) -> float:
    """Full oscillatory site probability for the Hadamard walk, left start.

    Evaluates, for ``n = alpha t`` of the right parity,

        P = (2 / (pi t |w''|)) [ (1-alpha)^2 cos^2(phi t + pi/4)
            + (1-alpha^2) cos^2(phi t + k_alpha + pi/4) ]

    and 0 at parity-forbidden sites.
    """
    psi = asymptotic_wavefunction(alpha, t, epsilon)
    return float(np.sum(np.abs(psi) ** 2))


def p_slow(
    alpha: float,
    t: int,
    theta: float | str = HADAMARD,
    start: str = "left",
    epsilon: float = DEFAULT_EPSILON,
) -> float:
    """Non-oscillating envelope of the site probability.

    ``start="left"`` is the Hadamard left-chirality variant carrying
    the ``(1 - alpha)`` factor; ``start="symmetric"`` is the
    symmetric-start envelope ``1 / (pi t w'')`` valid for any theta.
    The two must not be conflated.
    """
    _require_interior(alpha, theta, epsilon)
    sp = stationary_point(alpha, theta)
    if start == "left":
        if theta != HADAMARD:
            raise DomainError("the left-start envelope is derived for the Hadamard walk")
        return (1 - alpha) / (math.pi * t * sp.curvature)
    if start == "symmetric":
        return 1 / (math.pi * t * sp.curvature)
    raise DomainError(f"unknown start {start!r}")


def density(alpha: float, theta: float | str = HADAMARD, start: str = "left") -> float:
    """Limiting density ``p(alpha) = t * P_slow(alpha, t)`` (t-independent).

    Diverges integrably like ``(edge^2 - alpha^2)^{-1/2}`` at the cone
    edge; quadrature goes through :func:`density_integral`.
    """
    edge = support_edge(theta)
    if abs(alpha) >= edge:
        raise DomainError(f"density support is |alpha| < {edge:.6g}")
    return p_slow(alpha, 1, theta, start, epsilon=0.0)


def _density_u_integrand(theta: float | str, start: str):
    """Density times ``d alpha / d u`` under ``alpha = edge sin u``.

    The substitution removes the endpoint singularity analytically: the
    ``edge cos u`` Jacobian cancels the ``1/sqrt(edge^2 - alpha^2)``
    factor, leaving a smooth integrand on ``[-pi/2, pi/2]``.
    """
    edge = support_edge(theta)
    if theta == HADAMARD:
        if start != "left":
            raise DomainError("the Hadamard density variant here is left-start")

        def f(u, weight):
            alpha = edge * np.sin(u)
            return weight(alpha) * (1 - alpha) / (SQRT2 * math.pi * (1 - alpha**2))
    else:
        th = float(theta)
        if not 0 < th < math.pi:
            raise DomainError("theta must be in (0, pi)")
        if start != "symmetric":
            raise DomainError("the general-theta density variant is symmetric-start")
        s = math.sin(th / 2)

        def f(u, weight):
            alpha = edge * np.sin(u)
            return weight(alpha) * s / (math.pi * (1 - alpha**2))

    return f


def density_integral(
    weight,
    theta: float | str = HADAMARD,
    start: str = "left",
    panels: int = QUADRATURE_PANELS,
) -> float:
    """Integrate ``weight(alpha) p(alpha)`` over the open support.

    Composite Simpson rule in the substituted variable; ``panels`` is
    the number of subintervals (made even if needed).
    """
    f = _density_u_integrand(theta, start)
    n = panels + (panels % 2)
    u = np.linspace(-math.pi / 2, math.pi / 2, n + 1)
    y = f(u, weight)
    h = math.pi / n
    return float(h / 3 * (y[0] + y[-1] + 4 * np.sum(y[1:-1:2]) + 2 * np.sum(y[2:-1:2])))


def density_moment(
    m: int,
    theta: float | str = HADAMARD,
    start: str = "left",
    absolute: bool = False,
) -> float:
    """m-th moment of alpha under the limiting density."""
    if absolute:
        return density_integral(lambda a: np.abs(a) ** m, theta, start)
    return density_integral(lambda a: a**m, theta, start)


def frontier_peak(t: int, side: str, g_at_point: complex = 1.0) -> complex:
    """Leading ``t^{-1/3}`` term of the generic integral at the cone edge.

    The phase has a third-order stationary point at ``k = 0`` (left
    edge, ``alpha = -1/sqrt2``) or ``k = pi`` (right edge); the caller
    supplies the envelope value ``g`` at that point.
    """
    if t < 1:
        raise DomainError("t must be at least 1")
    scale = math.gamma(1 / 3) * (6 / t) ** (1 / 3)
    if side == "right":
        return (g_at_point / (3 * math.pi)) * SQRT2 * scale * math.cos(
            math.pi * t / SQRT2 + math.pi / 6
        )
    if side == "left":
        return (g_at_point / (6 * math.pi)) * math.sqrt(1.5) * scale
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


@dataclass(frozen=True)
class AsymptoticModel:
    """Bundle of the closed-form descriptors for one coin family.

    ``theta = pi/2`` (or the string ``"hadamard"``) denotes the Hadamard
    family.  Interior evaluation refuses within ``epsilon`` of the cone
    edge ``cos(theta/2)``.
    """

    theta: float | str = HADAMARD
    epsilon: float = DEFAULT_EPSILON

    @property
    def support_edge(self) -> float:
        return support_edge(self.theta)

    def stationary_point(self, alpha: float) -> StationaryPointData:
        return stationary_point(alpha, self.theta)

    def probability(self, alpha: float, t: int) -> float:
        if self.theta != HADAMARD:
            raise DomainError("the oscillatory formula is implemented for hadamard")
        return p_asymptotic(alpha, t, self.epsilon)

    def slow(self, alpha: float, t: int, start: str = "left") -> float:
        return p_slow(alpha, t, self.theta, start, self.epsilon)

    def density(self, alpha: float, start: str = "left") -> float:
        return density(alpha, self.theta, start)

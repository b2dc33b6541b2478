"""Closed-form spectral quantities of the walk on and off the unit circle.

Inside the ballistic cone (|y/n| < |a|, the "allowed" region) everything
is driven by the dispersion phase mu(t) = arccos(|a| cos t), its
stationary angle t(eta), the oscillation phase theta(eta), and the four
boundary weights f1, f2, g1, g2 built from the unit-circle eigenvector
u(z).  Outside the cone (|a| < |y/n| < 1, the "hidden" region) the
relevant saddle sits on the imaginary axis at z = i r(xi); its modulus
D(xi), the exponential decay rate H(xi), and the amplitude weights
F1, F2 with G = |F1|^2 + |F2|^2 are evaluated here.

All functions are pure and operate on immutable inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .coin import Coin, Spinor, lambda_functional
from .errors import DegenerateCoinError, DomainError

WALL_GUARD = 1e-6
"""Half-width of the band around |y/n| = |a| rejected by these functions."""

_EDGE_GUARD = 1e-12
# Comparisons against WALL_GUARD get a hair of slack so that arguments
# constructed as |a| +/- WALL_GUARD survive representation rounding.
_GUARD_SLACK = 1.0 - 1e-9


def _require_nondegenerate(coin: Coin) -> None:
    if coin.degenerate:
        raise DegenerateCoinError(
            "spectral quantities are undefined for degenerate coins (a*b == 0)"
        )


def _check_allowed(coin: Coin, eta: float) -> None:
    if not math.isfinite(eta):
        raise DomainError(f"position parameter must be finite, got {eta!r}")
    if coin.abs_a - abs(eta) < WALL_GUARD * _GUARD_SLACK:
        raise DomainError(
            f"|eta| = {abs(eta)!r} is not inside the allowed region "
            f"(needs |eta| <= |a| - {WALL_GUARD:.0e}, |a| = {coin.abs_a!r})"
        )


def _check_hidden(coin: Coin, xi: float) -> None:
    if not math.isfinite(xi):
        raise DomainError(f"position parameter must be finite, got {xi!r}")
    if abs(xi) - coin.abs_a < WALL_GUARD * _GUARD_SLACK:
        raise DomainError(
            f"|xi| = {abs(xi)!r} is not inside the hidden region "
            f"(needs |xi| >= |a| + {WALL_GUARD:.0e}, |a| = {coin.abs_a!r})"
        )
    if 1.0 - abs(xi) < _EDGE_GUARD:
        raise DomainError(f"|xi| = {abs(xi)!r} must be strictly below 1")


def mu(coin: Coin, t: float) -> float:
    """Dispersion phase arccos(|a| cos t), valued in [0, pi]."""
    _require_nondegenerate(coin)
    return math.acos(coin.abs_a * math.cos(t))


def mu_prime(coin: Coin, t: float) -> float:
    """First derivative |a| sin t / sqrt(1 - |a|^2 cos^2 t)."""
    _require_nondegenerate(coin)
    aa = coin.abs_a
    ct = math.cos(t)
    return aa * math.sin(t) / math.sqrt(1.0 - aa * aa * ct * ct)


def mu_second(coin: Coin, t: float) -> float:
    """Second derivative |a| |b|^2 cos t / (1 - |a|^2 cos^2 t)^{3/2}."""
    _require_nondegenerate(coin)
    aa, ab = coin.abs_a, coin.abs_b
    ct = math.cos(t)
    return aa * ab * ab * ct / (1.0 - aa * aa * ct * ct) ** 1.5


def saddle_t(coin: Coin, eta: float) -> float:
    """Stationary angle t(eta) = arcsin(|b| eta / (|a| sqrt(1 - eta^2))).

    Odd in eta, |t| < pi/2, and satisfies mu'(t(eta)) = eta.

    Raises
    ------
    DomainError
        If eta is outside (-|a|, |a|) or within ``WALL_GUARD`` of a wall.
    """
    _require_nondegenerate(coin)
    _check_allowed(coin, eta)
    arg = coin.abs_b * eta / (coin.abs_a * math.sqrt(1.0 - eta * eta))
    return math.asin(min(1.0, max(-1.0, arg)))


def saddle_mu_second(coin: Coin, eta: float) -> float:
    """mu''(t(eta)) in closed form: (1 - eta^2) sqrt(|a|^2 - eta^2) / |b|."""
    _require_nondegenerate(coin)
    _check_allowed(coin, eta)
    aa, ab = coin.abs_a, coin.abs_b
    return (1.0 - eta * eta) * math.sqrt(aa * aa - eta * eta) / ab


def envelope(coin: Coin, eta: float) -> float:
    """Symmetric density envelope |b| / (pi (1 - eta^2) sqrt(|a|^2 - eta^2))."""
    _require_nondegenerate(coin)
    _check_allowed(coin, eta)
    aa, ab = coin.abs_a, coin.abs_b
    return ab / (math.pi * (1.0 - eta * eta) * math.sqrt(aa * aa - eta * eta))


def oscillation_phase(coin: Coin, eta: float) -> float:
    """Phase theta(eta) = 2 mu(t(eta)) - 2 eta t(eta) of the finite-n wiggles.

    Its derivatives satisfy theta' = -2 t(eta) and theta'' = -2 pi R(eta)
    with R the envelope above.
    """
    t = saddle_t(coin, eta)
    return 2.0 * mu(coin, t) - 2.0 * eta * t


def unit_eigenvector(coin: Coin, t: float) -> np.ndarray:
    """Normalized eigenvector u(e^{it}) of the phase-twisted coin symbol.

    u(z) = ((a b / |a|) z, lam(z) - |a| conj(z)) / p(z) on |z| = 1, where
    lam(e^{it}) = |a| cos t + i sqrt(1 - |a|^2 cos^2 t) and p normalizes.
    """
    _require_nondegenerate(coin)
    aa, ab = coin.abs_a, coin.abs_b
    z = cmath.exp(1j * t)
    ct = math.cos(t)
    lam = complex(aa * ct, math.sqrt(max(0.0, 1.0 - aa * aa * ct * ct)))
    second = lam - aa * z.conjugate()
    p = math.sqrt(ab * ab + abs(second) ** 2)
    return np.array([coin.a * coin.b / aa * z, second], dtype=np.complex128) / p


def conjugate_spinor(psi: np.ndarray) -> np.ndarray:
    """Orthogonal companion J psi = (-conj(psi2), conj(psi1))."""
    return np.array([-np.conj(psi[1]), np.conj(psi[0])], dtype=np.complex128)


@dataclass(frozen=True)
class AllowedRegionData:
    """Spectral data of one interior normalized position eta.

    f1, f2 are the boundary weights <phi, u><u, e_i> at z = e^{i t(eta)};
    g1, g2 the companion weights via J u at z = e^{-i t(eta)}.  Their
    absolute squares sum to 1 + eta * lambda(phi).
    """

    eta: float
    t: float
    mu_at_t: float
    theta: float
    f1: complex
    f2: complex
    g1: complex
    g2: complex
    R_env: float

    @property
    def cross_term(self) -> complex:
        """f1 conj(g1) + f2 conj(g2), the complex weight of the wiggles."""
        return self.f1 * np.conj(self.g1) + self.f2 * np.conj(self.g2)

    def oscillation(self, n: int) -> float:
        """Bounded oscillatory correction 2 Re[i e^{i n theta} cross_term]."""
        return float(
            2.0 * (1j * self.cross_term * cmath.exp(1j * n * self.theta)).real
        )


def allowed_data(coin: Coin, phi: Spinor, eta: float) -> AllowedRegionData:
    """Assemble all interior spectral data at normalized position eta."""
    t = saddle_t(coin, eta)
    phiv = phi.as_array()
    u = unit_eigenvector(coin, t)
    ju = conjugate_spinor(unit_eigenvector(coin, -t))
    # <x, y> = sum_i x_i conj(y_i); <u, e_i> is just the i-th component.
    proj_u = complex(phiv @ np.conj(u))
    proj_ju = complex(phiv @ np.conj(ju))
    f1, f2 = proj_u * u[0], proj_u * u[1]
    g1, g2 = proj_ju * ju[0], proj_ju * ju[1]
    return AllowedRegionData(
        eta=eta,
        t=t,
        mu_at_t=mu(coin, t),
        theta=2.0 * mu(coin, t) - 2.0 * eta * t,
        f1=complex(f1),
        f2=complex(f2),
        g1=complex(g1),
        g2=complex(g2),
        R_env=envelope(coin, eta),
    )


def density_rho(coin: Coin, phi: Spinor, xi: float) -> float:
    """Ballistic limit density |b| (1 + lambda xi) / (pi (1-xi^2) sqrt(|a|^2-xi^2)).

    Defined on (-|a|, |a|); integrates to 1 over the full interval.
    """
    lam = lambda_functional(coin, phi)
    return envelope(coin, xi) * (1.0 + lam * xi)


def saddle_radius(coin: Coin, xi: float) -> float:
    """Signed radius r(xi) of the imaginary-axis saddle z = i r(xi).

    r(xi) = (|b| xi + sqrt(xi^2 - |a|^2)) / (|a| sqrt(1 - xi^2)); positive
    and > 1 for xi > |a|, negative for xi < -|a|.
    """
    _require_nondegenerate(coin)
    _check_hidden(coin, xi)
    aa, ab = coin.abs_a, coin.abs_b
    return (ab * xi + math.sqrt(xi * xi - aa * aa)) / (
        aa * math.sqrt(1.0 - xi * xi)
    )


def saddle_modulus(coin: Coin, xi: float) -> float:
    """Eigenvalue modulus D(xi) = (|b| + sqrt(xi^2 - |a|^2)) / sqrt(1 - xi^2).

    Even in xi; D >= 1 with equality only in the limit |xi| -> |a|.
    """
    _require_nondegenerate(coin)
    _check_hidden(coin, xi)
    aa, ab = coin.abs_a, coin.abs_b
    return (ab + math.sqrt(xi * xi - aa * aa)) / math.sqrt(1.0 - xi * xi)


def rate_H(coin: Coin, xi: float) -> float:
    """Exponential decay rate of the walk outside its ballistic cone.

    H(xi) = 2|xi| log(|b||xi| + sqrt(xi^2 - |a|^2))
            - 2 log(|b| + sqrt(xi^2 - |a|^2))
            + (1 - |xi|) log(1 - xi^2) - 2|xi| log|a|,

    even, positive, convex, and without critical points on |a| < |xi| < 1.
    It equals 2(|xi| log r(|xi|) - log D(xi)) identically.
    """
    _require_nondegenerate(coin)
    _check_hidden(coin, xi)
    aa, ab = coin.abs_a, coin.abs_b
    ax = abs(xi)
    s = math.sqrt(xi * xi - aa * aa)
    return (
        2.0 * ax * math.log(ab * ax + s)
        - 2.0 * math.log(ab + s)
        + (1.0 - ax) * math.log(1.0 - xi * xi)
        - 2.0 * ax * math.log(aa)
    )


@dataclass(frozen=True)
class HiddenRegionData:
    """Saddle data of one normalized position outside the ballistic cone."""

    xi: float
    D: float
    r: float
    H: float
    F1: complex
    F2: complex
    G: float


def hidden_data(coin: Coin, phi: Spinor, xi: float) -> HiddenRegionData:
    """Assemble D, r, H and the amplitude weights F1, F2, G at xi.

    The weights come from the eigenvector u = (i r a b / |a|, i D + i |a| / r)
    at the imaginary-axis saddle and the expansion coefficient of phi
    along it; G = |F1|^2 + |F2|^2 is the prefactor of the exponential
    decay law of the transition probability.
    """
    D = saddle_modulus(coin, xi)
    r = saddle_radius(coin, xi)
    H = rate_H(coin, xi)
    a, b = coin.a, coin.b
    aa = coin.abs_a
    u1 = 1j * r * a * b / aa
    u2 = 1j * D + 1j * aa / r
    coeff = (1j * aa * (aa / r - 1.0 / D) * phi.phi1 - 1j * r * a * b * phi.phi2) / (
        r * a * b * (D + 1.0 / D)
    )
    F1 = coeff * u1
    F2 = coeff * u2
    G = abs(F1) ** 2 + abs(F2) ** 2
    return HiddenRegionData(xi=xi, D=D, r=r, H=H,
                            F1=complex(F1), F2=complex(F2), G=float(G))


def empirical_rate(n: int, p: float) -> float:
    """Finite-n rate -log(p)/n of an exact probability.

    Raises
    ------
    UnderflowError
        If p is below 1e-300 (log extraction would be meaningless).
    """
    from .errors import UnderflowError

    if p < 1e-300:
        raise UnderflowError(f"probability {p!r} underflows rate extraction")
    return -math.log(p) / n

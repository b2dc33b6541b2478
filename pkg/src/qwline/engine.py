"""Exact n-step evolution of the walk on the integer line.

The state after n steps is a finitely supported spinor field obtained by
iterating

    (U f)(x) = P f(x+1) + Q f(x-1)

from the initial state concentrated at one site.  ``evolve`` runs the
direct O(n^2) recursion; ``amplitude_oracle`` recovers single amplitudes
independently as Laurent coefficients of z -> <A(z)^n phi, e_i> sampled
on the unit circle, and is used to cross-check the recursion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coin import Coin, Spinor, decompose
from .errors import NotDegenerateError, ResourceError

SITE_CAP_DEFAULT = 1_000_000
"""Default maximum number of lattice sites a single evolution may touch."""


@dataclass(frozen=True)
class SpinorField:
    """Finite-support spinor field: amplitudes (amp1, amp2) per site.

    ``amps[i, :]`` holds the two spin amplitudes at site ``offset + i``.
    Support is contained in [origin - n, origin + n] and amplitudes at
    sites with n + y - origin odd are exactly zero.
    """

    n: int
    offset: int
    amps: np.ndarray

    @property
    def sites(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.amps.shape[0])

    def amplitude(self, y: int, component: int) -> complex:
        """Amplitude of spin component 1 or 2 at site y (0 outside support)."""
        if component not in (1, 2):
            raise ValueError("component must be 1 or 2")
        i = y - self.offset
        if i < 0 or i >= self.amps.shape[0]:
            return 0.0 + 0.0j
        return complex(self.amps[i, component - 1])

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


@dataclass(frozen=True)
class Distribution:
    """Site probabilities p_n(y) over a contiguous stored range."""

    n: int
    offset: int
    probs: np.ndarray

    @property
    def sites(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.probs.shape[0])

    def prob(self, y: int) -> float:
        i = y - self.offset
        if i < 0 or i >= self.probs.shape[0]:
            return 0.0
        return float(self.probs[i])

    def total(self) -> float:
        return float(self.probs.sum())


def _evolve_split(coin: Coin, phi: Spinor, n: int, origin: int,
                  site_cap: int, row_split: bool) -> SpinorField:
    # Two zero-padded buffers per component; cells outside the current
    # support stay exactly zero, so edge reads need no branching.
    if n < 0:
        raise ValueError("step count must be non-negative")
    m = 2 * n + 1
    if m > site_cap:
        raise ResourceError(
            f"evolution needs {m} sites, exceeding the cap of {site_cap}"
        )
    a, b = coin.a, coin.b
    ca, cb = np.conj(a), np.conj(b)
    width = m + 4
    c = n + 2
    f1 = np.zeros(width, dtype=np.complex128)
    f2 = np.zeros(width, dtype=np.complex128)
    g1 = np.zeros(width, dtype=np.complex128)
    g2 = np.zeros(width, dtype=np.complex128)
    f1[c] = phi.phi1
    f2[c] = phi.phi2
    for k in range(1, n + 1):
        lo, hi = c - k, c + k
        s1 = f1[lo + 1:hi + 2]   # f(x+1) over the new support
        s2 = f2[lo + 1:hi + 2]
        t1 = f1[lo - 1:hi]       # f(x-1)
        t2 = f2[lo - 1:hi]
        if row_split:
            g1[lo:hi + 1] = a * s1 + b * s2
            g2[lo:hi + 1] = -cb * t1 + ca * t2
        else:
            g1[lo:hi + 1] = a * s1 + b * t2
            g2[lo:hi + 1] = -cb * s1 + ca * t2
        f1, g1 = g1, f1
        f2, g2 = g2, f2
    amps = np.stack([f1[2:2 + m], f2[2:2 + m]], axis=1)
    scale = _unitarity_rescale(coin, n)
    if scale != 1.0:
        amps = amps * scale
    return SpinorField(n=n, offset=origin - n, amps=amps)


def _unitarity_rescale(coin: Coin, n: int) -> float:
    # The stored entries define the coin only up to their own rounding:
    # |a|^2 + |b|^2 = 1 + e with |e| ~ 1e-16, and each step multiplies the
    # total mass by exactly (1 + e).  Dividing the n-step amplitudes by
    # (1 + e)^{n/2} evolves the exactly unitary coin on the same ray.
    e = (abs(coin.a) ** 2 + abs(coin.b) ** 2) - 1.0
    if e == 0.0 or n == 0:
        return 1.0
    return math.exp(-0.5 * n * math.log1p(e))


def evolve(coin: Coin, phi: Spinor, n: int, *, origin: int = 0,
           site_cap: int = SITE_CAP_DEFAULT) -> SpinorField:
    """Evolve the state concentrated at ``origin`` for n steps.

    Parameters
    ----------
    coin, phi : Coin, Spinor
        Walk coin and initial spin state.
    n : int
        Number of steps, n >= 0.
    origin : int
        Starting site; the output support is shifted accordingly.
    site_cap : int
        Raise ResourceError when 2n + 1 exceeds this many sites.
    """
    return _evolve_split(coin, phi, n, origin, site_cap, row_split=False)


def row_evolve(coin: Coin, psi: Spinor, n: int, *, origin: int = 0,
               site_cap: int = SITE_CAP_DEFAULT) -> SpinorField:
    """Same as :func:`evolve` but with the row split R + S of the coin."""
    return _evolve_split(coin, psi, n, origin, site_cap, row_split=True)


def distribution(field: SpinorField) -> Distribution:
    """Site probabilities |amp1|^2 + |amp2|^2 of a spinor field."""
    probs = np.abs(field.amps[:, 0]) ** 2 + np.abs(field.amps[:, 1]) ** 2
    return Distribution(n=field.n, offset=field.offset, probs=probs)


def row_walk_distribution(coin: Coin, psi: Spinor, n: int, *,
                          site_cap: int = SITE_CAP_DEFAULT) -> Distribution:
    """Distribution q_n(psi; .) of the row-split walk.

    Satisfies q_n(psi; x) = p_n(A psi; x) for the column-split walk.
    """
    return distribution(row_evolve(coin, psi, n, site_cap=site_cap))


def degenerate_distribution(coin: Coin, phi: Spinor, n: int) -> Distribution:
    """Closed-form distribution for a coin with a == 0 or b == 0.

    a == 0: even steps return to the origin, odd steps occupy only the
    two neighbours weighted by the spin probabilities.  b == 0: the two
    spin components travel ballistically to -n and +n.

    Raises
    ------
    NotDegenerateError
        If both entries of the coin are nonzero.
    """
    if not coin.degenerate:
        raise NotDegenerateError("coin has a*b != 0; use evolve instead")
    if n < 0:
        raise ValueError("step count must be non-negative")
    w1 = abs(phi.phi1) ** 2
    w2 = abs(phi.phi2) ** 2
    if coin.abs_a < coin.abs_b:  # a == 0
        if n % 2 == 0:
            return Distribution(n=n, offset=0, probs=np.array([1.0]))
        return Distribution(n=n, offset=-1, probs=np.array([w1, 0.0, w2]))
    # b == 0
    if n == 0:
        return Distribution(n=0, offset=0, probs=np.array([1.0]))
    probs = np.zeros(2 * n + 1)
    probs[0] = w1
    probs[-1] = w2
    return Distribution(n=n, offset=-n, probs=probs)


def amplitude_oracle(coin: Coin, phi: Spinor, psi_index: int, n: int,
                     y: int) -> complex:
    """Single amplitude <U^n(delta_0 x phi), delta_y x e_i> from circle sampling.

    The map z -> <A(z)^n phi, e_i> with A(z) = P z^{-1} + Q z is a Laurent
    polynomial of degree n, so its y-th coefficient is recovered exactly
    (up to rounding) by averaging over N = 2n + 2 uniform points on the
    unit circle.  Independent of the recursion in :func:`evolve`.
    """
    if psi_index not in (1, 2):
        raise ValueError("psi_index must be 1 or 2")
    if n < 0:
        raise ValueError("step count must be non-negative")
    if abs(y) > n or (n + y) % 2 != 0:
        return 0.0 + 0.0j
    N = 2 * n + 2
    z = np.exp(2j * np.pi * np.arange(N) / N)
    zinv = np.conj(z)
    a, b = coin.a, coin.b
    ca, cb = np.conj(a), np.conj(b)
    v1 = np.full(N, phi.phi1, dtype=np.complex128)
    v2 = np.full(N, phi.phi2, dtype=np.complex128)
    for _ in range(n):
        w1 = a * zinv * v1 + b * z * v2
        w2 = -cb * zinv * v1 + ca * z * v2
        v1, v2 = w1, w2
    f = v1 if psi_index == 1 else v2
    return complex(np.mean(f * z ** (-y))) * _unitarity_rescale(coin, n)


def nearest_parity_site(n: int, target: float) -> int:
    """Nearest integer to ``target`` with the parity of n, ties toward 0.

    The walk occupies only sites y with n + y even, so normalized
    positions must be rounded onto that sublattice.
    """
    p = n % 2
    y0 = 2 * math.floor((target - p) / 2.0) + p
    y1 = y0 + 2
    d0 = target - y0
    d1 = y1 - target
    if d0 < d1:
        return y0
    if d1 < d0:
        return y1
    return y0 if abs(y0) <= abs(y1) else y1

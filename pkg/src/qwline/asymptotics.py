"""Leading-order estimates of the transition probability in all three regimes.

A site y at step n falls into one of three regimes of the normalized
position xi = y/n: oscillatory decay ~ 1/n inside the ballistic cone
(|xi| < |a|), Airy-profile decay ~ n^(-2/3) in a band of width
O(n^(1/3)) around the walls y = +-n|a|, and exponential decay
exp(-n H(xi)) outside the cone.  ``classify`` resolves the regime at
finite n and ``estimate`` dispatches to the matching formula.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .airy import airy_ai
from .coin import Coin, Spinor, lambda_functional
from .errors import DegenerateCoinError, RegionError
from .spectral import allowed_data, envelope, hidden_data

WALL_WIDTH_DEFAULT = 3.0
"""Default half-width W of the wall band |y -+ n|a|| <= W n^(1/3)."""


class Region(enum.Enum):
    ALLOWED = "allowed"
    WALL_PLUS = "wall_plus"
    WALL_MINUS = "wall_minus"
    HIDDEN = "hidden"
    OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class RegionLabel:
    """Regime of one (n, y) pair.

    ``d`` is the signed offset from the nearer wall (y - n|a| on the
    right, y + n|a| on the left); it parametrizes the Airy argument for
    wall sites and is diagnostic otherwise.
    """

    kind: Region
    xi: float
    d: float


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Leading-term probability estimate with its regime and diagnostics."""

    value: float
    region: RegionLabel
    leading_order: str  # "n^-1", "n^-2/3", "exponential", or "zero"
    parity_zero: bool
    clamped: bool = False


def _require_walk_coin(coin: Coin) -> None:
    if coin.degenerate:
        raise DegenerateCoinError(
            "asymptotic estimates require a nondegenerate coin (a*b != 0)"
        )


def classify(coin: Coin, n: int, y: int,
             wall_width: float = WALL_WIDTH_DEFAULT) -> RegionLabel:
    """Assign (n, y) to a regime; the wall band wins over its neighbours.

    Ties between the two walls go to the nearer one (right wall when
    equidistant).  |y| > n is out of range; |y| = n counts as hidden.
    """
    _require_walk_coin(coin)
    if n < 1:
        raise ValueError("classification needs n >= 1")
    if wall_width < 0:
        raise ValueError("wall width must be non-negative")
    xi = y / n
    wall = n * coin.abs_a
    d_plus = y - wall
    d_minus = y + wall
    d = d_plus if abs(d_plus) <= abs(d_minus) else d_minus
    if abs(y) > n:
        return RegionLabel(kind=Region.OUT_OF_RANGE, xi=xi, d=d)
    band = wall_width * n ** (1.0 / 3.0)
    if abs(d_plus) <= band or abs(d_minus) <= band:
        kind = Region.WALL_PLUS if abs(d_plus) <= abs(d_minus) else Region.WALL_MINUS
        return RegionLabel(kind=kind, xi=xi, d=d)
    kind = Region.ALLOWED if abs(xi) < coin.abs_a else Region.HIDDEN
    return RegionLabel(kind=kind, xi=xi, d=d)


def airy_wall_alpha(coin: Coin) -> float:
    """Airy scaling constant (2 / (|a| |b|^2))^(1/3) of the wall profile."""
    _require_walk_coin(coin)
    return (2.0 / (coin.abs_a * coin.abs_b**2)) ** (1.0 / 3.0)


def inner_estimate(coin: Coin, phi: Spinor, n: int, y: int,
                   wall_width: float = WALL_WIDTH_DEFAULT) -> AsymptoticEstimate:
    """Oscillatory estimate inside the ballistic cone.

    For parity-allowed sites returns

        (2 |b| / (pi n (1 - xi^2) sqrt(|a|^2 - xi^2)))
            * [1 + lambda(phi) xi + OSC_n(xi)]

    at xi = y/n, where OSC_n is the bounded oscillatory correction built
    from the boundary spectral weights.  The bracket may dip slightly
    negative at finite n because the O(1/n) remainder is dropped; such
    values are clamped to 0 and flagged.

    Raises
    ------
    RegionError
        If classify does not label (n, y) as allowed.
    """
    label = classify(coin, n, y, wall_width)
    if label.kind is not Region.ALLOWED:
        raise RegionError(f"site {y} at step {n} is {label.kind.value}, not allowed")
    if (n + y) % 2 != 0:
        return AsymptoticEstimate(value=0.0, region=label,
                                  leading_order="n^-1", parity_zero=True)
    xi = y / n
    data = allowed_data(coin, phi, xi)
    lam = lambda_functional(coin, phi)
    bracket = 1.0 + lam * xi + data.oscillation(n)
    clamped = bracket < 0.0
    if clamped:
        bracket = 0.0
    value = 2.0 * data.R_env / n * bracket
    return AsymptoticEstimate(value=value, region=label, leading_order="n^-1",
                              parity_zero=False, clamped=clamped)


def wall_estimate(coin: Coin, phi: Spinor, n: int, y: int,
                  wall_width: float = WALL_WIDTH_DEFAULT) -> AsymptoticEstimate:
    """Airy-profile estimate in the wall band.

    For parity-allowed sites returns

        2 alpha^2 n^(-2/3) Ai(s alpha n^(-1/3) d)^2 (1 + s |a| lambda(phi)),

    where s = +1 (right wall) or -1 (left wall) and d = y - s n|a| is the
    exact real offset, not an integer rounding.
    """
    label = classify(coin, n, y, wall_width)
    if label.kind not in (Region.WALL_PLUS, Region.WALL_MINUS):
        raise RegionError(f"site {y} at step {n} is {label.kind.value}, not wall")
    if (n + y) % 2 != 0:
        return AsymptoticEstimate(value=0.0, region=label,
                                  leading_order="n^-2/3", parity_zero=True)
    s = 1.0 if label.kind is Region.WALL_PLUS else -1.0
    d = y - s * n * coin.abs_a
    alpha = airy_wall_alpha(coin)
    ai = airy_ai(s * alpha * n ** (-1.0 / 3.0) * d)
    lam = lambda_functional(coin, phi)
    value = 2.0 * alpha**2 * n ** (-2.0 / 3.0) * ai * ai * (1.0 + s * coin.abs_a * lam)
    return AsymptoticEstimate(value=value, region=label,
                              leading_order="n^-2/3", parity_zero=False)


def hidden_estimate(coin: Coin, phi: Spinor, n: int, y: int,
                    wall_width: float = WALL_WIDTH_DEFAULT) -> AsymptoticEstimate:
    """Large-deviation estimate outside the ballistic cone.

    For parity-allowed sites with |y| < n returns

        2 |b| / (pi n (1 - xi^2) sqrt(xi^2 - |a|^2)) * exp(-n H(xi)) * G(xi)

    with both the rate H and the amplitude G evaluated at xi = y/n.
    """
    label = classify(coin, n, y, wall_width)
    if label.kind is not Region.HIDDEN:
        raise RegionError(f"site {y} at step {n} is {label.kind.value}, not hidden")
    if abs(y) >= n:
        raise RegionError(
            f"|y| = {abs(y)} must be strictly below n = {n} for the hidden estimate"
        )
    if (n + y) % 2 != 0:
        return AsymptoticEstimate(value=0.0, region=label,
                                  leading_order="exponential", parity_zero=True)
    xi = y / n
    data = hidden_data(coin, phi, xi)
    aa, ab = coin.abs_a, coin.abs_b
    pref = 2.0 * ab / (
        math.pi * n * (1.0 - xi * xi) * math.sqrt(xi * xi - aa * aa)
    )
    value = pref * math.exp(-n * data.H) * data.G
    return AsymptoticEstimate(value=value, region=label,
                              leading_order="exponential", parity_zero=False)


def estimate(coin: Coin, phi: Spinor, n: int, y: int,
             wall_width: float = WALL_WIDTH_DEFAULT) -> AsymptoticEstimate:
    """Classify (n, y) and delegate to the regime's estimator.

    Out-of-range sites (|y| > n) return exactly 0.
    """
    label = classify(coin, n, y, wall_width)
    if label.kind is Region.OUT_OF_RANGE:
        return AsymptoticEstimate(value=0.0, region=label,
                                  leading_order="zero", parity_zero=False)
    if label.kind is Region.ALLOWED:
        return inner_estimate(coin, phi, n, y, wall_width)
    if label.kind in (Region.WALL_PLUS, Region.WALL_MINUS):
        return wall_estimate(coin, phi, n, y, wall_width)
    return hidden_estimate(coin, phi, n, y, wall_width)

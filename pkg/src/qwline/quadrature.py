"""Adaptive Simpson quadrature and the mass integral of the limit density.

The limit density diverges like an inverse square root at the edges of
its support; the substitution xi = |a| sin u absorbs the singularity and
leaves a smooth integrand on [-pi/2, pi/2], which plain adaptive Simpson
then handles at full accuracy.
"""

from __future__ import annotations

import math

from .coin import Coin, Spinor, lambda_functional
from .errors import DomainError
from .spectral import _require_nondegenerate

_MAX_DEPTH = 60


def _simpson(f, a, fa, b, fb, m, fm):
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, fa, b, fb, m, fm, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(f, a, fa, m, fm, lm, flm)
    right = _simpson(f, m, fm, b, fb, rm, frm)
    delta = left + right - whole
    if depth >= _MAX_DEPTH or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (
        _adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1)
        + _adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1)
    )


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-9,
                     panels: int = 8) -> float:
    """Integrate a smooth scalar function over [a, b] to tolerance ``tol``.

    The interval is pre-split into ``panels`` equal panels before the
    adaptive refinement; without that seed, integrands whose oscillation
    is commensurate with the interval can alias the coarse Simpson probe.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if a == b:
        return 0.0
    if panels < 1:
        raise ValueError("need at least one panel")
    edges = [a + (b - a) * i / panels for i in range(panels + 1)]
    total = 0.0
    for lo, hi in zip(edges, edges[1:]):
        m = 0.5 * (lo + hi)
        flo, fhi, fm = f(lo), f(hi), f(m)
        whole = _simpson(f, lo, flo, hi, fhi, m, fm)
        total += _adaptive(f, lo, flo, hi, fhi, m, fm, whole, tol / panels, 0)
    return total


def density_mass(coin: Coin, phi: Spinor, alpha: float, beta: float,
                 tol: float = 1e-9) -> float:
    """Integral of the limit density over [alpha, beta] inside (-|a|, |a|).

    After xi = |a| sin u the integrand becomes
    |b| (1 + lambda |a| sin u) / (pi (1 - |a|^2 sin^2 u)), smooth up to
    the closed endpoints, so alpha = -|a| and beta = |a| are admissible
    (the full-interval mass is 1).
    """
    _require_nondegenerate(coin)
    aa, ab = coin.abs_a, coin.abs_b
    if not -aa <= alpha < beta <= aa:
        raise DomainError(
            f"window [{alpha!r}, {beta!r}] must satisfy -|a| <= alpha < beta <= |a|"
        )
    lam = lambda_functional(coin, phi)

    def integrand(u: float) -> float:
        s = aa * math.sin(u)
        return ab * (1.0 + lam * s) / (math.pi * (1.0 - s * s))

    lo = math.asin(min(1.0, max(-1.0, alpha / aa)))
    hi = math.asin(min(1.0, max(-1.0, beta / aa)))
    return adaptive_simpson(integrand, lo, hi, tol)

"""SU(2) coins, their column/row splits, and the skew functional.

A coin is the unitary

    A = [[a, b], [-conj(b), conj(a)]],   |a|^2 + |b|^2 = 1,

that reshuffles the two spin components of the walker each step.  The
column split A = P + Q assigns the first column to left motion and the
second to right motion; the row split A = R + S is the alternative used
by part of the literature.  ``lambda_functional`` evaluates the real
functional of (coin, spinor) that skews every limit law of the walk.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateCoinError, NormalizationError

NORM_TOL = 1e-12
"""Allowed deviation of |a|^2 + |b|^2 (and spinor norms) from 1."""

DEGENERATE_TOL = 1e-14
"""Entries with modulus below this flag the coin as degenerate."""

_IMAG_RESIDUE_TOL = 1e-13


@dataclass(frozen=True)
class Coin:
    """Validated SU(2) coin.

    Attributes
    ----------
    a, b : complex
        Top-row entries of the coin matrix.
    omega : complex or None
        The unit phase a/|a|; None when ``a`` is (numerically) zero.
    """

    a: complex
    b: complex
    omega: complex | None = field(init=False)

    def __post_init__(self):
        a = complex(self.a)
        b = complex(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        residue = abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)
        if residue > NORM_TOL:
            raise NormalizationError(
                f"|a|^2 + |b|^2 = {abs(a) ** 2 + abs(b) ** 2!r} is not 1 "
                f"(residue {residue:.3e} exceeds {NORM_TOL:.0e})"
            )
        omega = a / abs(a) if abs(a) >= DEGENERATE_TOL else None
        object.__setattr__(self, "omega", omega)

    @property
    def abs_a(self) -> float:
        return abs(self.a)

    @property
    def abs_b(self) -> float:
        return abs(self.b)

    @property
    def degenerate(self) -> bool:
        """True when either entry vanishes (a == 0 or b == 0 numerically)."""
        return self.abs_a < DEGENERATE_TOL or self.abs_b < DEGENERATE_TOL

    def matrix(self) -> np.ndarray:
        """Full 2x2 coin matrix as a complex array."""
        return np.array(
            [[self.a, self.b], [-np.conj(self.b), np.conj(self.a)]],
            dtype=np.complex128,
        )

    def apply(self, spinor: "Spinor") -> "Spinor":
        """Return the spinor A @ phi (unit norm is preserved)."""
        v = self.matrix() @ spinor.as_array()
        return Spinor(v[0], v[1])


@dataclass(frozen=True)
class Spinor:
    """Unit vector in C^2 used as the walker's internal initial state."""

    phi1: complex
    phi2: complex

    def __post_init__(self):
        p1 = complex(self.phi1)
        p2 = complex(self.phi2)
        object.__setattr__(self, "phi1", p1)
        object.__setattr__(self, "phi2", p2)
        residue = abs(abs(p1) ** 2 + abs(p2) ** 2 - 1.0)
        if residue > NORM_TOL:
            raise NormalizationError(
                f"spinor norm residue {residue:.3e} exceeds {NORM_TOL:.0e}"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.phi1, self.phi2], dtype=np.complex128)


@dataclass(frozen=True)
class CoinDecomposition:
    """Column split P + Q and row split R + S of a coin matrix.

    P carries the first column (zero second column), Q the second; R
    carries the first row (zero second row), S the second.  Each pair
    re-sums to the coin matrix entrywise by construction.
    """

    P: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    S: np.ndarray


def make_coin(a: complex, b: complex) -> Coin:
    """Validate and build a coin from its two defining entries.

    Raises
    ------
    NormalizationError
        If | |a|^2 + |b|^2 - 1 | exceeds ``NORM_TOL``.
    """
    return Coin(a, b)


def make_spinor(phi1: complex, phi2: complex) -> Spinor:
    """Validate and build a unit spinor."""
    return Spinor(phi1, phi2)


def decompose(coin: Coin) -> CoinDecomposition:
    """Split the coin matrix by columns (P, Q) and by rows (R, S)."""
    a, b = coin.a, coin.b
    ca, cb = np.conj(a), np.conj(b)
    P = np.array([[a, 0.0], [-cb, 0.0]], dtype=np.complex128)
    Q = np.array([[0.0, b], [0.0, ca]], dtype=np.complex128)
    R = np.array([[a, b], [0.0, 0.0]], dtype=np.complex128)
    S = np.array([[0.0, 0.0], [-cb, ca]], dtype=np.complex128)
    return CoinDecomposition(P=P, Q=Q, R=R, S=S)


def lambda_functional(coin: Coin, phi: Spinor) -> float:
    """Skew functional of a coin and initial spinor.

    Evaluates

        |phi2|^2 - |phi1|^2
            + (a b conj(phi1) phi2 + conj(a b) phi1 conj(phi2)) / |a|^2,

    which is real by construction and controls the asymmetry of the
    walk's limit distribution.  Invariant under a global phase of phi.

    Raises
    ------
    DegenerateCoinError
        If ``a`` is numerically zero.
    """
    if coin.abs_a < DEGENERATE_TOL:
        raise DegenerateCoinError("skew functional requires a != 0")
    p1, p2 = phi.phi1, phi.phi2
    cross = coin.a * coin.b * np.conj(p1) * p2
    value = complex(
        abs(p2) ** 2 - abs(p1) ** 2 + (cross + np.conj(cross)) / coin.abs_a**2
    )
    if abs(value.imag) > _IMAG_RESIDUE_TOL:
        raise ArithmeticError(
            f"skew functional produced imaginary residue {value.imag:.3e}"
        )
    return value.real

"""Exact simulation and asymptotic analysis of quantum walks on the line.

The package splits into an exact engine (``evolve`` and friends), the
closed-form spectral layer (``spectral``), a self-contained Airy
implementation (``airy``), leading-order estimators for the three decay
regimes (``asymptotics``), and a reproducibility CLI (``qwline``).
"""

from .airy import airy_ai, airy_ai_prime
from .asymptotics import (
    AsymptoticEstimate,
    Region,
    RegionLabel,
    airy_wall_alpha,
    classify,
    estimate,
    hidden_estimate,
    inner_estimate,
    wall_estimate,
)
from .coin import (
    Coin,
    CoinDecomposition,
    Spinor,
    decompose,
    lambda_functional,
    make_coin,
    make_spinor,
)
from .engine import (
    Distribution,
    SpinorField,
    amplitude_oracle,
    degenerate_distribution,
    distribution,
    evolve,
    nearest_parity_site,
    row_evolve,
    row_walk_distribution,
)
from .errors import (
    DegenerateCoinError,
    DomainError,
    NormalizationError,
    NotDegenerateError,
    QwlineError,
    RegionError,
    ResourceError,
    UnderflowError,
)
from .quadrature import adaptive_simpson, density_mass
from .spectral import (
    AllowedRegionData,
    HiddenRegionData,
    allowed_data,
    density_rho,
    empirical_rate,
    envelope,
    hidden_data,
    mu,
    mu_prime,
    mu_second,
    oscillation_phase,
    rate_H,
    saddle_modulus,
    saddle_mu_second,
    saddle_radius,
    saddle_t,
)

__version__ = "0.1.0"

__all__ = [
    "AllowedRegionData",
    "AsymptoticEstimate",
    "Coin",
    "CoinDecomposition",
    "DegenerateCoinError",
    "Distribution",
    "DomainError",
    "HiddenRegionData",
    "NormalizationError",
    "NotDegenerateError",
    "QwlineError",
    "Region",
    "RegionError",
    "ResourceError",
    "SpinorField",
    "Spinor",
    "UnderflowError",
    "adaptive_simpson",
    "airy_ai",
    "airy_ai_prime",
    "airy_wall_alpha",
    "allowed_data",
    "amplitude_oracle",
    "classify",
    "decompose",
    "degenerate_distribution",
    "density_mass",
    "density_rho",
    "distribution",
    "empirical_rate",
    "envelope",
    "estimate",
    "evolve",
    "hidden_data",
    "hidden_estimate",
    "inner_estimate",
    "lambda_functional",
    "make_coin",
    "make_spinor",
    "mu",
    "mu_prime",
    "mu_second",
    "nearest_parity_site",
    "oscillation_phase",
    "rate_H",
    "row_evolve",
    "row_walk_distribution",
    "saddle_modulus",
    "saddle_mu_second",
    "saddle_radius",
    "saddle_t",
    "wall_estimate",
]

"""Link invariants from the Yokonuma-Hecke algebra and its quotients."""

from ._core import (
    Braid,
    CatalogError,
    ResourceLimitError,
    delta,
    delta_specialized,
    dims,
    esolution,
    gamma,
    homflypt,
    jones,
    run,
    theta,
    theta2,
    theta_cap,
    theta_small,
)

__all__ = [
    "Braid",
    "CatalogError",
    "ResourceLimitError",
    "delta",
    "delta_specialized",
    "dims",
    "esolution",
    "gamma",
    "homflypt",
    "jones",
    "run",
    "theta",
    "theta2",
    "theta_cap",
    "theta_small",
]

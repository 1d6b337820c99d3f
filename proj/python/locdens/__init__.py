"""Localization probability densities for one-particle scalar-field states."""

from ._core import (
    FieldKind,
    LocdensError,
    MixedState,
    MomentumState,
    __version__,
    convexity_gap,
    density,
    energy_moment,
    energy_spread_ratio,
    field,
    fit_tail,
    front_speed,
    gaussian,
    inner_product,
    mixture,
    mixture_density,
    mixture_region_probability,
    region_probability,
    selftest,
)

__all__ = [
    "FieldKind",
    "LocdensError",
    "MixedState",
    "MomentumState",
    "__version__",
    "convexity_gap",
    "density",
    "energy_moment",
    "energy_spread_ratio",
    "field",
    "fit_tail",
    "front_speed",
    "gaussian",
    "inner_product",
    "mixture",
    "mixture_density",
    "mixture_region_probability",
    "region_probability",
    "selftest",
]

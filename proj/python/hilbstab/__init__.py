"""Stable-birational classes of Hilbert schemes of points on surfaces."""

from ._hilbstab import (
    HorizonError,
    Inapplicable,
    InvalidInput,
    PolarizedSurface,
    blowup_interval,
    brauer_severi_classes,
    classes,
    conic_b_bound,
    conic_interval,
    coverage_threshold,
    gap,
    goettsche,
    goettsche_mod_L,
    index,
    interval,
    load_spec,
    polarized,
    run_cli,
    spec_classes,
    surface,
    zeta,
)

__all__ = [
    "HorizonError",
    "Inapplicable",
    "InvalidInput",
    "PolarizedSurface",
    "blowup_interval",
    "brauer_severi_classes",
    "classes",
    "conic_b_bound",
    "conic_interval",
    "coverage_threshold",
    "gap",
    "goettsche",
    "goettsche_mod_L",
    "index",
    "interval",
    "load_spec",
    "polarized",
    "run_cli",
    "spec_classes",
    "surface",
    "zeta",
]

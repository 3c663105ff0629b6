"""Exact counts of level-p cuspidal automorphic representations of GSp(4).

The counts s_k(p, type) come from closed forms, from rational generating
functions, and for the lifted types from elliptic newform dimensions.  Siegel
cusp form dimensions and Plancherel masses are built on top of them.
"""

from .arith import IntegralityError
from .counts import CountResult, Route, closed_form, count, count_table, count_via_relation
from .counts import series_count, series_counts, yoshida_cp
from .elliptic import dim_cusp_gamma0, dim_cusp_sl2, dim_new_gamma0, dim_new_pm
from .plancherel import (
    AsymptoticCoefficients,
    asymptotic_coefficients,
    dim_xi,
    limit_ratio,
    parahoric_volume,
    plancherel_mass,
    verify_mass_system,
)
from .reprtypes import GENERIC, LIFTS, ReprType, ZeroType, parse_type
from .siegel import SubgroupKind, dim_newforms, dim_newforms_paramodular_G, dim_siegel_cusp

__version__ = "0.1.0"

__all__ = [
    "IntegralityError",
    "CountResult",
    "Route",
    "count",
    "count_table",
    "closed_form",
    "series_count",
    "series_counts",
    "count_via_relation",
    "yoshida_cp",
    "dim_cusp_sl2",
    "dim_cusp_gamma0",
    "dim_new_gamma0",
    "dim_new_pm",
    "AsymptoticCoefficients",
    "asymptotic_coefficients",
    "dim_xi",
    "limit_ratio",
    "parahoric_volume",
    "plancherel_mass",
    "verify_mass_system",
    "GENERIC",
    "LIFTS",
    "ReprType",
    "ZeroType",
    "parse_type",
    "SubgroupKind",
    "dim_newforms",
    "dim_newforms_paramodular_G",
    "dim_siegel_cusp",
]

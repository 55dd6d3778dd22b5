"""Exact and Gaussian growth of tensor power decompositions.

The heavy lifting lives in the C++ extension ``repgrowth._core``; this
package re-exports its public surface.
"""

from ._core import (
    ConfigError,
    DegenerateModelError,
    InvariantError,
    RepSpec,
    UnsupportedError,
    approx_a_lambda,
    approx_b_n,
    decompose,
    fit_exponent,
    group_info,
    growth_series,
    irreducible_character,
    local_clt,
    peel_decompose,
    run_checks,
    simple_reflection,
    to_dominant,
    to_dominant_strict,
    weyl_dimension,
)
from ._core import __version__

__all__ = [
    "ConfigError",
    "DegenerateModelError",
    "InvariantError",
    "RepSpec",
    "UnsupportedError",
    "approx_a_lambda",
    "approx_b_n",
    "decompose",
    "fit_exponent",
    "group_info",
    "growth_series",
    "irreducible_character",
    "local_clt",
    "peel_decompose",
    "run_checks",
    "simple_reflection",
    "to_dominant",
    "to_dominant_strict",
    "weyl_dimension",
    "__version__",
]

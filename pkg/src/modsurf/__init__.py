"""Exact lattice arithmetic and E-polynomial tables for moduli of sheaves on rational surfaces."""

from .goettsche import BettiData, hilb_epoly, rank1_moduli_epoly
from .invariants import (
    BirationalFiber,
    ExceptionalPair,
    Existence,
    GrassmannianBundle,
    NefRays,
    alpha_class,
    beta_class,
    birational_fiber_check,
    codim_bound,
    gr_bundle_params,
    moduli_dim,
    mu_stable_exists,
    nef_rays,
    perp_basis,
    quot_dim,
    stack_dim_mu_ss,
    syst_dim,
)
from .ktheory import KClass, Ordering, PairingContext, TwistedInvariants
from .qpoly import (
    QPoly,
    gauss_alternating_sum,
    gauss_binom,
    is_palindrome,
    q_factorial,
    q_int,
    symmetric_product_epoly,
)
from .series import (
    Diagnostic,
    SeriesParams,
    SeriesResult,
    SeriesSpec,
    SeriesValidationError,
    closed_form_p2,
    extend_series,
    reassemble,
    relation_residual,
    series_params,
    zero_stratum,
)
from .strata import (
    StratumType,
    brill_noether_index,
    enumerate_strata,
    hom_dim,
    normality_hypothesis_ok,
    stratum_dim,
)
from .surface import DivisorClass, SurfaceModel, custom_surface, preset_p1xp1, preset_p2

__version__ = "0.1.0"

__all__ = [
    "BettiData",
    "BirationalFiber",
    "Diagnostic",
    "DivisorClass",
    "ExceptionalPair",
    "Existence",
    "GrassmannianBundle",
    "KClass",
    "NefRays",
    "Ordering",
    "PairingContext",
    "QPoly",
    "SeriesParams",
    "SeriesResult",
    "SeriesSpec",
    "SeriesValidationError",
    "StratumType",
    "SurfaceModel",
    "TwistedInvariants",
    "alpha_class",
    "beta_class",
    "birational_fiber_check",
    "brill_noether_index",
    "closed_form_p2",
    "codim_bound",
    "custom_surface",
    "enumerate_strata",
    "extend_series",
    "gauss_alternating_sum",
    "gauss_binom",
    "gr_bundle_params",
    "hilb_epoly",
    "hom_dim",
    "is_palindrome",
    "moduli_dim",
    "mu_stable_exists",
    "nef_rays",
    "normality_hypothesis_ok",
    "perp_basis",
    "preset_p1xp1",
    "preset_p2",
    "q_factorial",
    "q_int",
    "quot_dim",
    "rank1_moduli_epoly",
    "reassemble",
    "relation_residual",
    "series_params",
    "stack_dim_mu_ss",
    "stratum_dim",
    "symmetric_product_epoly",
    "syst_dim",
    "zero_stratum",
]

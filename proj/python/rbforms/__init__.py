"""Exact moments and extremal bounds for symmetric bilinear forms."""

from rbforms._core import (
    FeasibilityError,
    SamplingError,
    SymmetricAtomDist,
    best_constant,
    check_convergence,
    inf_bound,
    make_approx,
    make_extremal,
    make_rademacher,
    mc_moment_bilinear,
    moment_bilinear,
    moments,
    rademacher_chaos_decoupled,
    rademacher_chaos_ordinary,
    rademacher_sum_moment,
    sample_member,
    sup_bound,
    sup_bound_decoupled,
)

__all__ = [
    "FeasibilityError",
    "SamplingError",
    "SymmetricAtomDist",
    "best_constant",
    "check_convergence",
    "inf_bound",
    "make_approx",
    "make_extremal",
    "make_rademacher",
    "mc_moment_bilinear",
    "moment_bilinear",
    "moments",
    "rademacher_chaos_decoupled",
    "rademacher_chaos_ordinary",
    "rademacher_sum_moment",
    "sample_member",
    "sup_bound",
    "sup_bound_decoupled",
]

__version__ = "0.1.0"

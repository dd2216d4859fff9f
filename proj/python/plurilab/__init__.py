"""Exact plurigenus and pluricanonical-bound computations.

Thin wrapper over the compiled core. Rationals are fractions.Fraction,
baskets can be given as strings like "5*1/2,1/3,1/4" or as (b, r[, mult])
tuples.
"""

from _plurilab import (
    AmbiguityError,
    Basket,
    BoundResult,
    NotFoundError,
    Scenario,
    Step,
    __version__,
    alpha_of,
    beta_sequence,
    check_monotonicity,
    chi_canonical_sheaf,
    chi_structure_sheaf,
    correction,
    corollary_threshold,
    enumerate_quotient_types,
    format_basket,
    hilbert_coefficient,
    infer_basket,
    k3_wps,
    main_theorem_threshold,
    min_birational_m,
    parse_basket,
    plurigenus_wps,
    preset,
    prop_b_check,
    refine_xi,
    reid_plurigenus,
    run_schedule,
    solve_chi,
    solve_k3,
    theorem_44,
    verify_paper,
    well_formed,
    xi_seed_asymptotic,
)

__all__ = [
    "AmbiguityError",
    "Basket",
    "BoundResult",
    "NotFoundError",
    "Scenario",
    "Step",
    "__version__",
    "alpha_of",
    "beta_sequence",
    "check_monotonicity",
    "chi_canonical_sheaf",
    "chi_structure_sheaf",
    "correction",
    "corollary_threshold",
    "enumerate_quotient_types",
    "format_basket",
    "hilbert_coefficient",
    "infer_basket",
    "k3_wps",
    "main_theorem_threshold",
    "min_birational_m",
    "parse_basket",
    "plurigenus_wps",
    "preset",
    "prop_b_check",
    "refine_xi",
    "reid_plurigenus",
    "run_schedule",
    "solve_chi",
    "solve_k3",
    "theorem_44",
    "verify_paper",
    "well_formed",
    "xi_seed_asymptotic",
]

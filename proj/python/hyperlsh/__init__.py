"""Geodesic hashing for near-neighbor search in hyperbolic space."""

from hyperlsh._core import (
    Dataset,
    InsufficientPairsError,
    LshFamilyParams,
    LshIndex,
    Model,
    RhoEstimate,
    TableShape,
    alpha_constant,
    ball_to_halfspace,
    boundary_pair_experiment,
    brute_force_nn,
    build_index,
    choose_params,
    collision_bounds_hd,
    collision_probability,
    distance_ball,
    distance_halfspace,
    estimate_collision_mc,
    estimate_p1_p2,
    halfspace_to_ball,
    induced_approximation_factor,
    load_index,
    make_lsh_family_params,
    puiseux_sandwich,
    query,
    query_distance,
    rho_bound,
    rho_curve,
    rho_exact,
    run_validator,
    sample_uniform_ball,
    save_index,
    validator_names,
)

__all__ = [
    "Dataset",
    "InsufficientPairsError",
    "LshFamilyParams",
    "LshIndex",
    "Model",
    "RhoEstimate",
    "TableShape",
    "alpha_constant",
    "ball_to_halfspace",
    "boundary_pair_experiment",
    "brute_force_nn",
    "build_index",
    "choose_params",
    "collision_bounds_hd",
    "collision_probability",
    "distance_ball",
    "distance_halfspace",
    "estimate_collision_mc",
    "estimate_p1_p2",
    "halfspace_to_ball",
    "induced_approximation_factor",
    "load_index",
    "make_lsh_family_params",
    "puiseux_sandwich",
    "query",
    "query_distance",
    "rho_bound",
    "rho_curve",
    "rho_exact",
    "run_validator",
    "sample_uniform_ball",
    "save_index",
    "validator_names",
]

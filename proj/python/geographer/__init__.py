"""Realize (signature, b1, degeneracy) triples by certified kappa = 1 examples."""

from ._geographer import (
    SCHEMA_VERSION,
    Certificate,
    ConsistencyError,
    Recipe,
    Triple,
    construct_bundle,
    dolgachev_sum,
    enumerate,
    fiber_sum,
    intersection_form,
    invariant_subspace,
    is_admissible,
    is_null_admissible,
    kodaira_classify,
    monodromy,
    realize,
    realize_null,
    simply_connected_geography,
    verify_grid,
)

__all__ = [
    "SCHEMA_VERSION",
    "Certificate",
    "ConsistencyError",
    "Recipe",
    "Triple",
    "construct_bundle",
    "dolgachev_sum",
    "enumerate",
    "fiber_sum",
    "intersection_form",
    "invariant_subspace",
    "is_admissible",
    "is_null_admissible",
    "kodaira_classify",
    "monodromy",
    "realize",
    "realize_null",
    "simply_connected_geography",
    "verify_grid",
]

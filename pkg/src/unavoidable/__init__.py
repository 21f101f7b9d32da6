"""Partition numbers, threshold characteristics and linearity of
unavoidable simplicial complexes, in exact rational arithmetic."""
from .complex import (
    GroundMap,
    SimplicialComplex,
    delete_facet,
    is_self_dual,
    join,
    join_power,
    pushforward,
    restriction,
)
from .exceptions import CapacityError, CertificationError, InvalidInputError, UnavoidableError
from .partition import (
    Hypergraph,
    PartitionWitness,
    bad_partition,
    is_minimal_r_unavoidable,
    is_r_unavoidable,
    is_rsj_unavoidable,
    pi,
    pi_extended,
    pi_oracle,
    pi_relative,
    sarkaria_bound,
)
from .symmetry import Permutation, PermGroup, automorphism_group, is_vertex_transitive
from .threshold import (
    Linearity,
    Measure,
    classify,
    epsilon,
    is_linear_threshold,
    rho,
    rho_symmetrized,
    sublevel_complex,
)
from .wh import WeightedHypergraph, nu_omega, selfdual_realization

__all__ = [
    "CapacityError", "CertificationError", "GroundMap", "Hypergraph", "InvalidInputError",
    "Linearity", "Measure", "PartitionWitness", "PermGroup", "Permutation",
    "SimplicialComplex", "UnavoidableError", "WeightedHypergraph", "automorphism_group",
    "bad_partition", "classify", "delete_facet", "epsilon", "is_linear_threshold",
    "is_minimal_r_unavoidable", "is_r_unavoidable", "is_rsj_unavoidable", "is_self_dual",
    "is_vertex_transitive", "join", "join_power", "nu_omega", "pi", "pi_extended",
    "pi_oracle", "pi_relative", "pushforward", "restriction", "rho", "rho_symmetrized",
    "sarkaria_bound", "selfdual_realization", "sublevel_complex",
]

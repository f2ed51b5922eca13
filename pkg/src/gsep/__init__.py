"""Generalized symmetric edge polytopes of regular matroids."""

from importlib.resources import files

from .cuts import (
    extend_cut,
    is_spanning,
    k_cuts,
    k_flows,
    maximal_2cuts,
    preceq,
    signed_circuits,
    spanning_2cuts,
)
from .equivalence import (
    SignedPermutation,
    camion_sign,
    matroid_isomorphism_search,
    unimodular_transform,
    verify_vertex_set_map,
)
from .linalg import (
    IntMatrix,
    det,
    is_totally_unimodular,
    is_weakly_unimodular,
    rank,
    reduce_full_rank,
    standard_form,
)
from .matroid import (
    Graph,
    RegularRep,
    dual,
    from_graph,
    from_matrix,
    fundamental_signed_circuit,
    incidence_matrix,
    is_bipartite,
    simplify,
)
from .polytope import (
    Polytope,
    build_polytope,
    dimension,
    ehrhart_counts,
    facets,
    gamma,
    hstar,
    lattice_points,
    polar_lattice_points,
)
from .toric import (
    Binomial,
    MonomialOrder,
    Triangulation,
    graver_doubled,
    groebner_basis,
    h_vector,
    initial_ideal,
    promote,
    triangulation,
    verify_binomial,
)
from .vectors import SignedVector

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path to one of the bundled example files (e.g. ``"ex-running.mat"``)."""
    return files("gsep") / "fixtures" / name

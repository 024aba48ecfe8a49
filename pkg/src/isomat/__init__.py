"""Isotropic matroids of looped simple graphs.

Construction of the binary matroid represented by (I | A | A+I),
its ordinary/cyclic/vertical/isotropic connectivities, local
equivalence orbits, transverse circuits, and exhaustive verification
campaigns over all labeled graphs of bounded order.
"""

from .connectivity import (
    ConnectivityReport,
    SeparationWitness,
    analyze,
    brute_force_connectivity,
    brute_force_separations,
    classify_vconnect,
    kappa,
    kappa_b,
    tau_and_kappa_star,
)
from .errors import VerificationError
from .fixtures import FIXTURES, fixture
from .graph import (
    Graph,
    Split,
    adjacency_matrix,
    cut_rank,
    find_pendant_or_twins,
    find_split,
    loop_complement,
    nonsimple_local_complement,
    simple_local_complement,
)
from .harness import (
    CampaignResult,
    circle_bound_check,
    enumerate_labeled_graphs,
    has_small_transverse_circuit,
    k44_fixture,
    run_campaign,
)
from .isotropic import (
    GroundElement,
    IsotropicMatroid,
    build,
    chi,
    phi,
    psi,
    tau,
    vertex_triple,
)
from .localeq import Orbit, locally_equivalent_to, min_degree_over_class, orbit

__version__ = "0.1.0"

__all__ = [
    "CampaignResult",
    "ConnectivityReport",
    "FIXTURES",
    "Graph",
    "GroundElement",
    "IsotropicMatroid",
    "Orbit",
    "SeparationWitness",
    "Split",
    "VerificationError",
    "adjacency_matrix",
    "analyze",
    "brute_force_connectivity",
    "brute_force_separations",
    "build",
    "chi",
    "circle_bound_check",
    "classify_vconnect",
    "cut_rank",
    "enumerate_labeled_graphs",
    "find_pendant_or_twins",
    "find_split",
    "fixture",
    "has_small_transverse_circuit",
    "k44_fixture",
    "kappa",
    "kappa_b",
    "locally_equivalent_to",
    "loop_complement",
    "min_degree_over_class",
    "nonsimple_local_complement",
    "orbit",
    "phi",
    "psi",
    "run_campaign",
    "simple_local_complement",
    "tau",
    "tau_and_kappa_star",
    "vertex_triple",
]

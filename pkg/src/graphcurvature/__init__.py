"""Exact discrete curvature for locally finite graphs.

Two notions are computed side by side: a spectral curvature at a vertex
(the best constant in the local curvature-dimension inequality, obtained
as the least eigenvalue of a reduced quadratic form) and a transport
curvature on an edge (one minus the Wasserstein distance between lazy
neighborhood measures, solved exactly over the rationals).  A structure
classification of regular graphs without triangles or 2x3 bicliques
predicts the sign of both, and the checks module verifies all of the
classification and bound statements over generated graph corpora.
"""

from .graphs import (
    Graph,
    GraphError,
    LocalBall,
    Truncation,
    bfs_distances,
    contains_k23,
    contains_k3,
    diameter,
    effective_degree,
    extract_ball,
    is_regular,
    load_graph,
    save_graph,
)
from .bakry_emery import (
    CdResult,
    QuadraticForm,
    cd_curvature,
    eliminate_second_neighbors,
    gamma_form,
    gamma2_form,
    satisfies_cd,
)
from .ollivier import (
    KappaResult,
    LipschitzCertificate,
    Measure,
    TransportPlan,
    TransportProblem,
    WassersteinResult,
    certificate_violations,
    extend_certificate,
    kappa_detail,
    kappa_lower_witness,
    kappa_safe,
    kappa_upper_witness,
    lazy_measure,
    ollivier_kappa,
    validate_plan,
    wasserstein,
)
from .classify import (
    ClassVerdict,
    LinkProfile,
    StructureClass,
    bipartite_decomposition,
    cd_ollivier_consistency,
    classify_vertex,
    interchange_class,
    link_profile,
)
from .corpus import (
    CorpusItem,
    build_item,
    default_corpus,
    default_corpus_specs,
    parse_graph_spec,
)
from .checks import gather_facts, run_checks

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "LocalBall", "Truncation",
    "bfs_distances", "contains_k23", "contains_k3", "diameter",
    "effective_degree", "extract_ball", "is_regular", "load_graph",
    "save_graph",
    "CdResult", "QuadraticForm", "cd_curvature",
    "eliminate_second_neighbors", "gamma_form", "gamma2_form",
    "satisfies_cd",
    "KappaResult", "LipschitzCertificate", "Measure", "TransportPlan",
    "TransportProblem", "WassersteinResult", "certificate_violations",
    "extend_certificate", "kappa_detail", "kappa_lower_witness",
    "kappa_safe", "kappa_upper_witness", "lazy_measure", "ollivier_kappa",
    "validate_plan", "wasserstein",
    "ClassVerdict", "LinkProfile", "StructureClass",
    "bipartite_decomposition", "cd_ollivier_consistency", "classify_vertex",
    "interchange_class", "link_profile",
    "CorpusItem", "build_item", "default_corpus", "default_corpus_specs",
    "parse_graph_spec",
    "gather_facts", "run_checks",
]

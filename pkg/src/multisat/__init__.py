"""Saturated subgraphs of complete balanced multipartite graphs."""

from .cliques import common_neighborhood, completes_kt, contains_clique
from .constructions import (
    ConstructionArtifacts,
    ConstructionSpec,
    build,
    build_fknt,
    build_g1,
    build_g2,
    build_gknt,
    build_hknt,
    build_iknt,
    general_bound_formula,
    sat_k3_formula,
    size_formula,
)
from .errors import (
    CapExceededError,
    ContractError,
    Graph6ParseError,
    IndexDomainError,
    MultipartiteViolationError,
    MultisatError,
    NoClosedFormError,
    ParameterDomainError,
)
from .graph import Edge, Host, Subgraph, make_host
from .graph6 import decode_graph6, encode_graph6
from .search import ExactResult, brute_force_sat, greedy_saturate, random_greedy_upper_bound
from .verify import SaturationReport, density_profile, is_kt_free, verify_saturated

__version__ = "0.1.0"

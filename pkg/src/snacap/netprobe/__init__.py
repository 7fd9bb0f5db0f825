"""Graph analytics: generators, metrics, centralities, communities, diffusion."""

from .graph import Graph, format_edge_list, parse_edge_list
from .generators import barabasi_albert, er_gnm, generate, gilbert_gnp, watts_strogatz
from .metrics import (
    BalanceReport,
    GraphReport,
    basic_metrics,
    connected_components,
    global_clustering,
    local_clustering,
    triad_balance,
    triangle_count,
)
from .centrality import (
    CentralityResult,
    betweenness_centrality,
    centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    pagerank,
)
from .community import (
    girvan_newman,
    girvan_newman_max_modularity,
    greedy_modularity,
    greedy_quasi_clique,
    is_gamma_dense,
    k_core,
    modularity,
    quasi_clique_density,
)
from .diffusion import Trajectory, diffuse

__all__ = [
    "Graph",
    "parse_edge_list",
    "format_edge_list",
    "er_gnm",
    "gilbert_gnp",
    "watts_strogatz",
    "barabasi_albert",
    "generate",
    "GraphReport",
    "BalanceReport",
    "basic_metrics",
    "connected_components",
    "global_clustering",
    "local_clustering",
    "triangle_count",
    "triad_balance",
    "CentralityResult",
    "centrality",
    "degree_centrality",
    "closeness_centrality",
    "betweenness_centrality",
    "eigenvector_centrality",
    "pagerank",
    "modularity",
    "greedy_modularity",
    "girvan_newman",
    "girvan_newman_max_modularity",
    "k_core",
    "quasi_clique_density",
    "is_gamma_dense",
    "greedy_quasi_clique",
    "Trajectory",
    "diffuse",
]

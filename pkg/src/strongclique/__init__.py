"""Strong cliques and CIS graphs, with a focus on diamond-free inputs."""

__version__ = "0.1.0"

from .certificates import Verdict
from .classify import (
    Classification,
    CliqueSimplicial,
    CompleteBipartite,
    NotCIS,
    Rook,
    classify_diamond_free_cis,
    is_rook_graph,
)
from .diamond import is_diamond_free, maximal_cliques_diamond_free
from .edge_simplicial import (
    companion_multigraph,
    degree_greedy_stable_set,
    is_edge_simplicial,
    is_edge_simplicial_linear,
)
from .errors import GraphError
from .ffree import cis_for_f_free, is_cograph
from .formats import (
    GraphDocument,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
)
from .generators import generate
from .graph import Graph, VertexOrder, build_graph, sort_adjacency
from .oracle import decision_suite, is_cis_bruteforce, is_strong_clique
from .reductions import build_g_double_prime, build_g_prime, check_proposition_equivalences

__all__ = [
    "Classification",
    "CliqueSimplicial",
    "CompleteBipartite",
    "Graph",
    "GraphDocument",
    "GraphError",
    "NotCIS",
    "Rook",
    "Verdict",
    "VertexOrder",
    "build_g_double_prime",
    "build_g_prime",
    "build_graph",
    "check_proposition_equivalences",
    "cis_for_f_free",
    "classify_diamond_free_cis",
    "companion_multigraph",
    "decision_suite",
    "degree_greedy_stable_set",
    "emit_edge_list",
    "emit_graph6",
    "generate",
    "is_cis_bruteforce",
    "is_cograph",
    "is_diamond_free",
    "is_edge_simplicial",
    "is_edge_simplicial_linear",
    "is_rook_graph",
    "is_strong_clique",
    "maximal_cliques_diamond_free",
    "parse_edge_list",
    "parse_graph6",
    "read_graph",
    "sort_adjacency",
]

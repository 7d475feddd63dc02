"""Structural invariants checked on the corpus (acceptance) and on hypothesis draws.

Each function returns None when the invariant holds and a short description of
the violation otherwise.
"""

from __future__ import annotations

from collections import Counter

from strongclique.diamond import is_diamond_free, maximal_cliques_diamond_free
from strongclique.edge_simplicial import (
    companion_multigraph,
    degree_greedy_stable_set,
    is_edge_simplicial_linear,
    simplicial_vertices,
)
from strongclique.graph import Graph
from strongclique.oracle import all_p4_settled, is_cis_bruteforce, is_strong_clique
from strongclique.reductions import build_g_double_prime, build_g_prime


def clique_count_at_most_m(g: Graph):
    if len(maximal_cliques_diamond_free(g).cliques) > g.m:
        return "more maximal cliques than edges"


def one_neighbour_in_foreign_clique(g: Graph):
    sets = g.neighbor_sets
    for c in maximal_cliques_diamond_free(g).cliques:
        cs = set(c)
        for u in range(g.n):
            if u not in cs and len(sets[u] & cs) > 1:
                return f"vertex {u} sees {sorted(sets[u] & cs)} in clique {c}"


def simplicial_cliques_strong(g: Graph):
    for v in simplicial_vertices(g):
        closed = (v, *g.adjacency[v])
        if not is_strong_clique(g, closed).strong:
            return f"closed neighbourhood of simplicial {v} is not strong"


def cis_settles_p4s(g: Graph):
    if is_cis_bruteforce(g).answer and not all_p4_settled(g).answer:
        return "CIS graph with an unsettled P4"


def greedy_set_hits_simplicial_cliques(g: Graph):
    if not is_edge_simplicial_linear(g).answer:
        return None
    s = degree_greedy_stable_set(g).members
    simp = simplicial_vertices(g)
    if not s <= simp:
        return f"greedy picked non-simplicial {sorted(s - simp)}"
    for v in simp:
        closed = {v, *g.adjacency[v]}
        if len(closed & s) != 1:
            return f"simplicial clique {sorted(closed)} holds {len(closed & s)} greedy members"


def duplicate_pair_refutes(g: Graph):
    s = degree_greedy_stable_set(g).members
    h = companion_multigraph(g, s)
    duplicated = any(k > 1 for nbrs in h.adjacency for k in Counter(nbrs).values())
    if duplicated and is_edge_simplicial_linear(g).answer:
        return "G_S has a repeated pair but the test said yes"


def gadgets_diamond_free(g: Graph):
    for build in (build_g_prime, build_g_double_prime):
        if not is_diamond_free(build(g).gadget).answer:
            return f"{build.__name__} produced a diamond"


DIAMOND_FREE_INVARIANTS = (
    clique_count_at_most_m,
    one_neighbour_in_foreign_clique,
    simplicial_cliques_strong,
    cis_settles_p4s,
    greedy_set_hits_simplicial_cliques,
    duplicate_pair_refutes,
)

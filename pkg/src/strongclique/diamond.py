"""Diamond detection and the maximal cliques of a diamond-free graph.

In a diamond-free graph every edge uv lies in exactly one maximal clique,
namely {u, v} together with the common neighborhood of u and v.  Both routines
below walk the edges once and intersect sorted neighbor lists by merging.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .certificates import InducedSubgraphWitness, Verdict
from .errors import NotDiamondFree
from .graph import Graph, VertexOrder, sort_adjacency

__all__ = ["CliqueSet", "is_diamond_free", "maximal_cliques_diamond_free", "common_neighbors"]


def _ascending(g: Graph) -> Graph:
    return sort_adjacency(g, VertexOrder.identity(g.n))


def common_neighbors(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Merge-intersect two ascending neighbor tuples."""
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def _non_adjacent_pair(g: Graph, vertices: list[int]) -> tuple[int, int] | None:
    sets = g.neighbor_sets
    for i, x in enumerate(vertices):
        nx = sets[x]
        for y in vertices[i + 1:]:
            if y not in nx:
                return (x, y)
    return None


def is_diamond_free(g: Graph) -> Verdict:
    """Stops at the first edge whose common neighborhood is not a clique."""
    h = _ascending(g)
    adj = h.adjacency
    for u, v in g.edges():
        common = common_neighbors(adj[u], adj[v])
        if len(common) < 2:
            continue
        pair = _non_adjacent_pair(g, common)
        if pair is not None:
            return Verdict(False, InducedSubgraphWitness((u, v, *pair), "diamond"))
    return Verdict(True)


@dataclass(frozen=True)
class CliqueSet:
    """Maximal cliques of a diamond-free graph.

    ``cliques`` holds the cliques with at least two vertices, in order of their
    lexicographically first edge; ``edge_index`` sends each edge ``(u, v)`` with
    ``u < v`` to the position of its clique; isolated vertices are kept apart.
    """

    cliques: tuple[tuple[int, ...], ...]
    edge_index: Mapping[tuple[int, int], int]
    isolated: frozenset[int]

    def all_cliques(self) -> list[tuple[int, ...]]:
        """Every maximal clique, isolated vertices included as singletons."""
        return list(self.cliques) + [(v,) for v in sorted(self.isolated)]

    def clique_of(self, u: int, v: int) -> tuple[int, ...]:
        return self.cliques[self.edge_index[(u, v) if u < v else (v, u)]]

    def __len__(self) -> int:
        return len(self.cliques) + len(self.isolated)


def maximal_cliques_diamond_free(g: Graph) -> CliqueSet:
    """One clique per not-yet-covered edge; raises NotDiamondFree on a bad candidate."""
    h = _ascending(g)
    adj = h.adjacency
    cliques: list[tuple[int, ...]] = []
    edge_index: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        if (u, v) in edge_index:
            continue
        common = common_neighbors(adj[u], adj[v])
        pair = _non_adjacent_pair(g, common)
        if pair is not None:
            raise NotDiamondFree((u, v, *pair))
        clique = tuple(sorted((u, v, *common)))
        idx = len(cliques)
        for i, x in enumerate(clique):
            for y in clique[i + 1:]:
                if (x, y) in edge_index:
                    # an edge of this clique already sits in another clique
                    other = cliques[edge_index[(x, y)]]
                    # both are maximal, so some z of the old clique misses some t of the new
                    sets = g.neighbor_sets
                    for z in other:
                        if z in clique:
                            continue
                        t = next((t for t in clique if t != z and t not in sets[z]), None)
                        if t is not None:
                            raise NotDiamondFree((x, y, z, t))
                    raise NotDiamondFree(None, f"edge ({x}, {y}) lies in two maximal cliques")
                edge_index[(x, y)] = idx
        cliques.append(clique)
    isolated = frozenset(v for v in range(g.n) if not g.adjacency[v])
    return CliqueSet(tuple(cliques), edge_index, isolated)

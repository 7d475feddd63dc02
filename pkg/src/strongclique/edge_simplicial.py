"""Linear-time test for edge simplicial diamond-free graphs.

A graph is edge simplicial when every edge lies in N[v] for some simplicial
vertex v.  For a diamond-free graph G and its degree-greedy stable set S this
holds exactly when the companion multigraph G_S (every pair of neighbors of
every member of S, with multiplicity) coincides with G - S.  The check below
keeps every pass proportional to |V| + |E|: counting sort for the degree order,
scatter passes for all list sorting, and a counting guard that stops before
G_S can grow beyond |E| entries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .certificates import EdgeWitness, GuardWitness, Verdict
from .errors import NotDiamondFree, NotStable
from .graph import Graph, Multigraph, VertexOrder, sort_adjacency

__all__ = [
    "GreedyStableSet",
    "degree_order",
    "degree_greedy_stable_set",
    "companion_multigraph",
    "is_edge_simplicial_linear",
    "is_edge_simplicial",
    "simplicial_vertices",
]

SELECTED = -1


@dataclass(frozen=True)
class GreedyStableSet:
    """Result of the greedy pass.

    ``selection_trace[v]`` is ``SELECTED`` for members and otherwise the first
    member that marked ``v``.
    """

    members: frozenset[int]
    order_used: VertexOrder
    selection_trace: tuple[int, ...]


def degree_order(g: Graph) -> VertexOrder:
    """Vertices by non-decreasing degree, ties by index; counting sort."""
    buckets: list[list[int]] = [[] for _ in range(g.n)] if g.n else []
    for v in range(g.n):
        buckets[len(g.adjacency[v])].append(v)
    seq = [v for bucket in buckets for v in bucket]
    return VertexOrder.from_sequence(seq)


def _greedy(g: Graph, order: VertexOrder) -> tuple[list[bool], list[int]]:
    in_s = [False] * g.n
    trace = [SELECTED] * g.n
    marked = [False] * g.n
    adjacency = g.adjacency
    for v in order.sequence:
        if marked[v]:
            continue
        in_s[v] = True
        for w in adjacency[v]:
            if not marked[w]:
                marked[w] = True
                trace[w] = v
    return in_s, trace


def degree_greedy_stable_set(g: Graph) -> GreedyStableSet:
    order = degree_order(g)
    in_s, trace = _greedy(g, order)
    members = frozenset(v for v in range(g.n) if in_s[v])
    return GreedyStableSet(members, order, tuple(trace))


def companion_multigraph(g: Graph, s) -> Multigraph:
    """G_S: one copy of xy for each member v of ``s`` and each pair x != y in N(v)."""
    s = set(s)
    sets = g.neighbor_sets
    for v in s:
        if sets[v] & s:
            w = min(sets[v] & s)
            raise NotStable(f"{v} and {w} are adjacent")
    lists: list[list[int]] = [[] for _ in range(g.n)]
    copies = 0
    for v in sorted(s):
        nbrs = g.adjacency[v]
        d = len(nbrs)
        copies += d * (d - 1) // 2
        for i, w in enumerate(nbrs):
            lw = lists[w]
            lw += nbrs[:i]
            lw += nbrs[i + 1:]
    vertices = tuple(v for v in range(g.n) if v not in s)
    return Multigraph(g.n, tuple(map(tuple, lists)), copies, vertices)


def _mismatch(g: Graph, in_s: list[bool], w: int, expected, got) -> EdgeWitness:
    """Pin down one differing entry between L^-_w and L'_w (failure path only)."""
    members = tuple(v for v in range(g.n) if in_s[v])
    want, have = Counter(expected), Counter(got)
    sets = g.neighbor_sets
    for x in expected:
        if have[x] == 0:
            return EdgeWitness(tuple(sorted((w, x))), "missing", members)
    for x, k in have.items():
        seers = tuple(sorted(v for v in sets[w] & sets[x] if in_s[v]))
        if want[x] == 0:
            return EdgeWitness(tuple(sorted((w, x))), "spurious", seers[:1])
        if k > 1:
            return EdgeWitness(tuple(sorted((w, x))), "duplicate", seers[:2])
    raise AssertionError("lists differ but no mismatch found")


def is_edge_simplicial_linear(g: Graph) -> Verdict:
    """Decide whether a diamond-free graph is edge simplicial in O(|V| + |E|).

    The input is assumed diamond-free and this is not checked (use
    :func:`is_edge_simplicial` for a checked call); the answer on other inputs
    carries no meaning.

    On "no" the certificate is a :class:`GuardWitness` when the counting guard
    fires, otherwise an :class:`EdgeWitness` for the first mismatch found.
    """
    n = g.n
    order = degree_order(g)
    ranked = sort_adjacency(g, order)
    in_s, _ = _greedy(ranked, order)

    # adjacency of G - S in sigma order
    adjacency = ranked.adjacency
    minus: list[tuple[int, ...]] = [()] * n
    for w in range(n):
        if not in_s[w]:
            minus[w] = tuple([x for x in adjacency[w] if not in_s[x]])

    total = 0
    for v in range(n):
        if in_s[v]:
            d = len(adjacency[v])
            total += (d + 1) * d // 2
    if total > g.m:
        members = tuple(v for v in range(n) if in_s[v])
        return Verdict(False, GuardWitness(members, total, g.m))

    # adjacency lists of G_S, unsorted
    lists: list[list[int]] = [[] for _ in range(n)]
    copies = 0
    for v in range(n):
        if not in_s[v]:
            continue
        nbrs = adjacency[v]
        copies += len(nbrs) * (len(nbrs) - 1) // 2
        for i, w in enumerate(nbrs):
            lw = lists[w]
            lw += nbrs[:i]
            lw += nbrs[i + 1:]

    for w in range(n):
        if not in_s[w] and len(lists[w]) != len(minus[w]):
            return Verdict(False, _mismatch(g, in_s, w, minus[w], lists[w]))

    vertices = tuple(v for v in range(n) if not in_s[v])
    companion = sort_adjacency(Multigraph(n, tuple(map(tuple, lists)), copies, vertices), order)
    for w in vertices:
        if companion.adjacency[w] != minus[w]:
            return Verdict(False, _mismatch(g, in_s, w, minus[w], companion.adjacency[w]))
    return Verdict(True)


def is_edge_simplicial(g: Graph) -> Verdict:
    """Checked entry point: refuses graphs that contain a diamond."""
    from .diamond import is_diamond_free

    df = is_diamond_free(g)
    if not df.answer:
        raise NotDiamondFree(df.certificate.vertices)
    return is_edge_simplicial_linear(g)


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood is a clique, by a pairwise check."""
    return frozenset(v for v in range(g.n) if g.is_clique(g.adjacency[v]))

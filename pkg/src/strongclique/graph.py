"""Immutable simple graphs and multigraphs over dense vertex ids 0..n-1.

Everything here is a pure function of its inputs.  The only non-trivial
routine is :func:`sort_adjacency`, which reorders every neighbor list by a
vertex ordering in time O(n + m) by scattering, without comparison sorts.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Iterator, Sequence, Union

from .errors import IndexOutOfRange, NotConnected, SelfLoop

__all__ = [
    "Graph",
    "Multigraph",
    "VertexOrder",
    "build_graph",
    "sort_adjacency",
    "connected_components",
    "complete_bipartite_signature",
    "induced_subgraph",
    "complement",
    "disjoint_union",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph.

    ``adjacency[v]`` is a tuple of the neighbors of ``v``; it carries no
    duplicates and no ``v`` itself.  Graphs built by :func:`build_graph` have
    ascending neighbor tuples, but other orders are legal (see
    :func:`sort_adjacency`).
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def __eq__(self, other: object) -> bool:
        # structural equality: same n and same neighbor sets
        if not isinstance(other, Graph) or other.n != self.n or other.m != self.m:
            return NotImplemented if not isinstance(other, Graph) else False
        return self.neighbor_sets == other.neighbor_sets

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.neighbor_sets))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit v set iff v is a neighbor)."""
        out = []
        for nbrs in self.adjacency:
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        sets = self.neighbor_sets
        return all(vs[j] in sets[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        sets = self.neighbor_sets
        return not any(vs[j] in sets[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def check(self) -> None:
        """Assert the representation invariants; raises AssertionError."""
        assert len(self.adjacency) == self.n
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            assert v not in nbrs, f"self-loop at {v}"
            assert len(set(nbrs)) == len(nbrs), f"duplicate neighbor at {v}"
            for w in nbrs:
                assert 0 <= w < self.n
                assert v in self.neighbor_sets[w], f"asymmetric edge {v}-{w}"
            total += len(nbrs)
        assert total == 2 * self.m


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Undirected multigraph on a subset ``vertices`` of 0..n-1.

    Parallel edges appear as repeated entries in the neighbor tuples, once per
    copy.  Ids outside ``vertices`` have empty neighbor tuples.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int
    vertices: tuple[int, ...] = field(default=())

    def __repr__(self) -> str:
        return f"Multigraph(|V|={len(self.vertices)}, m={self.m})"

    def check(self) -> None:
        from collections import Counter

        assert len(self.adjacency) == self.n
        present = set(self.vertices)
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            if v not in present:
                assert not nbrs
            counts = Counter(nbrs)
            for w, k in counts.items():
                assert w in present and w != v
                assert self.adjacency[w].count(v) == k
            total += len(nbrs)
        assert total == 2 * self.m


@dataclass(frozen=True)
class VertexOrder:
    """A linear order of 0..n-1 and its inverse permutation."""

    sequence: tuple[int, ...]
    rank: tuple[int, ...]

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> "VertexOrder":
        n = len(sequence)
        rank = [-1] * n
        for i, v in enumerate(sequence):
            if not 0 <= v < n or rank[v] != -1:
                raise ValueError(f"not a permutation of 0..{n - 1}: {list(sequence)}")
            rank[v] = i
        return cls(tuple(sequence), tuple(rank))

    @classmethod
    def identity(cls, n: int) -> "VertexOrder":
        seq = tuple(range(n))
        return cls(seq, seq)

    def __len__(self) -> int:
        return len(self.sequence)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate pairs collapse to one edge."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        sets[u].add(v)
        sets[v].add(u)
    m = sum(len(s) for s in sets) // 2
    raw = Graph(n, tuple(tuple(s) for s in sets), m)
    return sort_adjacency(raw, VertexOrder.identity(n))


def _graph_from_sets(sets: Sequence[Iterable[int]]) -> Graph:
    adjacency = tuple(tuple(sorted(s)) for s in sets)
    return Graph(len(adjacency), adjacency, sum(len(a) for a in adjacency) // 2)


def sort_adjacency(
    g: Union[Graph, Multigraph], order: VertexOrder
) -> Union[Graph, Multigraph]:
    """Reorder every neighbor list increasingly by ``order.rank``.

    Vertices are scanned in ``order`` and each one is written into the next
    free slot of every neighbor's row, so the work is proportional to n + m and
    multiplicities survive untouched.
    """
    if len(order) != g.n:
        raise ValueError(f"order has {len(order)} entries for a graph on {g.n} ids")
    adjacency = g.adjacency
    # rows live in one flat buffer; keeping the write cursors in a compact
    # array rather than n separate lists cuts cache misses on large inputs
    start = array("q", accumulate(map(len, adjacency), initial=0))
    flat = [0] * start[-1]
    cursor = array("q", start)
    for v in order.sequence:
        for w in adjacency[v]:
            p = cursor[w]
            flat[p] = v
            cursor[w] = p + 1
    adj = tuple([tuple(flat[start[w]:start[w + 1]]) for w in range(g.n)])
    if isinstance(g, Multigraph):
        return Multigraph(g.n, adj, g.m, g.vertices)
    return Graph(g.n, adj, g.m)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each ascending, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def complete_bipartite_signature(g: Graph) -> tuple[int, int] | None:
    """Part sizes ``(a, b)`` with ``a <= b`` if ``g`` is complete bipartite.

    BFS from vertex 0 yields the layers X (distance 1) and Y (distance 2).
    ``g`` is K_{|X|, |Y|+1} exactly when nothing lies beyond Y, no edge joins
    two vertices of one side, every x in X has degree |Y| + 1 and every y in Y
    has degree |X|.  A single vertex is reported as ``(0, 1)``.
    """
    n = g.n
    if n == 0:
        return None
    dist = [-1] * n
    dist[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    if -1 in dist:
        raise NotConnected("complete_bipartite_signature needs a connected graph")
    for v in range(n):
        for w in g.adjacency[v]:
            if dist[v] == dist[w]:
                return None
    xs = [v for v in range(n) if dist[v] == 1]
    ys = [v for v in range(n) if dist[v] == 2]
    if n != 1 + len(xs) + len(ys):
        return None
    if any(len(g.adjacency[x]) != len(ys) + 1 for x in xs):
        return None
    if any(len(g.adjacency[y]) != len(xs) for y in ys):
        return None
    a, b = len(xs), len(ys) + 1
    return (a, b) if a <= b else (b, a)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabelled 0..k-1 in the given order.

    Returns the subgraph and the list mapping new ids back to ``g``'s ids.
    """
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        adj.append(tuple(index[w] for w in g.adjacency[v] if w in index))
    m = sum(len(a) for a in adj) // 2
    return Graph(len(vertices), tuple(adj), m), list(vertices)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    sets = []
    for v, mask in enumerate(g.masks):
        rest = full & ~mask & ~(1 << v)
        sets.append([w for w in range(g.n) if rest >> w & 1])
    return _graph_from_sets(sets)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return build_graph(offset, edges)

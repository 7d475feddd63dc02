"""Graph families: the named ones used in tests and the seeded random ones."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Optional, Sequence

from .errors import BadParams
from .formats import GraphDocument
from .graph import Graph, build_graph

__all__ = [
    "biclique",
    "rook",
    "cycle",
    "path",
    "petersen",
    "grotzsch",
    "random_triangle_free",
    "random_clique_simplicial",
    "random_diamond_free",
    "FAMILIES",
    "generate",
]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def biclique(a: int, b: int) -> Graph:
    """K_{a,b}; the a-side is 0..a-1."""
    _need(a >= 0 and b >= 0, "part sizes must be non-negative")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def rook(n: int) -> Graph:
    """L(K_{n,n}): cell (i, j) is vertex i*n + j; same row or column means adjacent."""
    _need(n >= 1, "rook side must be positive")
    edges = []
    for i in range(n):
        for j in range(n):
            v = i * n + j
            edges.extend((v, i * n + k) for k in range(j + 1, n))
            edges.extend((v, k * n + j) for k in range(i + 1, n))
    return build_graph(n * n, edges)


def cycle(n: int) -> Graph:
    _need(n >= 3, "a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "a path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def grotzsch() -> Graph:
    """Mycielski graph of C5: 11 vertices, triangle-free, chromatic number 4."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
        edges.append((10, 5 + i))
    return build_graph(11, edges)


def random_triangle_free(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """Offer every pair once in random order with probability ``p``; refuse triangles."""
    _need(n >= 0 and 0.0 <= p <= 1.0, "need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in pairs:
        if rng.random() < p and not nbrs[u] & nbrs[v]:
            nbrs[u].add(v)
            nbrs[v].add(u)
    return build_graph(n, [(u, v) for u in range(n) for v in nbrs[u] if u < v])


def _clique_tree(
    rng: random.Random, sizes: tuple[int, int], k: Optional[int], target: Optional[int]
) -> tuple[int, list[tuple[int, int]]]:
    lo, hi = sizes
    _need(2 <= lo <= hi, "clique sizes must satisfy 2 <= lo <= hi")
    edges: list[tuple[int, int]] = []
    attachable: list[int] = []
    n = 0
    count = 0
    while (k is not None and count < k) or (target is not None and n + len(edges) < target):
        s = rng.randint(lo, hi)
        if n == 0:
            members = list(range(s))
            n = s
        else:
            members = [rng.choice(attachable)] + list(range(n, n + s - 1))
            n += s - 1
        edges.extend(combinations(members, 2))
        # the last new vertex stays private, keeping this clique simplicial
        attachable.extend(members[1 if count else 0:-1])
        count += 1
    return n, edges


def random_clique_simplicial(
    k: int, sizes: Sequence[int] = (2, 5), seed: Optional[int] = None, *, target_size: Optional[int] = None
) -> Graph:
    """A connected block graph in which every maximal clique has a private vertex.

    ``k`` cliques with sizes drawn from ``sizes = (lo, hi)``, each glued to an
    earlier clique at one cut vertex.  With ``target_size`` the generator
    instead keeps adding cliques until n + m reaches it.
    """
    rng = random.Random(seed)
    if target_size is None:
        _need(k >= 1, "need at least one clique")
        n, edges = _clique_tree(rng, tuple(sizes), k, None)
    else:
        n, edges = _clique_tree(rng, tuple(sizes), None, target_size)
    return build_graph(n, edges)


def _creates_diamond(nbrs: list[set[int]], touched) -> bool:
    for t in touched:
        for u in nbrs[t]:
            common = list(nbrs[t] & nbrs[u])
            for i, x in enumerate(common):
                for y in common[i + 1:]:
                    if y not in nbrs[x]:
                        return True
    return False


def random_diamond_free(n: int, m: int, seed: Optional[int] = None) -> Graph:
    """Grow a diamond-free graph towards ``m`` edges by inserting small random cliques.

    Each attempt picks 2 to 4 random vertices and adds the missing edges among
    them; attempts that would create a diamond or overshoot ``m`` are rejected.
    Stops after ``m`` edges or a bounded number of attempts, so sparse-enough
    targets are met exactly and dense ones may fall short.
    """
    _need(n >= 0 and 0 <= m <= n * (n - 1) // 2, "need 0 <= m <= n(n-1)/2")
    rng = random.Random(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    edges = 0
    attempts = 0
    while edges < m and attempts < 40 * m + 100 and n >= 2:
        attempts += 1
        s = rng.choice((2, 2, 3, 3, 4))
        s = min(s, n)
        members = rng.sample(range(n), s)
        new = [(u, v) for u, v in combinations(members, 2) if v not in nbrs[u]]
        if not new or edges + len(new) > m:
            continue
        for u, v in new:
            nbrs[u].add(v)
            nbrs[v].add(u)
        if _creates_diamond(nbrs, members):
            for u, v in new:
                nbrs[u].discard(v)
                nbrs[v].discard(u)
            continue
        edges += len(new)
    return build_graph(n, [(u, v) for u in range(n) for v in nbrs[u] if u < v])


# -- family registry used by ``gen`` -------------------------------------------


def _check_biclique(g: Graph, a: int, b: int) -> bool:
    from .graph import complete_bipartite_signature, connected_components

    if a == 0 or b == 0:
        return g.m == 0
    return len(connected_components(g)) == 1 and complete_bipartite_signature(g) == tuple(sorted((a, b)))


def _check_rook(g: Graph, n: int) -> bool:
    from .classify import is_rook_graph

    if n < 3:
        return g.n == n * n and all(len(a) == 2 * (n - 1) for a in g.adjacency)
    return is_rook_graph(g) == n


def _regular(g: Graph, d: int) -> bool:
    return all(len(a) == d for a in g.adjacency)


def _connected(g: Graph) -> bool:
    from .graph import connected_components

    return len(connected_components(g)) <= 1


def _triangle_free(g: Graph) -> bool:
    masks = g.masks
    return not any(masks[u] & masks[v] for u, v in g.edges())


def _diamond_free(g: Graph) -> bool:
    from .diamond import is_diamond_free

    return is_diamond_free(g).answer


def _clique_simplicial(g: Graph) -> bool:
    from .edge_simplicial import is_edge_simplicial_linear

    return _diamond_free(g) and is_edge_simplicial_linear(g).answer


FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[type, ...], Callable[..., bool]]] = {
    "biclique": (biclique, (int, int), _check_biclique),
    "rook": (rook, (int,), _check_rook),
    "cycle": (cycle, (int,), lambda g, n: _regular(g, 2) and _connected(g) and g.n == n),
    "path": (path, (int,), lambda g, n: _connected(g) and g.m == n - 1 and max(g.degrees(), default=0) <= 2),
    "petersen": (petersen, (), lambda g: g.n == 10 and _regular(g, 3) and _triangle_free(g)),
    "grotzsch": (grotzsch, (), lambda g: g.n == 11 and g.m == 20 and _triangle_free(g)),
    "random_triangle_free": (random_triangle_free, (int, float), lambda g, *a: _triangle_free(g)),
    "random_clique_simplicial": (
        lambda k, lo, hi, seed=None: random_clique_simplicial(k, (lo, hi), seed),
        (int, int, int),
        lambda g, *a: _clique_simplicial(g),
    ),
    "random_diamond_free": (random_diamond_free, (int, int), lambda g, *a: _diamond_free(g)),
}

RANDOM_FAMILIES = {"random_triangle_free", "random_clique_simplicial", "random_diamond_free"}


def generate(family: str, params: Sequence = (), seed: Optional[int] = None) -> GraphDocument:
    """Build a family member and re-check the family predicate on the result.

    ``params`` may be strings (from the command line); they are converted to
    the family's parameter types.
    """
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    build, types, predicate = FAMILIES[family]
    if len(params) != len(types):
        raise BadParams(f"{family} takes {len(types)} parameter(s), got {len(params)}")
    try:
        args = [t(p) for t, p in zip(types, params)]
    except ValueError as exc:
        raise BadParams(str(exc)) from None
    if family in RANDOM_FAMILIES:
        g = build(*args, seed=seed)
    else:
        g = build(*args)
    if not predicate(g, *args):
        raise AssertionError(f"{family}{tuple(args)} failed its own family check")
    return GraphDocument(g, None, "edge-list")

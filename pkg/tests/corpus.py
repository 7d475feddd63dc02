"""Graph collections shared by the test modules."""

from __future__ import annotations

import random
from functools import lru_cache
from pathlib import Path

from strongclique.diamond import is_diamond_free
from strongclique.formats import parse_graph6_lines
from strongclique.generators import biclique, cycle, grotzsch, petersen, random_diamond_free, random_triangle_free
from strongclique.graph import Graph, build_graph, connected_components
from strongclique.reductions import validate_class_G

DATA = Path(__file__).parent / "data"
SMALL_GRAPHS = DATA / "graphs_n0-8.g6"

# all graphs / connected graphs on n vertices, n = 0..8 (OEIS A000088 / A001349)
ALL_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
CONNECTED_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853, 11117)


@lru_cache(maxsize=None)
def small_graphs() -> tuple[Graph, ...]:
    return tuple(doc.graph for doc in parse_graph6_lines(SMALL_GRAPHS.read_text()))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


@lru_cache(maxsize=None)
def diamond_free_graphs() -> tuple[Graph, ...]:
    return tuple(g for g in small_graphs() if is_diamond_free(g).answer)


@lru_cache(maxsize=None)
def connected_diamond_free() -> tuple[Graph, ...]:
    return tuple(g for g in diamond_free_graphs() if is_connected(g))


@lru_cache(maxsize=None)
def random_diamond_free_graphs(count: int = 1000, seed: int = 20240611) -> tuple[Graph, ...]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, 16)
        m = rng.randint(0, min(n * (n - 1) // 2, 2 * n))
        out.append(random_diamond_free(n, m, seed=rng.randrange(1 << 30)))
    return tuple(out)


# -- class-G sources for the gadget harness ----------------------------------------


def chvatal() -> Graph:
    adj = {0: [1, 4, 6, 9], 1: [2, 5, 7], 2: [3, 6, 8], 3: [4, 7, 9], 4: [5, 8],
           5: [10, 11], 6: [10, 11], 7: [8, 11], 8: [10], 9: [10, 11]}
    return build_graph(12, [(u, v) for u, vs in adj.items() for v in vs])


def cube() -> Graph:
    return build_graph(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])


def mobius_ladder(k: int) -> Graph:
    """Cycle on 2k vertices plus the k long diagonals."""
    n = 2 * k
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)])


def prism(k: int) -> Graph:
    c = cycle(k).edges()
    return build_graph(2 * k, [e for u, v in c for e in ((u, v), (u + k, v + k))] + [(i, i + k) for i in range(k)])


def grotzsch_plus(attach: tuple[int, int, int]) -> Graph:
    g = grotzsch()
    return build_graph(12, list(g.edges()) + [(11, a) for a in attach])


def _random_class_g(count: int, seed: int) -> list[tuple[str, Graph]]:
    out = []
    s = seed
    while len(out) < count:
        n = 8 + s % 5
        g = random_triangle_free(n, 0.6, seed=s)
        if validate_class_G(g).answer:
            out.append((f"random_tf_{n}_{s}", g))
        s += 1
    return out


# name -> (graph, 3-colourable) for the named sources; chromatic facts are standard
NAMED_CLASS_G = {
    "petersen": (petersen(), True),
    "grotzsch": (grotzsch(), False),
    "chvatal": (chvatal(), False),
    "cube": (cube(), True),
    "wagner": (mobius_ladder(4), True),
    "mobius_10": (mobius_ladder(5), True),
    "mobius_12": (mobius_ladder(6), True),
    "prism_5": (prism(5), True),
    "prism_6": (prism(6), True),
    "grotzsch_plus_shadow": (grotzsch_plus((5, 6, 7)), False),
    "grotzsch_plus_mixed": (grotzsch_plus((0, 2, 10)), False),
}


def class_g_sources() -> list[tuple[str, Graph]]:
    out = [(f"K{a},{b}", biclique(a, b)) for a in range(3, 7) for b in range(a, 13 - a)]
    out += [(name, g) for name, (g, _) in NAMED_CLASS_G.items()]
    out += _random_class_g(4, seed=1)
    return out

"""Named graphs on at most four vertices and induced-copy detection."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .certificates import InducedSubgraphWitness, Verdict, pattern_key
from .graph import Graph, build_graph

__all__ = ["Pattern", "PATTERNS", "FOUR_VERTEX", "COMPLEMENT_NAME", "get_pattern", "contains_induced"]


@dataclass(frozen=True)
class Pattern:
    name: str
    k: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def graph(self) -> Graph:
        return build_graph(self.k, self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        """k x k symmetric boolean matrix."""
        sets = self.graph.neighbor_sets
        return tuple(tuple(j in sets[i] for j in range(self.k)) for i in range(self.k))

    @cached_property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return pattern_key(self.graph, range(self.k))

    @property
    def complement_name(self) -> str:
        return COMPLEMENT_NAME[self.name]


_DEFS = {
    # four vertices
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "paw": (4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "empty4": (4, []),
    "co-diamond": (4, [(2, 3)]),
    "2K2": (4, [(0, 1), (2, 3)]),
    "co-paw": (4, [(1, 2), (2, 3)]),
    "co-claw": (4, [(1, 2), (1, 3), (2, 3)]),
    # fewer vertices
    "K1": (1, []),
    "K2": (2, [(0, 1)]),
    "empty2": (2, []),
    "K3": (3, [(0, 1), (1, 2), (0, 2)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "co-P3": (3, [(0, 1)]),
    "empty3": (3, []),
}

PATTERNS: dict[str, Pattern] = {name: Pattern(name, k, tuple(e)) for name, (k, e) in _DEFS.items()}

FOUR_VERTEX = ("K4", "diamond", "C4", "paw", "claw", "P4", "empty4", "co-diamond", "2K2", "co-paw", "co-claw")

COMPLEMENT_NAME = {
    "K4": "empty4",
    "diamond": "co-diamond",
    "C4": "2K2",
    "paw": "co-paw",
    "claw": "co-claw",
    "P4": "P4",
    "K1": "K1",
    "K2": "empty2",
    "K3": "empty3",
    "P3": "co-P3",
}
COMPLEMENT_NAME.update({v: k for k, v in list(COMPLEMENT_NAME.items())})


def get_pattern(name: str) -> Pattern:
    try:
        return PATTERNS[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; known: {', '.join(PATTERNS)}") from None


def _found(vertices, name: str) -> Verdict:
    return Verdict(True, InducedSubgraphWitness(tuple(vertices), name))


def _scan(g: Graph, p: Pattern) -> Verdict:
    masks = g.masks
    target = p.key
    for sub in combinations(range(g.n), p.k):
        sub_mask = 0
        for v in sub:
            sub_mask |= 1 << v
        degs = sorted((masks[v] & sub_mask).bit_count() for v in sub)
        if (p.k, tuple(degs)) == target:
            return _found(sub, p.name)
    return Verdict(False)


def _claw(g: Graph) -> Verdict:
    masks = g.masks
    for c in range(g.n):
        nbrs = g.adjacency[c]
        if len(nbrs) < 3:
            continue
        for a, b in combinations(nbrs, 2):
            if masks[a] >> b & 1:
                continue
            rest = masks[c] & ~masks[a] & ~masks[b] & ~(1 << a) & ~(1 << b)
            if rest:
                d = (rest & -rest).bit_length() - 1
                return _found((c, a, b, d), "claw")
    return Verdict(False)


def _paw(g: Graph) -> Verdict:
    # anchored on a triangle (u, v, w) plus a vertex seeing exactly u
    masks = g.masks
    for u, v in g.edges():
        common = masks[u] & masks[v]
        while common:
            w = (common & -common).bit_length() - 1
            common &= common - 1
            for a, b, c in ((u, v, w), (v, u, w), (w, u, v)):
                pend = masks[a] & ~masks[b] & ~masks[c] & ~(1 << b) & ~(1 << c)
                if pend:
                    x = (pend & -pend).bit_length() - 1
                    return _found((a, b, c, x), "paw")
    return Verdict(False)


def _k4(g: Graph) -> Verdict:
    masks = g.masks
    for u, v in g.edges():
        common = masks[u] & masks[v]
        rest = common
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            more = common & masks[w]
            if more:
                x = (more & -more).bit_length() - 1
                return _found((u, v, w, x), "K4")
    return Verdict(False)


def _diamond(g: Graph) -> Verdict:
    from .diamond import is_diamond_free

    v = is_diamond_free(g)
    return Verdict(not v.answer, v.certificate)


def _p4(g: Graph) -> Verdict:
    # anchored on the middle edge; witness listed in path order
    masks = g.masks
    for b, c in g.edges():
        for mid_a, mid_b in ((b, c), (c, b)):
            ends_a = masks[mid_a] & ~masks[mid_b] & ~(1 << mid_b)
            ends_b = masks[mid_b] & ~masks[mid_a] & ~(1 << mid_a)
            while ends_a:
                a = (ends_a & -ends_a).bit_length() - 1
                ends_a &= ends_a - 1
                far = ends_b & ~masks[a]
                if far:
                    d = (far & -far).bit_length() - 1
                    return _found((a, mid_a, mid_b, d), "P4")
    return Verdict(False)


_ANCHORED = {"claw": _claw, "paw": _paw, "K4": _k4, "diamond": _diamond, "P4": _p4}


def contains_induced(g: Graph, p: Pattern | str) -> Verdict:
    """Does ``g`` contain an induced copy of ``p``?

    On a hit the certificate lists the vertices of one copy.  Diamond, paw,
    claw, K4 and P4 are searched from anchoring edges or centres; the rest use a
    plain scan over all k-subsets with early exit.
    """
    if isinstance(p, str):
        p = get_pattern(p)
    finder = _ANCHORED.get(p.name)
    if finder is not None:
        return finder(g)
    return _scan(g, p)


contains_induced_4 = contains_induced

"""Exact, exponential-time ground truth for strong cliques and CIS graphs.

Vertex sets are handled as integer bitmasks internally and returned as
ascending tuples.  Enumerations are capped (default 24 vertices, override with
the ``STRONGCLIQUE_ORACLE_CAP`` environment variable or the ``cap`` argument).
Searches for a stable set dominating a clique are capped on the clique size
instead, since their depth is bounded by it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .certificates import (
    DisjointPairWitness,
    InducedSubgraphWitness,
    StableSetWitness,
    Verdict,
)
from .errors import BadPartition, CapExceeded, NotAClique
from .graph import Graph

__all__ = [
    "DEFAULT_CAP",
    "oracle_cap",
    "StrongCliqueReport",
    "DecisionReport",
    "maximal_cliques",
    "maximal_stable_sets",
    "is_strong_clique",
    "dominating_stable_set",
    "extend_to_maximal_stable",
    "is_cis_bruteforce",
    "all_p4_settled",
    "alpha_omega",
    "is_edge_simplicial_bruteforce",
    "has_strong_clique",
    "every_vertex_in_strong_clique",
    "partition_all_strong",
    "strong_clique_partition",
    "decision_suite",
]

DEFAULT_CAP = 24
CAP_ENV = "STRONGCLIQUE_ORACLE_CAP"


def oracle_cap(cap: Optional[int] = None) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(size: int, cap: Optional[int], what: str = "vertices") -> None:
    limit = oracle_cap(cap)
    if size > limit:
        raise CapExceeded(size, limit, what)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def _to_mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _bron_kerbosch(masks: Sequence[int], universe: int) -> list[int]:
    """All maximal cliques (as masks) of the graph given by ``masks``, Tomita pivoting."""
    out: list[int] = []

    def rec(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        pivot, best = -1, -1
        for u in _bits(p | x):
            k = (p & masks[u]).bit_count()
            if k > best:
                pivot, best = u, k
        for v in _bits(p & ~masks[pivot]):
            bit = 1 << v
            rec(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    rec(0, universe, 0)
    return out


def _complement_masks(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]


def _sorted_sets(masks: list[int]) -> list[tuple[int, ...]]:
    return sorted(_to_tuple(m) for m in masks)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques of an arbitrary graph, lexicographically sorted.

    Not capped: callers use it on sparse gadget graphs with few cliques.
    """
    if g.n == 0:
        return []
    return _sorted_sets(_bron_kerbosch(g.masks, (1 << g.n) - 1))


def maximal_stable_sets(g: Graph, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Every maximal stable set exactly once, in lexicographic order."""
    _check_cap(g.n, cap)
    if g.n == 0:
        return iter(())
    found = _bron_kerbosch(_complement_masks(g), (1 << g.n) - 1)
    return iter(_sorted_sets(found))


def extend_to_maximal_stable(g: Graph, stable: Sequence[int]) -> tuple[int, ...]:
    """Greedily add vertices (ascending) until the stable set is maximal."""
    masks = g.masks
    chosen = _to_mask(stable)
    blocked = chosen
    for v in stable:
        blocked |= masks[v]
    for v in range(g.n):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= (1 << v) | masks[v]
    return _to_tuple(chosen)


@dataclass(frozen=True)
class StrongCliqueReport:
    clique: tuple[int, ...]
    strong: bool
    witness: Optional[tuple[int, ...]] = None

    def certificate(self) -> Optional[StableSetWitness]:
        if self.witness is None:
            return None
        return StableSetWitness(self.clique, self.witness)


def dominating_stable_set(g: Graph, clique: Sequence[int]) -> Optional[tuple[int, ...]]:
    """A stable set outside ``clique`` dominating it, or None.

    Backtracking over the clique: pick the undominated clique vertex with the
    fewest usable outside neighbors and branch on them.  Every step dominates
    at least one new clique vertex, so witnesses never exceed ``len(clique)``.
    """
    masks = g.masks
    cmask = _to_mask(clique)
    outside = [masks[c] & ~cmask for c in clique]
    order = list(range(len(clique)))

    def rec(undominated: int, blocked: int, chosen: int) -> Optional[int]:
        if not undominated:
            return chosen
        best_i, best_cands, best_count = -1, 0, 1 << 30
        for i in order:
            if not undominated >> i & 1:
                continue
            cands = outside[i] & ~blocked
            k = cands.bit_count()
            if k < best_count:
                best_i, best_cands, best_count = i, cands, k
                if k == 0:
                    return None
        for x in _bits(best_cands):
            mx = masks[x]
            covered = 0
            for i in _bits(undominated):
                if mx >> clique[i] & 1:
                    covered |= 1 << i
            found = rec(undominated & ~covered, blocked | mx | (1 << x), chosen | (1 << x))
            if found is not None:
                return found
        return None

    result = rec((1 << len(clique)) - 1, 0, 0)
    return None if result is None else _to_tuple(result)


def is_strong_clique(g: Graph, clique: Sequence[int], cap: Optional[int] = None) -> StrongCliqueReport:
    """Strong iff no stable set outside the clique dominates it."""
    c = tuple(sorted(set(clique)))
    if not c:
        raise NotAClique("empty vertex set")
    if any(not 0 <= v < g.n for v in c) or not g.is_clique(c):
        raise NotAClique(f"{list(c)} is not a clique")
    _check_cap(len(c), cap, "clique vertices")
    witness = dominating_stable_set(g, c)
    return StrongCliqueReport(c, witness is None, witness)


def is_cis_bruteforce(g: Graph, cap: Optional[int] = None) -> Verdict:
    """Does every maximal clique meet every maximal stable set?"""
    _check_cap(g.n, cap)
    if g.n == 0:
        return Verdict(True)
    universe = (1 << g.n) - 1
    cliques = sorted(_bron_kerbosch(g.masks, universe), key=_to_tuple)
    stables = sorted(_bron_kerbosch(_complement_masks(g), universe), key=_to_tuple)
    for c in cliques:
        for s in stables:
            if not c & s:
                return Verdict(False, DisjointPairWitness(_to_tuple(c), _to_tuple(s)))
    return Verdict(True)


def all_p4_settled(g: Graph) -> Verdict:
    """Is every induced P4 a-b-c-d settled by some v seeing b, c but not a, d?"""
    masks = g.masks
    for b, c in g.edges():
        common = masks[b] & masks[c]
        for x, y in ((b, c), (c, b)):
            ends_x = masks[x] & ~masks[y] & ~(1 << y)
            ends_y = masks[y] & ~masks[x] & ~(1 << x)
            for a in _bits(ends_x):
                for d in _bits(ends_y & ~masks[a]):
                    if not common & ~masks[a] & ~masks[d]:
                        return Verdict(False, InducedSubgraphWitness((a, x, y, d), "P4"))
    return Verdict(True)


def alpha_omega(g: Graph, cap: Optional[int] = None) -> tuple[int, int]:
    """Exact stability and clique numbers."""
    _check_cap(g.n, cap)
    if g.n == 0:
        return (0, 0)
    universe = (1 << g.n) - 1
    omega = max(c.bit_count() for c in _bron_kerbosch(g.masks, universe))
    alpha = max(s.bit_count() for s in _bron_kerbosch(_complement_masks(g), universe))
    return (alpha, omega)


def is_edge_simplicial_bruteforce(g: Graph) -> bool:
    """Every edge inside N[v] for some vertex v whose neighborhood is a clique."""
    masks = g.masks
    closed = [
        masks[v] | (1 << v)
        for v in range(g.n)
        if g.is_clique(g.adjacency[v])
    ]
    for u, v in g.edges():
        pair = (1 << u) | (1 << v)
        if not any(c & pair == pair for c in closed):
            return False
    return True


# -- the five decision problems -------------------------------------------------
#
# A clique C that is not maximal is never strong: any vertex extending C
# dominates it on its own.  So all five problems only need the maximal cliques
# and their strongness.


def _maximal_clique_family(g: Graph) -> list[tuple[int, ...]]:
    from .diamond import is_diamond_free, maximal_cliques_diamond_free

    if is_diamond_free(g).answer:
        return sorted(maximal_cliques_diamond_free(g).all_cliques())
    return maximal_cliques(g)


class _StrongnessCache:
    def __init__(self, g: Graph, cap: Optional[int]):
        self.g = g
        self.cap = cap
        self.reports: dict[tuple[int, ...], StrongCliqueReport] = {}

    def __call__(self, clique: tuple[int, ...]) -> StrongCliqueReport:
        rep = self.reports.get(clique)
        if rep is None:
            rep = is_strong_clique(self.g, clique, self.cap)
            self.reports[clique] = rep
        return rep


def has_strong_clique(g: Graph, cap: Optional[int] = None) -> Verdict:
    """Strong Clique Existence.  The certificate on "yes" is the strong clique."""
    check = _StrongnessCache(g, cap)
    for c in _maximal_clique_family(g):
        if check(c).strong:
            return Verdict(True, c)
    return Verdict(False)


def every_vertex_in_strong_clique(g: Graph, cap: Optional[int] = None) -> Verdict:
    """Strong Clique Vertex Cover.  On "no" the certificate is an uncovered vertex."""
    check = _StrongnessCache(g, cap)
    covered = 0
    for c in _maximal_clique_family(g):
        if check(c).strong:
            covered |= _to_mask(c)
    missing = ((1 << g.n) - 1) & ~covered
    if missing:
        return Verdict(False, (missing & -missing).bit_length() - 1)
    return Verdict(True)


def _check_partition(g: Graph, partition: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    seen = 0
    parts = []
    for part in partition:
        p = tuple(sorted(part))
        if not p or not g.is_clique(p):
            raise BadPartition(f"{list(p)} is not a clique")
        mask = _to_mask(p)
        if mask & seen:
            raise BadPartition("parts overlap")
        seen |= mask
        parts.append(p)
    if seen != (1 << g.n) - 1:
        raise BadPartition("parts do not cover every vertex")
    return parts


def partition_all_strong(
    g: Graph, partition: Sequence[Sequence[int]], cap: Optional[int] = None
) -> Verdict:
    """Strong Clique Partition.  On "no" the certificate is a StableSetWitness."""
    parts = _check_partition(g, partition)
    for p in parts:
        rep = is_strong_clique(g, p, cap)
        if not rep.strong:
            return Verdict(False, rep.certificate())
    return Verdict(True)


def strong_clique_partition(g: Graph, cap: Optional[int] = None) -> Verdict:
    """Strong Clique Partition Existence, by exact cover over strong maximal cliques.

    On "yes" the certificate is the partition found.
    """
    check = _StrongnessCache(g, cap)
    strong = [_to_mask(c) for c in _maximal_clique_family(g) if check(c).strong]
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for c in strong:
        for v in _bits(c):
            by_vertex[v].append(c)

    def rec(uncovered: int, chosen: list[int]) -> Optional[list[int]]:
        if not uncovered:
            return chosen
        best, options = -1, None
        for v in _bits(uncovered):
            opts = [c for c in by_vertex[v] if c & uncovered == c]
            if options is None or len(opts) < len(options):
                best, options = v, opts
                if not opts:
                    return None
        for c in options:
            found = rec(uncovered & ~c, chosen + [c])
            if found is not None:
                return found
        return None

    found = rec((1 << g.n) - 1, [])
    if found is None:
        return Verdict(False)
    return Verdict(True, tuple(sorted(_to_tuple(c) for c in found)))


@dataclass(frozen=True)
class DecisionReport:
    """Answers to the five strong-clique decision problems for one graph."""

    clique_reports: tuple[StrongCliqueReport, ...]
    strong_clique: Optional[StrongCliqueReport]
    has_strong_clique: bool
    every_vertex_in_strong_clique: bool
    uncovered_vertex: Optional[int]
    partition_all_strong: Optional[bool]
    partition_failure: Optional[StableSetWitness]
    partition_exists: bool
    strong_partition: Optional[tuple[tuple[int, ...], ...]] = field(default=None)


def decision_suite(
    g: Graph,
    partition: Optional[Sequence[Sequence[int]]] = None,
    clique: Optional[Sequence[int]] = None,
    cap: Optional[int] = None,
) -> DecisionReport:
    """Answer all five problems by brute force.

    ``clique`` is the instance for Strong Clique; ``partition`` the instance
    for Strong Clique Partition (left as None when not given).
    """
    if partition is not None:
        parts = _check_partition(g, partition)
    check = _StrongnessCache(g, cap)
    family = _maximal_clique_family(g)
    reports = tuple(check(c) for c in family)

    single = is_strong_clique(g, clique, cap) if clique is not None else None
    strong_masks = [_to_mask(r.clique) for r in reports if r.strong]
    covered = 0
    for c in strong_masks:
        covered |= c
    missing = ((1 << g.n) - 1) & ~covered

    part_ok = part_fail = None
    if partition is not None:
        part_ok = True
        for p in parts:
            rep = check(p) if p in check.reports else is_strong_clique(g, p, cap)
            if not rep.strong:
                part_ok, part_fail = False, rep.certificate()
                break

    exists = strong_clique_partition(g, cap)
    return DecisionReport(
        clique_reports=reports,
        strong_clique=single,
        has_strong_clique=bool(strong_masks),
        every_vertex_in_strong_clique=not missing,
        uncovered_vertex=(missing & -missing).bit_length() - 1 if missing else None,
        partition_all_strong=part_ok,
        partition_failure=part_fail,
        partition_exists=exists.answer,
        strong_partition=exists.certificate,
    )

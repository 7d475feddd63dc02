"""Hardness gadgets built from 3-colourability instances.

Sources are triangle-free graphs on at least five vertices with minimum
degree at least 3.  For such a source G on n vertices:

* G' has vertices (v, i), v in V(G), i in 0..3, numbered 4v + i.  Each column
  {(v, 0), .., (v, 3)} is a clique C_v, level 0 is a clique C, and on levels
  1..3 (u, i) ~ (v, i) exactly when uv is an edge of G.
* G'' adds a pendant w' to each of the 3n vertices w outside C, numbered
  4n, 4n + 1, ... in increasing order of w.

G is 3-colourable iff C is dominated by a stable set of G' - C, and a
colouring with classes S1, S2, S3 gives exactly such a set S1x{1} + S2x{2} +
S3x{3}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .certificates import InducedSubgraphWitness, Verdict, VertexWitness
from .diamond import is_diamond_free
from .errors import CapExceeded, EquivalenceViolation, NotDiamondFree, NotInClassG
from .graph import Graph, build_graph
from .oracle import (
    dominating_stable_set,
    every_vertex_in_strong_clique,
    has_strong_clique,
    is_strong_clique,
    oracle_cap,
    partition_all_strong,
    strong_clique_partition,
)

__all__ = [
    "ReductionOutput",
    "validate_class_G",
    "build_g_prime",
    "build_g_double_prime",
    "is_3_colorable_bf",
    "coloring_to_stable_set",
    "stable_set_to_coloring",
    "EquivalenceReport",
    "check_proposition_equivalences",
]

LEVELS = 4


@dataclass(frozen=True)
class ReductionOutput:
    gadget: Graph
    source_n: int
    distinguished_clique: tuple[int, ...]
    pendant_map: Mapping[int, int] = field(default_factory=dict)

    def level_map(self, v: int, i: int) -> int:
        """Gadget vertex of source vertex ``v`` at level ``i``."""
        if not (0 <= v < self.source_n and 0 <= i < LEVELS):
            raise IndexError(f"no gadget vertex for ({v}, {i})")
        return LEVELS * v + i

    def level_of(self, w: int) -> tuple[int, int]:
        """Inverse of :meth:`level_map` on the 4n column vertices."""
        if not 0 <= w < LEVELS * self.source_n:
            raise IndexError(f"{w} is not a column vertex")
        return divmod(w, LEVELS)

    def column(self, v: int) -> tuple[int, ...]:
        return tuple(self.level_map(v, i) for i in range(LEVELS))


def validate_class_G(g: Graph) -> Verdict:
    """Triangle-free, at least five vertices, minimum degree at least 3."""
    if g.n < 5:
        return Verdict(False)
    for v in range(g.n):
        if g.degree(v) < 3:
            return Verdict(False, VertexWitness(v, g.degree(v)))
    masks = g.masks
    for u, v in g.edges():
        common = masks[u] & masks[v]
        if common:
            w = (common & -common).bit_length() - 1
            return Verdict(False, InducedSubgraphWitness((u, v, w), "K3"))
    return Verdict(True)


def _require_class_G(g: Graph) -> None:
    verdict = validate_class_G(g)
    if not verdict.answer:
        raise NotInClassG(verdict)


def _g_prime_edges(g: Graph) -> list[tuple[int, int]]:
    edges = []
    for v in range(g.n):
        col = [LEVELS * v + i for i in range(LEVELS)]
        edges.extend(combinations(col, 2))
    edges.extend((LEVELS * u, LEVELS * v) for u, v in combinations(range(g.n), 2))
    for u, v in g.edges():
        for i in range(1, LEVELS):
            edges.append((LEVELS * u + i, LEVELS * v + i))
    return edges


def build_g_prime(g: Graph) -> ReductionOutput:
    _require_class_G(g)
    gadget = build_graph(LEVELS * g.n, _g_prime_edges(g))
    df = is_diamond_free(gadget)
    if not df.answer:
        raise NotDiamondFree(df.certificate.vertices)
    c = tuple(LEVELS * v for v in range(g.n))
    return ReductionOutput(gadget, g.n, c)


def build_g_double_prime(g: Graph) -> ReductionOutput:
    _require_class_G(g)
    edges = _g_prime_edges(g)
    base = LEVELS * g.n
    pendants = {}
    for w in range(base):
        if w % LEVELS:
            pendants[w] = base + len(pendants)
            edges.append((w, pendants[w]))
    gadget = build_graph(base + len(pendants), edges)
    df = is_diamond_free(gadget)
    if not df.answer:
        raise NotDiamondFree(df.certificate.vertices)
    c = tuple(LEVELS * v for v in range(g.n))
    return ReductionOutput(gadget, g.n, c, pendants)


def is_3_colorable_bf(g: Graph, cap: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """A proper colouring with colours 0, 1, 2, or None.

    Backtracking in vertex order; vertex 0 always gets colour 0, and a vertex
    may only open the next unused colour, so symmetric colourings are skipped.
    """
    limit = oracle_cap(cap)
    if g.n > limit:
        raise CapExceeded(g.n, limit)
    colour = [-1] * g.n
    adjacency = g.adjacency

    def rec(v: int, used: int) -> bool:
        if v == g.n:
            return True
        taken = {colour[w] for w in adjacency[v] if colour[w] >= 0}
        for c in range(min(used + 1, 3)):
            if c in taken:
                continue
            colour[v] = c
            if rec(v + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return tuple(colour) if rec(0, 0) else None


def coloring_to_stable_set(red: ReductionOutput, coloring: Sequence[int]) -> tuple[int, ...]:
    """Colour class c of the source goes to level c + 1."""
    return tuple(sorted(red.level_map(v, c + 1) for v, c in enumerate(coloring)))


def stable_set_to_coloring(red: ReductionOutput, stable: Sequence[int]) -> tuple[int, ...]:
    """Read a colouring off a stable set of G' - C that dominates C."""
    colour = [-1] * red.source_n
    for w in stable:
        v, i = red.level_of(w)
        if i == 0 or colour[v] != -1:
            raise ValueError(f"{w} does not fit a dominating stable set of G' - C")
        colour[v] = i - 1
    if -1 in colour:
        raise ValueError("stable set leaves a column undominated")
    return tuple(colour)


def _proper(g: Graph, colour: Sequence[int]) -> bool:
    return all(colour[u] != colour[v] for u, v in g.edges())


@dataclass(frozen=True)
class EquivalenceReport:
    """The seven statements, each expected to equal ``not_3_colorable``."""

    not_3_colorable: bool
    c_strong_in_g_prime: bool
    g_prime_has_strong_clique: bool
    c_strong_in_g_double_prime: bool
    every_vertex_in_strong_clique: bool
    named_partition_strong: bool
    strong_partition_exists: bool
    coloring: Optional[tuple[int, ...]]
    coloring_witness: Optional[tuple[int, ...]]
    witness_coloring: Optional[tuple[int, ...]]

    @property
    def statements(self) -> tuple[bool, ...]:
        return (
            self.not_3_colorable,
            self.c_strong_in_g_prime,
            self.g_prime_has_strong_clique,
            self.c_strong_in_g_double_prime,
            self.every_vertex_in_strong_clique,
            self.named_partition_strong,
            self.strong_partition_exists,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.statements)) == 1


def check_proposition_equivalences(g: Graph, cap: Optional[int] = None) -> EquivalenceReport:
    """Evaluate all seven statements with the brute-force oracle.

    Also moves witnesses both ways: a colouring of ``g`` to a stable set
    dominating C in G', and the oracle's dominating stable set back to a
    colouring.  Raises EquivalenceViolation if anything disagrees.
    """
    _require_class_G(g)
    gp = build_g_prime(g)
    gpp = build_g_double_prime(g)
    c = gp.distinguished_clique

    coloring = is_3_colorable_bf(g, cap)
    rep_gp = is_strong_clique(gp.gadget, c, cap)
    rep_gpp = is_strong_clique(gpp.gadget, c, cap)
    named = [c] + [(w, p) for w, p in sorted(gpp.pendant_map.items())]

    coloring_witness = None
    if coloring is not None:
        coloring_witness = coloring_to_stable_set(gp, coloring)
        s = set(coloring_witness)
        h = gp.gadget
        if not (h.is_stable(s) and not s & set(c) and all(h.neighbor_sets[x] & s for x in c)):
            raise EquivalenceViolation(f"colouring {coloring} does not map to a dominating stable set")

    witness_coloring = None
    if rep_gp.witness is not None:
        witness_coloring = stable_set_to_coloring(gp, rep_gp.witness)
        if not _proper(g, witness_coloring):
            raise EquivalenceViolation(f"stable set {rep_gp.witness} maps to an improper colouring")

    report = EquivalenceReport(
        not_3_colorable=coloring is None,
        c_strong_in_g_prime=rep_gp.strong,
        g_prime_has_strong_clique=has_strong_clique(gp.gadget, cap).answer,
        c_strong_in_g_double_prime=rep_gpp.strong,
        every_vertex_in_strong_clique=every_vertex_in_strong_clique(gpp.gadget, cap).answer,
        named_partition_strong=partition_all_strong(gpp.gadget, named, cap).answer,
        strong_partition_exists=strong_clique_partition(gpp.gadget, cap).answer,
        coloring=coloring,
        coloring_witness=coloring_witness,
        witness_coloring=witness_coloring,
    )
    if not report.consistent:
        raise EquivalenceViolation(f"statements disagree: {report.statements}")
    return report

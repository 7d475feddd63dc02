"""Yes/no answers bundled with witnesses that can be re-checked from scratch.

Every witness class has a ``verify(g)`` method that checks its claim against
the graph by direct definition checking only: adjacency lookups, stability,
domination.  Nothing in here calls back into the algorithms that produced the
witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .graph import Graph

__all__ = [
    "Verdict",
    "StableSetWitness",
    "DisjointPairWitness",
    "EdgeWitness",
    "InducedSubgraphWitness",
    "GuardWitness",
    "VertexWitness",
    "dominates",
    "is_maximal_clique",
    "is_maximal_stable",
    "pattern_key",
]


def dominates(g: Graph, stable: tuple[int, ...], clique: tuple[int, ...]) -> bool:
    """True if every clique vertex has a neighbor in ``stable``."""
    nbrs = g.neighbor_sets
    return all(any(s in nbrs[c] for s in stable) for c in clique)


def is_maximal_clique(g: Graph, vertices) -> bool:
    vs = set(vertices)
    if not vs or not g.is_clique(vs):
        return False
    sets = g.neighbor_sets
    return not any(vs <= sets[w] for w in range(g.n) if w not in vs)


def is_maximal_stable(g: Graph, vertices) -> bool:
    vs = set(vertices)
    if not g.is_stable(vs):
        return False
    sets = g.neighbor_sets
    return all(sets[w] & vs for w in range(g.n) if w not in vs)


def pattern_key(g: Graph, vertices) -> tuple[int, tuple[int, ...]]:
    """Isomorphism key of an induced subgraph on at most 4 vertices.

    Edge count and sorted degree sequence separate all graphs of order <= 4.
    """
    vs = list(vertices)
    sets = g.neighbor_sets
    degs = sorted(sum(1 for w in vs if w in sets[v]) for v in vs)
    return (len(vs), tuple(degs))


@dataclass(frozen=True)
class StableSetWitness:
    """A stable set outside ``clique`` that dominates it: the clique is not strong."""

    clique: tuple[int, ...]
    stable_set: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        return (
            g.is_clique(self.clique)
            and g.is_stable(self.stable_set)
            and not set(self.clique) & set(self.stable_set)
            and dominates(g, self.stable_set, self.clique)
        )


@dataclass(frozen=True)
class DisjointPairWitness:
    """A maximal clique and a maximal stable set that do not meet: not CIS."""

    clique: tuple[int, ...]
    stable_set: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        return (
            is_maximal_clique(g, self.clique)
            and is_maximal_stable(g, self.stable_set)
            and not set(self.clique) & set(self.stable_set)
        )


@dataclass(frozen=True)
class EdgeWitness:
    """A single vertex pair exposing a mismatch between G - S and G_S.

    ``reason`` is one of

    * ``"missing"``: ``edge`` is an edge of G - S but no member of S sees both
      endpoints (``via`` is the stable set S);
    * ``"spurious"``: ``edge`` is not an edge of G although ``via[0]`` in S sees
      both endpoints;
    * ``"duplicate"``: two members ``via[0], via[1]`` of S both see both
      endpoints, so G_S carries the pair twice.
    """

    edge: tuple[int, int]
    reason: str
    via: tuple[int, ...] = ()

    def verify(self, g: Graph) -> bool:
        x, y = self.edge
        sets = g.neighbor_sets
        sees = lambda v: x in sets[v] and y in sets[v]  # noqa: E731
        if x == y:
            return False
        if self.reason == "missing":
            s = set(self.via)
            return (
                g.has_edge(x, y)
                and x not in s
                and y not in s
                and g.is_stable(self.via)
                and not any(sees(v) for v in self.via)
            )
        if self.reason == "spurious":
            return len(self.via) >= 1 and not g.has_edge(x, y) and sees(self.via[0])
        if self.reason == "duplicate":
            return (
                len(self.via) == 2
                and self.via[0] != self.via[1]
                and not g.has_edge(*self.via)
                and sees(self.via[0])
                and sees(self.via[1])
            )
        return False


@dataclass(frozen=True)
class InducedSubgraphWitness:
    """Vertices inducing a named small pattern."""

    vertices: tuple[int, ...]
    pattern: str

    def verify(self, g: Graph) -> bool:
        from .patterns import PATTERNS

        p = PATTERNS.get(self.pattern)
        if p is None or len(set(self.vertices)) != len(self.vertices):
            return False
        if self.pattern == "P4" and len(self.vertices) == 4:
            # ordered path a-b-c-d
            a, b, c, d = self.vertices
            e = g.has_edge
            if not (e(a, b) and e(b, c) and e(c, d)):
                return False
        return pattern_key(g, self.vertices) == p.key


@dataclass(frozen=True)
class GuardWitness:
    """The counting guard fired: sum of C(d(v)+1, 2) over S exceeds |E|."""

    stable_set: tuple[int, ...]
    total: int
    edges: int

    def verify(self, g: Graph) -> bool:
        total = sum((g.degree(v) + 1) * g.degree(v) // 2 for v in self.stable_set)
        return g.is_stable(self.stable_set) and total == self.total and self.edges == g.m and total > g.m


@dataclass(frozen=True)
class VertexWitness:
    """A vertex breaking a degree condition."""

    vertex: int
    degree: int

    def verify(self, g: Graph) -> bool:
        return g.degree(self.vertex) == self.degree


@dataclass(frozen=True)
class Verdict:
    answer: bool
    certificate: Optional[Any] = None

    def verify(self, g: Graph) -> bool:
        """Re-check the certificate, if any, against ``g``."""
        if self.certificate is None or not hasattr(self.certificate, "verify"):
            return True
        return self.certificate.verify(g)

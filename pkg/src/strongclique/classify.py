"""CIS recognition for diamond-free graphs, one connected component at a time.

A connected diamond-free graph is CIS exactly when it is clique simplicial,
a complete bipartite graph K_{a,b} with a, b >= 2, or the rook's graph
L(K_{n,n}) with n >= 3.  Components are tested in that order of cheapness:
bipartite signature, rook structure, then the linear edge-simplicial check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Union

from .certificates import Verdict
from .diamond import is_diamond_free, maximal_cliques_diamond_free
from .edge_simplicial import is_edge_simplicial_linear
from .errors import NotConnected, NotDiamondFree
from .graph import Graph, complete_bipartite_signature, connected_components, induced_subgraph

__all__ = [
    "CliqueSimplicial",
    "CompleteBipartite",
    "Rook",
    "NotCIS",
    "ComponentClass",
    "Classification",
    "is_rook_graph",
    "classify_diamond_free_cis",
]


@dataclass(frozen=True)
class CliqueSimplicial:
    def __str__(self) -> str:
        return "clique-simplicial"


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def __str__(self) -> str:
        return f"complete-bipartite a={self.a} b={self.b}"


@dataclass(frozen=True)
class Rook:
    n: int

    def __str__(self) -> str:
        return f"rook n={self.n}"


@dataclass(frozen=True)
class NotCIS:
    # the failed edge-simplicial verdict, in component-local vertex ids
    reason: Optional[Verdict] = None

    def __str__(self) -> str:
        return "not-cis"


Tag = Union[CliqueSimplicial, CompleteBipartite, Rook, NotCIS]


@dataclass(frozen=True)
class ComponentClass:
    vertices: tuple[int, ...]
    tag: Tag


@dataclass(frozen=True)
class Classification:
    components: tuple[ComponentClass, ...]

    @property
    def answer(self) -> bool:
        return all(not isinstance(c.tag, NotCIS) for c in self.components)

    @property
    def tags(self) -> list[Tag]:
        return [c.tag for c in self.components]


def _is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_rook_graph(g: Graph, *, check: bool = True) -> Optional[int]:
    """Side length n if ``g`` is L(K_{n,n}) with n >= 3, else None.

    Checks: n^2 vertices, 2(n-1)-regular, exactly 2n maximal cliques of size
    n, every vertex in two of them, and the cliques meeting as K_{n,n} with
    one shared vertex per meeting pair.
    """
    if check:
        if not _is_connected(g):
            raise NotConnected("is_rook_graph needs a connected graph")
        df = is_diamond_free(g)
        if not df.answer:
            raise NotDiamondFree(df.certificate.vertices)
    side = isqrt(g.n)
    if side < 3 or side * side != g.n:
        return None
    if any(len(a) != 2 * (side - 1) for a in g.adjacency):
        return None
    cliques = maximal_cliques_diamond_free(g).cliques
    if len(cliques) != 2 * side or any(len(c) != side for c in cliques):
        return None
    member_of: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for v in c:
            member_of[v].append(i)
    if any(len(ms) != 2 for ms in member_of):
        return None
    # clique intersection graph: one edge per vertex; must be K_{side,side}
    # with no repeated pair
    meets: list[set[int]] = [set() for _ in cliques]
    for i, j in member_of:
        if j in meets[i]:
            return None
        meets[i].add(j)
        meets[j].add(i)
    colour = [-1] * len(cliques)
    colour[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for j in meets[i]:
            if colour[j] == -1:
                colour[j] = 1 - colour[i]
                stack.append(j)
            elif colour[j] == colour[i]:
                return None
    if -1 in colour or colour.count(0) != side:
        return None
    if any(len(meets[i]) != side for i in range(len(cliques))):
        return None
    return side


def _classify_component(h: Graph) -> Tag:
    if h.n <= 2:
        return CliqueSimplicial()
    sig = complete_bipartite_signature(h)
    if sig is not None and sig[0] >= 2:
        return CompleteBipartite(*sig)
    side = is_rook_graph(h, check=False)
    if side is not None:
        return Rook(side)
    verdict = is_edge_simplicial_linear(h)
    if verdict.answer:
        return CliqueSimplicial()
    return NotCIS(verdict)


def classify_diamond_free_cis(g: Graph) -> Classification:
    """Tag every component; the graph is CIS iff no component is NotCIS.

    Raises NotDiamondFree (carrying the diamond) on other inputs.
    """
    df = is_diamond_free(g)
    if not df.answer:
        raise NotDiamondFree(df.certificate.vertices)
    out = []
    for comp in connected_components(g):
        h, _ = induced_subgraph(g, comp)
        out.append(ComponentClass(tuple(comp), _classify_component(h)))
    return Classification(tuple(out))

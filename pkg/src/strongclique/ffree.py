"""Polynomial CIS tests for graphs avoiding a fixed pattern on <= 4 vertices.

CIS is closed under complementation, so each co-pattern is handled by running
the pattern's test on the complement and swapping the roles of clique and
stable set in any witness.
"""

from __future__ import annotations

from typing import Optional

from .certificates import DisjointPairWitness, InducedSubgraphWitness, Verdict
from .classify import classify_diamond_free_cis
from .errors import NotFFree
from .graph import Graph, complement
from .oracle import (
    dominating_stable_set,
    extend_to_maximal_stable,
    is_cis_bruteforce,
    maximal_cliques,
    oracle_cap,
)
from .patterns import COMPLEMENT_NAME, Pattern, contains_induced, get_pattern

__all__ = ["COMPLEMENT_ROUTES", "is_cograph", "cis_for_f_free", "contains_induced_4"]

contains_induced_4 = contains_induced


def _components(masks, universe: int) -> list[int]:
    comps = []
    rest = universe
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = masks[v] & universe & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def is_cograph(g: Graph) -> bool:
    """P4-freeness via the decomposition: split by components of G or of its complement."""
    if g.n <= 1:
        return True
    masks = g.masks
    full = (1 << g.n) - 1
    co_masks = [full & ~m & ~(1 << v) for v, m in enumerate(masks)]

    stack = [full]
    while stack:
        part = stack.pop()
        if part & (part - 1) == 0:
            continue
        comps = _components(masks, part)
        if len(comps) == 1:
            comps = _components(co_masks, part)
            if len(comps) == 1:
                return False
        stack.extend(comps)
    return True


def _not_strong_pair(g: Graph, clique: tuple[int, ...], stable: tuple[int, ...]) -> Verdict:
    """Turn a dominated maximal clique into a disjoint (clique, maximal stable set) pair."""
    return Verdict(False, DisjointPairWitness(clique, extend_to_maximal_stable(g, stable)))


def _every_clique_strong(g: Graph) -> Verdict:
    for c in maximal_cliques(g):
        stable = dominating_stable_set(g, c)
        if stable is not None:
            return _not_strong_pair(g, c, stable)
    return Verdict(True)


def _every_clique_simplicial(g: Graph) -> Verdict:
    sets = g.neighbor_sets
    for c in maximal_cliques(g):
        cs = set(c)
        if any(sets[v] <= cs for v in c):
            continue
        # non-simplicial cliques of C4-free graphs are dominated by a stable set
        stable = dominating_stable_set(g, c)
        if stable is None:
            raise AssertionError(f"non-simplicial clique {c} is strong; graph not C4-free?")
        return _not_strong_pair(g, c, stable)
    return Verdict(True)


def _cograph_test(g: Graph) -> Verdict:
    from .patterns import _p4

    if is_cograph(g):
        return Verdict(True)
    hit = _p4(g)
    # in a paw-free graph this P4 cannot be settled
    return Verdict(False, hit.certificate)


def _swap(v: Verdict) -> Verdict:
    """Map a verdict about the complement back to the original graph."""
    cert = v.certificate
    if isinstance(cert, DisjointPairWitness):
        cert = DisjointPairWitness(cert.stable_set, cert.clique)
    elif isinstance(cert, InducedSubgraphWitness) and cert.pattern in COMPLEMENT_NAME:
        # the complement of a path a-b-c-d is the path b-d-a-c
        if cert.pattern == "P4":
            a, b, c, d = cert.vertices
            cert = InducedSubgraphWitness((b, d, a, c), "P4")
        else:
            cert = InducedSubgraphWitness(cert.vertices, COMPLEMENT_NAME[cert.pattern])
    return Verdict(v.answer, cert)


def _diamond_route(g: Graph) -> Verdict:
    cls = classify_diamond_free_cis(g)
    return Verdict(cls.answer, cls)


_DIRECT = {
    "K4": _every_clique_strong,
    "diamond": _diamond_route,
    "C4": _every_clique_simplicial,
    "paw": _cograph_test,
    "P4": lambda g: Verdict(True),
}
# patterns decided by running the route of their complement on the complement
COMPLEMENT_ROUTES = {"empty4": "K4", "co-diamond": "diamond", "2K2": "C4", "co-paw": "paw"}


def cis_for_f_free(g: Graph, f: Pattern | str, cap: Optional[int] = None) -> Verdict:
    """Is the ``f``-free graph ``g`` CIS?

    Raises NotFFree with an induced copy when ``g`` contains ``f``.  Claw and
    co-claw use the brute-force oracle and so are subject to the cap, as is
    every pattern on fewer than four vertices except K3.
    """
    p = get_pattern(f) if isinstance(f, str) else f
    hit = contains_induced(g, p)
    if hit.answer:
        raise NotFFree(p.name, hit.certificate.vertices)

    name = p.name
    if name == "K3":
        return _diamond_route(g)
    if name in _DIRECT:
        return _DIRECT[name](g)
    if name in COMPLEMENT_ROUTES:
        return _swap(_DIRECT[COMPLEMENT_ROUTES[name]](complement(g)))
    # claw, co-claw and the remaining small patterns
    return is_cis_bruteforce(g, oracle_cap(cap))

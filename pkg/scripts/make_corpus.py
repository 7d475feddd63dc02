"""Regenerate tests/data/graphs_n0-8.g6: every graph on at most 8 vertices, once
per isomorphism class.

Graphs on n vertices come from graphs on n - 1 vertices by attaching a new
vertex to every possible neighbourhood; nauty's canonical certificate removes
duplicates.  Needs pynauty (``pip install pynauty``), which the library itself
does not use.

    python3 scripts/make_corpus.py [MAX_N]
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

import pynauty

from strongclique.formats import encode_graph6
from strongclique.graph import build_graph

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs_n0-8.g6"


def certificate(n: int, adj: list[set[int]]) -> bytes:
    if n == 0:
        return b""
    g = pynauty.Graph(n, adjacency_dict={v: sorted(adj[v]) for v in range(n)})
    return pynauty.certificate(g)


def extend(n: int, classes: list[list[set[int]]]) -> list[list[set[int]]]:
    seen: dict[bytes, list[set[int]]] = {}
    for adj in classes:
        for k in range(n + 1):
            for nbrs in combinations(range(n), k):
                new = [set(a) for a in adj] + [set(nbrs)]
                for u in nbrs:
                    new[u].add(n)
                seen.setdefault(certificate(n + 1, new), new)
    return list(seen.values())


def main(max_n: int = 8) -> None:
    lines = []
    level: list[list[set[int]]] = [[]]
    for n in range(max_n + 1):
        if n:
            level = extend(n - 1, level)
        encoded = []
        for adj in level:
            g = build_graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
            encoded.append(encode_graph6(g))
        lines.extend(sorted(encoded, key=lambda s: (len(s), s)))
        print(f"n={n}: {len(level)} graphs", file=sys.stderr)
    OUT.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)

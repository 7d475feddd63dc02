"""Command-line front end.

Reports are ``key: value`` lines in a fixed order; ``--json`` appends a
``---`` line and the same facts as one JSON object.  Exit status is 0 when
the property asked about holds, 1 when it fails (a certificate is printed),
and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bench import DEFAULT_SIZES, run_bench
from .certificates import (
    DisjointPairWitness,
    EdgeWitness,
    GuardWitness,
    InducedSubgraphWitness,
    StableSetWitness,
    VertexWitness,
)
from .classify import Classification, NotCIS, classify_diamond_free_cis
from .diamond import is_diamond_free
from .edge_simplicial import is_edge_simplicial
from .errors import GraphError
from .ffree import COMPLEMENT_ROUTES, cis_for_f_free
from .formats import GraphDocument, emit_edge_list, emit_graph6, read_graph
from .generators import generate
from .oracle import decision_suite, is_strong_clique
from .reductions import build_g_double_prime, build_g_prime

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Report:
    def __init__(self) -> None:
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value: object) -> None:
        self.items.append((key, value))

    def render(self, as_json: bool) -> str:
        lines = [f"{k}: {_text(v)}" for k, v in self.items]
        if as_json:
            lines.append("---")
            lines.append(json.dumps({k: _jsonable(v) for k, v in self.items}, sort_keys=True))
        return "\n".join(lines) + "\n"


def _text(v: object) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def _jsonable(v: object):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _names(doc: GraphDocument, vertices) -> list[str]:
    return [doc.label(v) for v in vertices]


def _describe(cert, doc: GraphDocument) -> str:
    """One-line rendering of a certificate in the document's vertex names."""
    if isinstance(cert, (StableSetWitness, DisjointPairWitness)):
        return (
            f"clique {{{', '.join(_names(doc, cert.clique))}}} "
            f"misses stable set {{{', '.join(_names(doc, cert.stable_set))}}}"
        )
    if isinstance(cert, GuardWitness):
        return f"guard total={cert.total} edges={cert.edges} stable_set={{{', '.join(_names(doc, cert.stable_set))}}}"
    if isinstance(cert, EdgeWitness):
        x, y = _names(doc, cert.edge)
        via = ", ".join(_names(doc, cert.via))
        if cert.reason == "missing":
            return f"edge {x}-{y} of G-S is absent from G_S"
        if cert.reason == "spurious":
            return f"G_S pair {x}-{y} via {via} is not an edge"
        return f"G_S pair {x}-{y} duplicated via {via}"
    if isinstance(cert, InducedSubgraphWitness):
        return f"induced {cert.pattern} on {' '.join(_names(doc, cert.vertices))}"
    if isinstance(cert, VertexWitness):
        return f"vertex {doc.label(cert.vertex)} has degree {cert.degree}"
    return str(cert)


def _clique_arg(doc: GraphDocument, raw: str) -> list[int]:
    return [doc.index_of(tok.strip()) for tok in raw.split(",") if tok.strip()]


def _partition_arg(doc: GraphDocument, raw: str) -> list[list[int]]:
    return [_clique_arg(doc, part) for part in raw.split(";") if part.strip()]


# -- subcommands ----------------------------------------------------------------


def cmd_analyze(args, out: Report) -> int:
    doc = read_graph(args.file, args.format)
    g = doc.graph
    out.add("vertices", g.n)
    out.add("edges", g.m)
    df = is_diamond_free(g)
    out.add("diamond_free", df.answer)
    if not df.answer:
        out.add("certificate", _describe(df.certificate, doc))
        return EXIT_FAIL
    cls = classify_diamond_free_cis(g)
    out.add("cis", cls.answer)
    out.add("class", "; ".join(str(t) for t in cls.tags) if cls.tags else "empty")
    out.add("components", len(cls.components))
    for i, comp in enumerate(cls.components):
        if isinstance(comp.tag, NotCIS) and comp.tag.reason is not None:
            cert = comp.tag.reason.certificate
            local = GraphDocument(g, doc.names) if len(cls.components) == 1 else None
            if local is not None:
                out.add(f"certificate[{i}]", _describe(cert, local))
            else:
                out.add(f"certificate[{i}]", f"component {{{', '.join(_names(doc, comp.vertices))}}} is not clique simplicial")
    return EXIT_OK if cls.answer else EXIT_FAIL


def cmd_edge_simplicial(args, out: Report) -> int:
    doc = read_graph(args.file, args.format)
    verdict = is_edge_simplicial(doc.graph)
    out.add("edge_simplicial", verdict.answer)
    if not verdict.answer:
        out.add("certificate", _describe(verdict.certificate, doc))
        return EXIT_FAIL
    return EXIT_OK


def cmd_check_strong(args, out: Report) -> int:
    doc = read_graph(args.file, args.format)
    clique = _clique_arg(doc, args.clique)
    rep = is_strong_clique(doc.graph, clique, args.cap)
    out.add("clique", _names(doc, rep.clique))
    out.add("strong", rep.strong)
    if not rep.strong:
        out.add("dominating_stable_set", _names(doc, rep.witness))
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle(args, out: Report) -> int:
    doc = read_graph(args.file, args.format)
    g = doc.graph
    partition = _partition_arg(doc, args.partition) if args.partition else None
    clique = _clique_arg(doc, args.clique) if args.clique else None
    rep = decision_suite(g, partition=partition, clique=clique, cap=args.cap)
    answers = []
    if rep.strong_clique is not None:
        out.add("strong_clique", rep.strong_clique.strong)
        answers.append(rep.strong_clique.strong)
        if not rep.strong_clique.strong:
            out.add("strong_clique_witness", _names(doc, rep.strong_clique.witness))
    out.add("maximal_cliques", len(rep.clique_reports))
    out.add("strong_maximal_cliques", sum(r.strong for r in rep.clique_reports))
    out.add("has_strong_clique", rep.has_strong_clique)
    out.add("every_vertex_in_strong_clique", rep.every_vertex_in_strong_clique)
    if rep.uncovered_vertex is not None:
        out.add("uncovered_vertex", doc.label(rep.uncovered_vertex))
    if rep.partition_all_strong is not None:
        out.add("partition_all_strong", rep.partition_all_strong)
        answers.append(rep.partition_all_strong)
        if rep.partition_failure is not None:
            out.add("partition_certificate", _describe(rep.partition_failure, doc))
    out.add("strong_partition_exists", rep.partition_exists)
    if rep.strong_partition is not None:
        out.add("strong_partition", " | ".join(",".join(_names(doc, p)) for p in rep.strong_partition))
    answers += [rep.has_strong_clique, rep.every_vertex_in_strong_clique, rep.partition_exists]
    return EXIT_OK if all(answers) else EXIT_FAIL


def cmd_ffree_cis(args, out: Report) -> int:
    doc = read_graph(args.file, args.format)
    verdict = cis_for_f_free(doc.graph, args.pattern, args.cap)
    out.add("pattern", args.pattern)
    out.add("cis", verdict.answer)
    if not verdict.answer and verdict.certificate is not None:
        cert = verdict.certificate
        if isinstance(cert, Classification):
            key = "complement_class" if args.pattern in COMPLEMENT_ROUTES else "class"
            out.add(key, "; ".join(str(t) for t in cert.tags))
        else:
            out.add("certificate", _describe(cert, doc))
    return EXIT_OK if verdict.answer else EXIT_FAIL


def _emit(doc: GraphDocument, fmt: str) -> str:
    return emit_graph6(doc) if fmt == "graph6" else emit_edge_list(doc)


def cmd_reduce(args, out: Report) -> int:
    doc = read_graph(args.file, args.format)
    build = build_g_prime if args.kind == "gprime" else build_g_double_prime
    red = build(doc.graph)
    if args.emit:
        sys.stdout.write(_emit(GraphDocument(red.gadget), args.emit))
        return EXIT_OK
    out.add("kind", args.kind)
    out.add("vertices", red.gadget.n)
    out.add("edges", red.gadget.m)
    out.add("distinguished_clique", list(red.distinguished_clique))
    if red.pendant_map:
        out.add("pendants", len(red.pendant_map))
    return EXIT_OK


def cmd_gen(args, out: Report) -> int:
    doc = generate(args.family, args.params, seed=args.seed)
    sys.stdout.write(_emit(doc, args.emit))
    return EXIT_OK


def cmd_bench(args, out: Report) -> int:
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else list(DEFAULT_SIZES)
    rows = run_bench(args.family, sizes, runs=args.runs, seed=args.seed)
    worst = 0.0
    print(f"{'size':>8} {'n':>8} {'m':>8} {'median_s':>10} {'per_doubling':>12} answer")
    for r in rows:
        per = "-" if r.per_doubling is None else f"{r.per_doubling:.3f}"
        print(f"{r.size:>8} {r.n:>8} {r.m:>8} {r.median_s:>10.5f} {per:>12} {'yes' if r.answer else 'no'}")
        if r.per_doubling is not None:
            worst = max(worst, r.per_doubling)
    out.add("family", args.family)
    out.add("worst_per_doubling", f"{worst:.3f}")
    out.add("linear", worst <= args.max_ratio)
    return EXIT_OK if worst <= args.max_ratio else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongclique", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="edge-list or graph6 file ('-' for stdin)")
        p.add_argument("--format", choices=["edge-list", "graph6"], default=None)
        p.add_argument("--json", action="store_true", help="append a JSON block")
        return p

    p = with_file("analyze", "diamond-freeness and CIS classification")
    p.set_defaults(func=cmd_analyze)
    p = with_file("edge-simplicial", "linear-time edge-simplicial test")
    p.set_defaults(func=cmd_edge_simplicial)
    p = with_file("check-strong", "is the given clique strong?")
    p.add_argument("--clique", required=True, help="comma-separated vertices")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_check_strong)
    p = with_file("oracle", "brute-force answers to the five strong-clique problems")
    p.add_argument("--partition", default=None, help="cliques separated by ';', vertices by ','")
    p.add_argument("--clique", default=None)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle)
    p = with_file("ffree-cis", "CIS test for graphs avoiding a small pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_ffree_cis)
    p = with_file("reduce", "build a hardness gadget from a source graph")
    p.add_argument("--kind", choices=["gprime", "gdoubleprime"], required=True)
    p.add_argument("--emit", choices=["edge-list", "graph6"], default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit", choices=["edge-list", "graph6"], default="edge-list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="size-vs-time table for the linear test")
    p.add_argument("--family", choices=["cliquesim", "biclique", "rook"], default="cliquesim")
    p.add_argument("--sizes", default=None, help="comma-separated n+m targets")
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-ratio", type=float, default=2.6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Report()
    try:
        code = args.func(args, out)
    except (GraphError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out.items:
        sys.stdout.write(out.render(args.json))
    return code


def main() -> None:
    sys.exit(run_cli())

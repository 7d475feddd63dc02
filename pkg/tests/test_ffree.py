from itertools import combinations, permutations

import pytest

from strongclique.certificates import DisjointPairWitness, InducedSubgraphWitness
from strongclique.errors import NotFFree
from strongclique.ffree import COMPLEMENT_ROUTES, cis_for_f_free, is_cograph
from strongclique.generators import biclique, cycle, path, petersen, rook
from strongclique.graph import build_graph, complement
from strongclique.oracle import is_cis_bruteforce
from strongclique.patterns import COMPLEMENT_NAME, FOUR_VERTEX, PATTERNS, contains_induced, get_pattern

from corpus import small_graphs

PAIRS = list(combinations(range(4), 2))


def _code(edges) -> int:
    return sum(1 << PAIRS.index(tuple(sorted(e))) for e in edges)


def _type_table() -> dict[int, str]:
    """Every labelled graph on 4 vertices -> pattern name, by trying all relabellings."""
    table = {}
    for name in FOUR_VERTEX:
        for perm in permutations(range(4)):
            table[_code([(perm[a], perm[b]) for a, b in PATTERNS[name].edges])] = name
    return table


TABLE = _type_table()


def _present(g) -> set[str]:
    sets = g.neighbor_sets
    found = set()
    for quad in combinations(range(g.n), 4):
        code = sum(1 << i for i, (a, b) in enumerate(PAIRS) if quad[b] in sets[quad[a]])
        found.add(TABLE[code])
    return found


def test_eleven_patterns_cover_all_labelled_graphs():
    assert len(FOUR_VERTEX) == 11
    assert len(TABLE) == 64


def test_complement_names_are_involutive():
    for name in FOUR_VERTEX:
        other = COMPLEMENT_NAME[name]
        assert COMPLEMENT_NAME[other] == name
        flipped = complement(PATTERNS[name].graph)
        assert TABLE[_code(flipped.edges())] == other


def test_contains_induced_matches_relabelling_oracle():
    for g in small_graphs():
        present = _present(g)
        for name in FOUR_VERTEX:
            v = contains_induced(g, name)
            assert v.answer == (name in present), (name, list(g.edges()))
            if v.answer:
                assert v.certificate.verify(g)


def test_cograph_recognition():
    cographs = [g for g in small_graphs() if is_cograph(g)]
    # cographs on 0..8 vertices: 1+1+2+4+10+24+66+180+522 (OEIS A000084)
    assert len(cographs) == 810
    for g in small_graphs():
        assert is_cograph(g) == (not contains_induced(g, "P4").answer)


def test_pattern_present_raises():
    with pytest.raises(NotFFree) as exc:
        cis_for_f_free(path(4), "P4")
    assert exc.value.pattern == "P4"
    assert InducedSubgraphWitness(tuple(exc.value.witness), "P4").verify(path(4))


def test_unknown_pattern():
    with pytest.raises(KeyError):
        cis_for_f_free(path(3), "hexagon")


@pytest.mark.parametrize(
    "pattern, g, expected",
    [
        ("K4", rook(3), True),
        ("K4", cycle(5), False),
        ("diamond", biclique(3, 3), True),
        ("C4", path(4), False),
        ("C4", cycle(5), False),
        ("paw", biclique(2, 3), True),
        ("P4", cycle(4), True),
        ("claw", rook(3), True),
        ("co-claw", petersen(), False),
        ("empty4", cycle(5), False),
        ("2K2", build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]), False),
        ("co-paw", cycle(5), False),
        ("K3", biclique(2, 4), True),
    ],
)
def test_named_answers(pattern, g, expected):
    v = cis_for_f_free(g, pattern)
    assert v.answer is expected
    assert v.answer == is_cis_bruteforce(g).answer


def test_complement_route_certificates_refer_to_input():
    for name in COMPLEMENT_ROUTES:
        for g in small_graphs()[:1300]:
            if contains_induced(g, name).answer:
                continue
            v = cis_for_f_free(g, name)
            if isinstance(v.certificate, (DisjointPairWitness, InducedSubgraphWitness)):
                assert v.certificate.verify(g), (name, list(g.edges()), v)

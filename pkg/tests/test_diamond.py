import pytest

from strongclique.diamond import common_neighbors, is_diamond_free, maximal_cliques_diamond_free
from strongclique.errors import NotDiamondFree
from strongclique.generators import biclique, petersen, rook
from strongclique.graph import build_graph
from strongclique.oracle import maximal_cliques

from corpus import diamond_free_graphs, small_graphs


def test_common_neighbors():
    assert common_neighbors((0, 2, 5, 7), (1, 2, 7, 9)) == [2, 7]
    assert common_neighbors((), (1,)) == []


def test_diamond_detected_with_witness(diamond):
    v = is_diamond_free(diamond)
    assert not v.answer
    assert v.certificate.pattern == "diamond"
    assert v.verify(diamond)
    assert sorted(v.certificate.vertices) == [0, 1, 2, 3]


@pytest.mark.parametrize("g", [rook(4), biclique(3, 4), petersen(), build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])])
def test_diamond_free_named(g):
    assert is_diamond_free(g).answer


def test_diamond_witness_on_corpus():
    for g in small_graphs():
        v = is_diamond_free(g)
        assert v.verify(g)


def test_cliques_match_bron_kerbosch():
    for g in diamond_free_graphs():
        cs = maximal_cliques_diamond_free(g)
        assert sorted(cs.all_cliques()) == maximal_cliques(g)
        for u, w in g.edges():
            assert {u, w} <= set(cs.clique_of(u, w))


def test_rook_cliques_are_rows_and_columns():
    cs = maximal_cliques_diamond_free(rook(3))
    assert len(cs) == 6
    assert (0, 1, 2) in cs.all_cliques() and (0, 3, 6) in cs.all_cliques()


def test_clique_enumeration_rejects_diamond(diamond):
    with pytest.raises(NotDiamondFree) as exc:
        maximal_cliques_diamond_free(diamond)
    assert exc.value.witness is not None

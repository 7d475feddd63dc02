import pytest

from strongclique.classify import Rook, classify_diamond_free_cis
from strongclique.diamond import is_diamond_free
from strongclique.errors import BadParams
from strongclique.formats import emit_edge_list
from strongclique.generators import (
    FAMILIES,
    biclique,
    cycle,
    generate,
    grotzsch,
    petersen,
    random_clique_simplicial,
    random_diamond_free,
    random_triangle_free,
    rook,
)
from strongclique.graph import build_graph


def test_rook3():
    g = rook(3)
    assert g.n == 9 and all(g.degree(v) == 4 for v in range(9))
    assert classify_diamond_free_cis(g).tags == [Rook(3)]
    # cell (i, j) is vertex 3i + j
    assert g.has_edge(4, 3) and g.has_edge(4, 7) and not g.has_edge(4, 8)


def test_biclique_2_2_is_c4():
    # sides {0, 1} and {2, 3}: the 4-cycle 0-2-1-3
    assert biclique(2, 2) == build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])


def test_named_sizes():
    assert (petersen().n, petersen().m) == (10, 15)
    assert (grotzsch().n, grotzsch().m) == (11, 20)


def test_random_families_deterministic():
    assert random_triangle_free(12, 0.4, seed=5) == random_triangle_free(12, 0.4, seed=5)
    assert random_diamond_free(14, 20, seed=5) == random_diamond_free(14, 20, seed=5)
    assert random_clique_simplicial(6, (2, 4), 5) == random_clique_simplicial(6, (2, 4), 5)
    assert emit_edge_list(generate("random_diamond_free", ["10", "12"], seed=3)) == emit_edge_list(
        generate("random_diamond_free", ["10", "12"], seed=3)
    )


def test_random_diamond_free_meets_sparse_target():
    for seed in range(20):
        g = random_diamond_free(16, 20, seed)
        assert g.m == 20 and is_diamond_free(g).answer


def test_clique_simplicial_target_size():
    g = random_clique_simplicial(0, (2, 6), 1, target_size=5000)
    assert 5000 <= g.n + g.m < 5100


@pytest.mark.parametrize(
    "family, params",
    [
        ("biclique", ["3", "4"]),
        ("rook", ["4"]),
        ("cycle", ["7"]),
        ("path", ["5"]),
        ("petersen", []),
        ("grotzsch", []),
        ("random_triangle_free", ["12", "0.3"]),
        ("random_clique_simplicial", ["5", "2", "4"]),
        ("random_diamond_free", ["12", "15"]),
    ],
)
def test_generate_every_family(family, params):
    assert family in FAMILIES
    doc = generate(family, params, seed=1)
    doc.graph.check()


@pytest.mark.parametrize(
    "family, params",
    [("nope", []), ("rook", []), ("rook", ["x"]), ("cycle", ["2"]), ("random_clique_simplicial", ["3", "1", "4"])],
)
def test_bad_params(family, params):
    with pytest.raises(BadParams):
        generate(family, params)

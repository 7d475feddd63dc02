import pytest

from strongclique.errors import IndexOutOfRange, NotConnected, SelfLoop
from strongclique.generators import biclique, cycle, path, rook
from strongclique.graph import (
    VertexOrder,
    build_graph,
    complement,
    complete_bipartite_signature,
    connected_components,
    disjoint_union,
    induced_subgraph,
    sort_adjacency,
)


def test_build_graph_dedups_and_counts():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert g.adjacency == ((1,), (0, 2), (1,))
    g.check()


def test_build_graph_errors():
    with pytest.raises(SelfLoop):
        build_graph(2, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        build_graph(2, [(0, 2)])
    with pytest.raises(IndexOutOfRange):
        build_graph(2, [(-1, 0)])


def test_sort_adjacency_c4():
    g = sort_adjacency(cycle(4), VertexOrder.from_sequence((2, 0, 3, 1)))
    assert g.adjacency[0] == (3, 1)
    assert g.adjacency[2] == (3, 1)


def test_sort_adjacency_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    g = sort_adjacency(star, VertexOrder.from_sequence((3, 2, 1, 0)))
    assert g.adjacency[0] == (3, 2, 1)
    assert g == star


def test_vertex_order_rejects_non_permutation():
    with pytest.raises(ValueError):
        VertexOrder.from_sequence((0, 0, 1))


def test_structural_equality():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != build_graph(3, [(0, 2), (1, 2)])


def test_components_ordered_by_smallest_vertex():
    g = build_graph(6, [(4, 1), (0, 5), (2, 3)])
    assert connected_components(g) == [[0, 5], [1, 4], [2, 3]]


def test_complete_bipartite_signature():
    assert complete_bipartite_signature(biclique(3, 2)) == (2, 3)
    assert complete_bipartite_signature(build_graph(1, [])) == (0, 1)
    assert complete_bipartite_signature(cycle(5)) is None
    assert complete_bipartite_signature(path(4)) is None
    assert complete_bipartite_signature(cycle(6)) is None
    with pytest.raises(NotConnected):
        complete_bipartite_signature(build_graph(2, []))


def test_complement_and_union():
    g = complement(cycle(5))
    assert g.m == 5 and all(g.degree(v) == 2 for v in range(5))
    assert complement(complement(rook(3))) == rook(3)
    u = disjoint_union(cycle(3), path(2))
    assert u.n == 5 and u.m == 4 and u.has_edge(3, 4)


def test_induced_subgraph_mapping():
    h, mapping = induced_subgraph(cycle(5), [4, 0, 1])
    assert sorted(mapping) == [0, 1, 4]
    assert h.m == 2
    for a, b in h.edges():
        assert cycle(5).has_edge(mapping[a], mapping[b])

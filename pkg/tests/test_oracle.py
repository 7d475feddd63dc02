import pytest

from strongclique.errors import BadPartition, CapExceeded, NotAClique
from strongclique.generators import biclique, cycle, path, petersen, rook
from strongclique.graph import build_graph
from strongclique.oracle import (
    CAP_ENV,
    all_p4_settled,
    alpha_omega,
    decision_suite,
    dominating_stable_set,
    every_vertex_in_strong_clique,
    extend_to_maximal_stable,
    has_strong_clique,
    is_cis_bruteforce,
    is_strong_clique,
    maximal_cliques,
    maximal_stable_sets,
    partition_all_strong,
    strong_clique_partition,
)

from corpus import small_graphs


def test_enumeration_c5():
    assert maximal_cliques(cycle(5)) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert list(maximal_stable_sets(cycle(5))) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]


def test_extend_to_maximal_stable():
    assert extend_to_maximal_stable(path(5), [1]) == (1, 3)


def test_p4_middle_edge_not_strong():
    g = path(4)
    rep = is_strong_clique(g, [1, 2])
    assert not rep.strong and rep.witness == (0, 3)
    assert rep.certificate().verify(g)
    assert is_strong_clique(g, [0, 1]).strong


def test_non_maximal_clique_not_strong():
    assert not is_strong_clique(path(3), [0]).strong


def test_not_a_clique():
    with pytest.raises(NotAClique):
        is_strong_clique(path(3), [0, 2])
    with pytest.raises(NotAClique):
        is_strong_clique(path(3), [])


def test_strongness_matches_definition_on_corpus():
    # strong iff the clique meets every maximal stable set
    for g in small_graphs()[:1200]:
        stables = [set(s) for s in maximal_stable_sets(g)]
        for c in maximal_cliques(g):
            expected = all(set(c) & s for s in stables)
            rep = is_strong_clique(g, c)
            assert rep.strong == expected
            if not rep.strong:
                assert rep.certificate().verify(g)


@pytest.mark.parametrize(
    "g, answers",
    [
        (cycle(4), (True, True, True)),
        (path(4), (True, True, True)),
        (cycle(5), (False, False, False)),
        (build_graph(1, []), (True, True, True)),
        # rook(3): rows and columns are strong; a row partition exists
        (rook(3), (True, True, True)),
        (petersen(), (False, False, False)),
    ],
)
def test_decision_problems(g, answers):
    assert (
        has_strong_clique(g).answer,
        every_vertex_in_strong_clique(g).answer,
        strong_clique_partition(g).answer,
    ) == answers


def test_c5_with_pendant_has_uncovered_vertex():
    # only the pendant edge 0-5 is strong; every cycle edge is dominated
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    v = every_vertex_in_strong_clique(g)
    assert not v.answer and v.certificate == 1
    assert has_strong_clique(g).certificate == (0, 5)
    assert not strong_clique_partition(g).answer


def test_partition_checks():
    g = path(4)
    assert partition_all_strong(g, [[0, 1], [2, 3]]).answer
    v = partition_all_strong(g, [[0], [1, 2], [3]])
    assert not v.answer and v.certificate.verify(g)
    with pytest.raises(BadPartition):
        partition_all_strong(g, [[0, 1], [1, 2], [3]])
    with pytest.raises(BadPartition):
        partition_all_strong(g, [[0, 1]])
    with pytest.raises(BadPartition):
        partition_all_strong(g, [[0, 2], [1], [3]])


def test_decision_suite():
    rep = decision_suite(path(4), partition=[[0, 1], [2, 3]], clique=[1, 2])
    assert rep.strong_clique.strong is False
    assert rep.has_strong_clique and rep.every_vertex_in_strong_clique
    assert rep.partition_all_strong is True
    assert rep.partition_exists and rep.strong_partition == ((0, 1), (2, 3))
    assert [r.clique for r in rep.clique_reports] == [(0, 1), (1, 2), (2, 3)]


def test_cis_bruteforce():
    assert is_cis_bruteforce(biclique(2, 3)).answer
    v = is_cis_bruteforce(path(4))
    assert not v.answer and v.certificate.verify(path(4))


def test_p4_settledness():
    assert all_p4_settled(rook(3)).answer
    v = all_p4_settled(path(4))
    assert not v.answer and v.certificate.verify(path(4))


def test_alpha_omega():
    assert alpha_omega(cycle(5)) == (2, 2)
    assert alpha_omega(petersen()) == (4, 2)
    assert alpha_omega(rook(4)) == (4, 4)


def test_cap_from_argument_and_env(monkeypatch):
    with pytest.raises(CapExceeded):
        is_cis_bruteforce(cycle(5), cap=4)
    monkeypatch.setenv(CAP_ENV, "4")
    with pytest.raises(CapExceeded):
        list(maximal_stable_sets(cycle(5)))
    assert is_cis_bruteforce(cycle(5), cap=5).answer is False


def test_cap_applies_to_clique_size_for_witness_search():
    g = cycle(30)
    assert not is_strong_clique(g, [0, 1]).strong
    with pytest.raises(CapExceeded):
        is_strong_clique(g, [0, 1], cap=1)


def test_dominating_stable_set_none_when_strong():
    assert dominating_stable_set(rook(3), (0, 1, 2)) is None


def test_contract_examples():
    k3 = cycle(3)
    assert list(maximal_stable_sets(k3)) == [(0,), (1,), (2,)]
    assert list(maximal_stable_sets(cycle(4))) == [(0, 2), (1, 3)]
    assert is_strong_clique(k3, [0, 1, 2]).strong
    for u in range(5):
        rep = is_strong_clique(cycle(5), [u, (u + 1) % 5])
        assert set(rep.witness) == {(u + 2) % 5, (u + 4) % 5}

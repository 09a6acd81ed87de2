import pytest

from conftest import LOOSE_TRIANGLE, greedy_corpus
from loosesat.construction import X, construct_gn
from loosesat.errors import DomainError, PreconditionError
from loosesat.hypergraph import Hypergraph3
from loosesat.lemmas import (
    LemmaId,
    check_codegree_step,
    check_good_pair_double_neighbor,
    check_jfar_bound,
    check_two_deg2,
    j_far_neighbors,
    run_all,
)
from loosesat.search import triangle_free_classes

CHECKS = (check_codegree_step, check_two_deg2)


def test_g14_clean(g14):
    G, _ = g14
    for check in CHECKS:
        assert check(G) == []
    assert check_good_pair_double_neighbor(G) == []
    for j in (2, 3, 4):
        assert check_jfar_bound(G, j) == []


def test_greedy_corpus_clean():
    for G in greedy_corpus(50):
        for check in CHECKS:
            assert check(G) == []
        assert check_good_pair_double_neighbor(G) == []
        assert check_jfar_bound(G, 2) == []


def test_corrupted_instance_reports_wellformed(g14):
    G, _ = g14
    H = Hypergraph3(G.n, G.edges[1:])
    with pytest.raises(PreconditionError):
        check_codegree_step(H)
    for check in CHECKS:
        for v in check(H, assume_saturated=True):
            assert v.lemma_id in LemmaId
            assert all(0 <= x < H.n for x in v.vertices)
            assert all(H.has_edge(e) for e in v.edges)
            assert v.detail


def test_codegree_step_detects_violation():
    # d(01) = d(1) = 1 and d(0) = 1 < 3 in a single edge
    G = Hypergraph3(7, [(0, 1, 2)])
    found = check_codegree_step(G, assume_saturated=True)
    assert any(v.vertices[:2] == (0, 1) for v in found)


def test_two_deg2_detects_violation():
    G = Hypergraph3(8, [(0, 1, 5), (0, 2, 6), (1, 2, 3), (3, 4, 7)])
    found = check_two_deg2(G, assume_saturated=True)
    assert any(v.vertices[:1] == (0,) and v.edges == ((1, 2, 3),) for v in found)


def test_refuses_unsaturated_path():
    path = Hypergraph3(6, [(0, 1, 2), (2, 3, 4)])
    for check in CHECKS:
        with pytest.raises(PreconditionError):
            check(path)
    with pytest.raises(PreconditionError):
        check_jfar_bound(path, 2)
    with pytest.raises(PreconditionError):
        check_good_pair_double_neighbor(LOOSE_TRIANGLE)


def test_good_pair_on_triangle_free_prefixes():
    assert check_good_pair_double_neighbor(Hypergraph3(6, [(0, 1, 2)])) == []
    for k in range(1, 6):
        classes = triangle_free_classes(9, k)
        for G in classes[:: max(1, len(classes) // 40)]:
            assert check_good_pair_double_neighbor(G) == []


def test_jfar_examples(g16):
    assert j_far_neighbors(Hypergraph3(5, [(1, 2, 3)]), 0, 2) == frozenset()
    with pytest.raises(DomainError):
        j_far_neighbors(Hypergraph3(5), 0, 1)
    with pytest.raises(DomainError):
        check_jfar_bound(Hypergraph3(5), 1)
    # every neighbor of 0 has an edge meeting N(0) away from 0
    G = Hypergraph3(7, [(0, 1, 2), (1, 2, 3), (3, 4, 5)])
    assert j_far_neighbors(G, 0, 5) == frozenset()
    G16, _ = g16
    far = j_far_neighbors(G16, X, 5)
    assert far <= G16.neighbors(X) and len(far) <= 50


def _jfar_by_definition(G, v, j):
    nv = {w for e in G.edges if v in e for w in e} - {v}
    out = set()
    for u in nv:
        if G.degree(u) > j:
            continue
        cond1 = all(v in e or not (set(e) - {u}) & nv for e in G.edges if u in e)
        cond2 = all(all(G.degree(w) <= j for w in e) for e in G.edges if u in e and v not in e)
        if cond1 and cond2:
            out.add(u)
    return out


def test_jfar_matches_definition():
    for G in greedy_corpus(20) + [construct_gn(18)[0]]:
        for v in range(G.n):
            for j in (2, 3, 5):
                assert j_far_neighbors(G, v, j) == _jfar_by_definition(G, v, j)


def test_degree_filter_monotone_when_condition_one_vacuous():
    # a star of disjoint edges through v: condition (1) always holds
    G = Hypergraph3(9, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8), (1, 3, 5)])
    prev = set()
    for j in range(2, 6):
        cur = {u for u in G.neighbors(0) if G.degree(u) <= j}
        assert prev <= cur
        prev = cur


def test_run_all(g14):
    G, _ = g14
    rep = run_all(G)
    assert rep.clean and not rep.skipped
    assert set(rep.violations) == {
        "CodegreeStep", "TwoDeg2Neighbors", "GoodPairDoubleNeighbor",
        "JFarBound[j=2]", "JFarBound[j=3]", "JFarBound[j=4]",
    }
    assert list(rep.violations)[:3] == ["CodegreeStep", "TwoDeg2Neighbors", "GoodPairDoubleNeighbor"]
    path = run_all(Hypergraph3(6, [(0, 1, 2), (2, 3, 4)]))
    assert list(path.violations) == ["GoodPairDoubleNeighbor"]
    assert len(run_all(LOOSE_TRIANGLE).skipped) == 6
    assert "timings" not in rep.to_json() and "timings" in rep.to_json(timing=True)

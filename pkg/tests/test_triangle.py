import random

import pytest
from hypothesis import given, settings

from conftest import LOOSE_TRIANGLE, hypergraphs, random_graph
from loosesat.errors import DomainError
from loosesat.hypergraph import Hypergraph3
from loosesat.triangle import (
    TriangleWitness,
    creates_triangle,
    find_triangle,
    find_triangle_bruteforce,
    is_loose_triangle,
    validate_witness,
)


def _check_witness_shape(w: TriangleWitness):
    sets = [set(e) for e in w.edges]
    for i in range(3):
        for j in range(i + 1, 3):
            assert len(sets[i] & sets[j]) == 1
    assert len(w.core) == 3 and len(w.all_vertices) == 6
    assert all(sum(v in s for s in sets) == 2 for v in w.core)


def test_loose_triangle_found():
    w = find_triangle(LOOSE_TRIANGLE)
    assert w is not None and w.core == {0, 2, 4}
    _check_witness_shape(w)
    assert validate_witness(LOOSE_TRIANGLE, w)
    assert find_triangle_bruteforce(LOOSE_TRIANGLE) is not None


def test_g14_free(g14):
    G, _ = g14
    assert find_triangle(G) is None
    assert find_triangle_bruteforce(G) is None


def test_two_edges_never_triangle():
    rng = random.Random(3)
    for _ in range(100):
        assert find_triangle(random_graph(rng, rng.randint(3, 12), 2)) is None


def test_is_loose_triangle_rejects_other_shapes():
    assert is_loose_triangle((0, 1, 2), (2, 3, 4), (4, 5, 0))
    assert not is_loose_triangle((0, 1, 2), (0, 3, 4), (0, 5, 6))  # star, one core vertex
    assert not is_loose_triangle((0, 1, 2), (1, 2, 3), (3, 4, 0))  # two shared vertices
    assert not is_loose_triangle((0, 1, 2), (2, 3, 4), (4, 5, 6))  # open path


def test_creates_triangle_on_path():
    path = Hypergraph3(6, [(0, 1, 2), (2, 3, 4)])
    w = creates_triangle(path, (0, 4, 5))
    assert w is not None and 2 in w.core
    assert validate_witness(path, w, added=(0, 4, 5))
    assert creates_triangle(Hypergraph3(6), (0, 1, 2)) is None
    with pytest.raises(DomainError):
        creates_triangle(path, (0, 1, 2))
    with pytest.raises(DomainError):
        creates_triangle(path, (0, 0, 1))


def test_g14_every_nonedge_creates(g14):
    G, _ = g14
    for t in G.nonedges():
        w = creates_triangle(G, t)
        assert w is not None and validate_witness(G, w, added=t)
        assert find_triangle(G.add_edges([t])) is not None


def test_oracle_equivalence_small_batch():
    rng = random.Random(99)
    for _ in range(500):
        G = random_graph(rng, rng.randint(3, 12), rng.randint(0, 30))
        fast, slow = find_triangle(G), find_triangle_bruteforce(G)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert fast.indexes == slow.indexes
            assert validate_witness(G, fast)


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=9, max_edges=12))
def test_creates_triangle_agrees_with_insertion(G):
    free = find_triangle(G) is None
    for t in list(G.nonedges())[:40]:
        w = creates_triangle(G, t)
        H = G.add_edges([t])
        if w is not None:
            _check_witness_shape(w)
            assert t in w.edges
            assert validate_witness(G, w, added=t)
            assert find_triangle(H) is not None
        elif free:
            assert find_triangle(H) is None

import random
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import LOOSE_TRIANGLE, hypergraphs, random_graph
from loosesat.canonical import (
    automorphism_generators,
    canonical_form,
    canonical_graph,
    canonical_labeling,
)
from loosesat.hypergraph import Hypergraph3


def _perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return p


def test_invariant_under_many_permutations(g14):
    G, _ = g14
    rng = random.Random(1)
    forms = {canonical_form(G.relabel(_perm(rng, G.n))) for _ in range(1000)}
    assert forms == {canonical_form(G)}


def test_loose_triangle_vs_path():
    path = Hypergraph3(7, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
    tri = Hypergraph3(7, LOOSE_TRIANGLE.edges)
    assert canonical_form(path) != canonical_form(tri)


def test_form_encodes_n():
    assert canonical_form(Hypergraph3(6, [(0, 1, 2)])) != canonical_form(Hypergraph3(7, [(0, 1, 2)]))
    assert canonical_form(Hypergraph3(4)) == b"4:"


def test_labeling_maps_graph_to_canonical_edges():
    rng = random.Random(5)
    for _ in range(50):
        G = random_graph(rng, rng.randint(5, 10), rng.randint(0, 15))
        labels, edges = canonical_labeling(G)
        assert sorted(labels) == list(range(G.n))
        assert G.relabel(labels).edges == edges
        assert canonical_graph(G).edges == edges


def test_automorphisms_preserve_edges():
    rng = random.Random(8)
    for _ in range(50):
        G = random_graph(rng, rng.randint(5, 10), rng.randint(1, 12))
        for g in automorphism_generators(G):
            assert G.relabel(g) == G


def _brute_form(G):
    # least relabeled edge list over all n! labelings
    return min(tuple(sorted(tuple(sorted(p[v] for v in e)) for e in G.edges)) for p in permutations(range(G.n)))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=7, max_edges=10), st.randoms(use_true_random=False))
def test_isomorphism_iff_equal_forms(G, rnd):
    H = G.relabel(_perm(rnd, G.n))
    assert canonical_form(G) == canonical_form(H)
    # against an exhaustive oracle: equal forms exactly for isomorphic pairs
    K = random_graph(rnd, G.n, len(G.edges))
    same = _brute_form(G) == _brute_form(K)
    assert (canonical_form(G) == canonical_form(K)) == same

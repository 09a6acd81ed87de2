import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from loosesat.construction import construct_gn
from loosesat.hypergraph import Hypergraph3
from loosesat.saturation import saturate_greedy

LOOSE_TRIANGLE = Hypergraph3(6, [(0, 1, 2), (2, 3, 4), (0, 4, 5)])


def random_graph(rng: random.Random, n: int, m: int) -> Hypergraph3:
    triples = list(combinations(range(n), 3))
    return Hypergraph3(n, rng.sample(triples, min(m, len(triples))))


@st.composite
def hypergraphs(draw, max_n=10, max_edges=25):
    n = draw(st.integers(min_value=3, max_value=max_n))
    triples = list(combinations(range(n), 3))
    picks = draw(st.sets(st.sampled_from(triples), max_size=min(max_edges, len(triples))))
    return Hypergraph3(n, sorted(picks))


@st.composite
def permutations(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


def greedy_corpus(count: int, sizes=(9, 10, 11, 12)) -> list[Hypergraph3]:
    return [saturate_greedy(Hypergraph3(sizes[s % len(sizes)]), s) for s in range(count)]


@pytest.fixture(scope="session")
def g14():
    return construct_gn(14)


@pytest.fixture(scope="session")
def g16():
    return construct_gn(16)


ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::" in report.nodeid:
        name = report.nodeid.split("::", 1)[1]
        for key, value in report.user_properties:
            if key == "criterion":
                ACCEPTANCE_RESULTS.append((value, "PASS" if report.passed else "FAIL", name))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, name in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{status}] {label}  ({name})")

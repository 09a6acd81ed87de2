"""Freeness and saturation verification with checkable certificates."""

from __future__ import annotations

import enum
import random
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import kernels
from .errors import DomainError
from .hypergraph import Hypergraph3, Triple
from .triangle import (
    TriangleWitness,
    creates_triangle,
    find_triangle,
    is_loose_triangle,
    validate_witness,
)


class Verdict(enum.Enum):
    SATURATED = "Saturated"
    NOT_FREE = "NotFree"
    NOT_SATURATED = "NotSaturated"


@dataclass(frozen=True)
class SaturationCertificate:
    verdict: Verdict
    witness: TriangleWitness | Triple | None
    checked_nonedges: int

    @property
    def saturated(self) -> bool:
        return self.verdict is Verdict.SATURATED

    def to_json(self) -> dict:
        if isinstance(self.witness, TriangleWitness):
            witness = self.witness.to_json()
        elif self.witness is None:
            witness = None
        else:
            witness = list(self.witness)
        return {
            "verdict": self.verdict.value,
            "witness": witness,
            "checked_nonedges": self.checked_nonedges,
        }


def is_free(G: Hypergraph3) -> bool:
    return find_triangle(G) is None


def triple_rank(n: int, t: Triple) -> int:
    """0-based position of ``t`` among all triples of ``range(n)`` in lex order."""
    a, b, c = t
    r = comb(n, 3) - comb(n - a, 3)
    r += comb(n - a - 1, 2) - comb(n - b, 2)
    return r + (c - b - 1)


def _split(n: int, parts: int) -> list[tuple[int, int]]:
    # ranges of first vertex holding roughly equal numbers of triples
    total = comb(n, 3)
    bounds, acc, lo = [], 0, 0
    for a in range(n):
        acc += comb(n - a - 1, 2)
        if acc * parts >= total * (len(bounds) + 1) or a == n - 1:
            bounds.append((lo, a + 1))
            lo = a + 1
    return [b for b in bounds if b[0] < b[1]]


def first_uncovered(G: Hypergraph3, jobs: int = 1) -> Triple | None:
    """Least non-edge whose insertion creates no loose triangle."""
    if jobs <= 1 or G.n < 8:
        return kernels.first_uncovered(G.n, G.edges)
    ranges = _split(G.n, jobs * 4)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        found = list(pool.map(lambda r: kernels.first_uncovered(G.n, G.edges, *r), ranges))
    hits = [t for t in found if t is not None]
    return min(hits) if hits else None


def verify_saturated(G: Hypergraph3, jobs: int = 1) -> SaturationCertificate:
    tri = find_triangle(G)
    if tri is not None:
        return SaturationCertificate(Verdict.NOT_FREE, tri, 0)
    miss = first_uncovered(G, jobs)
    if miss is None:
        return SaturationCertificate(Verdict.SATURATED, None, G.nonedge_count())
    checked = triple_rank(G.n, miss) + 1 - bisect_right(G.edges, miss)
    return SaturationCertificate(Verdict.NOT_SATURATED, miss, checked)


def is_saturated(G: Hypergraph3, jobs: int = 1) -> bool:
    return verify_saturated(G, jobs).saturated


def validate_certificate(G: Hypergraph3, cert: SaturationCertificate) -> bool:
    """Re-check a certificate along routes independent of the bulk kernel."""
    if cert.verdict is Verdict.NOT_FREE:
        w = cert.witness
        return isinstance(w, TriangleWitness) and None not in w.indexes and validate_witness(G, w)
    if cert.verdict is Verdict.NOT_SATURATED:
        if not isinstance(cert.witness, tuple) or len(cert.witness) != 3:
            return False
        e = tuple(sorted(cert.witness))
        if G.has_edge(e) or len(set(e)) != 3 or not all(0 <= v < G.n for v in e):
            return False
        # G + e must have no triangle through e: scan all pairs of edges
        return not any(is_loose_triangle(e, f, g) for f, g in combinations(G.edges, 2))
    if cert.checked_nonedges != G.nonedge_count():
        return False
    if any(is_loose_triangle(*es) for es in combinations(G.edges, 3)) if len(G.edges) <= 60 else not is_free(G):
        return False
    return all(creates_triangle(G, t) is not None for t in G.nonedges())


def saturate_greedy(G: Hypergraph3, order_seed: int = 0) -> Hypergraph3:
    """Extend a triangle-free ``G`` to a saturated supergraph.

    Visits every non-edge once in an order shuffled by ``order_seed`` and keeps
    each one whose insertion leaves the graph triangle-free.  A rejected
    triple stays rejected as edges are only ever added, so one pass suffices.
    """
    if not is_free(G):
        raise DomainError("saturate_greedy needs a triangle-free start graph")
    order = list(G.nonedges())
    random.Random(order_seed).shuffle(order)
    cur = G
    added: list[Triple] = []
    for t in order:
        if creates_triangle(cur, t) is None:
            added.append(t)
            cur = G.add_edges(added)
    return cur

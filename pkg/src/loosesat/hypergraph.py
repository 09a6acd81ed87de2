"""Immutable 3-uniform hypergraphs with incidence and codegree indexes."""

from __future__ import annotations

from collections.abc import Callable, Collection, Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import DomainError

Triple = tuple[int, int, int]
Pair = tuple[int, int]


def normalize_triple(triple: Iterable[int], n: int) -> Triple:
    """Return ``triple`` as an ascending tuple, validating it against ``n``."""
    try:
        vs = tuple(int(v) for v in triple)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a vertex triple: {triple!r}") from exc
    if len(vs) != 3:
        raise DomainError(f"edge must have exactly 3 vertices, got {len(vs)}: {vs}")
    a, b, c = sorted(vs)
    if a == b or b == c:
        raise DomainError(f"repeated vertex in {vs}")
    if a < 0 or c >= n:
        raise DomainError(f"vertex out of range [0, {n}) in {vs}")
    return (a, b, c)


class Hypergraph3:
    """A 3-uniform hypergraph on vertices ``0..n-1``.

    Edges are ascending triples kept in lexicographic order; an edge's index
    is its position in that order.  ``incidence[v]`` lists the indexes of the
    edges through ``v`` and ``pair_index[(u, v)]`` (``u < v``) lists the edges
    through both, stored only for pairs of positive codegree.

    Instances are immutable; use :meth:`add_edges` or :meth:`relabel` to
    derive new ones.
    """

    __slots__ = ("n", "edges", "incidence", "pair_index", "_lookup", "_neighbors")

    def __init__(self, n: int, triples: Iterable[Iterable[int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"vertex count must be a non-negative integer, got {n!r}")
        norm = [normalize_triple(t, n) for t in triples]
        edges = tuple(sorted(norm))
        for prev, cur in zip(edges, edges[1:]):
            if prev == cur:
                raise DomainError(f"duplicate edge {cur}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        incidence: list[list[int]] = [[] for _ in range(n)]
        pairs: dict[Pair, list[int]] = {}
        for i, (a, b, c) in enumerate(edges):
            incidence[a].append(i)
            incidence[b].append(i)
            incidence[c].append(i)
            for p in ((a, b), (a, c), (b, c)):
                pairs.setdefault(p, []).append(i)
        object.__setattr__(self, "incidence", tuple(tuple(x) for x in incidence))
        object.__setattr__(self, "pair_index", {p: tuple(v) for p, v in pairs.items()})
        object.__setattr__(self, "_lookup", {e: i for i, e in enumerate(edges)})
        object.__setattr__(self, "_neighbors", None)

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph3 is immutable")

    def __eq__(self, other):
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, edges={list(self.edges)})"

    def __len__(self):
        return len(self.edges)

    # -- queries ------------------------------------------------------------

    def check_vertex(self, v: int) -> int:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.n:
            raise DomainError(f"vertex {v!r} out of range [0, {self.n})")
        return v

    def degree(self, v: int) -> int:
        return len(self.incidence[self.check_vertex(v)])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(inc) for inc in self.incidence)

    def codegree(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise DomainError(f"codegree needs two distinct vertices, got {u} twice")
        return len(self.pair_index.get((u, v) if u < v else (v, u), ()))

    def pair_edges(self, u: int, v: int) -> tuple[int, ...]:
        return self.pair_index.get((u, v) if u < v else (v, u), ())

    def neighbors(self, v: int) -> frozenset[int]:
        """N(v): vertices sharing an edge with ``v``."""
        self.check_vertex(v)
        cache = self._neighbors
        if cache is None:
            cache = [None] * self.n
            object.__setattr__(self, "_neighbors", cache)
        nb = cache[v]
        if nb is None:
            s: set[int] = set()
            for i in self.incidence[v]:
                s.update(self.edges[i])
            s.discard(v)
            nb = cache[v] = frozenset(s)
        return nb

    def has_edge(self, triple: Iterable[int]) -> bool:
        try:
            return normalize_triple(triple, self.n) in self._lookup
        except DomainError:
            return False

    def index_of(self, triple: Iterable[int]) -> int:
        t = normalize_triple(triple, self.n)
        try:
            return self._lookup[t]
        except KeyError:
            raise DomainError(f"{t} is not an edge") from None

    def nonedges(self) -> Iterator[Triple]:
        """All triples that are not edges, in lexicographic order."""
        lookup = self._lookup
        for t in combinations(range(self.n), 3):
            if t not in lookup:
                yield t

    def nonedge_count(self) -> int:
        n = self.n
        return n * (n - 1) * (n - 2) // 6 - len(self.edges)

    # -- derived graphs -----------------------------------------------------

    def add_edges(self, triples: Iterable[Iterable[int]]) -> Hypergraph3:
        return Hypergraph3(self.n, list(self.edges) + list(triples))

    def relabel(self, perm: Sequence[int]) -> Hypergraph3:
        """Image under the vertex map ``v -> perm[v]`` (a permutation of range(n))."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("relabel needs a permutation of range(n)")
        return Hypergraph3(self.n, [(perm[a], perm[b], perm[c]) for a, b, c in self.edges])

    def restrict(self, vertices: Iterable[int]) -> Hypergraph3:
        """Keep only the edges lying inside ``vertices``; vertex ids are unchanged."""
        keep = set(vertices)
        return Hypergraph3(self.n, [e for e in self.edges if keep.issuperset(e)])


def build(n: int, triples: Iterable[Iterable[int]] = ()) -> Hypergraph3:
    return Hypergraph3(n, triples)


def degree(G: Hypergraph3, v: int) -> int:
    return G.degree(v)


def codegree(G: Hypergraph3, u: int, v: int) -> int:
    return G.codegree(u, v)


@dataclass(frozen=True)
class Link:
    """A 2-edge loose path from ``endpoint_u`` to ``endpoint_v`` through ``center``."""

    first_edge: int
    second_edge: int
    center: int
    endpoint_u: int
    endpoint_v: int

    def vertices(self, G: Hypergraph3) -> frozenset[int]:
        return frozenset(G.edges[self.first_edge]) | frozenset(G.edges[self.second_edge])

    def is_valid(self, G: Hypergraph3) -> bool:
        f = set(G.edges[self.first_edge])
        g = set(G.edges[self.second_edge])
        z, u, v = self.center, self.endpoint_u, self.endpoint_v
        return (
            f & g == {z}
            and u in f and u != z and u not in g
            and v in g and v != z and v not in f
            and len(f | g) == 5
        )


def find_link(
    G: Hypergraph3, u: int, v: int, forbidden: Collection[int] = ()
) -> Link | None:
    """Least ``u,v``-link (by edge-index pair) whose edges avoid ``forbidden``."""
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise DomainError("a link needs two distinct endpoints")
    bad = frozenset(forbidden)
    if u in bad or v in bad:
        raise DomainError("link endpoints may not be forbidden")
    edges = G.edges
    for fi in G.incidence[u]:
        f = edges[fi]
        if v in f or not bad.isdisjoint(f):
            continue
        best = None
        for z in f:
            if z == u:
                continue
            for gi in G.pair_edges(z, v):
                g = edges[gi]
                if u in g or not bad.isdisjoint(g):
                    continue
                # g meets f only in z
                if sum(1 for w in g if w in f) != 1:
                    continue
                if best is None or gi < best[0]:
                    best = (gi, z)
                break  # pair lists are ascending
        if best is not None:
            return Link(fi, best[0], best[1], u, v)
    return None


def is_good_pair(G: Hypergraph3, u: int, v: int) -> bool:
    return find_link(G, u, v) is not None


VertexClass = Collection[int] | int | Callable[[int], bool] | None
ALL: VertexClass = None


def _member_test(G: Hypergraph3, cls: VertexClass) -> Callable[[int], bool]:
    if cls is None:
        return lambda v: True
    if isinstance(cls, bool):
        raise DomainError("vertex class must be a set, a degree, a predicate or None")
    if isinstance(cls, int):
        return lambda v: G.degree(v) == cls
    if callable(cls):
        return cls
    members = frozenset(cls)
    return members.__contains__


def edge_pattern(G: Hypergraph3, e: Iterable[int], classes: Sequence[VertexClass]) -> bool:
    """Whether ``e`` is an (A, B, C) edge for ``classes = (A, B, C)``.

    A class is a vertex collection, an int ``d`` (the vertices of degree
    ``d``), a predicate on vertices, or ``None``/:data:`ALL`.
    """
    edge = G.edges[G.index_of(e)]
    if len(classes) != 3:
        raise DomainError(f"expected 3 vertex classes, got {len(classes)}")
    tests = [_member_test(G, c) for c in classes]
    return any(all(t(x) for t, x in zip(tests, order)) for order in permutations(edge))

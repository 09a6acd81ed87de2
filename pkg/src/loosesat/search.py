"""Exhaustive search for minimum loose-triangle-saturated hypergraphs.

Two independent strategies share one problem encoding (triples of
``range(n)`` numbered in lexicographic order, graphs as int bitmasks):

``orderly``
    Level-by-level generation of all triangle-free graphs up to isomorphism.
    Each level extends the previous one by a single edge, trying one
    non-edge per orbit of the parent's automorphism group, and deduplicates
    children by exact canonical form.  The last level keeps only saturated
    children.  Graphs with more isolated vertices than can still be covered
    by the remaining edges are dropped, since a saturated graph on ``n >= 3``
    vertices has at most one isolated vertex.

``unpruned``
    Labeled depth-first search over include/exclude decisions on triples in
    lexicographic order, with no symmetry reduction.  An excluded triple must
    stay coverable by a link made of chosen or undecided triples, otherwise
    the branch is cut.  The first leaf found is the lexicographically least
    saturated edge list.

Both strategies split work into independent branches (parent graphs for
``orderly``, the least chosen triple for ``unpruned``) that may run in
worker processes; results are merged deterministically.
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from .canonical import canonize, encode_form
from .errors import DomainError, SearchTimeout
from .hypergraph import Hypergraph3, Triple
from .saturation import is_saturated

STRATEGIES = ("orderly", "unpruned")
MAX_N = 11


@dataclass(frozen=True)
class Budget:
    """Search limits; None means unlimited."""

    seconds: float | None = None
    nodes: int | None = None


@dataclass
class SearchOutcome:
    n: int
    min_edges: int | None
    witness: Hypergraph3 | None
    exhausted_upto: int
    nodes_explored: int = 0
    canonical_rejections: int = 0
    elapsed: float = 0.0
    strategy: str = "orderly"
    per_m: dict[int, bool] = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "min_edges": self.min_edges,
            "exhausted_upto": self.exhausted_upto,
            "witness": None if self.witness is None else [list(e) for e in self.witness.edges],
            "nodes_explored": self.nodes_explored,
            "canonical_rejections": self.canonical_rejections,
            "strategy": self.strategy,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


class _Clock:
    def __init__(self, budget: Budget | None):
        self.budget = budget or Budget()
        self.start = time.monotonic()
        self.nodes = 0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        b = self.budget
        if b.nodes is not None and self.nodes > b.nodes:
            raise SearchTimeout(f"node budget of {b.nodes} exceeded")
        if b.seconds is not None and (self.nodes & 255) == 0:
            self.check_time()

    def check_time(self) -> None:
        b = self.budget
        if b.seconds is not None and time.monotonic() - self.start > b.seconds:
            raise SearchTimeout(f"time budget of {b.seconds}s exceeded")

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start


class TripleSpace:
    """All triples of ``range(n)`` with precomputed loose-triangle partners.

    ``partners[t][f]`` is the bitmask of triples ``g`` such that ``t, f, g``
    form a loose triangle with ``f`` the edge through the smaller endpoint
    of a pair of ``t``.  Graph ``G`` (a bitmask) plus ``t`` contains a
    triangle through ``t`` iff ``partners[t][f] & G`` for some edge ``f``.
    """

    def __init__(self, n: int):
        self.n = n
        self.triples: list[Triple] = list(combinations(range(n), 3))
        self.tid = {t: i for i, t in enumerate(self.triples)}
        self.T = len(self.triples)
        self.full = (1 << self.T) - 1
        tid = self.tid
        partners: list[dict[int, int]] = []
        for t in self.triples:
            part: dict[int, int] = {}
            rest = [x for x in range(n) if x not in t]
            a, b, c = t
            for u, v in ((a, b), (a, c), (b, c)):
                for z in rest:
                    for p in rest:
                        if p == z:
                            continue
                        f = tid[tuple(sorted((u, z, p)))]
                        acc = part.get(f, 0)
                        for q in rest:
                            if q != z and q != p:
                                acc |= 1 << tid[tuple(sorted((v, z, q)))]
                        part[f] = acc
            partners.append(part)
        self.partners = partners
        self.vertex_masks = [sum(1 << i for i, t in enumerate(self.triples) if v in t) for v in range(n)]

    def closes(self, ids: Iterable[int], mask: int, t: int) -> bool:
        part = self.partners[t]
        for f in ids:
            g = part.get(f)
            if g and g & mask:
                return True
        return False

    def coverable(self, t: int, avail: int) -> bool:
        for f, g in self.partners[t].items():
            if (avail >> f) & 1 and g & avail:
                return True
        return False

    def saturated(self, ids: list[int], mask: int) -> bool:
        for t in range(self.T):
            if not (mask >> t) & 1 and not self.closes(ids, mask, t):
                return False
        return True

    def isolated(self, mask: int) -> int:
        return sum(1 for vm in self.vertex_masks if not vm & mask)

    def ids_of(self, edges: Iterable[Triple]) -> list[int]:
        return [self.tid[e] for e in edges]


@lru_cache(maxsize=16)
def triple_space(n: int) -> TripleSpace:
    return TripleSpace(n)


def _check_args(n: int, m: int | None = None) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n > MAX_N:
        raise DomainError(f"exhaustive search is limited to n <= {MAX_N}")
    if m is not None and (isinstance(m, bool) or not isinstance(m, int) or m < 0):
        raise DomainError(f"m must be a non-negative integer, got {m!r}")


def lower_seed(n: int) -> int:
    """Cheap lower bound on the edge count of a saturated graph on ``n`` vertices.

    For ``n >= 3`` two isolated vertices ``u, v`` would leave every triple
    ``{u, v, w}`` uncovered, so at most one vertex is isolated and the edges
    cover at least ``n - 1`` vertices.
    """
    return 0 if n < 3 else -(-(n - 1) // 3)


# -- orderly strategy -------------------------------------------------------


def _triple_orbits(space: TripleSpace, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(space.T))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tid, triples = space.tid, space.triples
    for g in gens:
        for i, (a, b, c) in enumerate(triples):
            j = tid[tuple(sorted((g[a], g[b], g[c])))]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return [find(i) for i in range(space.T)]


def _children(n: int, key: tuple[Triple, ...], m: int | None, final: bool) -> list[tuple]:
    """Canonical keys of the one-edge extensions of the canonical graph ``key``.

    ``m`` is the target edge count (None disables the isolated-vertex cut);
    with ``final`` only saturated extensions are returned.
    """
    space = triple_space(n)
    ids = space.ids_of(key)
    mask = 0
    for i in ids:
        mask |= 1 << i
    _, _, autos = canonize(n, key)
    touched = set(v for e in key for v in e)
    lonely = [v for v in range(n) if v not in touched]
    gens = list(autos)
    for u, v in zip(lonely, lonely[1:]):
        swap = list(range(n))
        swap[u], swap[v] = v, u
        gens.append(tuple(swap))
    roots = _triple_orbits(space, gens) if gens else list(range(space.T))
    k = len(ids) + 1
    out = []
    for t in range(space.T):
        if roots[t] != t or (mask >> t) & 1 or space.closes(ids, mask, t):
            continue
        child = mask | (1 << t)
        cids = ids + [t]
        if final:
            if not space.saturated(cids, child):
                continue
        elif m is not None and n >= 3 and space.isolated(child) > 1 + 3 * (m - k):
            continue
        out.append(canonize(n, [space.triples[i] for i in cids])[1])
    return out


def _children_batch(args) -> list[list[tuple]]:
    n, keys, m, final = args
    return [_children(n, key, m, final) for key in keys]


def _run_batches(n, parents, m, final, jobs, clock) -> Iterator[list[tuple]]:
    if jobs <= 1 or len(parents) < 2 * jobs:
        for key in parents:
            yield _children(n, key, m, final)
            clock.tick()
        return
    size = max(1, len(parents) // (jobs * 8))
    chunks = [parents[i : i + size] for i in range(0, len(parents), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_children_batch, [(n, c, m, final) for c in chunks]):
            yield from res
            clock.tick(len(res))


def _orderly_level(n: int, m: int, clock: _Clock, jobs: int, prune: bool = True):
    """Sorted canonical keys of the saturated graphs with ``m`` edges."""
    space = triple_space(n)
    level: list[tuple] = [()]
    rejections = 0
    if m == 0:
        return ([()] if space.T == 0 else []), rejections
    for k in range(m):
        final = k + 1 == m
        seen: set[tuple] = set()
        produced = 0
        for kids in _run_batches(n, level, m if prune else None, final, jobs, clock):
            produced += len(kids)
            seen.update(kids)
        rejections += produced - len(seen)
        clock.check_time()
        level = sorted(seen)
        if not level:
            break
    return level, rejections


def triangle_free_classes(n: int, k: int, budget: Budget | None = None) -> list[Hypergraph3]:
    """All triangle-free graphs on ``n`` vertices with ``k`` edges, one per
    isomorphism class, canonically labeled and sorted by canonical key."""
    _check_args(n, k)
    clock = _Clock(budget)
    level: list[tuple] = [()]
    for _ in range(k):
        seen: set[tuple] = set()
        for kids in _run_batches(n, level, None, False, 1, clock):
            seen.update(kids)
        level = sorted(seen)
    return [Hypergraph3(n, key) for key in level]


# -- unpruned strategy ------------------------------------------------------


def _ref_subtree(space: TripleSpace, m: int, first: int, clock: _Clock) -> list[int] | None:
    """Least saturated edge list with ``m`` edges whose smallest triple is ``first``."""
    T = space.T
    closes, coverable = space.closes, space.coverable
    # triples before `first` are excluded and must stay coverable
    avail = space.full & ~((1 << first) - 1)
    pending = list(range(first))
    if any(not coverable(t, avail) for t in pending):
        return None
    ids = [first]
    mask = 1 << first
    pending = [t for t in pending if not closes(ids, mask, t)]

    def rec(pos: int, mask: int, ids: list[int], pending: list[int]) -> list[int] | None:
        clock.tick()
        k = len(ids)
        if k == m:
            if pending:
                return None
            for t in range(pos, T):
                if not closes(ids, mask, t):
                    return None
            return ids
        if k + (T - pos) < m:
            return None
        if not closes(ids, mask, pos):
            nmask = mask | (1 << pos)
            nids = ids + [pos]
            res = rec(pos + 1, nmask, nids, [t for t in pending if not closes(nids, nmask, t)])
            if res is not None:
                return res
        avail = mask | (space.full & ~((1 << (pos + 1)) - 1))
        if closes(ids, mask, pos):
            npending = pending
        elif coverable(pos, avail):
            npending = pending + [pos]
        else:
            return None
        for t in pending:
            if not coverable(t, avail):
                return None
        return rec(pos + 1, mask, ids, npending)

    return rec(first + 1, mask, ids, pending)


def _ref_job(args) -> list[int] | None:
    n, m, first, budget = args
    return _ref_subtree(triple_space(n), m, first, _Clock(budget))


def _unpruned(n: int, m: int, clock: _Clock, jobs: int) -> list[int] | None:
    space = triple_space(n)
    if m == 0:
        return [] if space.T == 0 else None
    if m > space.T:
        return None
    firsts = list(range(space.T - m + 1))
    if jobs <= 1:
        for i in firsts:
            res = _ref_subtree(space, m, i, clock)
            if res is not None:
                return res
        return None
    remaining = None
    if clock.budget.seconds is not None:
        remaining = Budget(max(0.0, clock.budget.seconds - clock.elapsed), clock.budget.nodes)
    else:
        remaining = clock.budget
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_ref_job, [(n, m, i, remaining) for i in firsts]))
    for res in results:
        if res is not None:
            return res
    return None


# -- public API -------------------------------------------------------------


def _solve(n, m, clock, jobs, strategy):
    if strategy == "orderly":
        level, rej = _orderly_level(n, m, clock, jobs)
        return (Hypergraph3(n, level[0]) if level else None), rej
    if strategy == "unpruned":
        space = triple_space(n)
        ids = _unpruned(n, m, clock, jobs)
        return (None if ids is None else Hypergraph3(n, [space.triples[i] for i in ids])), 0
    raise DomainError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def exists_saturated(
    n: int,
    m: int,
    budget: Budget | None = None,
    *,
    strategy: str = "orderly",
    jobs: int = 1,
) -> Hypergraph3 | None:
    """A saturated hypergraph on ``n`` vertices with exactly ``m`` edges, or None
    when none exists.  Raises :class:`SearchTimeout` if the budget runs out."""
    _check_args(n, m)
    G, _ = _solve(n, m, _Clock(budget), jobs, strategy)
    if G is not None:
        assert is_saturated(G), "search returned an unsaturated witness"
    return G


def min_saturation(
    n: int,
    budget: Budget | None = None,
    *,
    strategy: str = "orderly",
    jobs: int = 1,
    max_edges: int | None = None,
) -> SearchOutcome:
    """Smallest edge count of a saturated hypergraph on ``n`` vertices."""
    _check_args(n)
    clock = _Clock(budget)
    seed = lower_seed(n)
    top = comb(n, 3) if max_edges is None else min(max_edges, comb(n, 3))
    out = SearchOutcome(n, None, None, seed - 1, strategy=strategy)
    rejections = 0
    try:
        for m in range(seed, top + 1):
            G, rej = _solve(n, m, clock, jobs, strategy)
            rejections += rej
            out.per_m[m] = G is not None
            if G is not None:
                if not is_saturated(G):
                    raise AssertionError("search returned an unsaturated witness")
                out.min_edges, out.witness = m, G
                break
            out.exhausted_upto = m
    except SearchTimeout as exc:
        out.nodes_explored, out.canonical_rejections = clock.nodes, rejections
        out.elapsed = clock.elapsed
        raise SearchTimeout(str(exc), out) from None
    out.nodes_explored, out.canonical_rejections = clock.nodes, rejections
    out.elapsed = clock.elapsed
    return out


def enumerate_extremal(n: int, m: int, budget: Budget | None = None, *, jobs: int = 1) -> list[bytes]:
    """Canonical forms of all saturated hypergraphs with ``n`` vertices and ``m``
    edges, one per isomorphism class, sorted."""
    _check_args(n, m)
    level, _ = _orderly_level(n, m, _Clock(budget), jobs)
    return [encode_form(n, key) for key in level]

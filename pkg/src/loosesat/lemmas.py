"""Executable structural properties of loose-triangle-saturated hypergraphs.

Each ``check_*`` function returns the list of violations it finds; on a
correctly saturated input every list must be empty.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .errors import DomainError, PreconditionError
from .hypergraph import Hypergraph3, is_good_pair
from .saturation import Verdict, verify_saturated


class LemmaId(enum.Enum):
    CODEGREE_STEP = "CodegreeStep"
    TWO_DEG2_NEIGHBORS = "TwoDeg2Neighbors"
    GOOD_PAIR_DOUBLE_NEIGHBOR = "GoodPairDoubleNeighbor"
    JFAR_BOUND = "JFarBound"


@dataclass(frozen=True)
class LemmaViolation:
    lemma_id: LemmaId
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    detail: str

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma_id.value,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "detail": self.detail,
        }


def _require(G: Hypergraph3, need: str) -> None:
    verdict = verify_saturated(G).verdict
    if need == "free" and verdict is Verdict.NOT_FREE:
        raise PreconditionError("the hypergraph contains a loose triangle")
    if need == "saturated" and verdict is not Verdict.SATURATED:
        raise PreconditionError(f"the hypergraph is not saturated ({verdict.value})")


def check_codegree_step(G: Hypergraph3, *, assume_saturated: bool = False) -> list[LemmaViolation]:
    """Pairs with ``d(uv) = d(v) <= n - 3`` need ``d(u) >= d(v) + 2``, and a
    vertex has at most one degree-2 neighbor ``w`` with ``d(uw) = 2``."""
    if not assume_saturated:
        _require(G, "saturated")
    out = []
    deg = G.degrees()
    for (p, q), es in sorted(G.pair_index.items()):
        cod = len(es)
        for u, v in ((p, q), (q, p)):
            if cod == deg[v] <= G.n - 3 and deg[u] < deg[v] + 2:
                out.append(
                    LemmaViolation(
                        LemmaId.CODEGREE_STEP,
                        (u, v),
                        tuple(G.edges[i] for i in es),
                        f"d({u}{v})=d({v})={cod} but d({u})={deg[u]}",
                    )
                )
    if G.n >= 5:
        for u in range(G.n):
            twins = [w for w in sorted(G.neighbors(u)) if deg[w] == 2 and G.codegree(u, w) == 2]
            if len(twins) > 1:
                out.append(
                    LemmaViolation(
                        LemmaId.CODEGREE_STEP,
                        (u, *twins),
                        (),
                        f"vertex {u} has {len(twins)} degree-2 double neighbors",
                    )
                )
    return out


def check_two_deg2(G: Hypergraph3, *, assume_saturated: bool = False) -> list[LemmaViolation]:
    """No edge avoiding ``v`` has two degree-2 vertices inside ``N(v)``."""
    if not assume_saturated:
        _require(G, "saturated")
    out = []
    deg = G.degrees()
    for v in range(G.n):
        nv = G.neighbors(v)
        if not nv:
            continue
        for e in G.edges:
            if v in e:
                continue
            hits = tuple(u for u in e if deg[u] == 2 and u in nv)
            if len(hits) >= 2:
                out.append(
                    LemmaViolation(
                        LemmaId.TWO_DEG2_NEIGHBORS,
                        (v, *hits),
                        (e,),
                        f"edge {e} has degree-2 vertices {hits} adjacent to {v}",
                    )
                )
    return out


def check_good_pair_double_neighbor(G: Hypergraph3, *, assume_free: bool = False) -> list[LemmaViolation]:
    """In an edge ``{a, b, c}`` with ``ab`` good, ``c`` is a double neighbor of
    ``a`` or ``b``.  Only triangle-freeness is required."""
    if not assume_free:
        _require(G, "free")
    out = []
    for e in G.edges:
        a0, b0, c0 = e
        for a, b, c in ((a0, b0, c0), (a0, c0, b0), (b0, c0, a0)):
            if G.codegree(a, c) >= 2 or G.codegree(b, c) >= 2:
                continue
            if is_good_pair(G, a, b):
                out.append(
                    LemmaViolation(
                        LemmaId.GOOD_PAIR_DOUBLE_NEIGHBOR,
                        (a, b, c),
                        (e,),
                        f"{a}{b} is good but {c} is a double neighbor of neither",
                    )
                )
    return out


def j_far_neighbors(G: Hypergraph3, v: int, j: int) -> frozenset[int]:
    """Neighbors ``u`` of ``v`` with ``d(u) <= j`` such that every edge through
    ``u`` either contains ``v`` or avoids ``N(v)`` in its other two vertices,
    and every edge through ``u`` avoiding ``v`` has all vertex degrees ``<= j``."""
    if isinstance(j, bool) or not isinstance(j, int) or j < 2:
        raise DomainError(f"j must be an integer >= 2, got {j!r}")
    G.check_vertex(v)
    nv = G.neighbors(v)
    deg = G.degrees()
    found = set()
    for u in nv:
        if deg[u] > j:
            continue
        ok = True
        for i in G.incidence[u]:
            e = G.edges[i]
            if v in e:
                continue
            rest = [w for w in e if w != u]
            if any(w in nv for w in rest) or any(deg[w] > j for w in e):
                ok = False
                break
        if ok:
            found.add(u)
    return frozenset(found)


def check_jfar_bound(G: Hypergraph3, j: int, *, assume_saturated: bool = False) -> list[LemmaViolation]:
    """Every vertex has at most ``2 j^2`` ``j``-far neighbors."""
    if isinstance(j, bool) or not isinstance(j, int) or j < 2:
        raise DomainError(f"j must be an integer >= 2, got {j!r}")
    if not assume_saturated:
        _require(G, "saturated")
    out = []
    for v in range(G.n):
        far = j_far_neighbors(G, v, j)
        if len(far) > 2 * j * j:
            out.append(
                LemmaViolation(
                    LemmaId.JFAR_BOUND,
                    (v, *sorted(far)),
                    (),
                    f"vertex {v} has {len(far)} {j}-far neighbors, bound {2 * j * j}",
                )
            )
    return out


@dataclass
class LemmaReport:
    verdict: Verdict
    violations: dict[str, list[LemmaViolation]] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not any(self.violations.values())

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "verdict": self.verdict.value,
            "checks": {k: [x.to_json() for x in v] for k, v in self.violations.items()},
            "skipped": list(self.skipped),
            "clean": self.clean,
        }
        if timing:
            out["timings"] = {k: round(t, 6) for k, t in self.timings.items()}
        return out


def run_all(G: Hypergraph3, js: tuple[int, ...] = (2, 3, 4)) -> LemmaReport:
    """Run every check that applies to ``G``'s verified status, cheapest first.

    Triangle-free inputs get the good-pair check only; graphs containing a
    triangle get none.
    """
    verdict = verify_saturated(G).verdict
    report = LemmaReport(verdict)
    plan = [("GoodPairDoubleNeighbor", lambda: check_good_pair_double_neighbor(G, assume_free=True), "free")]
    plan.insert(0, ("CodegreeStep", lambda: check_codegree_step(G, assume_saturated=True), "saturated"))
    plan.insert(1, ("TwoDeg2Neighbors", lambda: check_two_deg2(G, assume_saturated=True), "saturated"))
    for j in js:
        plan.append((f"JFarBound[j={j}]", lambda j=j: check_jfar_bound(G, j, assume_saturated=True), "saturated"))
    for name, fn, need in plan:
        applies = verdict is Verdict.SATURATED or (need == "free" and verdict is Verdict.NOT_SATURATED)
        if not applies:
            report.skipped.append(name)
            continue
        t0 = time.perf_counter()
        report.violations[name] = fn()
        report.timings[name] = time.perf_counter() - t0
    return report

"""Degree partitions, (M,L,L) edge classification and the six-rule discharging audit.

All charges are integers in half-units: a vertex of degree ``d`` starts with
``2d`` and the target for a low vertex is 8 (charge 4).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .hypergraph import Hypergraph3

TARGET = 8
SCHEMA = "loosesat.discharge/1"


def default_ell(n: int) -> int:
    """``max(3, floor(log2 n))``."""
    return max(3, max(n, 1).bit_length() - 1)


def _check_ell(ell) -> None:
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 2:
        raise DomainError(f"ell must be an integer >= 2, got {ell!r}")


@dataclass(frozen=True)
class DegreePartition:
    ell: int
    low: frozenset[int]
    nonlow: frozenset[int]
    high: frozenset[int]

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "low": sorted(self.low),
            "nonlow": sorted(self.nonlow),
            "high": sorted(self.high),
        }


def partition(G: Hypergraph3, ell: int) -> DegreePartition:
    """``L = {d < ell}``, ``M = V - L`` and ``H = {d >= floor(n / ell^2)}``."""
    _check_ell(ell)
    deg = G.degrees()
    low = frozenset(v for v in range(G.n) if deg[v] < ell)
    cut = G.n // (ell * ell)
    high = frozenset(v for v in range(G.n) if deg[v] >= cut)
    return DegreePartition(ell, low, frozenset(range(G.n)) - low, high)


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    degree: int
    flatness: int
    supp: int
    flat_count: int
    rich_count: int
    reas_count: int
    donor_count: int
    is_helpful: bool
    is_half_helpful: bool

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "degree": self.degree,
            "flatness": self.flatness,
            "supp": self.supp,
            "flat": self.flat_count,
            "rich": self.rich_count,
            "reas": self.reas_count,
            "donor": self.donor_count,
            "helpful": self.is_helpful,
            "half_helpful": self.is_half_helpful,
        }


class EdgeKind(enum.Enum):
    LOW = "LowEdge"
    SUPPORTED = "SupportedEdge"
    NEEDY = "Needy"
    RICH = "Rich"
    REASONABLE = "Reasonable"
    INERT = "Inert"


@dataclass(frozen=True)
class EdgeClass:
    index: int
    edge: tuple[int, int, int]
    kind: EdgeKind
    recipient: int | None = None
    exceptional: bool = False
    exception_vertex: int | None = None
    # the same test with flat(u) read as "u is 2-flat"
    exceptional_alt: bool = False

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "edge": list(self.edge),
            "class": self.kind.value,
            "recipient": self.recipient,
            "exceptional": self.exceptional,
            "exception_vertex": self.exception_vertex,
            "exceptional_alt": self.exceptional_alt,
        }


class _Context:
    """Per-graph quantities shared by classification and discharging."""

    def __init__(self, G: Hypergraph3, part: DegreePartition):
        self.G = G
        self.part = part
        M = part.nonlow
        deg = G.degrees()
        self.deg = deg
        self.flatness = [sum(sum(1 for w in G.edges[i] if w != v and w in M) for i in G.incidence[v]) for v in range(G.n)]
        self.supp = [
            sum(1 for i in G.incidence[v] if all(w in M for w in G.edges[i] if w != v)) if v in part.low else 0
            for v in range(G.n)
        ]
        self.flat12 = [v in part.low and deg[v] == 2 and self.flatness[v] == 1 for v in range(G.n)]
        self.flat_count = [
            sum(1 for i in G.incidence[v] if any(self.flat12[w] for w in G.edges[i] if w != v)) for v in range(G.n)
        ]

    def rich_pair(self, h: int, u: int) -> bool:
        return h in self.part.nonlow and u in self.part.low and self.G.codegree(h, u) >= 3

    def needy_vertex(self, v: int) -> bool:
        return self.deg[v] == 2 or (self.deg[v] == 3 and self.flatness[v] == 1)

    def exceptional(self, h: int, v: int, u: int, alt: bool = False) -> bool:
        G, deg = self.G, self.deg
        if deg[u] != 4:
            return False
        flat_u = self.flatness[u] if alt else self.flat_count[u]
        return (
            G.codegree(h, v) == 2
            and deg[v] >= 4
            and self.rich_pair(h, u)
            and flat_u == 2
        )

    def rich_recipient(self, h: int, u: int, v: int) -> bool:
        G, deg = self.G, self.deg
        if deg[v] > 7 or self.supp[v] > 0 or self.rich_pair(h, v):
            return False
        return self.rich_pair(h, u) or (deg[u] >= 3 and self.supp[u] >= 1) or deg[u] >= 8

    def classify(self, i: int) -> EdgeClass:
        e = self.G.edges[i]
        M = self.part.nonlow
        hs = [w for w in e if w in M]
        if len(hs) == 3:
            return EdgeClass(i, e, EdgeKind.INERT)
        if len(hs) == 2:
            return EdgeClass(i, e, EdgeKind.SUPPORTED, recipient=next(w for w in e if w not in M))
        if not hs:
            return EdgeClass(i, e, EdgeKind.LOW)
        h = hs[0]
        a, b = (w for w in e if w != h)
        exc = [v for v, u in ((a, b), (b, a)) if self.exceptional(h, v, u)]
        alt = any(self.exceptional(h, v, u, alt=True) for v, u in ((a, b), (b, a)))
        flag = dict(exceptional=bool(exc), exception_vertex=exc[0] if exc else None, exceptional_alt=alt)
        na, nb = self.needy_vertex(a), self.needy_vertex(b)
        if na != nb:
            return EdgeClass(i, e, EdgeKind.NEEDY, recipient=a if na else b, **flag)
        if not exc:
            for v, u in ((a, b), (b, a)):
                if self.rich_recipient(h, u, v):
                    return EdgeClass(i, e, EdgeKind.RICH, recipient=v, **flag)
        return EdgeClass(i, e, EdgeKind.REASONABLE, **flag)


def classify_edges(G: Hypergraph3, part: DegreePartition) -> list[EdgeClass]:
    """One class per edge, in edge order.  A rich edge whose two low vertices
    both qualify as recipient goes to the lower id."""
    ctx = _Context(G, part)
    return [ctx.classify(i) for i in range(len(G.edges))]


def _profiles(ctx: _Context, classes: list[EdgeClass]) -> list[VertexProfile]:
    G, part, deg = ctx.G, ctx.part, ctx.deg
    rich = Counter(c.recipient for c in classes if c.kind is EdgeKind.RICH)
    reas = Counter(v for c in classes if c.kind is EdgeKind.REASONABLE for v in c.edge)

    def budget(v: int) -> int:
        return 2 * deg[v] + 4 * ctx.supp[v] + 2 * rich[v] + reas[v]

    helpful = [
        v in part.low and deg[v] >= 3 and budget(v) >= ctx.flat_count[v] + TARGET for v in range(G.n)
    ]
    out = []
    for v in range(G.n):
        donor = 0
        for i in G.incidence[v]:
            if _donor_edge(ctx, helpful, v, G.edges[i]):
                donor += 1
        half = v in part.low and deg[v] >= 3 and budget(v) >= donor + TARGET
        out.append(
            VertexProfile(
                v, deg[v], ctx.flatness[v], ctx.supp[v], ctx.flat_count[v],
                rich[v], reas[v], donor, helpful[v], half,
            )
        )
    return out


def _donor_edge(ctx: _Context, helpful: list[bool], v: int, e) -> bool:
    # an edge through v holding a 1-flat 2-vertex t whose third vertex is in M
    # or is a low vertex that is not helpful
    for t in e:
        if t == v or not ctx.flat12[t]:
            continue
        w = next(x for x in e if x != v and x != t)
        if w in ctx.part.nonlow or not helpful[w]:
            return True
    return False


@dataclass
class ChargeReport:
    n: int
    ell: int
    partition: DegreePartition
    profiles: list[VertexProfile]
    classes: list[EdgeClass]
    initial: list[int]
    after_d5: list[int]
    charges: list[int]
    deficient: list[int]
    rule_totals: dict[str, int]
    d5_mode: str = "incidence"

    @property
    def total(self) -> int:
        return sum(self.charges)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "ell": self.ell,
            "d5_mode": self.d5_mode,
            "partition": self.partition.to_json(),
            "charges_half_units": list(self.charges),
            "charges": [_decimal(c) for c in self.charges],
            "deficient": list(self.deficient),
            "rule_totals": dict(self.rule_totals),
            "edges": [c.to_json() for c in self.classes],
            "profiles": [p.to_json() for p in self.profiles if p.vertex in self.partition.low],
        }


def _decimal(half_units: int) -> str:
    q, r = divmod(half_units, 2)
    return f"{q}.5" if r else f"{q}"


def d6_transfers(
    G: Hypergraph3, part: DegreePartition, profiles: list[VertexProfile], charges: list[int]
) -> list[tuple[int, int, int]]:
    """``(donor, recipient, edge index)`` moves of the last rule.

    Every half-helpful, non-helpful vertex gives one half-unit along each edge
    counted by its donor number whose 1-flat 2-vertex holds fewer than 8
    half-units in ``charges``; if two such vertices share the edge the lower
    id receives.
    """
    ctx = _Context(G, part)
    helpful = [p.is_helpful for p in profiles]
    moves = []
    for p in profiles:
        if p.is_helpful or not p.is_half_helpful:
            continue
        v = p.vertex
        for i in G.incidence[v]:
            e = G.edges[i]
            if not _donor_edge(ctx, helpful, v, e):
                continue
            needy = sorted(t for t in e if t != v and ctx.flat12[t] and charges[t] < TARGET)
            if needy:
                moves.append((v, needy[0], i))
    return moves


def run_discharge(G: Hypergraph3, ell: int | None = None, *, d5_mode: str = "incidence") -> ChargeReport:
    """Apply rules D1-D6 and report final charges in half-units.

    ``d5_mode="incidence"`` gives one half-unit per (edge, 1-flat 2-vertex)
    incidence; ``"neighbor"`` gives one per distinct 1-flat 2-neighbor.
    """
    if ell is None:
        ell = default_ell(G.n)
    if d5_mode not in ("incidence", "neighbor"):
        raise DomainError(f"unknown d5_mode {d5_mode!r}")
    part = partition(G, ell)
    ctx = _Context(G, part)
    classes = [ctx.classify(i) for i in range(len(G.edges))]
    profiles = _profiles(ctx, classes)
    M = part.nonlow
    charge = [2 * d for d in ctx.deg]
    initial = list(charge)
    totals = {f"D{k}": 0 for k in range(1, 7)}

    for c in classes:
        e = c.edge
        if c.kind is EdgeKind.SUPPORTED:
            for w in e:
                charge[w] += 4 if w == c.recipient else -2
            totals["D1"] += 4
        elif c.kind in (EdgeKind.NEEDY, EdgeKind.RICH, EdgeKind.REASONABLE):
            h = next(w for w in e if w in M)
            charge[h] -= 2
            if c.kind is EdgeKind.REASONABLE:
                for w in e:
                    if w != h:
                        charge[w] += 1
                totals["D4"] += 2
            else:
                charge[c.recipient] += 2
                totals["D2" if c.kind is EdgeKind.NEEDY else "D3"] += 2

    for p in profiles:
        if not p.is_helpful:
            continue
        v = p.vertex
        if d5_mode == "incidence":
            targets = [t for i in G.incidence[v] for t in G.edges[i] if t != v and ctx.flat12[t]]
        else:
            targets = sorted(t for t in G.neighbors(v) if ctx.flat12[t])
        for t in targets:
            charge[v] -= 1
            charge[t] += 1
        totals["D5"] += len(targets)
    after_d5 = list(charge)

    for v, t, _ in d6_transfers(G, part, profiles, after_d5):
        charge[v] -= 1
        charge[t] += 1
        totals["D6"] += 1

    deficient = [v for v in sorted(part.low) if charge[v] < TARGET]
    return ChargeReport(G.n, ell, part, profiles, classes, initial, after_d5, charge, deficient, totals, d5_mode)


@dataclass(frozen=True)
class AuditSummary:
    n: int
    ell: int
    edges: int
    low: int
    deficient: int
    deficient_fraction: Fraction
    histogram: dict[int, int]
    rule_totals: dict[str, int]
    total_charge: int
    conserved: bool
    nonlow_nonnegative: bool
    helpful_floor: bool
    class_counts: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "ell": self.ell,
            "edges": self.edges,
            "low": self.low,
            "deficient": self.deficient,
            "deficient_fraction": str(self.deficient_fraction),
            "histogram_half_units": {str(k): v for k, v in sorted(self.histogram.items())},
            "rule_totals": dict(self.rule_totals),
            "class_counts": dict(self.class_counts),
            "total_charge_half_units": self.total_charge,
            "conserved": self.conserved,
            "nonlow_nonnegative": self.nonlow_nonnegative,
            "helpful_floor": self.helpful_floor,
        }


def audit_summary(report: ChargeReport) -> AuditSummary:
    low = len(report.partition.low)
    frac = Fraction(len(report.deficient), low) if low else Fraction(0)
    counts = Counter(c.kind.value for c in report.classes)
    return AuditSummary(
        n=report.n,
        ell=report.ell,
        edges=len(report.classes),
        low=low,
        deficient=len(report.deficient),
        deficient_fraction=frac,
        histogram=dict(sorted(Counter(report.charges).items())),
        rule_totals=dict(report.rule_totals),
        total_charge=report.total,
        conserved=report.total == sum(report.initial) == 6 * len(report.classes),
        nonlow_nonnegative=all(report.charges[v] >= 0 for v in report.partition.nonlow),
        helpful_floor=all(
            report.charges[p.vertex] >= TARGET for p in report.profiles if p.is_half_helpful
        ),
        class_counts={k.value: counts.get(k.value, 0) for k in EdgeKind},
    )

"""The brick construction G_n of a loose-triangle-saturated hypergraph.

``G_n`` glues ``m + 2 - c`` copies of the 6-vertex brick ``A`` and ``c - 2``
copies of the 7-vertex brick ``B`` along two hub vertices ``x`` and ``y``,
where ``n = 4m + c`` with ``2 <= c <= 5``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .hypergraph import Hypergraph3

X, Y = 0, 1

A_ROLES = ("a_x", "a_y", "a_1", "a_2")
B_ROLES = ("b_x", "b_y", "b_1", "b_2", "b_3")

A_EDGES = (
    ("x", "a_x", "a_y"),
    ("y", "a_x", "a_y"),
    ("x", "a_x", "a_1"),
    ("x", "a_x", "a_2"),
    ("y", "a_y", "a_1"),
    ("y", "a_y", "a_2"),
)
B_EDGES = (
    ("x", "b_x", "b_y"),
    ("y", "b_x", "b_y"),
    ("b_1", "b_2", "b_3"),
    ("x", "b_x", "b_1"),
    ("y", "b_y", "b_1"),
    ("x", "b_x", "b_2"),
    ("y", "b_y", "b_2"),
    ("x", "b_x", "b_3"),
    ("y", "b_y", "b_3"),
)


@dataclass(frozen=True)
class BrickLayout:
    kind: str  # "A" or "B"
    index: int  # 1-based within its kind
    vertex_map: dict[str, int] = field(hash=False)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_map.values())

    @property
    def fresh(self) -> tuple[int, ...]:
        return tuple(v for r, v in self.vertex_map.items() if r not in ("x", "y"))

    def edges(self) -> list[tuple[int, int, int]]:
        pattern = A_EDGES if self.kind == "A" else B_EDGES
        vm = self.vertex_map
        return [tuple(sorted(vm[r] for r in e)) for e in pattern]

    def role_of(self, v: int) -> str:
        for r, u in self.vertex_map.items():
            if u == v:
                return r
        raise KeyError(v)


def decompose(n: int) -> tuple[int, int]:
    """``(m, c)`` with ``n = 4m + c`` and ``2 <= c <= 5``."""
    if n < 14:
        raise DomainError(f"the brick construction needs n >= 14, got {n}")
    c = (n - 2) % 4 + 2
    return (n - c) // 4, c


def expected_edge_count(n: int) -> int:
    m, c = decompose(n)
    return 6 * (m + 2 - c) + 9 * (c - 2)


def construct_gn(n: int) -> tuple[Hypergraph3, list[BrickLayout]]:
    """Build ``G_n`` with ``x = 0``, ``y = 1`` and bricks numbered consecutively
    (all A bricks first), each brick's fresh vertices in role order."""
    m, c = decompose(n)
    bricks: list[BrickLayout] = []
    nxt = 2
    for kind, count, roles in (("A", m + 2 - c, A_ROLES), ("B", c - 2, B_ROLES)):
        for i in range(1, count + 1):
            vm = {"x": X, "y": Y}
            for r in roles:
                vm[r] = nxt
                nxt += 1
            bricks.append(BrickLayout(kind, i, vm))
    assert nxt == n
    edges = [e for b in bricks for e in b.edges()]
    return Hypergraph3(n, edges), bricks


def vertex(bricks: list[BrickLayout], kind: str, index: int, role: str) -> int:
    """Vertex id of ``role`` in brick ``kind``/``index``, e.g. ``("A", 1, "a_1")``."""
    for b in bricks:
        if b.kind == kind and b.index == index:
            return b.vertex_map[role]
    raise KeyError((kind, index))

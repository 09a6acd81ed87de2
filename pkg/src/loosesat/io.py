"""The ``.h3`` text format and JSON output helpers.

Grammar, one item per line::

    # comment
    p h3 <n> <m>
    e <a> <b> <c>        (0-based, a < b < c)

Blank lines and ``#`` comments are ignored anywhere.  The header must come
before the first edge line and ``m`` must match the number of edge lines.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidEdgeError, ParseError
from .hypergraph import Hypergraph3


def _int_token(tok: str, line: int, col: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected a non-negative integer for {what}, got {tok!r}", line, col)
    return int(tok)


def _tokens(raw: str) -> list[tuple[int, str]]:
    out, i = [], 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((i + 1, raw[i:j]))
        i = j
    return out


def parse_h3(text: str) -> Hypergraph3:
    n = m = None
    header_line = 0
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        col, kind = toks[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno, col)
            if len(toks) != 4 or toks[1][1] != "h3":
                raise ParseError("header must read 'p h3 <n> <m>'", lineno, col)
            n = _int_token(toks[2][1], lineno, toks[2][0], "n")
            m = _int_token(toks[3][1], lineno, toks[3][0], "m")
            header_line = lineno
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before the 'p h3' header", lineno, col)
            if len(toks) != 4:
                raise ParseError(f"edge line needs 3 vertices, got {len(toks) - 1}", lineno, col)
            vs = tuple(_int_token(t, lineno, c, "a vertex") for c, t in toks[1:])
            for (c, _), v in zip(toks[1:], vs):
                if v >= n:
                    raise InvalidEdgeError(f"vertex {v} out of range [0, {n})", lineno, c)
            if not vs[0] < vs[1] < vs[2]:
                raise InvalidEdgeError(
                    f"edge vertices must be distinct and ascending, got {' '.join(map(str, vs))}",
                    lineno,
                    toks[1][0],
                )
            if vs in seen:
                raise InvalidEdgeError(f"duplicate edge, first given on line {seen[vs]}", lineno, col)
            seen[vs] = lineno
            edges.append(vs)
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno, col)
    if n is None:
        raise ParseError("missing 'p h3 <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given", header_line)
    return Hypergraph3(n, edges)


def write_h3(G: Hypergraph3, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p h3 {G.n} {len(G.edges)}")
    lines.extend(f"e {a} {b} {c}" for a, b, c in G.edges)
    return "\n".join(lines) + "\n"


def read_h3(path: str | Path) -> Hypergraph3:
    return parse_h3(Path(path).read_text(encoding="utf-8"))


def save_h3(G: Hypergraph3, path: str | Path, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(write_h3(G, comments), encoding="utf-8")


def _render(obj, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj))
        items = [pad + _render(x, depth + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"
    return json.dumps(obj)


def dumps(obj) -> str:
    """JSON text with the caller's key order kept, flat lists on one line and
    a trailing newline."""
    return _render(obj, 0) + "\n"

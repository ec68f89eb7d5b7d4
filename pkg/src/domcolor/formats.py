"""graph6 (short form) and plain edge-list text formats."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from .errors import (
    EdgeListError,
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6TruncatedError,
    GraphError,
    ParseError,
)
from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


def _upper_pairs(n: int):
    # graph6 bit order: column by column over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 long form is not supported (n = {g.n} > {GRAPH6_MAX_N})")
    out = [chr(g.n + 63)]
    chunk = 0
    filled = 0
    for i, j in _upper_pairs(g.n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(chunk + 63))
            chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6HeaderError("graph6 long form (n > 62) is not supported")
    if not 63 <= head <= 125:
        raise Graph6HeaderError(f"invalid graph6 header byte {s[0]!r}")
    n = head - 63
    body = s[1:]
    for ch in body:
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"character {ch!r} is outside the graph6 range '?'..'~'")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6TruncatedError(f"graph6 body has {len(body)} bytes, {need} required for n = {n}")
    if len(body) > need:
        raise Graph6TruncatedError(f"graph6 body has {len(body) - need} trailing bytes for n = {n}")
    stream = [(ord(ch) - 63) >> (5 - k) & 1 for ch in body for k in range(6)]
    edges = [(i, j) for (i, j), bit in zip(_upper_pairs(n), stream) if bit]
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    head = str(g.n) if g.root is None else f"{g.n} {g.root}"
    return "\n".join([head] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n [root]"`` followed by one ``"u v"`` line per edge.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise EdgeListError("empty edge list: expected a header line 'n [root]'")

    def ints(lineno: int, line: str, sizes: tuple[int, ...]) -> list[int]:
        parts = line.split()
        if len(parts) not in sizes:
            raise EdgeListError(f"line {lineno}: malformed line {line!r}")
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer token in {line!r}") from None

    lineno, line = lines[0]
    header = ints(lineno, line, (1, 2))
    n = header[0]
    if n < 0:
        raise EdgeListError(f"line {lineno}: negative vertex count")
    root: Optional[int] = header[1] if len(header) == 2 else None
    if root is not None and not 0 <= root < n:
        raise EdgeListError(f"line {lineno}: root {root} is not a vertex")
    seen = set()
    edges = []
    for lineno, line in lines[1:]:
        u, v = ints(lineno, line, (2,))
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: endpoint out of range 0..{n - 1} in {line!r}")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges, root)


FORMAT_BY_SUFFIX = {".g6": "graph6", ".graph6": "graph6", ".txt": "edges", ".edges": "edges", ".el": "edges"}


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix not in FORMAT_BY_SUFFIX:
        raise ParseError(f"cannot infer graph format from {str(path)!r}; pass --format")
    return FORMAT_BY_SUFFIX[suffix]


def read_graph(path: str | Path, fmt: Optional[str] = None) -> Graph:
    fmt = fmt or detect_format(path)
    text = Path(path).read_text()
    if fmt == "graph6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ParseError(f"unknown graph format {fmt!r}")

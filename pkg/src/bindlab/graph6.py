"""graph6 and plain edge-list reading/writing.

graph6 reference: https://users.cecs.anu.edu.au/~bdm/data/formats.txt.
Only the single-byte size header is accepted since graphs are capped at
:data:`~bindlab.graph.MAX_VERTICES` vertices.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, TextIO

from bindlab.graph import MAX_VERTICES, Graph, GraphError, from_edge_list

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6RangeError(Graph6Error):
    pass


class EdgeListError(ValueError):
    pass


def _bit_positions(n: int) -> Iterator[tuple[int, int]]:
    # upper triangle, column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6HeaderError("empty graph6 string")
    first = ord(line[0])
    if first == 126:
        raise Graph6RangeError(f"multi-byte size header: n > 62 exceeds the supported {MAX_VERTICES}")
    if not 63 <= first <= 125:
        raise Graph6HeaderError(f"invalid size byte {line[0]!r}")
    n = first - 63
    if n > MAX_VERTICES:
        raise Graph6RangeError(f"n={n} exceeds the supported {MAX_VERTICES}")
    body = line[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6TruncatedError(f"bit field has {len(body)} bytes, n={n} needs {need}")
    if len(body) > need:
        raise Graph6Error(f"bit field has {len(body)} bytes, n={n} needs only {need}")
    bits = 0
    for ch in body:
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise Graph6Error(f"invalid bit-field byte {ch!r}")
        bits = bits << 6 | c
    total = 6 * need
    if bits & ((1 << (total - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    pairs = []
    for k, (i, j) in enumerate(_bit_positions(n)):
        if bits >> (total - 1 - k) & 1:
            pairs.append((i, j))
    return from_edge_list(n, pairs)


def emit_graph6(G: Graph) -> str:
    bits = []
    for i, j in _bit_positions(G.n):
        bits.append(1 if G.adj[i] >> j & 1 else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        c = 0
        for b in bits[k:k + 6]:
            c = c << 1 | b
        out.append(chr(c + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise EdgeListError("empty edge list")
    try:
        n, m = (int(tok) for tok in lines[0].split())
        pairs = []
        for ln in lines[1:]:
            u, v = (int(tok) for tok in ln.split())
            pairs.append((u, v))
    except ValueError as exc:
        raise EdgeListError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return from_edge_list(n, pairs)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None


def emit_edge_list(G: Graph) -> str:
    rows = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(rows) + "\n"


def _looks_like_edge_list(first_line: str) -> bool:
    toks = first_line.split()
    return len(toks) == 2 and all(t.isdigit() for t in toks)


def parse_graph_text(text: str) -> Graph:
    """Parse a single graph given either as graph6 or as an edge list."""
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if _looks_like_edge_list(first):
        return parse_edge_list(stripped)
    return parse_graph6(first)


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph_text(fh.read())


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def read_graph6_file(path: str | os.PathLike) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(iter_graph6(fh))


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for G in graphs:
        fh.write(emit_graph6(G) + "\n")
        count += 1
    return count

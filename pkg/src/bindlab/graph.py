"""Immutable simple graphs on vertices ``0..n-1`` with bitmask neighbourhoods.

Every vertex set is an ``int`` bitmask under the hood (bit ``v`` set means
``v`` is a member).  :class:`VertexSet` wraps such a mask together with the
vertex count it is bound to, and all functions here accept either a
:class:`VertexSet` or any iterable of vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Union

MAX_VERTICES = 24


class GraphError(ValueError):
    """Invalid graph construction or vertex-set argument."""


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(f"vertex set {self.mask:#x} not contained in 0..{self.n - 1}")

    @classmethod
    def of(cls, members: Iterable[int], n: int) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return iter(mask_members(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask, max(self.n, other.n))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask, max(self.n, other.n))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask, self.n)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.mask, self.n)

    def members(self) -> tuple[int, ...]:
        return mask_members(self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members())) + "}"


VertexSetLike = Union[VertexSet, Iterable[int]]


def mask_members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the neighbour bitmask of ``v``; ``edges`` lists every edge
    once as ``(u, v)`` with ``u < v``, sorted lexicographically.
    """

    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"n={self.n} outside supported range 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise GraphError(f"self-loop at {v}")
            if nb >> self.n:
                raise GraphError(f"neighbour of {v} out of range")
            for u in mask_members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.edges != _edges_from_adj(self.adj):
            raise GraphError("edge list does not match adjacency")

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        return cls(len(adj), adj, _edges_from_adj(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("minimum degree of the null graph is undefined")
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v], self.n)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.edges.index((u, v))
        except ValueError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def add_edge(self, u: int, v: int) -> "Graph":
        pairs = list(self.edges) + [(u, v)]
        return from_edge_list(self.n, pairs)

    def to_graph6(self) -> str:
        from bindlab.graph6 import emit_graph6

        return emit_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _edges_from_adj(adj: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u, nb in enumerate(adj) for v in mask_members(nb >> (u + 1) << (u + 1)))


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from ``(u, v)`` pairs; duplicates are merged."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"n={n} outside supported range 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.from_adjacency(adj)


def as_mask(G: Graph, X: VertexSetLike) -> int:
    if isinstance(X, VertexSet):
        if X.mask >> G.n:
            raise GraphError(f"vertex set {X} not contained in V(G)")
        return X.mask
    if isinstance(X, int):
        raise TypeError("pass a VertexSet or an iterable of vertices, not a bare int")
    return VertexSet.of(X, G.n).mask


def neighborhood_mask(G: Graph, mask: int) -> int:
    out = 0
    adj = G.adj
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def neighborhood(G: Graph, X: VertexSetLike) -> VertexSet:
    """Union of the neighbourhoods of the members of ``X``."""
    return VertexSet(neighborhood_mask(G, as_mask(G, X)), G.n)


def edges_between(G: Graph, A: VertexSetLike, B: VertexSetLike) -> int:
    """Number of edges with one end in ``A`` and the other in ``B`` (disjoint)."""
    a, b = as_mask(G, A), as_mask(G, B)
    if a & b:
        raise GraphError("edges_between needs disjoint vertex sets")
    return sum((G.adj[v] & b).bit_count() for v in mask_members(a))


def edges_within(G: Graph, X: VertexSetLike) -> int:
    x = as_mask(G, X)
    return sum((G.adj[v] & x).bit_count() for v in mask_members(x)) // 2


def is_independent(G: Graph, X: VertexSetLike) -> bool:
    x = as_mask(G, X)
    return all(not G.adj[v] & x for v in mask_members(x))


class Deletion(NamedTuple):
    """Result of :func:`delete_vertices`.

    ``old_to_new`` maps surviving original labels to labels in ``graph``;
    ``new_to_old[i]`` is the original label of new vertex ``i``.
    """

    graph: Graph
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]

    def to_old_mask(self, mask: int) -> int:
        out = 0
        for i in mask_members(mask):
            out |= 1 << self.new_to_old[i]
        return out

    def to_old(self, X: VertexSet, n_original: int) -> VertexSet:
        return VertexSet(self.to_old_mask(X.mask), n_original)


def delete_vertices(G: Graph, S: VertexSetLike) -> Deletion:
    """Induced subgraph on ``V(G) - S``, relabelled contiguously in label order."""
    s = as_mask(G, S)
    kept = tuple(v for v in range(G.n) if not s >> v & 1)
    old_to_new = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        nb = 0
        for u in mask_members(G.adj[old] & ~s):
            nb |= 1 << old_to_new[u]
        adj.append(nb)
    return Deletion(Graph.from_adjacency(adj), old_to_new, kept)


def induced_degree(G: Graph, v: int, removed: int) -> int:
    """Degree of ``v`` in ``G - removed`` (``removed`` a bitmask)."""
    return (G.adj[v] & ~removed).bit_count()


def independent_set_masks(G: Graph) -> Iterator[int]:
    """Bitmasks of all independent sets, by size and then by mask value."""
    n = G.n
    # later[v]: vertices after v that are not adjacent to v
    later = [((G.all_mask >> (v + 1)) << (v + 1)) & ~G.adj[v] for v in range(n)]
    yield 0
    # level entries: (mask, candidate extensions beyond the largest member)
    level = [(1 << v, later[v]) for v in range(n)]
    while level:
        level.sort()
        for mask, _ in level:
            yield mask
        nxt = []
        for mask, cand in level:
            c = cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                nxt.append((mask | low, cand & later[v]))
                c ^= low
        level = nxt


def independent_sets(G: Graph) -> Iterator[VertexSet]:
    """Every independent set exactly once, ``∅`` first, then by size and mask."""
    for mask in independent_set_masks(G):
        yield VertexSet(mask, G.n)

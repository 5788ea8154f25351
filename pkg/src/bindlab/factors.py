"""Fractional [a,b]-factors and fractional [a,b]-covered graphs.

Two independent deciders live here:

* :func:`is_fractional_ab_covered` scans every ``S ⊆ V(G)`` and checks the
  deficiency inequality ``b|S| - a|T| + d_{G-S}(T) >= ε(S)`` where
  ``T = {x ∉ S : d_{G-S}(x) <= a}``.
* :func:`covered_oracle` asks, edge by edge, whether some edge weighting with
  values in ``{0, 1/2, 1}`` and that edge pinned to 1 keeps every vertex sum
  inside ``[a, b]``.  The polytope ``{0 <= h <= 1, a <= Σ_{e∋x} h(e) <= b}``
  has half-integral vertices, so searching that grid decides the continuous
  problem exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

import numpy as np

from bindlab._subsets import first_in_order, popcount, subset_chunks
from bindlab.graph import (
    Graph,
    GraphError,
    VertexSet,
    VertexSetLike,
    as_mask,
    edges_between,
    is_independent,
    mask_members,
)

DEFAULT_FREE_EDGE_CAP = 20


class CapacityError(RuntimeError):
    """Too many free edges for the grid search; use the structural criterion."""


@dataclass(frozen=True)
class FactorBounds:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError("factor bounds must be non-negative")
        if self.a > self.b:
            raise ValueError(f"need a <= b, got a={self.a}, b={self.b}")

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


BoundsLike = Union[FactorBounds, tuple[int, int]]


def as_bounds(bounds: BoundsLike) -> FactorBounds:
    return bounds if isinstance(bounds, FactorBounds) else FactorBounds(*bounds)


# -- the structural criterion ------------------------------------------------


def _tee_mask(G: Graph, s: int, a: int) -> int:
    t = 0
    for x in range(G.n):
        if not s >> x & 1 and (G.adj[x] & ~s).bit_count() <= a:
            t |= 1 << x
    return t


def tee_set(G: Graph, S: VertexSetLike, a: int) -> VertexSet:
    """Vertices outside ``S`` whose degree in ``G - S`` is at most ``a``."""
    return VertexSet(_tee_mask(G, as_mask(G, S), a), G.n)


def epsilon(G: Graph, S: VertexSetLike, a: int) -> int:
    s = as_mask(G, S)
    if not is_independent(G, VertexSet(s, G.n)):
        return 2
    t = _tee_mask(G, s, a)
    rest = G.all_mask & ~(s | t)
    for v in mask_members(t):
        if G.adj[v] & s and (G.adj[v] & ~s).bit_count() == a:
            return 1
    if edges_between(G, VertexSet(s, G.n), VertexSet(rest, G.n)) >= 1:
        return 1
    return 0


def delta_st(G: Graph, S: VertexSetLike, bounds: BoundsLike) -> int:
    """``b|S| - a|T| + Σ_{x∈T} d_{G-S}(x)`` with ``T = tee_set(G, S, a)``."""
    bd = as_bounds(bounds)
    s = as_mask(G, S)
    t = _tee_mask(G, s, bd.a)
    deg_t = sum((G.adj[x] & ~s).bit_count() for x in mask_members(t))
    return bd.b * s.bit_count() - bd.a * t.bit_count() + deg_t


@dataclass(frozen=True)
class CoveredWitness:
    S: VertexSet
    T: VertexSet
    epsilon: int
    delta: int

    def revalidate(self, G: Graph, bounds: BoundsLike) -> bool:
        bd = as_bounds(bounds)
        return (
            tee_set(G, self.S, bd.a) == self.T
            and epsilon(G, self.S, bd.a) == self.epsilon
            and delta_st(G, self.S, bd) == self.delta
            and self.delta <= self.epsilon - 1
        )


@dataclass(frozen=True)
class CoveredVerdict:
    covered: bool
    witness: CoveredWitness | None = None

    def __bool__(self) -> bool:
        return self.covered


def _witness(G: Graph, s: int, bounds: FactorBounds) -> CoveredWitness:
    S = VertexSet(s, G.n)
    return CoveredWitness(S, tee_set(G, S, bounds.a), epsilon(G, S, bounds.a), delta_st(G, S, bounds))


def _violations(G: Graph, masks: np.ndarray, a: int, b: int) -> np.ndarray:
    notmask = ~masks
    size_t = np.zeros(masks.shape, dtype=np.int64)
    deg_t = np.zeros(masks.shape, dtype=np.int64)
    dependent = np.zeros(masks.shape, dtype=bool)
    touch = np.zeros(masks.shape, dtype=bool)
    for x in range(G.n):
        nb = np.uint32(G.adj[x])
        in_s = (masks >> np.uint32(x)) & np.uint32(1) == 1
        hits_s = (masks & nb) != 0
        deg = popcount(notmask & nb)
        in_t = ~in_s & (deg <= a)
        size_t += in_t
        deg_t += np.where(in_t, deg, 0)
        dependent |= in_s & hits_s
        # a neighbour of S that is either in T at degree exactly a, or outside S ∪ T
        touch |= ~in_s & hits_s & (deg >= a)
    delta = b * popcount(masks) - a * size_t + deg_t
    eps = np.where(dependent, 2, np.where(touch, 1, 0))
    return delta < eps


def is_fractional_ab_covered(G: Graph, bounds: BoundsLike) -> CoveredVerdict:
    """Decide coveredness by checking the deficiency inequality for every S.

    On failure the witness is the first violating S by size, then mask.
    """
    bd = as_bounds(bounds)
    first = None
    for masks, _ in subset_chunks(G):
        s = first_in_order(masks, _violations(G, masks, bd.a, bd.b))
        if s is not None and (first is None or (s.bit_count(), s) < (first.bit_count(), first)):
            first = s
    if first is None:
        return CoveredVerdict(True)
    return CoveredVerdict(False, _witness(G, first, bd))


def covered_scan_scalar(G: Graph, bounds: BoundsLike) -> CoveredVerdict:
    """Same decision as :func:`is_fractional_ab_covered`, one subset at a time."""
    bd = as_bounds(bounds)
    order = sorted(range(1 << G.n), key=lambda s: (s.bit_count(), s))
    for s in order:
        if delta_st(G, VertexSet(s, G.n), bd) < epsilon(G, VertexSet(s, G.n), bd.a):
            return CoveredVerdict(False, _witness(G, s, bd))
    return CoveredVerdict(True)


# -- the half-integral oracle ------------------------------------------------


@dataclass(frozen=True)
class FractionalAssignment:
    """Edge weights aligned with ``G.edges``; every weight is 0, 1/2 or 1."""

    weights: tuple[Fraction, ...]

    def vertex_sums(self, G: Graph) -> list[Fraction]:
        sums = [Fraction(0)] * G.n
        for (u, v), w in zip(G.edges, self.weights):
            sums[u] += w
            sums[v] += w
        return sums

    def support(self, G: Graph) -> list[tuple[int, int]]:
        return [e for e, w in zip(G.edges, self.weights) if w > 0]

    def is_valid(self, G: Graph, bounds: BoundsLike, forced_edges: Iterable[tuple[int, int]] = ()) -> bool:
        bd = as_bounds(bounds)
        if len(self.weights) != G.m or any(w not in (0, Fraction(1, 2), 1) for w in self.weights):
            return False
        if any(self.weights[G.edge_index(u, v)] != 1 for u, v in forced_edges):
            return False
        return all(bd.a <= s <= bd.b for s in self.vertex_sums(G))


def _normalise_forced(G: Graph, forced_edges: Iterable[tuple[int, int]]) -> set[int]:
    idx = set()
    for u, v in forced_edges:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise GraphError(f"forced edge ({u}, {v}) is not an edge of G")
        idx.add(G.edge_index(u, v))
    return idx


def fractional_factor_exists(
    G: Graph,
    bounds: BoundsLike,
    forced_edges: Iterable[tuple[int, int]] = (),
    cap: int = DEFAULT_FREE_EDGE_CAP,
) -> FractionalAssignment | None:
    """Search ``{0, 1/2, 1}`` weights with ``forced_edges`` pinned to 1.

    The search runs in doubled units (weights 0, 1, 2; vertex window
    ``[2a, 2b]``) over edges in lexicographic order.  A vertex is closed once
    its last free edge is set, and failed partial states are memoised on the
    running sums of the still-open vertices, so the search stays complete.
    """
    bd = as_bounds(bounds)
    forced = _normalise_forced(G, forced_edges)
    free = [i for i in range(G.m) if i not in forced]
    if len(free) > cap:
        raise CapacityError(f"{len(free)} free edges exceed the grid-search cap of {cap}")
    lo, hi = 2 * bd.a, 2 * bd.b
    n = G.n

    sums = [0] * n
    for i in forced:
        u, v = G.edges[i]
        sums[u] += 2
        sums[v] += 2
    remaining = [0] * n
    last = [-1] * n
    first = [len(free)] * n
    for k, i in enumerate(free):
        for x in G.edges[i]:
            remaining[x] += 1
            last[x] = k
            first[x] = min(first[x], k)
    for x in range(n):
        if sums[x] > hi or sums[x] + 2 * remaining[x] < lo:
            return None
    # open_at[k]: vertices touched before step k whose last free edge is at k or later
    open_at = [tuple(x for x in range(n) if first[x] < k <= last[x]) for k in range(len(free) + 1)]

    choice = [0] * len(free)
    dead: set[tuple] = set()

    def search(k: int) -> bool:
        if k == len(free):
            return True
        key = (k, tuple(sums[x] for x in open_at[k]))
        if key in dead:
            return False
        u, v = G.edges[free[k]]
        remaining[u] -= 1
        remaining[v] -= 1
        for w in (1, 2, 0):
            su, sv = sums[u] + w, sums[v] + w
            if su > hi or sv > hi:
                continue
            if su + 2 * remaining[u] < lo or sv + 2 * remaining[v] < lo:
                continue
            sums[u], sums[v] = su, sv
            choice[k] = w
            found = search(k + 1)
            sums[u] -= w
            sums[v] -= w
            if found:
                remaining[u] += 1
                remaining[v] += 1
                return True
        remaining[u] += 1
        remaining[v] += 1
        dead.add(key)
        return False

    if not search(0):
        return None
    weights = [Fraction(1)] * G.m
    for k, i in enumerate(free):
        weights[i] = Fraction(choice[k], 2)
    return FractionalAssignment(tuple(weights))


class OracleVerdict(NamedTuple):
    covered: bool
    failing_edge: tuple[int, int] | None = None


def covered_oracle(G: Graph, bounds: BoundsLike, cap: int = DEFAULT_FREE_EDGE_CAP) -> OracleVerdict:
    """Coveredness by asking, for each edge in order, for a factor using it fully."""
    bd = as_bounds(bounds)
    if G.m == 0:
        return OracleVerdict(fractional_factor_exists(G, bd, cap=cap) is not None)
    if G.m - 1 > cap:
        raise CapacityError(f"{G.m - 1} free edges exceed the grid-search cap of {cap}")
    for e in G.edges:
        if fractional_factor_exists(G, bd, [e], cap=cap) is None:
            return OracleVerdict(False, e)
    return OracleVerdict(True)

"""Exact binding numbers.

``bind(G)`` is the minimum of ``|N(X)| / |X|`` over nonempty ``X`` with
``N(X) != V(G)``.  Two independent routes compute it: a vectorised scan
over every subset and a pure-Python branch-and-bound.  Both report the
minimiser of smallest size, then smallest bitmask.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from bindlab._subsets import popcount, subset_chunks
from bindlab.graph import MAX_VERTICES, Graph, VertexSet

# c/s for s <= MAX_VERTICES becomes the exact integer c * (_LCM // s)
_LCM = math.lcm(*range(1, MAX_VERTICES + 1))


class BindingError(ValueError):
    pass


@dataclass(frozen=True)
class BindingWitness:
    value: Fraction
    witness_set: VertexSet


def _check_order(G: Graph) -> None:
    if G.n == 0:
        raise BindingError("binding number is undefined for the null graph")


def binding_number(G: Graph) -> BindingWitness:
    """Exhaustive scan over all ``2^n`` subsets."""
    _check_order(G)
    full = np.uint32(G.all_mask)
    scale = np.array([0] + [_LCM // s for s in range(1, G.n + 1)], dtype=np.int64)
    best = None  # (key, size, mask)
    for masks, nb in subset_chunks(G, with_neighborhoods=True):
        sizes = popcount(masks)
        ok = (sizes > 0) & (nb != full)
        if not ok.any():
            continue
        keys = popcount(nb[ok]) * scale[sizes[ok]]
        m, s, x = masks[ok], sizes[ok], keys
        sel = x == x.min()
        s_min = s[sel].min()
        sel &= s == s_min
        cand = (int(x.min()), int(s_min), int(m[sel].min()))
        if best is None or cand < best:
            best = cand
    # every singleton qualifies (v is never its own neighbour), so best is set
    key, _, mask = best
    return BindingWitness(Fraction(key, _LCM), VertexSet(mask, G.n))


def binding_number_pruned(G: Graph) -> BindingWitness:
    """Depth-first include/exclude search with a ratio lower bound.

    For ``X ⊆ Y`` with ``Y`` drawn from ``X`` plus ``r`` undecided vertices,
    ``|N(Y)|/|Y| >= |N(X)|/(|X| + r)``; branches whose bound exceeds the
    incumbent are cut, and so are branches with ``N(X) = V`` since the
    neighbourhood only grows.
    """
    _check_order(G)
    n, adj, full = G.n, G.adj, G.all_mask
    # incumbent: singleton of minimum degree, smallest label
    v0 = min(range(n), key=lambda v: (adj[v].bit_count(), v))
    best = [adj[v0].bit_count(), 1, 1 << v0]  # numerator, size, mask

    def better(c: int, s: int, mask: int) -> bool:
        bc, bs, bm = best
        lhs, rhs = c * bs, bc * s
        return lhs < rhs or (lhs == rhs and (s, mask) < (bs, bm))

    def search(i: int, mask: int, size: int, nb: int) -> None:
        if size:
            c = nb.bit_count()
            if better(c, size, mask):
                best[:] = [c, size, mask]
            # no superset can beat the incumbent strictly or tie with a smaller key
            if c * best[1] > best[0] * (size + n - i):
                return
        for v in range(i, n):
            nb2 = nb | adj[v]
            if nb2 == full:
                continue
            search(v + 1, mask | 1 << v, size + 1, nb2)

    search(0, 0, 0, 0)
    c, s, mask = best
    return BindingWitness(Fraction(c, s), VertexSet(mask, n))


class WoodallCheck(NamedTuple):
    min_degree: int
    bound: Fraction
    holds: bool


def woodall_bound(G: Graph, binding: Fraction | None = None) -> WoodallCheck:
    """Compare ``δ(G)`` with ``n - (n-1)/bind(G)``; ``holds`` is always true
    for a correct binding number."""
    if G.n < 2:
        raise BindingError("the minimum-degree bound needs n >= 2")
    value = binding_number(G).value if binding is None else Fraction(binding)
    if value == 0:
        raise BindingError("bind(G) = 0: the bound n - (n-1)/bind(G) is not defined")
    bound = G.n - Fraction(G.n - 1) / value
    delta = G.min_degree()
    return WoodallCheck(delta, bound, delta >= bound)

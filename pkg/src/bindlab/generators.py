"""Standard graph families and a reproducible G(n, p) sampler.

``random_gnp`` walks the pairs ``(u, v)``, ``u < v``, in lexicographic order
and draws one raw 64-bit word per pair from numpy's PCG64 bit generator
seeded with ``seed``.  The pair becomes an edge iff ``word / 2**64 < p``,
evaluated exactly as ``word * den < num * 2**64`` for ``p = num/den``.
PCG64 raw output is a fixed stream, so the graph depends only on
``(n, p, seed)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from bindlab.graph import Graph, GraphError, from_edge_list


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    return complete_bipartite(1, m)


def complete_multipartite(*parts: int) -> Graph:
    labels = []
    for k, size in enumerate(parts):
        labels.extend([k] * size)
    n = len(labels)
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if labels[u] != labels[v]])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return from_edge_list(G.n + H.n, list(G.edges) + [(u + shift, v + shift) for u, v in H.edges])


def join(G: Graph, H: Graph) -> Graph:
    """G ∨ H: disjoint union plus every edge between V(G) and V(H)."""
    shift = G.n
    extra = [(u, shift + v) for u in range(G.n) for v in range(H.n)]
    return from_edge_list(G.n + H.n, list(disjoint_union(G, H).edges) + extra)


def complete_split(p: int, q: int) -> Graph:
    """K_p ∨ (q K_1): a clique of size p joined to q independent vertices."""
    return join(complete(p), empty(q))


def wheel(k: int) -> Graph:
    """K_1 ∨ C_k; the hub is vertex 0."""
    return join(complete(1), cycle(k))


def _as_probability(p) -> Fraction:
    frac = Fraction(p)
    if not 0 <= frac <= 1:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    return frac


def random_gnp(n: int, p, seed: int) -> Graph:
    prob = _as_probability(p)
    if not 0 <= seed < 2**64:
        raise GraphError("seed must be an unsigned 64-bit value")
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return empty(n)
    words = np.random.PCG64(seed).random_raw(len(pairs))
    num, den = prob.numerator, prob.denominator
    cut = num << 64
    chosen = [pair for pair, w in zip(pairs, words.tolist()) if w * den < cut]
    return from_edge_list(n, chosen)


def gnp_corpus(sizes: Sequence[int], probabilities: Sequence, seeds: Sequence[int]) -> Iterator[Graph]:
    """Graphs for every (n, p, seed) in nested order n, then p, then seed."""
    for n in sizes:
        for p in probabilities:
            for seed in seeds:
                yield random_gnp(n, p, seed)

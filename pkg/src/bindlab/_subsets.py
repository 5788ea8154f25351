"""Chunked vectorised iteration over all subsets of ``{0, ..., n-1}``."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from bindlab.graph import Graph, neighborhood_mask

CHUNK_BITS = 18


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)


def _low_neighborhoods(adj: tuple[int, ...], bits: int) -> np.ndarray:
    nb = np.zeros(1 << bits, dtype=np.uint32)
    for v in range(bits):
        half = 1 << v
        nb[half:2 * half] = nb[:half] | np.uint32(adj[v])
    return nb


def subset_chunks(G: Graph, with_neighborhoods: bool = False) -> Iterator[tuple[np.ndarray, np.ndarray | None]]:
    """Yield ``(masks, nbhd)`` covering every subset exactly once, masks ascending.

    ``nbhd[i]`` is ``N_G(masks[i])`` when requested, else ``None``.
    """
    low_bits = min(G.n, CHUNK_BITS)
    low = np.arange(1 << low_bits, dtype=np.uint32)
    low_nb = _low_neighborhoods(G.adj, low_bits) if with_neighborhoods else None
    for high in range(1 << (G.n - low_bits)):
        offset = high << low_bits
        masks = low | np.uint32(offset) if offset else low
        nb = None
        if with_neighborhoods:
            nb = low_nb | np.uint32(neighborhood_mask(G, offset)) if offset else low_nb
        yield masks, nb


def first_in_order(masks: np.ndarray, hit: np.ndarray) -> int | None:
    """Smallest hit mask by (popcount, value), or ``None`` when nothing hit."""
    if not hit.any():
        return None
    cand = masks[hit]
    sizes = popcount(cand)
    best = sizes.min()
    return int(cand[sizes == best].min())

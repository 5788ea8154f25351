"""Fractional ID-[a,b]-factor-critical covered graphs.

G has the property when ``G - I`` is fractional [a,b]-covered for every
independent set ``I``.  By default ``I = ∅`` is part of the quantifier, so
the property includes coveredness of G itself; ``include_empty=False``
restricts to nonempty ``I``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from bindlab.factors import BoundsLike, CoveredVerdict, CoveredWitness, as_bounds, is_fractional_ab_covered
from bindlab.graph import Deletion, Graph, VertexSet, delete_vertices, independent_set_masks


@dataclass(frozen=True)
class IdCriticalVerdict:
    holds: bool
    failing_set: VertexSet | None = None
    inner: CoveredVerdict | None = None

    def __bool__(self) -> bool:
        return self.holds


def _translate(verdict: CoveredVerdict, deletion: Deletion, n: int) -> CoveredVerdict:
    w = verdict.witness
    if w is None:
        return verdict
    return CoveredVerdict(
        verdict.covered,
        CoveredWitness(deletion.to_old(w.S, n), deletion.to_old(w.T, n), w.epsilon, w.delta),
    )


def residual_verdict(G: Graph, I: VertexSet, bounds: BoundsLike) -> CoveredVerdict:
    """Covered verdict for ``G - I`` with the witness in G's labels."""
    deletion = delete_vertices(G, I)
    return _translate(is_fractional_ab_covered(deletion.graph, bounds), deletion, G.n)


def is_id_critical_covered(G: Graph, bounds: BoundsLike, include_empty: bool = True) -> IdCriticalVerdict:
    bd = as_bounds(bounds)
    for mask in independent_set_masks(G):
        if not mask and not include_empty:
            continue
        I = VertexSet(mask, G.n)
        verdict = residual_verdict(G, I, bd)
        if not verdict.covered:
            return IdCriticalVerdict(False, I, verdict)
    return IdCriticalVerdict(True)


@dataclass(frozen=True)
class SizeProfile:
    passed: int = 0
    failed: int = 0


def id_critical_profile(G: Graph, bounds: BoundsLike) -> dict[int, SizeProfile]:
    """Pass/fail counts of ``G - I`` coveredness, grouped by ``|I|``.

    Every independent set is checked; coveredness is not monotone under
    vertex deletion, so no size class stands in for another.
    """
    bd = as_bounds(bounds)
    counts: dict[int, list[int]] = defaultdict(lambda: [0, 0])
    for mask in independent_set_masks(G):
        ok = residual_verdict(G, VertexSet(mask, G.n), bd).covered
        counts[mask.bit_count()][0 if ok else 1] += 1
    return {size: SizeProfile(*counts[size]) for size in sorted(counts)}


is_id_critical_covered_maximal_profile = id_critical_profile

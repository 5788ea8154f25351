"""Binding-number thresholds and counterexample campaigns.

The sufficient condition checked here: for integers ``2 <= a <= b`` and a
graph of order ``n >= ((a+2b)(a+b-2)+2)/b``, ``bind(G) > (a+2b-1)(n-1) /
(bn-(a+b))`` forces G to be fractional ID-[a,b]-factor-critical covered.
The ``conjecture1`` campaign mode relaxes ``>`` to ``>=``.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Sequence

from bindlab.binding import BindingWitness, binding_number
from bindlab.factors import BoundsLike, FactorBounds, as_bounds
from bindlab.graph import Graph
from bindlab.graph6 import emit_graph6
from bindlab.idcritical import IdCriticalVerdict, is_id_critical_covered

JOBS_ENV = "BINDLAB_JOBS"
DEFAULT_SLACK = Fraction(1, 10)


class DomainError(ValueError):
    """Threshold formula evaluated outside its hypotheses."""


def _check_ab(bd: FactorBounds) -> None:
    if bd.a < 2:
        raise DomainError(f"need 2 <= a <= b, got a={bd.a}, b={bd.b}")


def binding_threshold(n: int, bounds: BoundsLike) -> Fraction:
    """``(a+2b-1)(n-1) / (bn-(a+b))``."""
    bd = as_bounds(bounds)
    _check_ab(bd)
    a, b = bd.a, bd.b
    den = b * n - (a + b)
    if den <= 0:
        raise DomainError(f"bn-(a+b) = {den} is not positive for n={n}, a={a}, b={b}")
    return Fraction((a + 2 * b - 1) * (n - 1), den)


def order_threshold(bounds: BoundsLike) -> Fraction:
    """``((a+2b)(a+b-2)+2) / b``; a graph qualifies when ``n`` is at least this."""
    bd = as_bounds(bounds)
    _check_ab(bd)
    a, b = bd.a, bd.b
    return Fraction((a + 2 * b) * (a + b - 2) + 2, b)


def min_order(bounds: BoundsLike) -> int:
    return math.ceil(order_threshold(bounds))


def corollary_threshold(n: int, k: int) -> Fraction:
    """``(3k-1)(n-1)/(kn-2k)``, the a = b = k case written out directly."""
    if k < 2:
        raise DomainError("need k >= 2")
    den = k * n - 2 * k
    if den <= 0:
        raise DomainError(f"kn-2k = {den} is not positive")
    return Fraction((3 * k - 1) * (n - 1), den)


def theorem1_threshold(n: int, k: int) -> Fraction:
    """``(3k-1)(n-1)/(kn-2k+2)``: the older bound for the non-covered property."""
    if k < 2:
        raise DomainError("need k >= 2")
    if n < 6 * k - 9:
        raise DomainError(f"n={n} below 6k-9={6 * k - 9}")
    den = k * n - 2 * k + 2
    if den <= 0:
        raise DomainError(f"kn-2k+2 = {den} is not positive")
    return Fraction((3 * k - 1) * (n - 1), den)


class Classification(str, Enum):
    HYPOTHESIS_FAILED_ORDER = "HYPOTHESIS_FAILED_ORDER"
    HYPOTHESIS_FAILED_BINDING = "HYPOTHESIS_FAILED_BINDING"
    CONCLUSION_HOLDS = "CONCLUSION_HOLDS"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    ERROR = "ERROR"


@dataclass(frozen=True)
class Theorem2Verdict:
    order_ok: bool
    binding_value: Fraction
    threshold: Fraction | None
    hypothesis_ok: bool
    conclusion_checked: bool
    conclusion_ok: bool | None
    classification: Classification
    binding_witness: BindingWitness | None = None
    conclusion: IdCriticalVerdict | None = None

    def consistent(self, strict: bool = True) -> bool:
        """Re-derive the classification from the stored fields."""
        if self.threshold is None:
            bind_ok = False
        else:
            bind_ok = self.binding_value > self.threshold if strict else self.binding_value >= self.threshold
        if self.hypothesis_ok != (self.order_ok and bind_ok):
            return False
        if (self.classification is Classification.COUNTEREXAMPLE) != (
            self.hypothesis_ok and self.conclusion_ok is False
        ):
            return False
        if self.conclusion_checked != (self.conclusion_ok is not None):
            return False
        if not self.order_ok:
            return self.classification is Classification.HYPOTHESIS_FAILED_ORDER
        if not self.hypothesis_ok:
            return self.classification is Classification.HYPOTHESIS_FAILED_BINDING
        return self.classification in (Classification.CONCLUSION_HOLDS, Classification.COUNTEREXAMPLE)


def verify_theorem2(
    G: Graph,
    bounds: BoundsLike,
    *,
    strict: bool = True,
    always_check: bool = False,
    include_empty: bool = True,
    threshold_scale: Fraction = Fraction(1),
    binding: BindingWitness | None = None,
) -> Theorem2Verdict:
    """Check the hypotheses on G and, when they hold, the conclusion.

    ``strict=False`` gives the non-strict comparison.  ``threshold_scale``
    multiplies the binding threshold and exists to exercise the
    counterexample path in tests.
    """
    bd = as_bounds(bounds)
    _check_ab(bd)
    bw = binding if binding is not None else binding_number(G)
    order_ok = G.n >= order_threshold(bd)
    try:
        threshold = binding_threshold(G.n, bd) * threshold_scale
    except DomainError:
        # only reachable below the order bound
        threshold = None
    if threshold is None:
        bind_ok = False
    else:
        bind_ok = bw.value > threshold if strict else bw.value >= threshold
    hypothesis_ok = order_ok and bind_ok

    conclusion = None
    if hypothesis_ok or always_check:
        conclusion = is_id_critical_covered(G, bd, include_empty=include_empty)
    conclusion_ok = None if conclusion is None else conclusion.holds

    if not order_ok:
        cls = Classification.HYPOTHESIS_FAILED_ORDER
    elif not hypothesis_ok:
        cls = Classification.HYPOTHESIS_FAILED_BINDING
    elif conclusion_ok:
        cls = Classification.CONCLUSION_HOLDS
    else:
        cls = Classification.COUNTEREXAMPLE
    return Theorem2Verdict(
        order_ok, bw.value, threshold, hypothesis_ok, conclusion is not None, conclusion_ok, cls, bw, conclusion
    )


# -- campaigns ----------------------------------------------------------------


@dataclass(frozen=True)
class CampaignConfig:
    bounds: FactorBounds
    mode: str = "theorem2"
    slack: Fraction = DEFAULT_SLACK
    always_check: bool = False
    include_empty: bool = True
    threshold_scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.mode not in ("theorem2", "conjecture1"):
            raise ValueError(f"unknown campaign mode {self.mode!r}")
        if self.slack < 0:
            raise ValueError("slack must be non-negative")

    @property
    def strict(self) -> bool:
        return self.mode == "theorem2"


@dataclass(frozen=True)
class CampaignRow:
    index: int
    graph6: str
    n: int
    m: int
    verdict: Theorem2Verdict | None
    error: str | None = None

    @property
    def classification(self) -> Classification:
        return Classification.ERROR if self.verdict is None else self.verdict.classification


@dataclass
class CampaignReport:
    corpus: dict[str, Any]
    config: CampaignConfig
    rows: list[CampaignRow]
    counterexamples: list[CampaignRow]
    sharpness: list[CampaignRow]
    seconds: float = field(default=0.0, compare=False)

    def counts(self) -> dict[str, int]:
        out = {c.value: 0 for c in Classification}
        for row in self.rows:
            out[row.classification.value] += 1
        return out


def _sharpness_band(verdict: Theorem2Verdict, slack: Fraction) -> bool:
    t = verdict.threshold
    return verdict.order_ok and t is not None and t <= verdict.binding_value <= t + slack


def _evaluate(job: tuple[int, Graph, CampaignConfig]) -> CampaignRow:
    index, G, cfg = job
    g6 = emit_graph6(G)
    try:
        bw = binding_number(G)
        verdict = verify_theorem2(
            G,
            cfg.bounds,
            strict=cfg.strict,
            always_check=cfg.always_check,
            include_empty=cfg.include_empty,
            threshold_scale=cfg.threshold_scale,
            binding=bw,
        )
        if not verdict.conclusion_checked and _sharpness_band(verdict, cfg.slack):
            verdict = verify_theorem2(
                G,
                cfg.bounds,
                strict=cfg.strict,
                always_check=True,
                include_empty=cfg.include_empty,
                threshold_scale=cfg.threshold_scale,
                binding=bw,
            )
        return CampaignRow(index, g6, G.n, G.m, verdict)
    except Exception as exc:  # recorded per row, the campaign carries on
        return CampaignRow(index, g6, G.n, G.m, None, f"{type(exc).__name__}: {exc}")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def run_campaign(
    corpus: Iterable[Graph],
    bounds: BoundsLike,
    mode: str = "theorem2",
    slack: Fraction = DEFAULT_SLACK,
    *,
    always_check: bool = False,
    include_empty: bool = True,
    threshold_scale: Fraction = Fraction(1),
    descriptor: dict[str, Any] | None = None,
    jobs: int | None = None,
) -> CampaignReport:
    """Evaluate every corpus graph and collect counterexamples and near-threshold graphs.

    Rows keep corpus order whatever ``jobs`` is.
    """
    cfg = CampaignConfig(as_bounds(bounds), mode, Fraction(slack), always_check, include_empty, Fraction(threshold_scale))
    _check_ab(cfg.bounds)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    start = time.perf_counter()
    work = [(i, G, cfg) for i, G in enumerate(corpus)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_evaluate, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        rows = [_evaluate(job) for job in work]
    counterexamples = [r for r in rows if r.classification is Classification.COUNTEREXAMPLE]
    sharpness = [r for r in rows if r.verdict is not None and _sharpness_band(r.verdict, cfg.slack)]
    return CampaignReport(
        dict(descriptor or {}), cfg, rows, counterexamples, sharpness, time.perf_counter() - start
    )


def gnp_descriptor(sizes: Sequence[int], probabilities: Sequence, seeds: Sequence[int]) -> dict[str, Any]:
    return {
        "generator": "gnp",
        "sizes": list(sizes),
        "probabilities": [str(Fraction(p)) for p in probabilities],
        "seeds": _seed_summary(seeds),
    }


def _seed_summary(seeds: Sequence[int]) -> Any:
    seeds = list(seeds)
    if seeds and seeds == list(range(seeds[0], seeds[0] + len(seeds))):
        return {"first": seeds[0], "count": len(seeds)}
    return seeds

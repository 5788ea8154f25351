"""JSON and CSV serialisation of campaign reports.

Rationals are written as ``"p/q"`` strings, never as floats, and keys are
emitted in a fixed order so identical campaigns produce identical bytes.

CSV columns: ``graph6, n, m, bind, threshold, classification``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from fractions import Fraction
from typing import Any

import jsonschema

from bindlab.theorem import CampaignReport, CampaignRow

FORMAT_TAG = "bindlab-campaign/1"
CSV_FIELDS = ("graph6", "n", "m", "bind", "threshold", "classification")

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+/[1-9][0-9]*$"}
_OPT_RATIONAL = {"oneOf": [_RATIONAL, {"type": "null"}]}
_VSET = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_OPT_BOOL = {"type": ["boolean", "null"]}

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format", "corpus", "config", "summary", "rows", "counterexamples", "sharpness_candidates"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT_TAG},
        "corpus": {"type": "object"},
        "config": {
            "type": "object",
            "required": ["a", "b", "mode", "strict", "slack", "always_check", "include_empty", "threshold_scale"],
            "properties": {
                "a": {"type": "integer", "minimum": 0},
                "b": {"type": "integer", "minimum": 0},
                "mode": {"enum": ["theorem2", "conjecture1"]},
                "strict": {"type": "boolean"},
                "slack": _RATIONAL,
                "always_check": {"type": "boolean"},
                "include_empty": {"type": "boolean"},
                "threshold_scale": _RATIONAL,
            },
        },
        "summary": {
            "type": "object",
            "required": ["graphs", "classifications", "counterexamples", "sharpness_candidates"],
            "properties": {
                "graphs": {"type": "integer", "minimum": 0},
                "classifications": {"type": "object", "additionalProperties": {"type": "integer"}},
                "counterexamples": {"type": "integer", "minimum": 0},
                "sharpness_candidates": {"type": "integer", "minimum": 0},
                "elapsed_ms": {"type": "integer", "minimum": 0},
            },
        },
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "graph6", "n", "m", "bind", "threshold", "classification"],
                "properties": {
                    "index": {"type": "integer"},
                    "graph6": {"type": "string"},
                    "n": {"type": "integer"},
                    "m": {"type": "integer"},
                    "bind": _OPT_RATIONAL,
                    "bind_witness": {"oneOf": [_VSET, {"type": "null"}]},
                    "threshold": _OPT_RATIONAL,
                    "order_ok": _OPT_BOOL,
                    "hypothesis_ok": _OPT_BOOL,
                    "conclusion_checked": _OPT_BOOL,
                    "conclusion_ok": _OPT_BOOL,
                    "classification": {
                        "enum": [
                            "HYPOTHESIS_FAILED_ORDER",
                            "HYPOTHESIS_FAILED_BINDING",
                            "CONCLUSION_HOLDS",
                            "COUNTEREXAMPLE",
                            "ERROR",
                        ]
                    },
                    "error": {"type": ["string", "null"]},
                },
            },
        },
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "graph6", "bind", "threshold", "failing_set", "S", "T", "epsilon", "delta"],
                "properties": {
                    "failing_set": _VSET,
                    "S": _VSET,
                    "T": _VSET,
                    "epsilon": {"enum": [0, 1, 2]},
                    "delta": {"type": "integer"},
                },
            },
        },
        "sharpness_candidates": {"type": "array", "items": {"type": "object"}},
    },
}


def rational(q: Fraction | int | None) -> str | None:
    if q is None:
        return None
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _row(row: CampaignRow) -> dict[str, Any]:
    v = row.verdict
    return {
        "index": row.index,
        "graph6": row.graph6,
        "n": row.n,
        "m": row.m,
        "bind": rational(v.binding_value) if v else None,
        "bind_witness": list(v.binding_witness.witness_set.members()) if v and v.binding_witness else None,
        "threshold": rational(v.threshold) if v else None,
        "order_ok": v.order_ok if v else None,
        "hypothesis_ok": v.hypothesis_ok if v else None,
        "conclusion_checked": v.conclusion_checked if v else None,
        "conclusion_ok": v.conclusion_ok if v else None,
        "classification": row.classification.value,
        "error": row.error,
    }


def _counterexample(row: CampaignRow) -> dict[str, Any]:
    v = row.verdict
    concl = v.conclusion
    w = concl.inner.witness
    return {
        "index": row.index,
        "graph6": row.graph6,
        "bind": rational(v.binding_value),
        "bind_witness": list(v.binding_witness.witness_set.members()),
        "threshold": rational(v.threshold),
        "failing_set": list(concl.failing_set.members()),
        "S": list(w.S.members()),
        "T": list(w.T.members()),
        "epsilon": w.epsilon,
        "delta": w.delta,
    }


def _sharp(row: CampaignRow) -> dict[str, Any]:
    v = row.verdict
    return {
        "index": row.index,
        "graph6": row.graph6,
        "bind": rational(v.binding_value),
        "threshold": rational(v.threshold),
        "at_threshold": v.binding_value == v.threshold,
        "conclusion_ok": v.conclusion_ok,
    }


def report_to_dict(report: CampaignReport, include_timing: bool = False) -> dict[str, Any]:
    cfg = report.config
    summary: dict[str, Any] = {
        "graphs": len(report.rows),
        "classifications": report.counts(),
        "counterexamples": len(report.counterexamples),
        "sharpness_candidates": len(report.sharpness),
    }
    if include_timing:
        summary["elapsed_ms"] = int(report.seconds * 1000)
    return {
        "format": FORMAT_TAG,
        "corpus": report.corpus,
        "config": {
            "a": cfg.bounds.a,
            "b": cfg.bounds.b,
            "mode": cfg.mode,
            "strict": cfg.strict,
            "slack": rational(cfg.slack),
            "always_check": cfg.always_check,
            "include_empty": cfg.include_empty,
            "threshold_scale": rational(cfg.threshold_scale),
        },
        "summary": summary,
        "rows": [_row(r) for r in report.rows],
        "counterexamples": [_counterexample(r) for r in report.counterexamples],
        "sharpness_candidates": [_sharp(r) for r in report.sharpness],
    }


def validate_report(doc: dict[str, Any]) -> None:
    jsonschema.validate(doc, REPORT_SCHEMA)


def report_to_json(report: CampaignReport, include_timing: bool = False) -> str:
    doc = report_to_dict(report, include_timing)
    validate_report(doc)
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def report_to_csv(report: CampaignReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in report.rows:
        v = row.verdict
        writer.writerow(
            [
                row.graph6,
                row.n,
                row.m,
                rational(v.binding_value) if v else "",
                rational(v.threshold) if v and v.threshold is not None else "",
                row.classification.value,
            ]
        )
    return buf.getvalue()


def report_to_text(report: CampaignReport) -> str:
    cfg = report.config
    lines = [
        f"mode={cfg.mode} bounds={cfg.bounds} slack={rational(cfg.slack)} graphs={len(report.rows)}",
    ]
    for name, count in report.counts().items():
        if count:
            lines.append(f"  {name}: {count}")
    lines.append(f"counterexamples: {len(report.counterexamples)}")
    for row in report.counterexamples:
        w = row.verdict.conclusion
        lines.append(f"  {row.graph6} bind={rational(row.verdict.binding_value)} I={w.failing_set}")
    lines.append(f"sharpness candidates: {len(report.sharpness)}")
    for row in report.sharpness:
        v = row.verdict
        lines.append(
            f"  {row.graph6} bind={rational(v.binding_value)} threshold={rational(v.threshold)} conclusion_ok={v.conclusion_ok}"
        )
    return "\n".join(lines) + "\n"


def emit_report(report: CampaignReport, fmt: str, path: str | os.PathLike | None = None) -> str:
    """Render ``report`` as ``json``, ``csv`` or ``text``; write it to ``path`` if given."""
    if fmt == "json":
        text = report_to_json(report)
    elif fmt == "csv":
        text = report_to_csv(report)
    elif fmt == "text":
        text = report_to_text(report)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    return text

import csv
import io
import json
from fractions import Fraction

import jsonschema
import pytest

from bindlab import generators as gen
from bindlab.report import (
    CSV_FIELDS,
    emit_report,
    parse_rational,
    rational,
    report_to_dict,
    report_to_json,
    validate_report,
)
from bindlab.theorem import gnp_descriptor, run_campaign


@pytest.fixture(scope="module")
def report():
    sizes, probs, seeds = [9, 10], [Fraction(7, 10), Fraction(9, 10)], range(8)
    corpus = list(gen.gnp_corpus(sizes, probs, seeds))
    return run_campaign(corpus, (2, 2), descriptor=gnp_descriptor(sizes, probs, seeds))


def test_rational_text():
    assert rational(Fraction(60, 17)) == "60/17"
    assert rational(3) == "3/1"
    assert parse_rational("42/17") == Fraction(42, 17)


def test_json_round_trip(report):
    text = report_to_json(report)
    doc = json.loads(text)
    validate_report(doc)
    assert doc == report_to_dict(report)
    assert doc["summary"]["graphs"] == len(report.rows) == 32
    assert doc["corpus"]["seeds"] == {"first": 0, "count": 8}
    for row in doc["rows"]:
        assert parse_rational(row["bind"]) == report.rows[row["index"]].verdict.binding_value


def test_schema_rejects_floats(report):
    doc = report_to_dict(report)
    doc["rows"][0]["bind"] = 0.5
    with pytest.raises(jsonschema.ValidationError):
        validate_report(doc)


def test_csv_shape(report):
    text = emit_report(report, "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == len(report.rows) + 1
    assert all("/" in r[3] for r in rows[1:])


def test_no_decimal_points(report):
    for fmt in ("json", "csv", "text"):
        assert "0." not in emit_report(report, fmt)


def test_byte_identical_reruns(tmp_path):
    corpus = lambda: gen.gnp_corpus([10], [Fraction(4, 5)], range(10))  # noqa: E731
    paths = []
    for k in range(2):
        rep = run_campaign(corpus(), (2, 2), "conjecture1")
        for fmt in ("json", "csv"):
            p = tmp_path / f"{k}.{fmt}"
            emit_report(rep, fmt, p)
            paths.append(p)
    assert paths[0].read_bytes() == paths[2].read_bytes()
    assert paths[1].read_bytes() == paths[3].read_bytes()


def test_counterexample_payload():
    corpus = list(gen.gnp_corpus([9], [Fraction(1, 2)], range(10)))
    rep = run_campaign(corpus, (2, 2), threshold_scale=Fraction(0))
    doc = report_to_dict(rep)
    validate_report(doc)
    assert doc["counterexamples"]
    for ce in doc["counterexamples"]:
        assert set(ce) >= {"graph6", "failing_set", "S", "T", "epsilon", "delta"}
        assert ce["delta"] <= ce["epsilon"] - 1


def test_unknown_format(report):
    with pytest.raises(ValueError):
        emit_report(report, "xml")

"""Document parsing, diagnostics and the serialize/parse round trip."""

import json

import pytest

from poissonlie import classify
from poissonlie.documents import (
    DocumentError,
    document_from_parts,
    document_to_parts,
    parse_document,
    serialize_document,
)
from poissonlie.hawkins import full_report, triple


MINIMAL = json.dumps(
    {"dim": 1, "structure_constants": [], "metric": [["1"]], "cocycle": []}
)


def test_minimal_document_parses():
    doc = parse_document(MINIMAL)
    assert doc.dim == 1
    assert doc.labels == ("e1",)
    assert doc.structure_constants == ()


def test_malformed_rational_reports_location():
    text = json.dumps(
        {"dim": 2, "structure_constants": [], "cocycle": [],
         "metric": [["1", "1/0"], ["0", "1"]]}
    )
    with pytest.raises(DocumentError) as err:
        parse_document(text)
    assert err.value.code == "malformed-rational"
    assert err.value.location == "metric[0][1]"


def test_asymmetric_metric_reports_location():
    text = json.dumps(
        {"dim": 2, "structure_constants": [], "cocycle": [],
         "metric": [["1", "1"], ["0", "1"]]}
    )
    with pytest.raises(DocumentError) as err:
        parse_document(text)
    assert err.value.code == "asymmetric-metric"


def test_index_out_of_range_and_duplicates():
    base = {"dim": 2, "metric": [["1", "0"], ["0", "1"]], "cocycle": []}
    with pytest.raises(DocumentError) as err:
        parse_document(json.dumps({**base, "structure_constants": [[1, 3, 1, "1"]]}))
    assert err.value.code == "index-out-of-range"
    with pytest.raises(DocumentError) as err:
        parse_document(
            json.dumps({**base, "structure_constants": [[1, 2, 1, "1"], [1, 2, 1, "2"]]})
        )
    assert err.value.code == "duplicate-entry"
    with pytest.raises(DocumentError) as err:
        parse_document(json.dumps({**base, "cocycle": [[1, 2, 1, "1"]]}))
    assert err.value.code == "malformed-entry"  # needs j < k


def test_bad_json_and_shape_diagnostics():
    with pytest.raises(DocumentError) as err:
        parse_document("{not json")
    assert err.value.code == "malformed-json"
    with pytest.raises(DocumentError):
        parse_document(json.dumps({"dim": 0, "metric": []}))
    with pytest.raises(DocumentError):
        parse_document(json.dumps({"dim": 2, "metric": [["1", "0"]]}))


def test_roundtrip_for_all_catalog_entries():
    for entry in classify.catalog():
        doc = document_from_parts(
            entry.algebra, entry.geometry, entry.cocycle, {"name": entry.name}
        )
        text = serialize_document(doc)
        again = parse_document(text)
        assert again == doc
        assert serialize_document(again) == text


def test_document_reproduces_catalog_report():
    # build the Heisenberg document, parse it back, and compare the verdicts
    entry = classify.catalog_entry("dim3-heisenberg")
    doc = document_from_parts(entry.algebra, entry.geometry, entry.cocycle)
    alg, g, xi = document_to_parts(parse_document(serialize_document(doc)))
    report = full_report(triple(alg, xi, g))
    assert report.status() == entry.expected["status"]
    assert report.volume_verdict == entry.expected["volume"]


def test_document_to_parts_validates_jacobi():
    from poissonlie.lie import JacobiError

    text = json.dumps(
        {
            "dim": 3,
            "structure_constants": [[1, 2, 3, "1"], [1, 3, 1, "1"]],
            "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
            "cocycle": [],
        }
    )
    doc = parse_document(text)
    with pytest.raises(JacobiError):
        document_to_parts(doc, validate=True)

"""The triple document format: parsing, validation, serialization.

One self-describing JSON document carries an algebra (sparse structure
constants), a metric (dense rational-string rows) and a cocycle (sparse
entries), all as exact rational strings, so files are diff-able and can be
written by hand from the bracket tables.  Parsing reports the first offending
field with its location.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bialgebra import Cocycle, cocycle_entries, cocycle_from_entries
from .lie import LieAlgebra, Metric, lie_algebra, metric as make_metric, structure_entries
from .linalg import Matrix, rat_from_str, rat_to_str

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Validation failure with a location string."""

    def __init__(self, code: str, location: str, message: str):
        self.code = code
        self.location = location
        super().__init__(f"{code} at {location}: {message}")


@dataclass(frozen=True)
class TripleDocument:
    dim: int
    labels: tuple[str, ...]
    structure_constants: tuple[tuple[int, int, int, Fraction], ...]
    metric_rows: tuple[tuple[Fraction, ...], ...]
    cocycle: tuple[tuple[int, int, int, Fraction], ...]
    metadata: dict = field(default_factory=dict)


def _parse_rational(value, location: str) -> Fraction:
    if not isinstance(value, str):
        raise DocumentError("malformed-rational", location, f"expected a string, got {value!r}")
    try:
        return rat_from_str(value)
    except ValueError:
        raise DocumentError("malformed-rational", location, f"cannot parse {value!r}") from None


def _parse_sparse(
    raw, dim: int, section: str, second_lt_third: bool
) -> tuple[tuple[int, int, int, Fraction], ...]:
    if not isinstance(raw, list):
        raise DocumentError("malformed-entry", section, "expected a list of entries")
    seen: set[tuple[int, int, int]] = set()
    out = []
    for pos, entry in enumerate(raw):
        where = f"{section}[{pos}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise DocumentError("malformed-entry", where, "expected [i, j, k, rational]")
        i, j, k = entry[0], entry[1], entry[2]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
            raise DocumentError("malformed-entry", where, "indices must be integers")
        if not all(1 <= x <= dim for x in (i, j, k)):
            raise DocumentError("index-out-of-range", where, f"indices ({i},{j},{k}) not in 1..{dim}")
        ordered = (i, j) if not second_lt_third else (j, k)
        if ordered[0] >= ordered[1]:
            raise DocumentError(
                "malformed-entry", where,
                "expects i < j" if not second_lt_third else "expects j < k",
            )
        if (i, j, k) in seen:
            raise DocumentError("duplicate-entry", where, f"({i},{j},{k}) appears twice")
        seen.add((i, j, k))
        out.append((i, j, k, _parse_rational(entry[3], where)))
    return tuple(out)


def parse_document(text: str) -> TripleDocument:
    """Parse and validate; raises :class:`DocumentError` with a location."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("malformed-json", f"line {exc.lineno}", exc.msg) from None
    if not isinstance(raw, dict):
        raise DocumentError("malformed-document", "top level", "expected an object")
    dim = raw.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError("malformed-document", "dim", "expected a positive integer")
    labels_raw = raw.get("labels", [f"e{i}" for i in range(1, dim + 1)])
    if (
        not isinstance(labels_raw, list)
        or len(labels_raw) != dim
        or not all(isinstance(x, str) for x in labels_raw)
    ):
        raise DocumentError("malformed-document", "labels", f"expected {dim} strings")
    metric_raw = raw.get("metric")
    if not isinstance(metric_raw, list) or len(metric_raw) != dim:
        raise DocumentError("malformed-document", "metric", f"expected {dim} rows")
    rows = []
    for i, row in enumerate(metric_raw):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError("malformed-document", f"metric[{i}]", f"expected {dim} entries")
        rows.append(
            tuple(_parse_rational(x, f"metric[{i}][{j}]") for j, x in enumerate(row))
        )
    for i in range(dim):
        for j in range(i + 1, dim):
            if rows[i][j] != rows[j][i]:
                raise DocumentError(
                    "asymmetric-metric", f"metric[{i}][{j}]",
                    f"{rat_to_str(rows[i][j])} != {rat_to_str(rows[j][i])}",
                )
    structure = _parse_sparse(
        raw.get("structure_constants", []), dim, "structure_constants", second_lt_third=False
    )
    cocycle = _parse_sparse(raw.get("cocycle", []), dim, "cocycle", second_lt_third=True)
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict):
        raise DocumentError("malformed-document", "metadata", "expected an object")
    return TripleDocument(
        dim=dim,
        labels=tuple(labels_raw),
        structure_constants=structure,
        metric_rows=tuple(rows),
        cocycle=cocycle,
        metadata=dict(metadata),
    )


def serialize_document(doc: TripleDocument) -> str:
    """Canonical JSON text; ``parse_document`` of the output is the identity."""
    payload = {
        "schema": SCHEMA_VERSION,
        "dim": doc.dim,
        "labels": list(doc.labels),
        "structure_constants": [
            [i, j, k, rat_to_str(c)] for (i, j, k, c) in doc.structure_constants
        ],
        "metric": [[rat_to_str(x) for x in row] for row in doc.metric_rows],
        "cocycle": [[i, j, k, rat_to_str(c)] for (i, j, k, c) in doc.cocycle],
    }
    if doc.metadata:
        payload["metadata"] = doc.metadata
    return json.dumps(payload, indent=2) + "\n"


def document_to_parts(doc: TripleDocument, validate: bool = True) -> tuple[LieAlgebra, Metric, Cocycle]:
    """Build the exact objects; Jacobi validity is the caller's policy."""
    alg = lie_algebra(doc.dim, doc.structure_constants, doc.labels, validate=validate)
    g = make_metric(Matrix(doc.metric_rows))
    xi = cocycle_from_entries(doc.dim, doc.cocycle)
    return alg, g, xi


def document_from_parts(
    alg: LieAlgebra, g: Metric, xi: Cocycle, metadata: Optional[dict] = None
) -> TripleDocument:
    return TripleDocument(
        dim=alg.dim,
        labels=alg.labels,
        structure_constants=tuple(
            (i, j, k, rat_from_str(c)) for (i, j, k, c) in structure_entries(alg)
        ),
        metric_rows=tuple(g.gram.row(i) for i in range(g.dim)),
        cocycle=tuple((i, j, k, rat_from_str(c)) for (i, j, k, c) in cocycle_entries(xi)),
        metadata=dict(metadata or {}),
    )

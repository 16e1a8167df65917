"""Reading, writing and rendering of digroup and triple documents.

Documents are JSON objects with a fixed field layout, written with one matrix
row per line so diffs stay readable.  A digroup document carries order,
identity, left, right and optional labels; a triple document carries
carrier_size, group_part, semi_part, right_unit, left_inverse and phi.
Catalogs stream one compact entry per line (digroup fields plus flags).
Parsing checks structure only; callers run the axiom checkers.
"""

from __future__ import annotations

import json
from .search import CatalogEntry
from .tables import DigroupError, DigroupTable, MalformedTableError
from .translations import TransformSet
from .triples import StandardTriple


class ParseError(DigroupError):
    """A document is malformed; the message names the offending field."""


def _json_object(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    return doc


def _require(doc: dict, key: str, kinds) -> object:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kinds):
        raise ParseError(f"field {key!r} has the wrong type")
    return value


def _int_matrix(doc: dict, key: str) -> list[list[int]]:
    value = _require(doc, key, list)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or not all(isinstance(v, int) for v in row):
            raise ParseError(f"field {key!r} row {i} must be a list of integers")
        rows.append(row)
    return rows


def _int_vector(doc: dict, key: str) -> list[int]:
    value = _require(doc, key, list)
    if not all(isinstance(v, int) for v in value):
        raise ParseError(f"field {key!r} must be a list of integers")
    return value


def digroup_from_dict(doc: dict) -> DigroupTable:
    order = _require(doc, "order", int)
    identity = _require(doc, "identity", int)
    left = _int_matrix(doc, "left")
    right = _int_matrix(doc, "right")
    labels = None
    if doc.get("labels") is not None:
        raw = _require(doc, "labels", list)
        if not all(isinstance(s, str) for s in raw):
            raise ParseError("field 'labels' must be a list of strings")
        labels = tuple(raw)
    try:
        return DigroupTable(order, identity, left, right, labels)
    except MalformedTableError as exc:
        raise ParseError(str(exc)) from None


def parse_digroup(text: str) -> DigroupTable:
    """Parse a digroup document.  Structural errors raise ParseError naming
    the field; no axiom checking happens here."""
    return digroup_from_dict(_json_object(text))


def _matrix_lines(rows, indent: str) -> str:
    body = (",\n" + indent).join(
        "[" + ", ".join(str(v) for v in row) + "]" for row in rows
    )
    return body


def digroup_to_dict(table: DigroupTable) -> dict:
    doc = {
        "order": table.order,
        "identity": table.identity,
        "left": [list(row) for row in table.left],
        "right": [list(row) for row in table.right],
    }
    if table.labels is not None:
        doc["labels"] = list(table.labels)
    return doc


def serialize_digroup(table: DigroupTable) -> str:
    parts = [f'  "order": {table.order}', f'  "identity": {table.identity}']
    if table.labels is not None:
        parts.append('  "labels": ' + json.dumps(list(table.labels), ensure_ascii=False))
    parts.append('  "left": [\n    ' + _matrix_lines(table.left, "    ") + "\n  ]")
    parts.append('  "right": [\n    ' + _matrix_lines(table.right, "    ") + "\n  ]")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def parse_triple(text: str) -> StandardTriple:
    doc = _json_object(text)
    carrier = _require(doc, "carrier_size", int)
    group_rows = _int_matrix(doc, "group_part")
    semi_rows = _int_matrix(doc, "semi_part")
    right_unit = _require(doc, "right_unit", int)
    left_inverse = _int_vector(doc, "left_inverse")
    phi = _int_vector(doc, "phi")
    try:
        group = TransformSet.from_rows(group_rows, labeled_by_element=False)
        semi = TransformSet.from_rows(semi_rows, labeled_by_element=False)
        if group.carrier_size != carrier or semi.carrier_size != carrier:
            raise MalformedTableError("transform rows do not match carrier_size")
        return StandardTriple(carrier, group, semi, right_unit, tuple(left_inverse), tuple(phi))
    except MalformedTableError as exc:
        raise ParseError(str(exc)) from None


def serialize_triple(triple: StandardTriple) -> str:
    parts = [f'  "carrier_size": {triple.carrier_size}']
    parts.append(
        '  "group_part": [\n    '
        + _matrix_lines([t.image for t in triple.group_part.transforms], "    ")
        + "\n  ]"
    )
    parts.append(
        '  "semi_part": [\n    '
        + _matrix_lines([t.image for t in triple.semi_part.transforms], "    ")
        + "\n  ]"
    )
    parts.append(f'  "right_unit": {triple.right_unit}')
    parts.append('  "left_inverse": ' + json.dumps(list(triple.left_inverse)))
    parts.append('  "phi": ' + json.dumps(list(triple.phi)))
    return "{\n" + ",\n".join(parts) + "\n}\n"


def serialize_embedding(prod) -> str:
    """Product digroup document extended with the embedding data: eta (source
    element -> carrier point), the diagonal, and per-point component pairs."""
    base = serialize_digroup(prod.table).rstrip("}\n")
    extra = [
        '  "eta": ' + json.dumps(list(prod.eta.image)),
        '  "diagonal": ' + json.dumps(sorted(prod.diagonal.members)),
        '  "pairs": [' + ", ".join(f"[{i}, {j}]" for i, j in prod.pair_labels) + "]",
    ]
    return base + ",\n" + ",\n".join(extra) + "\n}\n"


def render_table(table: DigroupTable) -> str:
    """Two aligned operation grids, left product first, with a header row and
    column of labels.  Output is byte-stable for a given table."""
    n = table.order
    labels = [table.label(x) for x in range(n)]
    width = max(len(s) for s in labels + ["⇀", "↼"])

    def grid(symbol: str, rows) -> list[str]:
        lines = [
            symbol.rjust(width)
            + " |"
            + "".join(" " + labels[y].rjust(width) for y in range(n))
        ]
        lines.append("-" * width + "-+" + "-" * ((width + 1) * n))
        for x in range(n):
            lines.append(
                labels[x].rjust(width)
                + " |"
                + "".join(" " + labels[rows[x][y]].rjust(width) for y in range(n))
            )
        return lines

    left_grid = grid("⇀", table.left)
    right_grid = grid("↼", table.right)
    return "\n".join(
        f"{a}    {b}" for a, b in zip(left_grid, right_grid)
    ) + "\n"


def entry_to_dict(entry: CatalogEntry) -> dict:
    doc = digroup_to_dict(entry.canonical)
    doc["flags"] = {"commutative": entry.commutative, "group": entry.group}
    doc["subdigroup_count"] = entry.subdigroup_count
    return doc


def catalog_lines(entries) -> list[str]:
    """One compact JSON document per entry, streamable as JSONL."""
    return [
        json.dumps(entry_to_dict(e), ensure_ascii=False, separators=(", ", ": "))
        for e in entries
    ]


def parse_catalog_line(line: str) -> CatalogEntry:
    doc = _json_object(line)
    table = digroup_from_dict(doc)
    flags = _require(doc, "flags", dict)
    for key in ("commutative", "group"):
        if not isinstance(flags.get(key), bool):
            raise ParseError(f"catalog flags must carry boolean {key!r}")
    count = _require(doc, "subdigroup_count", int)
    return CatalogEntry(
        canonical=table,
        order=table.order,
        commutative=flags["commutative"],
        group=flags["group"],
        subdigroup_count=count,
    )

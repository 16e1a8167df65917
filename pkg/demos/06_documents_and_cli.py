#!/usr/bin/env python3
"""Documents and the command line: serializing, parsing, streaming catalogs.

Digroups and triples travel as small JSON documents with one matrix row per
line; catalogs stream as JSONL.  Everything the library does is also
reachable through `python -m digroups <command>` with a strict exit-code
contract: 0 success / property holds, 1 property fails, 2 input or usage
error.
"""

import tempfile
from pathlib import Path

from digroups import (
    builtin,
    catalog_lines,
    enumerate_digroups,
    parse_catalog_line,
    parse_digroup,
    run_cli,
    serialize_digroup,
)

m = builtin("M")
doc = serialize_digroup(m)
print("M as a document:")
print(doc)
print("round trips:", parse_digroup(doc) == m)

print("order-2 catalog (one class per line):")
for line in catalog_lines(enumerate_digroups(2)):
    print(" ", line)
    entry = parse_catalog_line(line)
    print("   parsed back:", entry.order, entry.commutative, entry.group)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "m.json"
    path.write_text(doc, encoding="utf-8")
    print()
    print("exit codes from the CLI:")
    print("  check valid file     ->", run_cli(["check", str(path)]))
    bad = Path(tmp) / "broken.json"
    bad.write_text(
        '{"order": 2, "identity": 0, "left": [[0, 0], [1, 0]],'
        ' "right": [[0, 1], [0, 1]]}',
        encoding="utf-8",
    )
    print("  check axiom breaker  ->", run_cli(["check", str(bad)]))
    junk = Path(tmp) / "junk.json"
    junk.write_text("not a document", encoding="utf-8")
    print("  check unparseable    ->", run_cli(["check", str(junk)]))

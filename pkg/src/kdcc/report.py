"""Versioned JSON report documents shared by the CLI verbs.

Reports are deterministic: given identical inputs the rendered bytes are
identical across runs, which is why wall-clock timing never appears in a
document (the CLI prints it to stderr instead).  Witness ids are always the
original graph's ids.
"""

from __future__ import annotations

import json
from pathlib import Path as _FsPath
from typing import Any

from .oracle import PathPacking
from .witnesses import Witness

SCHEMA = "kdcc-report/1"

#: Values the ``provenance`` field of a result may carry: how it was computed.
PROVENANCE_CLOSED_FORM = "closed-form"
PROVENANCE_ORACLE = "oracle"
PROVENANCE_EXTENSION_P0 = "extension: p=0"


def witness_payload(w: Witness) -> dict[str, Any]:
    return {
        "k": w.k,
        "vertices": sorted(w.vertex_set),
        "edges": [[u, v] for u, v in sorted(w.edge_set)],
    }


def packing_payload(packing: PathPacking) -> dict[str, Any]:
    return {
        "k": packing.k,
        "size": packing.size,
        "certified": packing.certified,
        "paths": [list(path) for path in packing.paths],
    }


def new_report(command: str, input_desc: dict[str, Any], **fields: Any) -> dict[str, Any]:
    doc: dict[str, Any] = {"schema": SCHEMA, "command": command, "input": input_desc}
    doc.update(fields)
    return doc


def render(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def write(doc: dict[str, Any], path: str) -> None:
    _FsPath(path).write_text(render(doc), encoding="utf-8")

"""Reading and writing graphs: a plain edge-list format and a DOT subset.

Edge-list format (canonical interchange format, round-trips exactly):

* one edge per line, two whitespace-separated nonnegative integer ids
* ``#`` starts a comment (whole line or trailing), blank lines are ignored
* vertex count defaults to max id + 1; a single ``n=<count>`` header line
  overrides it, which permits isolated vertices

Only a restricted DOT subset is accepted for convenience: an undirected
``graph { ... }`` whose statements are bare node names or ``a -- b`` edge
chains.  Anything else (directed graphs, attributes, subgraphs, ports) is
rejected loudly.  DOT node names map to ids in order of first appearance and
are kept as labels.
"""

from __future__ import annotations

import re
from pathlib import Path as _FsPath

from .graph import Graph, GraphError, new_graph


def edge_list_text(g: Graph) -> str:
    """Canonical edge-list serialization: header, then sorted edges."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str) -> None:
    _FsPath(path).write_text(edge_list_text(g), encoding="utf-8")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises :class:`GraphError` with a line number."""
    n_override: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        compact = line.replace(" ", "")
        if compact.startswith("n="):
            if n_override is not None:
                raise GraphError(f"line {lineno}: duplicate n= header")
            try:
                n_override = int(compact[2:])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {line!r}") from None
            if n_override < 0:
                raise GraphError(f"line {lineno}: vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: vertex ids must be integers, got {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: vertex ids must be nonnegative, got {line!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = n_override if n_override is not None else max_id + 1
    if max_id >= n:
        raise GraphError(f"edge endpoint {max_id} exceeds declared vertex count n={n}")
    return new_graph(n, edges)


_DOT_SHELL = re.compile(r"\s*(strict\s+)?(?P<kind>graph|digraph)\s*(?P<name>[A-Za-z_]\w*)?\s*\{(?P<body>.*)\}\s*$", re.S)
_DOT_NAME = re.compile(r"[A-Za-z_]\w*|\d+")


def parse_dot(text: str) -> Graph:
    """Parse the restricted DOT subset described in the module docstring."""
    shell = _DOT_SHELL.match(text)
    if shell is None:
        raise GraphError("not a DOT graph: expected 'graph [name] { ... }'")
    if shell.group("kind") == "digraph":
        raise GraphError("directed DOT graphs are not supported; use 'graph' with '--' edges")
    body = shell.group("body")
    if "{" in body or "}" in body:
        raise GraphError("DOT subgraphs are not supported")
    ids: dict[str, int] = {}

    def vertex(name: str) -> int:
        name = name.strip()
        if not _DOT_NAME.fullmatch(name):
            raise GraphError(f"unsupported DOT syntax near {name!r}; "
                             "only bare node names and 'a -- b' edges are accepted")
        return ids.setdefault(name, len(ids))

    edges: list[tuple[int, int]] = []
    for statement in re.split(r"[;\n]", body):
        statement = statement.strip()
        if not statement:
            continue
        if "->" in statement:
            raise GraphError("directed edges ('->') are not supported")
        if any(ch in statement for ch in "[]=\","):
            raise GraphError(f"unsupported DOT statement: {statement!r}")
        chain = statement.split("--")
        if len(chain) == 1:
            vertex(chain[0])
            continue
        endpoints = [vertex(part) for part in chain]
        for a, b in zip(endpoints, endpoints[1:]):
            if a == b:
                raise GraphError(f"self-loop at DOT node {statement!r}")
            edges.append((a, b))
    labels = sorted(ids, key=ids.get)
    return new_graph(len(ids), edges, labels=labels)


def load_graph(path: str) -> Graph:
    """Read a graph file, dispatching on extension and content."""
    fspath = _FsPath(path)
    try:
        text = fspath.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read graph file {path!r}: {exc}") from None
    if fspath.suffix.lower() in {".dot", ".gv"}:
        return parse_dot(text)
    head = text.lstrip()
    if head.startswith(("graph", "strict", "digraph")):
        return parse_dot(text)
    return parse_edge_list(text)

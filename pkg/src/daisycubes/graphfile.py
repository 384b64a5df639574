"""Plain-text graph files.

::

    n m
    root r              (optional)
    u v                 (m edge lines, 0-based)
    label v 0011        (optional, one per vertex)

Blank lines and ``#`` comments are ignored; ``root`` and ``label`` lines may
appear anywhere.  :func:`format_graph_file` writes the canonical layout
shown above, which parses back to the same bytes.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .bitstring import BitString
from .generators import LabelledGraph
from .graph import Graph


class GraphFileError(ValueError):
    pass


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    labels: tuple[BitString, ...] | None = None
    root: int | None = None
    comments: tuple[str, ...] = ()

    def labelled(self) -> LabelledGraph:
        if self.labels is None:
            raise GraphFileError("file has no labels")
        length = self.labels[0].length if self.labels else 0
        return LabelledGraph(self.graph, self.labels, length)

    @classmethod
    def of(cls, lg: LabelledGraph, root: int | None = None) -> GraphFile:
        return cls(lg.graph, lg.labels, root)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFileError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph_file(text: str) -> GraphFile:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    root = None
    labels: dict[int, BitString] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "root":
            if len(tokens) != 2 or root is not None:
                raise GraphFileError(f"line {lineno}: malformed or repeated root line")
            (root,) = _ints(tokens[1:], lineno)
        elif tokens[0] == "label":
            if len(tokens) not in (2, 3):
                raise GraphFileError(f"line {lineno}: expected 'label <v> <bits>'")
            (v,) = _ints(tokens[1:2], lineno)
            if v in labels:
                raise GraphFileError(f"line {lineno}: vertex {v} labelled twice")
            try:
                labels[v] = BitString.parse(tokens[2] if len(tokens) == 3 else "")
            except ValueError as exc:
                raise GraphFileError(f"line {lineno}: {exc}") from None
        elif header is None:
            if len(tokens) != 2:
                raise GraphFileError(f"line {lineno}: expected 'n m' header")
            n, m = _ints(tokens, lineno)
            if n < 0 or m < 0:
                raise GraphFileError(f"line {lineno}: negative counts")
            header = (n, m)
        else:
            if len(tokens) != 2:
                raise GraphFileError(f"line {lineno}: expected an edge 'u v'")
            u, v = _ints(tokens, lineno)
            edges.append((u, v))
    if header is None:
        raise GraphFileError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFileError(f"header announces {m} edges, found {len(edges)}")
    try:
        graph = Graph(n, tuple(edges))
    except ValueError as exc:
        raise GraphFileError(str(exc)) from None
    if root is not None and not 0 <= root < n:
        raise GraphFileError(f"root {root} out of range")
    label_tuple = None
    if labels:
        if sorted(labels) != list(range(n)):
            raise GraphFileError("labels must cover every vertex exactly once")
        label_tuple = tuple(labels[v] for v in range(n))
        if len({x.length for x in label_tuple}) > 1:
            raise GraphFileError("labels have mixed lengths")
        if len(set(label_tuple)) != n:
            raise GraphFileError("labels are not injective")
    return GraphFile(graph, label_tuple, root)


def format_graph_file(gf: GraphFile) -> str:
    g = gf.graph
    lines = [f"# {c}" for c in gf.comments]
    lines.append(f"{g.vertex_count} {g.edge_count}")
    if gf.root is not None:
        lines.append(f"root {gf.root}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    if gf.labels is not None:
        lines.extend(f"label {v} {x}".rstrip() for v, x in enumerate(gf.labels))
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_graph_file(path: str) -> GraphFile:
    return parse_graph_file(read_text(path))

"""Expansions, contractions and ≤-expansion certificates.

An expansion of ``G`` over a cover ``(V1, V2)`` doubles every vertex of
``V1 & V2`` and joins the two copies.  Peripheral expansions take
``V1 = V(G)``; when ``V2`` is a down-set of a properly labelled daisy cube,
prepending 0 to the old labels and 1 to the copies yields a daisy cube again.
:func:`decompose` runs this backwards and records a certificate that
:func:`replay` rebuilds from the one-vertex graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitstring import BitString, is_downward_closed
from .generators import LabelledGraph, labelled_from_words
from .graph import DistanceMatrix, Graph, distance_matrix, induced_subgraph, is_convex, is_isometric_subgraph
from .labelling import verify_proper
from .theta import NotPartialCubeError, ThetaPartition, is_partial_cube


@dataclass(frozen=True)
class ExpansionSpec:
    v1: frozenset[int]
    v2: frozenset[int]

    @classmethod
    def of(cls, v1: Iterable[int], v2: Iterable[int]) -> ExpansionSpec:
        return cls(frozenset(v1), frozenset(v2))


@dataclass(frozen=True)
class SpecCheck:
    """Outcome of :func:`validate_expansion_spec`; falsy when invalid.

    ``reason`` is one of ``not-cover``, ``empty-intersection``,
    ``not-isometric-V1``, ``not-isometric-V2`` or ``cross-edge``.
    """

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _is_isometric_subset(g: Graph, subset: frozenset[int]) -> bool:
    sub, index = induced_subgraph(g, subset)
    return is_isometric_subgraph(sub, g, index)


def validate_expansion_spec(g: Graph, spec: ExpansionSpec) -> SpecCheck:
    v1, v2 = spec.v1, spec.v2
    if v1 | v2 != frozenset(g.vertices()):
        return SpecCheck(False, "not-cover")
    if not v1 & v2:
        return SpecCheck(False, "empty-intersection")
    only1, only2 = v1 - v2, v2 - v1
    for u, v in g.edges:
        if (u in only1 and v in only2) or (u in only2 and v in only1):
            return SpecCheck(False, "cross-edge")
    if not _is_isometric_subset(g, v1):
        return SpecCheck(False, "not-isometric-V1")
    if not _is_isometric_subset(g, v2):
        return SpecCheck(False, "not-isometric-V2")
    return SpecCheck(True)


@dataclass(frozen=True)
class Expansion:
    """Expanded graph with provenance: new vertex ``x`` comes from
    ``origin[x]`` of the old graph, on side ``side[x]`` (1 or 2)."""

    graph: Graph
    origin: tuple[int, ...]
    side: tuple[int, ...]


def expand(g: Graph, spec: ExpansionSpec) -> Expansion:
    check = validate_expansion_spec(g, spec)
    if not check:
        raise ValueError(f"invalid expansion spec: {check.reason}")
    origin, side = [], []
    copy: dict[tuple[int, int], int] = {}
    for v in g.vertices():
        for s, part in ((1, spec.v1), (2, spec.v2)):
            if v in part:
                copy[v, s] = len(origin)
                origin.append(v)
                side.append(s)
    edges = []
    for v in spec.v1 & spec.v2:
        edges.append((copy[v, 1], copy[v, 2]))
    for u, v in g.edges:
        for s in (1, 2):
            if (u, s) in copy and (v, s) in copy:
                edges.append((copy[u, s], copy[v, s]))
    return Expansion(Graph(len(origin), tuple(edges)), tuple(origin), tuple(side))


def peripheral_expand(g: Graph, v2: Iterable[int]) -> Graph:
    """Peripheral expansion over ``v2``.

    Vertices ``0..n-1`` are the copy of ``g``; the copies of ``v2`` follow in
    ascending order, each matched to its original.
    """
    v2 = sorted(set(v2))
    if not v2:
        raise ValueError("empty subset")
    if not _is_isometric_subset(g, frozenset(v2)):
        raise ValueError("subset does not induce an isometric subgraph")
    n = g.vertex_count
    index = {v: n + i for i, v in enumerate(v2)}
    edges = list(g.edges)
    edges.extend((v, index[v]) for v in v2)
    edges.extend((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph(n + len(v2), tuple(edges))


def _require_proper(lg: LabelledGraph) -> None:
    if not verify_proper(lg):
        raise ValueError("labelled graph is not properly labelled")


def is_leq_subgraph(lg: LabelledGraph, h: Iterable[int]) -> bool:
    """True iff the labels of ``h`` form a down-set."""
    _require_proper(lg)
    return is_downward_closed((lg.labels[v] for v in h), lg.length)


def leq_expand(lg: LabelledGraph, h: Iterable[int]) -> LabelledGraph:
    h = sorted(set(h))
    if not h or not is_leq_subgraph(lg, h):
        raise ValueError("subset is not a ≤-subgraph")
    g = peripheral_expand(lg.graph, h)
    labels = tuple(x.prepend(0) for x in lg.labels) + tuple(lg.labels[v].prepend(1) for v in h)
    return LabelledGraph(g, labels, lg.length + 1)


def is_convex_leq_expansion_step(
    lg: LabelledGraph, h: Iterable[int], d: DistanceMatrix | None = None
) -> bool:
    h = set(h)
    if not h or not is_leq_subgraph(lg, h):
        raise ValueError("subset is not a ≤-subgraph")
    return is_convex(lg.graph, h, d)


def contract(g: Graph, partition: ThetaPartition, class_index: int) -> tuple[Graph, tuple[int, ...]]:
    """Collapse every edge of one Θ-class.

    Returns the quotient graph and ``merge`` with ``merge[old] == new``; new
    vertices are numbered by their smallest original vertex.
    """
    if not is_partial_cube(g):
        raise NotPartialCubeError("contraction needs a partial cube")
    if not 0 <= class_index < len(partition):
        raise IndexError(f"class index {class_index} out of range")
    rep = list(g.vertices())

    def find(x: int) -> int:
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for u, v in partition.classes[class_index]:
        ru, rv = find(u), find(v)
        if ru != rv:
            rep[max(ru, rv)] = min(ru, rv)
    roots = sorted({find(v) for v in g.vertices()})
    new = {r: i for i, r in enumerate(roots)}
    merge = tuple(new[find(v)] for v in g.vertices())
    edges = {tuple(sorted((merge[u], merge[v]))) for u, v in g.edges}
    edges = {e for e in edges if e[0] != e[1]}
    return Graph(len(roots), tuple(sorted(edges))), merge


def contract_coordinate(lg: LabelledGraph, i: int) -> tuple[LabelledGraph, frozenset[BitString]]:
    """Contract the class of coordinate ``i`` of a properly labelled daisy cube.

    Returns the contracted graph (labels with bit ``i`` removed) and the
    labels, in the contracted graph, of the ≤-subgraph ``U`` that expands it
    back: those whose bit-``i`` flip was present.
    """
    lower = [x for x in lg.labels if not x.bit(i)]
    present = lg.vertex_of
    u = frozenset(x.drop(i) for x in lower if x.flip(i) in present)
    words = [x.drop(i) for x in lower]
    return labelled_from_words(words, lg.length - 1), u


@dataclass(frozen=True)
class DecompositionCertificate:
    """≤-expansion steps that rebuild a daisy cube from K_1.

    ``steps[k]`` lists the labels (of length k) of the ≤-subgraph expanded in
    step k+1.  ``coordinates[k]`` is the coordinate of the source labelling
    that the step reintroduces.
    """

    steps: tuple[tuple[BitString, ...], ...]
    coordinates: tuple[int, ...] = ()

    def to_text(self) -> str:
        lines = [""]
        lines.extend(" ".join(str(x) for x in step) for step in self.steps)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> DecompositionCertificate:
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines or lines[0].strip():
            raise ValueError("certificate must start with an empty line for the one-vertex graph")
        steps = []
        for k, line in enumerate(lines[1:]):
            words = line.split()
            if k == 0 and not words:
                # the only nonempty down-set of K_1 is its single empty label
                steps.append((BitString(0, 0),))
                continue
            step = tuple(BitString.parse(w) for w in words)
            if not step:
                raise ValueError(f"step {k + 1} is empty")
            if any(x.length != k for x in step):
                raise ValueError(f"step {k + 1} labels must have length {k}")
            steps.append(step)
        return cls(tuple(steps))


def one_vertex_graph() -> LabelledGraph:
    return LabelledGraph(Graph(1), (BitString(0, 0),), 0)


def permute_coordinates(lg: LabelledGraph, order: Sequence[int]) -> LabelledGraph:
    """Relabel so that new position p carries old coordinate ``order[p-1]``.

    Omitted coordinates are dropped; the labels must stay distinct.
    """
    labels = tuple(BitString.parse("".join(str(x)[c - 1] for c in order)) for x in lg.labels)
    return LabelledGraph(lg.graph, labels, len(order))


def decompose(lg: LabelledGraph, order: Sequence[int] | None = None) -> DecompositionCertificate:
    """Peel off coordinates (default: h down to 1) and record each ≤-subgraph.

    Coordinates that are 0 on every label are dropped first.  ``order`` lists the coordinates of ``lg`` in removal order.  Labels are
    first permuted into that order and the leftmost position is removed each
    time, so the recorded subgraphs are written in the coordinates that
    :func:`replay` builds (it prepends): the replayed graph carries exactly
    the permuted labels.
    """
    _require_proper(lg)
    h = lg.length
    order = list(range(h, 0, -1)) if order is None else list(order)
    if sorted(order) != list(range(1, h + 1)):
        raise ValueError(f"order must be a permutation of 1..{h}")
    # coordinates that are 0 on every label carry no expansion step
    order = [c for c in order if any(x.bit(c) for x in lg.labels)]
    cur = permute_coordinates(lg, order)
    steps: list[tuple[BitString, ...]] = []
    for coord in order:
        cur, u = contract_coordinate(cur, 1)
        if not u or not is_downward_closed(u, cur.length):
            raise RuntimeError(f"coordinate {coord}: recorded subgraph is not a down-set")
        steps.append(tuple(sorted(u)))
    if cur.graph.vertex_count != 1:
        raise RuntimeError("decomposition did not end at the one-vertex graph")
    return DecompositionCertificate(tuple(reversed(steps)), tuple(reversed(order)))


def _step_vertices(cur: LabelledGraph, step: Sequence[BitString], k: int) -> list[int]:
    missing = [x for x in step if x not in cur.vertex_of]
    if missing:
        raise ValueError(f"step {k + 1}: {missing[0]} is not a vertex")
    return [cur.vertex_of[x] for x in step]


def replay(cert: DecompositionCertificate) -> LabelledGraph:
    """Rebuild the daisy cube described by ``cert``."""
    cur = one_vertex_graph()
    for k, step in enumerate(cert.steps):
        cur = leq_expand(cur, _step_vertices(cur, step, k))
    return cur


def convex_steps(cert: DecompositionCertificate) -> list[bool]:
    """Per step, whether the ≤-expansion is also convex."""
    cur = one_vertex_graph()
    out = []
    for k, step in enumerate(cert.steps):
        subset = _step_vertices(cur, step, k)
        out.append(is_convex_leq_expansion_step(cur, subset, distance_matrix(cur.graph)))
        cur = leq_expand(cur, subset)
    return out

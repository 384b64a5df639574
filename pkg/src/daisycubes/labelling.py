"""Proper labellings of graphs isomorphic to daisy cubes.

:func:`proper_label` assigns one coordinate per Θ-class: for a representative
edge ``ab`` of the class, the larger of ``W_ab`` and ``W_ba`` gets bit 0 and
the other side bit 1.  On daisy cubes the larger side always contains the
all-zero vertex, and tied classes split the graph into two isomorphic halves
so either choice works.  The whole run costs two BFS passes plus one edge
scan per class, i.e. O(mn).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .bitstring import BitString, lower_covers
from .graph import Edge, Graph, bfs_distances, distance_matrix, is_bipartite, require_connected
from .generators import LabelledGraph
from .theta import Side, is_theta_transitive, theta_star_partition

RejectStage = Literal["not-bipartite", "theta-not-transitive", "verifier-failed"]


@dataclass(frozen=True)
class LabellingResult:
    labelled: LabelledGraph
    # class_order[i] holds the edges of the class behind coordinate i+1
    class_order: tuple[tuple[Edge, ...], ...]
    # side of the representative edge whose W-set received bit 0
    side_choices: tuple[Side, ...]


def proper_label(g: Graph) -> LabellingResult:
    """Label ``g`` by majority side per Θ-class.

    The caller promises ``g`` is isomorphic to a daisy cube; on other graphs
    the output is some labelling that :func:`verify_proper` may reject.
    Classes are found as the cut sets ``F_ab``, which equal Θ-classes in
    partial cubes.  Ties go to the side holding the smaller vertex index.
    """
    require_connected(g)
    n = g.vertex_count
    edges = g.edges
    assigned = [False] * len(edges)
    edge_pos = {e: i for i, e in enumerate(edges)}
    bits = [0] * n
    classes: list[tuple[Edge, ...]] = []
    sides: list[Side] = []
    for start, (a, b) in enumerate(edges):
        if assigned[start]:
            continue
        da, db = bfs_distances(g, a), bfs_distances(g, b)
        near_a = [False] * n
        size_a = 0
        for w in range(n):
            if da[w] == db[w]:
                raise ValueError(f"vertex {w} equidistant from {a} and {b}; graph is not bipartite")
            if da[w] < db[w]:
                near_a[w] = True
                size_a += 1
        cls = [e for e in edges if near_a[e[0]] != near_a[e[1]]]
        for e in cls:
            assigned[edge_pos[e]] = True
        size_b = n - size_a
        # vertex 0 lies on one side; in a tie that side gets 0
        zero_on_a = size_a > size_b or (size_a == size_b and near_a[0])
        for w in range(n):
            bits[w] = (bits[w] << 1) | (0 if near_a[w] == zero_on_a else 1)
        classes.append(tuple(cls))
        sides.append("ab" if zero_on_a else "ba")
    k = len(classes)
    labels = tuple(BitString(k, x) for x in bits)
    return LabellingResult(LabelledGraph(g, labels, k), tuple(classes), tuple(sides))


@dataclass(frozen=True)
class Violation:
    """Why a labelling is improper.

    kind is ``"edge-not-unit"`` (an edge between labels at Hamming distance
    other than 1), ``"missing-edge"`` (labels at distance 1 but not adjacent)
    or ``"not-downward-closed"`` (``lower`` <= ``upper`` but ``lower`` is not
    a label).
    """

    kind: str
    lower: BitString
    upper: BitString

    def __str__(self) -> str:
        if self.kind == "not-downward-closed":
            return f"{self.lower} <= {self.upper} but {self.lower} is not a label"
        if self.kind == "missing-edge":
            return f"{self.lower} and {self.upper} differ in one position but are not adjacent"
        return f"edge {self.lower}-{self.upper} does not join labels differing in one position"


def find_violation(lg: LabelledGraph) -> Violation | None:
    """First witness against properness, or None if ``lg`` is proper.

    The down-set witness scans labels from the largest down and clears their
    ones from the left, so it reports the largest missing word found under
    the largest offending label.
    """
    labs = lg.labels
    g = lg.graph
    for u, v in g.edges:
        if bin(labs[u].value ^ labs[v].value).count("1") != 1:
            return Violation("edge-not-unit", *sorted((labs[u], labs[v])))
    present = lg.vertex_of
    for x in sorted(labs):
        for i in range(1, lg.length + 1):
            if not x.bit(i):
                y = x.flip(i)
                if y in present and not g.has_edge(present[x], present[y]):
                    return Violation("missing-edge", x, y)
    for x in sorted(labs, reverse=True):
        for y in sorted(lower_covers(x), reverse=True):
            if y not in present:
                return Violation("not-downward-closed", y, x)
    return None


def verify_proper(lg: LabelledGraph) -> bool:
    """True iff ``lg`` is exactly Q_h of its own label set."""
    return find_violation(lg) is None


@dataclass(frozen=True)
class Recognition:
    labelled: LabelledGraph | None
    stage: RejectStage | None = None

    @property
    def accepted(self) -> bool:
        return self.labelled is not None

    def __bool__(self) -> bool:
        return self.accepted


def recognize_daisy(g: Graph) -> Recognition:
    """Sound daisy-cube test: partial-cube check, labelling, then verification.

    Acceptance carries a proper labelling, which certifies the answer.  Every
    daisy cube is accepted because the labelling step is exact on them.
    """
    require_connected(g)
    if not is_bipartite(g):
        return Recognition(None, "not-bipartite")
    d = distance_matrix(g)
    if not is_theta_transitive(g, theta_star_partition(g, d), d):
        return Recognition(None, "theta-not-transitive")
    lg = proper_label(g).labelled
    if not verify_proper(lg):
        return Recognition(None, "verifier-failed")
    return Recognition(lg)


def flip_coordinate(lg: LabelledGraph, i: int) -> LabelledGraph:
    """Invert coordinate ``i`` (1-based) on every vertex.

    Only allowed when the coordinate splits the vertices evenly; then the
    result is again proper.
    """
    if not verify_proper(lg):
        raise ValueError("labelling is not proper")
    if not 1 <= i <= lg.length:
        raise IndexError(f"coordinate {i} outside 1..{lg.length}")
    ones = sum(x.bit(i) for x in lg.labels)
    if 2 * ones != len(lg.labels):
        raise ValueError(
            f"coordinate {i} is not tied ({len(lg.labels) - ones} zeros vs {ones} ones)"
        )
    return LabelledGraph(lg.graph, tuple(x.flip(i) for x in lg.labels), lg.length)

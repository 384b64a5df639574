"""The Djoković–Winkler relation, its transitive closure, and edge splits.

Two edges ``xy`` and ``uv`` are related when
``d(x,u) + d(y,v) != d(x,v) + d(y,u)``.  A connected graph is a partial cube
exactly when it is bipartite and the relation is already transitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Literal

from .graph import (
    DistanceMatrix,
    Edge,
    Graph,
    distance_matrix,
    is_bipartite,
    normalize_edge,
    require_connected,
)

Side = Literal["ab", "ba"]


class NotPartialCubeError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeSplit:
    """The W, F and U sets of an anchor edge ``ab``."""

    a: int
    b: int
    w_ab: frozenset[int]
    w_ba: frozenset[int]
    f_ab: frozenset[Edge]
    u_ab: frozenset[int]
    u_ba: frozenset[int]

    def w(self, side: Side) -> frozenset[int]:
        return self.w_ab if side == "ab" else self.w_ba

    def u(self, side: Side) -> frozenset[int]:
        return self.u_ab if side == "ab" else self.u_ba


@dataclass(frozen=True)
class ThetaPartition:
    """Edge classes of the transitive closure of Θ.

    Each class is a sorted tuple of edges; classes are ordered by their
    smallest edge, which also serves as the class representative.
    """

    classes: tuple[tuple[Edge, ...], ...]

    @property
    def representatives(self) -> tuple[Edge, ...]:
        return tuple(c[0] for c in self.classes)

    @cached_property
    def class_of(self) -> dict[Edge, int]:
        return {e: i for i, c in enumerate(self.classes) for e in c}

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)


def _check_edge(g: Graph, e: Edge) -> Edge:
    e = normalize_edge(e)
    if not g.has_edge(*e):
        raise ValueError(f"{e} is not an edge")
    return e


def theta_related(g: Graph, d: DistanceMatrix, e: Edge, f: Edge) -> bool:
    x, y = _check_edge(g, e)
    u, v = _check_edge(g, f)
    return d[x][u] + d[y][v] != d[x][v] + d[y][u]


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


def _group(edges: tuple[Edge, ...], uf: _UnionFind) -> ThetaPartition:
    groups: dict[int, list[Edge]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(uf.find(i), []).append(e)
    # edges are sorted, so each group is sorted and groups appear by smallest edge
    return ThetaPartition(tuple(tuple(c) for c in groups.values()))


def theta_star_partition(g: Graph, d: DistanceMatrix | None = None) -> ThetaPartition:
    """Θ*-classes by testing every edge pair and merging with union-find."""
    require_connected(g)
    if d is None:
        d = distance_matrix(g)
    edges = g.edges
    uf = _UnionFind(len(edges))
    for i, j in combinations(range(len(edges)), 2):
        (x, y), (u, v) = edges[i], edges[j]
        if d[x][u] + d[y][v] != d[x][v] + d[y][u]:
            uf.union(i, j)
    return _group(edges, uf)


def is_theta_transitive(g: Graph, partition: ThetaPartition, d: DistanceMatrix) -> bool:
    for cls in partition.classes:
        for (x, y), (u, v) in combinations(cls, 2):
            if d[x][u] + d[y][v] == d[x][v] + d[y][u]:
                return False
    return True


def is_partial_cube(g: Graph, d: DistanceMatrix | None = None) -> bool:
    require_connected(g)
    if not is_bipartite(g):
        return False
    if d is None:
        d = distance_matrix(g)
    return is_theta_transitive(g, theta_star_partition(g, d), d)


def edge_split(g: Graph, d: DistanceMatrix, e: Edge) -> EdgeSplit:
    a, b = e
    _check_edge(g, e)
    da, db = d[a], d[b]
    w_ab, w_ba = set(), set()
    for w in g.vertices():
        if da[w] < db[w]:
            w_ab.add(w)
        elif db[w] < da[w]:
            w_ba.add(w)
        else:
            raise ValueError(f"vertex {w} is equidistant from {a} and {b}; graph is not bipartite")
    f_ab = set()
    u_ab, u_ba = set(), set()
    for x, y in g.edges:
        if x in w_ab and y in w_ba:
            u_ab.add(x)
            u_ba.add(y)
        elif y in w_ab and x in w_ba:
            u_ab.add(y)
            u_ba.add(x)
        else:
            continue
        f_ab.add((x, y))
    return EdgeSplit(
        a, b, frozenset(w_ab), frozenset(w_ba), frozenset(f_ab), frozenset(u_ab), frozenset(u_ba)
    )


def is_peripheral_side(split: EdgeSplit, side: Side) -> bool:
    return split.u(side) == split.w(side)


def is_class_peripheral(
    g: Graph, partition: ThetaPartition, class_index: int, d: DistanceMatrix | None = None
) -> bool:
    if not 0 <= class_index < len(partition):
        raise IndexError(f"class index {class_index} out of range")
    if d is None:
        d = distance_matrix(g)
    split = edge_split(g, d, partition.representatives[class_index])
    return is_peripheral_side(split, "ab") or is_peripheral_side(split, "ba")

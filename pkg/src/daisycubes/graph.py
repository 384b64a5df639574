"""Simple undirected graphs: distances, intervals, medians and convexity.

Vertices are the integers ``0..n-1``.  Graphs are immutable; every function
here is pure.  Distances to unreachable vertices are ``math.inf``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]
DistanceMatrix = list[list[float]]

INF = math.inf


class DisconnectedGraphError(ValueError):
    """Raised by operations that require a connected graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``.

    ``edges`` is normalised to a sorted tuple of ``(u, v)`` pairs with
    ``u < v``.  Self-loops, parallel edges and out-of-range endpoints are
    rejected.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(f"negative vertex count {self.vertex_count}")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for e, f in zip(norm, norm[1:]):
            if e == f:
                raise ValueError(f"parallel edge {e}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def vertices(self) -> range:
        return range(self.vertex_count)


def normalize_edge(e: Sequence[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range for {g.vertex_count} vertices")


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest-path distances from ``source``; unreachable vertices get ``inf``."""
    _check_vertex(g, source)
    dist: list[float] = [INF] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == INF:
                dist[y] = dx
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs distances by one BFS per vertex."""
    return [bfs_distances(g, s) for s in g.vertices()]


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return INF not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def interval(g: Graph, d: DistanceMatrix, u: int, v: int) -> set[int]:
    """Vertices lying on some shortest u,v-path."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    duv = d[u][v]
    if duv == INF:
        raise DisconnectedGraphError(f"vertices {u} and {v} are disconnected")
    du, dv = d[u], d[v]
    return {w for w in g.vertices() if du[w] + dv[w] == duv}


def is_isometric_subgraph(h: Graph, g: Graph, embedding: Sequence[int] | Mapping[int, int]) -> bool:
    """True iff ``h``, placed into ``g`` by ``embedding``, preserves all distances.

    ``embedding[x]`` is the vertex of ``g`` hosting vertex ``x`` of ``h``.
    """
    emb = [embedding[x] for x in h.vertices()]
    if len(set(emb)) != len(emb):
        raise ValueError("embedding is not injective")
    for x in emb:
        _check_vertex(g, x)
    for x, y in h.edges:
        if not g.has_edge(emb[x], emb[y]):
            raise ValueError(f"edge ({x}, {y}) is not mapped onto an edge")
    for x in h.vertices():
        dh = bfs_distances(h, x)
        dg = bfs_distances(g, emb[x])
        if any(dh[y] != dg[emb[y]] for y in h.vertices()):
            return False
    return True


def median(g: Graph, d: DistanceMatrix, u: int, v: int, w: int) -> list[int]:
    """All medians of the triple, in ascending vertex order (possibly empty)."""
    for x in (u, v, w):
        _check_vertex(g, x)
    duv, duw, dvw = d[u][v], d[u][w], d[v][w]
    if INF in (duv, duw, dvw):
        raise DisconnectedGraphError("triple is not within one component")
    du, dv, dw = d[u], d[v], d[w]
    return [
        z
        for z in g.vertices()
        if du[z] + dv[z] == duv and du[z] + dw[z] == duw and dv[z] + dw[z] == dvw
    ]


def is_median_graph(g: Graph, d: DistanceMatrix | None = None) -> bool:
    """Exhaustive check that every triple has exactly one median."""
    require_connected(g)
    if d is None:
        d = distance_matrix(g)
    n = g.vertex_count
    for u in range(n):
        for v in range(u, n):
            for w in range(v, n):
                if len(median(g, d, u, v, w)) != 1:
                    return False
    return True


def is_convex(g: Graph, subset: Iterable[int], d: DistanceMatrix | None = None) -> bool:
    s = set(subset)
    if not s:
        raise ValueError("empty subset")
    for x in s:
        _check_vertex(g, x)
    if d is None:
        d = distance_matrix(g)
    sub, _ = induced_subgraph(g, s)
    if not is_connected(sub):
        return False
    for u, v in combinations(sorted(s), 2):
        if not interval(g, d, u, v) <= s:
            return False
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.vertex_count
    adj = g.adjacency
    for start in g.vertices():
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``subset``.

    Returns the subgraph and a tuple mapping each new index to its original
    vertex; new indices follow ascending original order.
    """
    keep = sorted(set(subset))
    for x in keep:
        _check_vertex(g, x)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(keep), tuple(edges)), tuple(keep)


# Small named graphs used across tests and the CLI.

def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))

"""Daisy graphs of a rooted graph.

In a rooted graph ``(G, r)`` write ``u <= v`` when ``u`` lies on some shortest
``v,r``-path.  The daisy graph generated by ``X`` is the subgraph induced by
everything below some member of ``X``.  On the hypercube rooted at the
all-zero word this is the coordinatewise order, so daisy cubes are a special
case.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import (
    DistanceMatrix,
    Graph,
    distance_matrix,
    induced_subgraph,
    is_connected,
    is_convex,
    is_isometric_subgraph,
    median,
    require_connected,
)

MAX_DOWNSETS = 200_000


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.graph.vertex_count:
            raise ValueError(f"root {self.root} out of range")
        require_connected(self.graph)


def leq_gr(rg: RootedGraph, d: DistanceMatrix, u: int, v: int) -> bool:
    n = rg.graph.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex out of range: {u}, {v}")
    r = rg.root
    return d[v][r] == d[v][u] + d[u][r]


def check_partial_order(rg: RootedGraph, d: DistanceMatrix | None = None) -> bool:
    """Exhaustively verify reflexivity, antisymmetry and transitivity."""
    if d is None:
        d = distance_matrix(rg.graph)
    n = rg.graph.vertex_count
    rel = [[leq_gr(rg, d, u, v) for v in range(n)] for u in range(n)]
    for u in range(n):
        if not rel[u][u]:
            return False
        for v in range(n):
            if u != v and rel[u][v] and rel[v][u]:
                return False
            if rel[u][v]:
                for w in range(n):
                    if rel[v][w] and not rel[u][w]:
                        return False
    return True


def down_set(rg: RootedGraph, d: DistanceMatrix, xs: Iterable[int]) -> frozenset[int]:
    xs = list(xs)
    return frozenset(
        u for u in rg.graph.vertices() if any(leq_gr(rg, d, u, v) for v in xs)
    )


def daisy_graph(
    rg: RootedGraph, xs: Iterable[int], d: DistanceMatrix | None = None
) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the down-set of ``xs``, with its index map."""
    xs = set(xs)
    if not xs:
        raise ValueError("empty generator set")
    if d is None:
        d = distance_matrix(rg.graph)
    sub, index = induced_subgraph(rg.graph, down_set(rg, d, xs))
    if not is_connected(sub):
        raise RuntimeError(f"daisy graph generated by {sorted(xs)} is disconnected")
    return sub, index


def maximal_elements(rg: RootedGraph, d: DistanceMatrix, subset: Iterable[int]) -> frozenset[int]:
    s = set(subset)
    return frozenset(u for u in s if not any(u != v and leq_gr(rg, d, u, v) for v in s))


def convex_subgraph_is_daisy(
    rg: RootedGraph, subset: Iterable[int], d: DistanceMatrix | None = None
) -> frozenset[int] | None:
    """Generators of a convex subgraph through the root, or None if not convex."""
    s = set(subset)
    if rg.root not in s:
        raise ValueError("subset must contain the root")
    if d is None:
        d = distance_matrix(rg.graph)
    if not is_convex(rg.graph, s, d):
        return None
    gens = maximal_elements(rg, d, s)
    if down_set(rg, d, gens) != s:
        raise RuntimeError("convex subset is not the down-set of its maximal elements")
    return gens


def medians_with_root_exist(rg: RootedGraph, d: DistanceMatrix | None = None) -> bool:
    if d is None:
        d = distance_matrix(rg.graph)
    n = rg.graph.vertex_count
    return all(median(rg.graph, d, u, v, rg.root) for u, v in combinations(range(n), 2))


def enumerate_down_sets(
    rg: RootedGraph, d: DistanceMatrix, limit: int = MAX_DOWNSETS
) -> list[frozenset[int]]:
    """All nonempty down-sets, i.e. the vertex sets of all daisy graphs.

    Grows each down-set by one vertex whose strict predecessors are already
    inside, which reaches every down-set along a linear extension.
    """
    n = rg.graph.vertex_count
    below = [frozenset(u for u in range(n) if u != v and leq_gr(rg, d, u, v)) for v in range(n)]
    start = frozenset([rg.root])
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for v in range(n):
            if v not in cur and below[v] <= cur:
                nxt = cur | {v}
                if nxt not in seen:
                    if len(seen) >= limit:
                        raise ValueError(f"more than {limit} daisy graphs; scale guard exceeded")
                    seen.add(nxt)
                    queue.append(nxt)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def all_daisy_graphs_isometric(
    rg: RootedGraph, d: DistanceMatrix | None = None, limit: int = MAX_DOWNSETS
) -> tuple[bool, frozenset[int] | None]:
    """Whether every daisy graph is isometric; otherwise the first offending vertex set."""
    if d is None:
        d = distance_matrix(rg.graph)
    for ds in enumerate_down_sets(rg, d, limit):
        sub, index = induced_subgraph(rg.graph, ds)
        if not is_connected(sub):
            raise RuntimeError(f"daisy graph on {sorted(ds)} is disconnected")
        if not is_isometric_subgraph(sub, rg.graph, index):
            return False, ds
    return True, None


def no_median_isometric_example() -> tuple[RootedGraph, dict[str, int]]:
    """Seven-vertex rooted graph where the daisy graph generated by ``u`` and
    ``v`` is isometric although the triple ``u, v, r`` has no median.

    The outer path ``u - 1 - 2 - v`` and the inner path ``u - 4 - 5 - v`` have
    equal length, and the root is adjacent to both inner vertices ``4`` and
    ``5``.  Returns the rooted graph and the roles of ``u``, ``v``, ``r`` and
    the inner vertices ``a`` (4) and ``b`` (5).
    """
    edges = ((0, 1), (1, 2), (2, 3), (3, 5), (5, 4), (4, 0), (4, 6), (6, 5))
    roles = {"u": 0, "v": 3, "r": 6, "a": 4, "b": 5}
    return RootedGraph(Graph(7, edges), roles["r"]), roles

"""Brute-force reference computations.

Nothing here reuses the fast paths: distances come from Floyd–Warshall, the
Θ* classes from a depth-first search over the relation graph, daisy-cube
membership from enumerating all of B^h, and isomorphism from a canonical form.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .generators import LabelledGraph
from .graph import Graph
from .theta import ThetaPartition

MAX_FLOYD = 256
MAX_THETA = 64
MAX_DAISY_LENGTH = 20
MAX_CANONICAL = 32
MAX_BRUTE_CANONICAL = 8

CanonicalForm = tuple[int, tuple[tuple[int, int], ...]]


class ScaleGuardError(ValueError):
    pass


def oracle_distances(g: Graph) -> list[list[float]]:
    n = g.vertex_count
    if n > MAX_FLOYD:
        raise ScaleGuardError(f"{n} vertices exceeds Floyd–Warshall guard {MAX_FLOYD}")
    inf = float("inf")
    d = [[0.0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def oracle_theta_star(g: Graph) -> ThetaPartition:
    if g.vertex_count > MAX_THETA:
        raise ScaleGuardError(f"{g.vertex_count} vertices exceeds guard {MAX_THETA}")
    d = oracle_distances(g)
    if any(x == float("inf") for row in d for x in row):
        raise ValueError("graph is not connected")
    edges = list(reversed(g.edges))
    m = len(edges)
    related: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        x, y = edges[i]
        for j in range(m):
            u, v = edges[j]
            if i != j and d[x][u] + d[y][v] != d[x][v] + d[y][u]:
                related[i].append(j)
    comp = [-1] * m
    classes = []
    for s in range(m):
        if comp[s] != -1:
            continue
        comp[s] = len(classes)
        stack, members = [s], []
        while stack:
            i = stack.pop()
            members.append(edges[i])
            for j in related[i]:
                if comp[j] == -1:
                    comp[j] = comp[s]
                    stack.append(j)
        classes.append(tuple(sorted(members)))
    classes.sort()
    return ThetaPartition(tuple(classes))


def oracle_is_daisy(lg: LabelledGraph) -> bool:
    """Compare a labelled graph with Q_h of its label set by enumerating B^h.

    Works on the textual labels only.
    """
    labels = [str(x) for x in lg.labels]
    edges = lg.graph.edges
    h = lg.length
    if h > MAX_DAISY_LENGTH:
        raise ScaleGuardError(f"length {h} exceeds guard {MAX_DAISY_LENGTH}")
    if len(set(labels)) != len(labels) or any(len(x) != h for x in labels):
        return False
    words = [format(x, f"0{h}b") if h else "" for x in range(2**h)]

    def below(a: str, b: str) -> bool:
        return all(p <= q for p, q in zip(a, b))

    tops = [x for x in labels if not any(x != y and below(x, y) for y in labels)]
    closure = {w for w in words if any(below(w, t) for t in tops)}
    if closure != set(labels):
        return False
    want = {
        frozenset((a, b))
        for a, b in combinations(sorted(closure), 2)
        if sum(p != q for p, q in zip(a, b)) == 1
    }
    have = {frozenset((labels[u], labels[v])) for u, v in edges}
    return want == have


def _encode(g: Graph, order: list[int]) -> tuple[tuple[int, int], ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))


def canonical_form_bruteforce(g: Graph) -> CanonicalForm:
    """Minimum edge encoding over all vertex orders (tiny graphs only)."""
    n = g.vertex_count
    if n > MAX_BRUTE_CANONICAL:
        raise ScaleGuardError(f"{n} vertices exceeds brute-force guard {MAX_BRUTE_CANONICAL}")
    return n, min(_encode(g, list(p)) for p in permutations(range(n)))


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition, renumbered canonically."""
    adj = g.adjacency
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in g.vertices()]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if len(table) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant encoding: equal iff the graphs are isomorphic.

    Individualisation-refinement without automorphism pruning; the minimum
    over all leaves of the search tree is the form.
    """
    n = g.vertex_count
    if n > MAX_CANONICAL:
        raise ScaleGuardError(f"{n} vertices exceeds canonical-form guard {MAX_CANONICAL}")
    best: tuple[tuple[int, int], ...] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            code = _encode(g, sorted(g.vertices(), key=lambda v: colors[v]))
            if best is None or code < best:
                best = code
            return
        for v in cells[target]:
            # split v off ahead of the rest of its cell
            search([2 * c + (0 if w == v or c != target else 1) for w, c in enumerate(colors)])

    search([0] * n)
    return n, best if best is not None else ()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)

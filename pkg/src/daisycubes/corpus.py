"""Whole-corpus checks: all small daisy cubes (used by ``corpus-verify``) and
all small connected graphs for the rooted suite."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .bitstring import BitString
from .expansion import contract, decompose, replay
from .generators import MAX_ANTICHAIN_N, daisy_cube, enumerate_antichains, strip_and_scramble
from .graph import Graph, distance_matrix, induced_subgraph
from .labelling import proper_label, recognize_daisy, verify_proper
from .oracle import ScaleGuardError, canonical_form, is_isomorphic
from .theta import edge_split, is_class_peripheral, is_partial_cube, theta_star_partition


def check_instance(n: int, gens: tuple[str, ...], seed: int = 1) -> list[str]:
    """Names of the properties that fail for Q_n(gens); empty when all hold."""
    lg = daisy_cube(n, gens)
    g = lg.graph
    d = distance_matrix(g)
    failed = []
    if not is_partial_cube(g, d):
        return ["partial-cube"]
    part = theta_star_partition(g, d)
    zero = lg.vertex_of[BitString.zeros(n)]
    if not all(is_class_peripheral(g, part, i, d) for i in range(len(part))):
        failed.append("peripheral")
    if not all(any(zero in e for e in cls) for cls in part.classes):
        failed.append("zero-edge")
    if g.degree(zero) != g.max_degree():
        failed.append("zero-degree")
    for e in g.edges:
        split = edge_split(g, d, e)
        if not all(recognize_daisy(induced_subgraph(g, w)[0]) for w in (split.w_ab, split.w_ba)):
            failed.append("halves")
            break
    for i in range(len(part)):
        if not recognize_daisy(contract(g, part, i)[0]):
            failed.append("contraction")
            break
    scrambled, _ = strip_and_scramble(lg, seed)
    if not verify_proper(proper_label(scrambled).labelled):
        failed.append("labelling")
    if not is_isomorphic(replay(decompose(lg)).graph, g):
        failed.append("replay")
    return failed


def verify_corpus(max_n: int, jobs: int = 1) -> list[tuple[int, tuple[str, ...], list[str]]]:
    """Run :func:`check_instance` over the corpus; results keep corpus order."""
    items = [
        (n, tuple(str(x) for x in gens))
        for n in range(1, max_n + 1)
        for gens in enumerate_antichains(n, allow_large=max_n > MAX_ANTICHAIN_N)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_instance, *zip(*items)))
    else:
        results = [check_instance(n, gens) for n, gens in items]
    return [(n, gens, r) for (n, gens), r in zip(items, results)]


def connected_graphs(max_n: int) -> list[Graph]:
    """One graph per isomorphism class of connected graphs on 1..max_n vertices.

    Every connected graph on k vertices has a vertex whose removal leaves it
    connected (a leaf of a spanning tree), so attaching a new vertex to every
    nonempty subset of every class on k-1 vertices reaches all classes on k.
    """
    if not 1 <= max_n <= 8:
        raise ScaleGuardError(f"max_n={max_n} outside 1..8")
    level = {canonical_form(Graph(1)): Graph(1)}
    out = list(level.values())
    for k in range(2, max_n + 1):
        nxt: dict = {}
        for g in level.values():
            for mask in range(1, 1 << (k - 1)):
                extra = tuple((v, k - 1) for v in range(k - 1) if mask >> v & 1)
                h = Graph(k, g.edges + extra)
                nxt.setdefault(canonical_form(h), h)
        level = dict(sorted(nxt.items()))
        out.extend(level.values())
    return out

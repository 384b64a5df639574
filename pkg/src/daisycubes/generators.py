"""Labelled instances: hypercubes, daisy cubes, Fibonacci and Lucas cubes.

Generated graphs index their vertices in ascending numeric order of the
labels, so vertex 0 always carries the all-zero word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .bitstring import WORD_WIDTH, BitString, downward_closure, leq, uniform_length
from .graph import Graph

MAX_ANTICHAIN_N = 4


@dataclass(frozen=True)
class LabelledGraph:
    """A graph with an injective assignment of equal-length binary words."""

    graph: Graph
    labels: tuple[BitString, ...]
    length: int

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.vertex_count:
            raise ValueError(
                f"{len(self.labels)} labels for {self.graph.vertex_count} vertices"
            )
        uniform_length(self.labels, self.length)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels are not injective")

    @classmethod
    def from_strings(cls, graph: Graph, labels: Iterable[str]) -> LabelledGraph:
        bs = tuple(BitString.parse(s) for s in labels)
        length = bs[0].length if bs else 0
        return cls(graph, bs, length)

    @cached_property
    def vertex_of(self) -> dict[BitString, int]:
        return {x: v for v, x in enumerate(self.labels)}

    def label_set(self) -> frozenset[BitString]:
        return frozenset(self.labels)

    def label_strings(self) -> list[str]:
        return [str(x) for x in self.labels]

    def is_well_formed(self) -> bool:
        """Every edge joins labels at Hamming distance exactly 1."""
        lab = self.labels
        return all(bin(lab[u].value ^ lab[v].value).count("1") == 1 for u, v in self.graph.edges)


def labelled_from_words(words: Iterable[BitString], n: int) -> LabelledGraph:
    """Induced subgraph of the n-cube on ``words``, indexed in ascending order."""
    ws = sorted(set(words))
    uniform_length(ws, n)
    index = {w: i for i, w in enumerate(ws)}
    edges = []
    for i, w in enumerate(ws):
        for k in range(n):
            nb = BitString(n, w.value | (1 << k))
            if nb.value != w.value and nb in index:
                edges.append((i, index[nb]))
    return LabelledGraph(Graph(len(ws), tuple(edges)), tuple(ws), n)


def hypercube(n: int) -> LabelledGraph:
    if not 1 <= n <= WORD_WIDTH:
        raise ValueError(f"n={n} outside 1..{WORD_WIDTH}")
    if n > 24:
        raise ValueError(f"Q_{n} has too many vertices to build")
    return labelled_from_words((BitString(n, x) for x in range(1 << n)), n)


def daisy_cube(n: int, generators: Iterable[BitString | str]) -> LabelledGraph:
    """The subgraph of Q_n induced by everything below some generator."""
    gens = [BitString.parse(x) if isinstance(x, str) else x for x in generators]
    if not gens:
        raise ValueError("empty generator set")
    if not 1 <= n <= WORD_WIDTH:
        raise ValueError(f"n={n} outside 1..{WORD_WIDTH}")
    return labelled_from_words(downward_closure(gens, n), n)


def _no_adjacent_ones(x: int, n: int, circular: bool) -> bool:
    if x & (x >> 1):
        return False
    if circular and n > 1 and x & 1 and x >> (n - 1):
        return False
    return True


def fibonacci_cube(n: int) -> LabelledGraph:
    """Strings of length n with no two consecutive ones."""
    if not 1 <= n <= WORD_WIDTH:
        raise ValueError(f"n={n} outside 1..{WORD_WIDTH}")
    words = (BitString(n, x) for x in range(1 << n) if _no_adjacent_ones(x, n, False))
    return labelled_from_words(words, n)


def lucas_cube(n: int) -> LabelledGraph:
    """Fibonacci strings that also do not start and end with a one."""
    if not 2 <= n <= WORD_WIDTH:
        raise ValueError(f"n={n} outside 2..{WORD_WIDTH}")
    words = (BitString(n, x) for x in range(1 << n) if _no_adjacent_ones(x, n, True))
    return labelled_from_words(words, n)


def enumerate_antichains(n: int, allow_large: bool = False) -> Iterator[tuple[BitString, ...]]:
    """Every nonempty antichain of B^n exactly once.

    Antichains come out ordered by size, then by their sorted member tuple.
    n=5 (7580 antichains) requires ``allow_large``.
    """
    limit = 5 if allow_large else MAX_ANTICHAIN_N
    if not 1 <= n <= limit:
        raise ValueError(f"n={n} outside 1..{limit}; pass allow_large for n=5")
    elems = [BitString(n, x) for x in range(1 << n)]
    found: list[tuple[BitString, ...]] = []

    def extend(start: int, chosen: list[BitString]) -> None:
        for i in range(start, len(elems)):
            x = elems[i]
            if all(not leq(x, y) and not leq(y, x) for y in chosen):
                chosen.append(x)
                found.append(tuple(chosen))
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    found.sort(key=lambda a: (len(a), a))
    return iter(found)


def daisy_corpus(max_n: int = MAX_ANTICHAIN_N) -> Iterator[tuple[int, tuple[BitString, ...], LabelledGraph]]:
    """``(n, X, Q_n(X))`` for every nonempty antichain X, n = 1..max_n."""
    for n in range(1, max_n + 1):
        for gens in enumerate_antichains(n, allow_large=max_n > MAX_ANTICHAIN_N):
            yield n, gens, daisy_cube(n, gens)


def strip_and_scramble(lg: LabelledGraph | Graph, seed: int) -> tuple[Graph, tuple[int, ...]]:
    """Drop labels and renumber vertices by a seeded permutation.

    Returns the scrambled graph and ``perm`` with ``perm[old] == new``.
    Seed 0 is the identity permutation.
    """
    g = lg.graph if isinstance(lg, LabelledGraph) else lg
    perm = list(range(g.vertex_count))
    if seed != 0:
        random.Random(seed).shuffle(perm)
    edges = tuple((perm[u], perm[v]) for u, v in g.edges)
    return Graph(g.vertex_count, edges), tuple(perm)


from itertools import combinations, product

import pytest

from daisycubes.bitstring import BitString, reduce_generators
from daisycubes.generators import (
    daisy_cube,
    daisy_corpus,
    enumerate_antichains,
    fibonacci_cube,
    hypercube,
    lucas_cube,
    strip_and_scramble,
)
from daisycubes.graph import cycle_graph, path_graph
from daisycubes.labelling import verify_proper
from daisycubes.oracle import canonical_form
from daisycubes.theta import is_partial_cube

from .conftest import FOUR_PETAL_LABELS, FOUR_PETALS, PENDANT_SQUARE, THREE_GEN_LABELS, THREE_GENS


def unit_pairs(words):
    return sum(
        1 for a, b in combinations(words, 2) if sum(x != y for x, y in zip(a, b)) == 1
    )


def brute_antichains(n):
    """All nonempty antichains by filtering every subset of B^n."""
    ws = ["".join(p) for p in product("01", repeat=n)]

    def below(a, b):
        return all(x <= y for x, y in zip(a, b))

    out = set()
    for mask in range(1, 1 << len(ws)):
        s = [w for i, w in enumerate(ws) if mask >> i & 1]
        if all(not below(a, b) and not below(b, a) for a, b in combinations(s, 2)):
            out.add(frozenset(s))
    return out


def as_strings(antichains):
    return {frozenset(str(x) for x in a) for a in antichains}


class TestHypercube:
    def test_q1(self):
        lg = hypercube(1)
        assert lg.label_strings() == ["0", "1"]
        assert lg.graph.edges == ((0, 1),)

    def test_q3(self):
        g = hypercube(3).graph
        assert (g.vertex_count, g.edge_count) == (8, 12)

    def test_q2_is_square(self):
        lg = hypercube(2)
        assert lg.label_strings() == ["00", "01", "10", "11"]
        assert canonical_form(lg.graph) == canonical_form(cycle_graph(4))
        # 00-01-11-10-00
        assert lg.graph.edges == ((0, 1), (0, 2), (1, 3), (2, 3))

    @pytest.mark.parametrize("n", [0, 65])
    def test_range(self, n):
        with pytest.raises(ValueError):
            hypercube(n)


class TestDaisyCube:
    def test_four_petals(self):
        lg = daisy_cube(4, FOUR_PETALS)
        assert set(lg.label_strings()) == set(FOUR_PETAL_LABELS)
        assert unit_pairs(FOUR_PETAL_LABELS) == 12
        assert lg.graph.edge_count == 12

    def test_three_generators(self):
        lg = daisy_cube(4, THREE_GENS)
        assert lg.label_strings() == list(THREE_GEN_LABELS)
        # 0000 meets all four atoms, plus 0001-0011 and 0010-0011
        assert unit_pairs(THREE_GEN_LABELS) == 6
        assert lg.graph.edge_count == 6

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_top_generates_hypercube(self, n):
        assert daisy_cube(n, ["1" * n]) == hypercube(n)

    def test_vertex_order(self):
        lg = daisy_cube(3, ["011", "100"])
        assert lg.labels == tuple(sorted(lg.labels))
        assert lg.labels[0] == BitString.zeros(3)

    def test_errors(self):
        with pytest.raises(ValueError):
            daisy_cube(3, [])
        with pytest.raises(ValueError):
            daisy_cube(3, ["01", "100"])

    def test_reduction_invariant(self):
        for n, gens, lg in daisy_corpus(3):
            padded = set(gens) | {BitString.zeros(n)}
            assert daisy_cube(n, padded) == lg
            assert daisy_cube(n, reduce_generators(padded)) == lg

    def test_partial_cubes(self):
        for _, _, lg in daisy_corpus(4):
            assert is_partial_cube(lg.graph)


class TestFibonacciLucas:
    def test_fibonacci_3(self):
        expected = [w for w in ("".join(p) for p in product("01", repeat=3)) if "11" not in w]
        assert expected == ["000", "001", "010", "100", "101"]
        assert fibonacci_cube(3).label_strings() == expected

    def test_fibonacci_1(self):
        assert fibonacci_cube(1).graph == path_graph(2)

    @pytest.mark.parametrize("n, count", [(4, 8), (5, 13), (8, 55)])
    def test_fibonacci_counts(self, n, count):
        assert fibonacci_cube(n).graph.vertex_count == count

    def test_lucas_small(self):
        assert lucas_cube(3).label_strings() == ["000", "001", "010", "100"]
        assert lucas_cube(2).label_strings() == ["00", "01", "10"]

    @pytest.mark.parametrize("n, count", [(4, 7), (5, 11), (8, 47)])
    def test_lucas_counts(self, n, count):
        assert lucas_cube(n).graph.vertex_count == count

    def test_ranges(self):
        with pytest.raises(ValueError):
            fibonacci_cube(0)
        with pytest.raises(ValueError):
            lucas_cube(1)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_proper(self, n):
        assert verify_proper(fibonacci_cube(n))
        assert verify_proper(lucas_cube(n))


class TestAntichains:
    def test_n1(self):
        assert as_strings(enumerate_antichains(1)) == {frozenset({"0"}), frozenset({"1"})}

    def test_n2(self):
        got = [tuple(str(x) for x in a) for a in enumerate_antichains(2)]
        assert got == [("00",), ("01",), ("10",), ("11",), ("01", "10")]

    @pytest.mark.parametrize("n, count", [(1, 2), (2, 5), (3, 19), (4, 167)])
    def test_against_brute_force(self, n, count):
        got = list(enumerate_antichains(n))
        assert len(got) == len(set(got)) == count
        if n <= 3:
            assert as_strings(got) == brute_antichains(n)

    def test_guard(self):
        with pytest.raises(ValueError):
            next(enumerate_antichains(5))
        assert sum(1 for _ in enumerate_antichains(5, allow_large=True)) == 7580


class TestScramble:
    def test_seed_zero_is_identity(self):
        lg = daisy_cube(4, FOUR_PETALS)
        g, perm = strip_and_scramble(lg, 0)
        assert g == lg.graph
        assert perm == tuple(range(9))

    def test_degree_sequence_and_adjacency(self):
        lg = fibonacci_cube(6)
        g, perm = strip_and_scramble(lg, 17)
        assert sorted(map(len, g.adjacency)) == sorted(map(len, lg.graph.adjacency))
        assert all(g.has_edge(perm[u], perm[v]) for u, v in lg.graph.edges)

    def test_pendant_square(self):
        g, _ = strip_and_scramble(PENDANT_SQUARE, 3)
        assert (g.vertex_count, g.edge_count) == (5, 5)

    def test_deterministic(self):
        assert strip_and_scramble(hypercube(3), 5) == strip_and_scramble(hypercube(3), 5)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daisycubes.bitstring import BitString
from daisycubes.generators import (
    LabelledGraph,
    daisy_corpus,
    daisy_cube,
    fibonacci_cube,
    hypercube,
    lucas_cube,
    strip_and_scramble,
)
from daisycubes.graph import (
    DisconnectedGraphError,
    Graph,
    complete_bipartite_graph,
    cycle_graph,
    distance_matrix,
    path_graph,
)
from daisycubes.labelling import (
    find_violation,
    flip_coordinate,
    proper_label,
    recognize_daisy,
    verify_proper,
)
from daisycubes.oracle import oracle_is_daisy, oracle_theta_star
from daisycubes.theta import edge_split

from .conftest import IMPROPER_EMBEDDING, PENDANT_SQUARE, PROPER_EMBEDDING


def labelled(g, words):
    return LabelledGraph.from_strings(g, words)


class TestProperLabel:
    def test_pendant_square(self):
        res = proper_label(PENDANT_SQUARE)
        lg = res.labelled
        assert verify_proper(lg)
        assert oracle_is_daisy(lg)
        # vertex 0 is the degree-3 vertex
        assert str(lg.labels[0]) == "000"
        assert lg.label_strings() == ["000", "100", "110", "010", "001"]

    def test_k2(self):
        res = proper_label(path_graph(2))
        assert res.labelled.label_strings() == ["0", "1"]
        assert res.side_choices == ("ab",)

    def test_k1(self):
        res = proper_label(Graph(1))
        assert res.labelled.length == 0
        assert res.labelled.label_strings() == [""]
        assert verify_proper(res.labelled)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            proper_label(Graph(2))

    def test_odd_cycle(self):
        with pytest.raises(ValueError):
            proper_label(cycle_graph(5))

    def test_classes_match_theta(self):
        for _, _, lg in daisy_corpus(3):
            res = proper_label(lg.graph)
            assert tuple(res.class_order) == oracle_theta_star(lg.graph).classes

    def test_zero_word_has_max_degree(self):
        for _, _, lg in daisy_corpus(4):
            out = proper_label(lg.graph).labelled
            z = out.vertex_of[BitString.zeros(out.length)]
            assert out.graph.degree(z) == out.graph.max_degree()

    def test_coordinate_follows_side_choice(self):
        g = fibonacci_cube(5).graph
        res = proper_label(g)
        d = distance_matrix(g)
        for i, (cls, side) in enumerate(zip(res.class_order, res.side_choices), start=1):
            split = edge_split(g, d, cls[0])
            zeros = {v for v in g.vertices() if res.labelled.labels[v].bit(i) == 0}
            assert zeros == split.w(side)


def test_zero_word_on_larger_side():
    for _, _, lg in daisy_corpus(4):
        g = lg.graph
        d = distance_matrix(g)
        z = lg.vertex_of[BitString.zeros(lg.length)]
        for e in g.edges:
            split = edge_split(g, d, e)
            if len(split.w_ab) > len(split.w_ba):
                assert z in split.w_ab
            elif len(split.w_ba) > len(split.w_ab):
                assert z in split.w_ba


class TestVerify:
    def test_proper_embedding(self):
        assert verify_proper(labelled(PENDANT_SQUARE, PROPER_EMBEDDING))

    def test_improper_embedding(self):
        lg = labelled(PENDANT_SQUARE, IMPROPER_EMBEDDING)
        assert not verify_proper(lg)
        v = find_violation(lg)
        assert v.kind == "not-downward-closed"
        assert (str(v.lower), str(v.upper)) == ("101", "111")
        assert str(v) == "101 <= 111 but 101 is not a label"

    def test_edge_not_unit(self):
        v = find_violation(labelled(path_graph(2), ["00", "11"]))
        assert v.kind == "edge-not-unit"

    def test_missing_edge(self):
        # the square's labels placed on a path
        v = find_violation(labelled(path_graph(4), ["00", "01", "11", "10"]))
        assert v.kind == "missing-edge"

    def test_generated_are_proper(self):
        for _, _, lg in daisy_corpus(4):
            assert verify_proper(lg)

    def test_malformed(self):
        with pytest.raises(ValueError):
            labelled(path_graph(2), ["0", "0"])
        with pytest.raises(ValueError):
            labelled(path_graph(2), ["0", "10"])


class TestRecognize:
    def test_scrambled_fibonacci(self):
        g, _ = strip_and_scramble(fibonacci_cube(4), 11)
        rec = recognize_daisy(g)
        assert rec and rec.stage is None
        assert verify_proper(rec.labelled)

    def test_hexagon(self):
        rec = recognize_daisy(cycle_graph(6))
        assert not rec
        assert rec.stage == "verifier-failed"

    def test_k23(self):
        assert recognize_daisy(complete_bipartite_graph(2, 3)).stage == "theta-not-transitive"

    def test_odd_cycle(self):
        assert recognize_daisy(cycle_graph(7)).stage == "not-bipartite"

    def test_long_path(self):
        # a path P_4 is a partial cube but its middle class is not peripheral
        assert recognize_daisy(path_graph(4)).stage == "verifier-failed"
        assert recognize_daisy(path_graph(3))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            recognize_daisy(Graph(3))


class TestFlip:
    def test_k2(self):
        assert flip_coordinate(hypercube(1), 1).label_strings() == ["1", "0"]

    @pytest.mark.parametrize("i", [1, 2])
    def test_square(self, i):
        out = flip_coordinate(hypercube(2), i)
        assert verify_proper(out)
        assert flip_coordinate(out, i) == hypercube(2)

    def test_untied(self, square_with_tail):
        # coordinate 1 separates 100 from the other four vertices
        with pytest.raises(ValueError):
            flip_coordinate(square_with_tail, 1)

    def test_index_range(self):
        with pytest.raises(IndexError):
            flip_coordinate(hypercube(2), 3)

    def test_needs_proper(self):
        with pytest.raises(ValueError):
            flip_coordinate(labelled(PENDANT_SQUARE, IMPROPER_EMBEDDING), 1)

    def test_tied_coordinates_in_corpus(self):
        for _, _, lg in daisy_corpus(4):
            for i in range(1, lg.length + 1):
                if 2 * sum(x.bit(i) for x in lg.labels) == len(lg.labels):
                    out = flip_coordinate(lg, i)
                    assert verify_proper(out)
                    assert flip_coordinate(out, i) == lg


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["fib", "lucas"]),
    st.integers(2, 8),
    st.integers(0, 2**32 - 1),
)
def test_scrambled_round_trip(family, n, seed):
    lg = fibonacci_cube(n) if family == "fib" else lucas_cube(n)
    g, _ = strip_and_scramble(lg, seed)
    out = proper_label(g).labelled
    assert verify_proper(out)
    assert out.length == lg.length


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_corpus_scramble_round_trip(data):
    n = data.draw(st.integers(1, 4))
    words = data.draw(
        st.sets(st.integers(0, 2**n - 1), min_size=1, max_size=4).map(
            lambda vs: [BitString(n, v) for v in vs]
        )
    )
    lg = daisy_cube(n, words)
    g, _ = strip_and_scramble(lg, data.draw(st.integers(0, 10**6)))
    assert verify_proper(proper_label(g).labelled)

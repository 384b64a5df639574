from __future__ import annotations

import pytest

from daisycubes.generators import LabelledGraph, daisy_cube
from daisycubes.graph import Graph

# Five vertices: a square 0-1-2-3 with a pendant vertex 4 on 0.
PENDANT_SQUARE = Graph(5, ((0, 4), (0, 1), (1, 2), (2, 3), (3, 0)))
# Two isometric embeddings of PENDANT_SQUARE into Q_3.
PROPER_EMBEDDING = ("000", "001", "101", "100", "010")
IMPROPER_EMBEDDING = ("110", "010", "011", "111", "100")

FOUR_PETALS = ("0011", "0110", "1100", "1001")
FOUR_PETAL_LABELS = ("0000", "0001", "0011", "0010", "0110", "0100", "1100", "1000", "1001")
THREE_GENS = ("0011", "1000", "0100")
THREE_GEN_LABELS = ("0000", "0001", "0010", "0011", "0100", "1000")

SQUARE_WITH_TAIL = ("011", "100")  # Q_3({011, 100}) is PENDANT_SQUARE


@pytest.fixture
def pendant_square() -> Graph:
    return PENDANT_SQUARE


@pytest.fixture
def four_petals() -> LabelledGraph:
    return daisy_cube(4, FOUR_PETALS)


@pytest.fixture
def three_gens() -> LabelledGraph:
    return daisy_cube(4, THREE_GENS)


@pytest.fixture
def square_with_tail() -> LabelledGraph:
    return daisy_cube(3, SQUARE_WITH_TAIL)


def vertices_of(lg: LabelledGraph, words) -> list[int]:
    from daisycubes.bitstring import BitString

    return [lg.vertex_of[BitString.parse(w)] for w in words]


# Acceptance reporting: one line per criterion in the terminal summary.
_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance():
    def record(name: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")

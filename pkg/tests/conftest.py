from __future__ import annotations

import pytest

from poscol.graphs import build_graph

# Outer 5-cycle 0..4, inner 5-cycle 5..9 (5-6-7-8-9-5), spokes 0-5, 1-8, 2-6, 3-9, 4-7.
PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),
    (0, 5), (1, 8), (2, 6), (3, 9), (4, 7),
]

# Optimal colourings of the Petersen graph with the labelling above:
# a 2-class gp-colouring and a 4-class mono-colouring.
PETERSEN_GP_CLASSES = [[0, 2, 3, 5, 7, 8], [1, 4, 6, 9]]
PETERSEN_MONO_CLASSES = [[0, 6, 9], [1, 4, 5], [2, 3], [7, 8]]


@pytest.fixture
def petersen():
    return build_graph(10, PETERSEN_EDGES)


def path(n: int):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

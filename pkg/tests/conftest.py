import random

import pytest

from clubnet import load_graph


def graph_from_edges(edges, nodes=None):
    return load_graph(list(edges), nodes)


def cycle_edges(names):
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


@pytest.fixture
def k3():
    return graph_from_edges([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def p4():
    return graph_from_edges([("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture
def c4():
    return graph_from_edges(cycle_edges(["a", "b", "c", "d"]))


@pytest.fixture
def c5():
    return graph_from_edges(cycle_edges(["a", "b", "c", "d", "e"]))


@pytest.fixture
def c6():
    return graph_from_edges(cycle_edges(["a", "b", "c", "d", "e", "f"]))


@pytest.fixture
def star4():
    # center c with 3 leaves
    return graph_from_edges([("c", "x"), ("c", "y"), ("c", "z")])


@pytest.fixture
def bowtie():
    # two triangles sharing node c
    return graph_from_edges([("a", "b"), ("a", "c"), ("b", "c"),
                             ("c", "d"), ("c", "e"), ("d", "e")])


@pytest.fixture
def bridge2t():
    # two disjoint triangles joined by the single edge c-d
    return graph_from_edges([("a", "b"), ("a", "c"), ("b", "c"),
                             ("d", "e"), ("d", "f"), ("e", "f"),
                             ("c", "d")])


PETERSEN_EDGES = (
    # outer 5-cycle, inner pentagram, spokes
    [(f"n{i}", f"n{(i + 1) % 5}") for i in range(5)]
    + [(f"n{5 + i}", f"n{5 + (i + 2) % 5}") for i in range(5)]
    + [(f"n{i}", f"n{5 + i}") for i in range(5)]
)


@pytest.fixture
def petersen():
    return graph_from_edges(PETERSEN_EDGES)


def random_graph(rng: random.Random, n: int, p: float):
    """G(n, p) with string node ids; isolated nodes kept via node records."""
    names = [f"v{i:02d}" for i in range(n)]
    edges = [(names[i], names[j])
             for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    nodes = [{"id": s} for s in names]
    return load_graph(edges, nodes)

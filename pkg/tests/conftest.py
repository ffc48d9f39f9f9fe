"""Shared instances: the recurring clutters, graphs, and matrices of the suite."""

import pytest

from clutter_algebra.clutters import Clutter
from clutter_algebra.intmatrix import IntMatrix


def clutter_k2():
    return Clutter.from_edges([("x1", "x2")])


def clutter_triangle():
    return Clutter.from_edges([("x1", "x2"), ("x2", "x3"), ("x1", "x3")])


def cycle_graph(n):
    return Clutter.from_edges(
        [(f"x{i + 1}", f"x{(i + 1) % n + 1}") for i in range(n)]
    )


def path_graph(n):
    return Clutter.from_edges([(f"x{i + 1}", f"x{i + 2}") for i in range(n - 1)])


def two_disjoint_triangles():
    return Clutter.from_edges(
        [
            ("x1", "x2"), ("x2", "x3"), ("x1", "x3"),
            ("x4", "x5"), ("x5", "x6"), ("x4", "x6"),
        ]
    )


def six_vertex_two_partitionable():
    """Uniform clutter on six vertices with four triangle edges and seven covers."""
    return Clutter.from_edges(
        [
            ("x1", "x4", "x5"),
            ("x1", "x3", "x6"),
            ("x2", "x4", "x6"),
            ("x2", "x3", "x5"),
        ]
    )


def nine_vertex_balanced_clutter():
    """Mixed-size clutter on nine vertices with a balanced incidence matrix."""
    return Clutter.from_edges(
        [
            ("x1", "x2"),
            ("x3", "x4", "x5", "x6"),
            ("x7", "x8", "x9"),
            ("x1", "x3"),
            ("x2", "x4"),
            ("x5", "x7"),
            ("x6", "x8"),
        ]
    )


def five_vertex_mixed_mfmc():
    """Non-uniform clutter on five vertices: edges {1,5},{2,4},{3,4,5},{1,2,3}."""
    return Clutter.from_edges(
        [
            ("x1", "x5"),
            ("x2", "x4"),
            ("x3", "x4", "x5"),
            ("x1", "x2", "x3"),
        ]
    )


def eight_vertex_uniform_nonrounding():
    """4-uniform clutter on eight vertices whose lifted columns form a Hilbert basis."""
    return Clutter.from_edges(
        [
            ("x3", "x4", "x6", "x8"),
            ("x2", "x5", "x6", "x7"),
            ("x1", "x4", "x5", "x8"),
            ("x1", "x2", "x3", "x8"),
        ]
    )


def seven_vertex_transposed_rows():
    """10-vertex, 10-edge, 7-uniform clutter: edges are the rows below."""
    rows = [
        (0, 0, 1, 1, 0, 1, 1, 1, 1, 1),
        (0, 0, 1, 0, 1, 1, 1, 1, 1, 1),
        (0, 1, 1, 0, 0, 1, 1, 1, 1, 1),
        (1, 1, 0, 0, 0, 1, 1, 1, 1, 1),
        (0, 1, 1, 0, 1, 0, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 0, 0, 1, 1, 0),
        (1, 1, 1, 1, 1, 0, 0, 1, 0, 1),
        (1, 1, 1, 1, 1, 0, 1, 1, 0, 0),
        (1, 1, 1, 1, 1, 1, 1, 0, 0, 0),
        (1, 1, 1, 1, 0, 0, 1, 1, 0, 1),
    ]
    edges = [
        tuple(f"x{j + 1}" for j, bit in enumerate(row) if bit) for row in rows
    ]
    return Clutter.from_edges(edges, vertices=[f"x{i + 1}" for i in range(10)])


def balanced_10x13_matrix():
    return IntMatrix.from_rows(
        [
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1],
            [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
        ]
    )


def poset_ideal_one():
    """First comparability-clique ideal: five 3-element edges on six vertices."""
    return Clutter.from_edges(
        [
            ("x1", "x2", "x3"),
            ("x2", "x3", "x5"),
            ("x2", "x5", "x6"),
            ("x4", "x5", "x6"),
            ("x3", "x4", "x5"),
        ]
    )


def poset_ideal_two():
    """Second comparability-clique ideal: six 3-element edges on seven vertices."""
    return Clutter.from_edges(
        [
            ("x1", "x2", "x3"),
            ("x1", "x3", "x4"),
            ("x3", "x4", "x5"),
            ("x3", "x5", "x7"),
            ("x4", "x5", "x6"),
            ("x5", "x6", "x7"),
        ]
    )


@pytest.fixture
def k2():
    return clutter_k2()


@pytest.fixture
def c3():
    return clutter_triangle()


@pytest.fixture
def c5():
    return cycle_graph(5)

import itertools
from fractions import Fraction

import pytest

from clutter_algebra.canonical import (
    a_invariant_S,
    canonical_module_gens,
    canonical_module_general,
    complete_intersection_bipartite,
    is_gorenstein_S,
    maximal_vertices,
    perfect_graph_canonical,
)
from clutter_algebra.clutters import Clutter
from clutter_algebra.graphs import clique_clutter
from clutter_algebra.intmatrix import IntMatrix

from conftest import clutter_k2, clutter_triangle, cycle_graph, path_graph

F = Fraction


def tree_graph():
    return Clutter.from_edges([("x1", "x2"), ("x1", "x3"), ("x1", "x4")])


def complete_bipartite(a, b):
    return Clutter.from_edges(
        [(f"x{i + 1}", f"x{a + j + 1}") for i in range(a) for j in range(b)]
    )


class TestMaximalVertices:
    def test_k2(self, k2):
        data = maximal_vertices(k2.incidence_matrix())
        assert [d.ell for d in data] == [(F(0), F(1)), (F(1), F(0))]
        assert [d.d for d in data] == [1, 1]

    def test_path3(self):
        data = maximal_vertices(path_graph(3).incidence_matrix())
        assert [d.ell for d in data] == [(F(0), F(1), F(0)), (F(1), F(0), F(1))]
        assert [d.norm for d in data] == [1, 2]

    def test_triangle_includes_half_vector(self, c3):
        data = maximal_vertices(c3.incidence_matrix())
        halves = [d for d in data if d.ell == (F(1, 2), F(1, 2), F(1, 2))]
        assert len(halves) == 1
        assert halves[0].d == 2
        assert halves[0].lifted_normal() == (-1, -1, -1, 2)


class TestAInvariant:
    def test_k2(self, k2):
        assert a_invariant_S(k2.incidence_matrix()) == -2

    def test_path3(self):
        assert a_invariant_S(path_graph(3).incidence_matrix()) == -3

    def test_complete_graph_clique_system(self):
        # cliques of a complete graph: singleton maximal independent sets
        for n in (3, 4):
            g = Clutter.from_edges(
                [(f"x{i + 1}", f"x{j + 1}")
                 for i, j in itertools.combinations(range(n), 2)]
            )
            cl = clique_clutter(g)
            assert a_invariant_S(cl.incidence_matrix()) == -2

    def test_precondition_enforced(self):
        # two disjoint triangles: the antiblocking system lacks the rounding
        # property (one odd cycle per component, no connecting edge)
        from conftest import two_disjoint_triangles

        with pytest.raises(ValueError, match="rounding"):
            a_invariant_S(two_disjoint_triangles().incidence_matrix())


class TestCanonicalModule:
    def test_k2_single_generator(self, k2):
        module = canonical_module_gens(k2.incidence_matrix())
        assert module.generators == (((1, 1), 2),)
        assert module.monomial_strings() == ["x1*x2 * t^2"]
        assert module.a_invariant == -2

    def test_path3_not_principal(self):
        module = canonical_module_gens(path_graph(3).incidence_matrix())
        assert len(module.generators) >= 2
        assert module.a_invariant == -3

    def test_single_column(self):
        module = canonical_module_gens(IntMatrix.from_rows([[1]]))
        assert module.generators == (((1,), 2),)

    def test_generators_satisfy_system(self, k2):
        module = canonical_module_gens(k2.incidence_matrix())
        for a, b in module.generators:
            point = a + (b,)
            for col in module.halfspace_system:
                assert sum(c * x for c, x in zip(col, point)) >= (
                    1 if col[-1] != 0 or sum(col) == 1 else 0
                )


class TestGorenstein:
    def test_k2_true(self, k2):
        verdict = is_gorenstein_S(k2.incidence_matrix())
        assert verdict
        assert "integral" in verdict.rationale

    def test_path3_false(self):
        assert not is_gorenstein_S(path_graph(3).incidence_matrix())

    def test_bipartite_matches_unmixedness(self):
        from clutter_algebra.graphs import unmixed

        for g in [cycle_graph(4), path_graph(3), path_graph(4),
                  complete_bipartite(2, 2), complete_bipartite(2, 3), tree_graph()]:
            assert bool(is_gorenstein_S(g.incidence_matrix())) == bool(unmixed(g))


class TestCanonicalGeneral:
    def test_unit_quadrant(self):
        gens, a_inv = canonical_module_general(
            [(1, 0), (0, 1)], (1, 1)
        )
        assert a_inv == -2
        assert gens == [((1, 1), 2)]

    def test_square_edge_subring(self):
        edges = [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)]
        gens, a_inv = canonical_module_general(edges, (F(1, 2),) * 4)
        assert a_inv == -2

    def test_unimodular_simplicial(self):
        gens, a_inv = canonical_module_general(
            [(1, 0, 0), (0, 1, 0), (0, 0, 1)], (1, 1, 1)
        )
        assert a_inv == -3
        assert gens == [((1, 1, 1), 3)]

    def test_non_normal_rejected(self):
        with pytest.raises(ValueError, match="normal"):
            canonical_module_general([(2, 0), (0, 1), (1, 1)][0:2], (F(1, 2), 1))


class TestPerfectGraphCanonical:
    def test_complete_graph(self):
        g = Clutter.from_edges([("x1", "x2"), ("x1", "x3"), ("x2", "x3")])
        module = perfect_graph_canonical(g)
        assert module.a_invariant == -2

    def test_square(self):
        module = perfect_graph_canonical(cycle_graph(4))
        assert module.a_invariant == -3

    def test_path3_matches_downset_form(self):
        module = perfect_graph_canonical(path_graph(3))
        assert module.a_invariant == -3
        assert module.a_invariant == a_invariant_S(
            clique_clutter(path_graph(3)).incidence_matrix()
        )

    def test_non_perfect_rejected(self, c5):
        with pytest.raises(ValueError):
            perfect_graph_canonical(c5)


class TestCompleteIntersection:
    def test_tree(self):
        assert complete_intersection_bipartite(tree_graph())

    def test_square(self):
        assert complete_intersection_bipartite(cycle_graph(4))

    def test_k33(self):
        verdict = complete_intersection_bipartite(complete_bipartite(3, 3))
        assert not verdict
        assert verdict.certificate.data == {
            "primitive_cycles": 9,
            "cyclomatic": 4,
        }

    def test_triangle_not_bipartite(self, c3):
        verdict = complete_intersection_bipartite(c3)
        assert not verdict
        assert verdict.certificate.kind == "odd-cycle"

import itertools

import pytest

from clutter_algebra.clutters import Clutter, alpha0, minimal_vertex_covers
from clutter_algebra.graphs import (
    Poset,
    admissible_poset,
    clique_clutter,
    comparability_graph,
    complement_graph,
    complete_admissible_clutter,
    cone_over,
    dilworth,
    edge_cone_h_rep,
    irreducible_induced_subgraphs_direct,
    is_bipartite,
    is_irreducible_graph,
    is_perfect,
    maximal_cliques,
    mirsky,
    odd_cycle_pair_criterion,
    one_in_edge_cone,
    primitive_cycle_count,
    triangle_free_dual_check,
    unmixed,
)

from conftest import (
    clutter_k2,
    clutter_triangle,
    cycle_graph,
    path_graph,
    two_disjoint_triangles,
)


def complete_graph(n):
    return Clutter.from_edges(
        [(f"x{i + 1}", f"x{j + 1}") for i, j in itertools.combinations(range(n), 2)]
    )


def complete_bipartite(a, b):
    return Clutter.from_edges(
        [(f"x{i + 1}", f"x{a + j + 1}") for i in range(a) for j in range(b)]
    )


class TestBipartite:
    def test_path(self):
        assert is_bipartite(path_graph(3))

    def test_triangle(self, c3):
        verdict = is_bipartite(c3)
        assert not verdict
        assert len(verdict.certificate.data["cycle"]) == 3

    def test_five_cycle(self, c5):
        verdict = is_bipartite(c5)
        assert not verdict
        assert len(verdict.certificate.data["cycle"]) % 2 == 1


class TestOddCyclePairs:
    def test_five_cycle_vacuous(self, c5):
        assert odd_cycle_pair_criterion(c5)

    def test_two_disjoint_triangles(self):
        verdict = odd_cycle_pair_criterion(two_disjoint_triangles())
        assert not verdict

    def test_joined_triangles(self):
        # Same two triangles plus a bridge: the pair spans a connected subgraph.
        g = Clutter.from_edges(
            [
                ("x1", "x2"), ("x2", "x3"), ("x1", "x3"),
                ("x4", "x5"), ("x5", "x6"), ("x4", "x6"),
                ("x3", "x4"),
            ]
        )
        assert odd_cycle_pair_criterion(g)

    def test_two_disjoint_five_cycles(self):
        g = Clutter.from_edges(
            [(f"x{i + 1}", f"x{(i + 1) % 5 + 1}") for i in range(5)]
            + [(f"x{i + 6}", f"x{(i + 1) % 5 + 6}") for i in range(5)]
        )
        assert not odd_cycle_pair_criterion(g)


class TestCliques:
    def test_triangle(self, c3):
        assert maximal_cliques(c3) == [(0, 1, 2)]

    def test_five_cycle_cliques_are_edges(self, c5):
        cliques = maximal_cliques(c5)
        assert sorted(tuple(sorted(e)) for e in c5.edges) == cliques

    def test_chain_comparability(self):
        p = Poset.from_cover_names(["a", "b", "c"], [("a", "b"), ("b", "c")])
        g = comparability_graph(p)
        assert maximal_cliques(g) == [(0, 1, 2)]

    def test_clique_clutter_duplication_compatibility(self):
        # duplicating a vertex commutes with taking maximal cliques
        from clutter_algebra.clutters import parallelization

        for g in [clutter_triangle(), cycle_graph(4), path_graph(4)]:
            w = (2,) + (1,) * (g.n - 1)
            left = clique_clutter(parallelization(g, w))
            dup = parallelization(g, w)
            right = clique_clutter(dup)
            assert set(left.edges) == set(right.edges)

    def test_clique_clutter_of_triangle_duplicated_explicitly(self, c3):
        from clutter_algebra.clutters import parallelization

        doubled = parallelization(c3, (2, 1, 1))
        cl = clique_clutter(doubled)
        # x1 and x1^2 are twins, not adjacent: cliques are the two triangles
        assert {tuple(e) for e in cl.edge_names()} == {
            ("x1", "x2", "x3"),
            ("x1^2", "x2", "x3"),
        }

    def test_deletion_incompatibility_documented(self, c3):
        # deleting a triangle vertex from cl(C3) kills the only edge, while the
        # clique clutter of the deleted graph keeps one edge
        from clutter_algebra.clutters import InvalidMinor, minor

        cl = clique_clutter(c3)
        with pytest.raises(InvalidMinor):
            minor(cl, delete=("x1",))
        from clutter_algebra.graphs import as_graph

        deleted = minor(c3, delete=("x1",))
        assert clique_clutter(deleted).q == 1


class TestPerfection:
    def test_five_cycle_not_perfect(self, c5):
        verdict = is_perfect(c5)
        assert not verdict
        assert verdict.certificate.kind == "odd-hole"

    def test_bipartite_graphs_perfect(self):
        for g in [path_graph(4), complete_bipartite(2, 3), cycle_graph(6)]:
            assert is_perfect(g)

    def test_comparability_graphs_perfect(self):
        p = Poset.from_cover_names(
            ["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
        )
        assert is_perfect(comparability_graph(p))

    def test_seven_cycle_complement_not_perfect(self):
        g = complement_graph(cycle_graph(7))
        verdict = is_perfect(g)
        assert not verdict
        assert verdict.certificate.kind == "odd-antihole"


class TestPosets:
    def test_divisibility_poset_comparability(self):
        # divisors of 6 ordered by divisibility: covers 1<2, 1<3, 2<6, 3<6
        p = Poset.from_cover_names(
            ["d1", "d2", "d3", "d6"],
            [("d1", "d2"), ("d1", "d3"), ("d2", "d6"), ("d3", "d6")],
        )
        g = comparability_graph(p)
        assert g.q == 5  # all pairs except {2,3}

    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            Poset.from_cover_names(["a", "b"], [("a", "b"), ("b", "a")])

    def test_dilworth_chain(self):
        p = Poset.from_cover_names(["a", "b", "c"], [("a", "b"), ("b", "c")])
        antichain, chains = dilworth(p)
        assert len(antichain) == 1
        assert len(chains) == 1
        assert set(chains[0]) == {"a", "b", "c"}

    def test_dilworth_antichain(self):
        p = Poset.from_cover_names(["a", "b", "c"], [])
        antichain, chains = dilworth(p)
        assert len(antichain) == 3
        assert len(chains) == 3

    def test_dilworth_divisibility(self):
        p = Poset.from_cover_names(
            ["d1", "d2", "d3", "d6"],
            [("d1", "d2"), ("d1", "d3"), ("d2", "d6"), ("d3", "d6")],
        )
        antichain, chains = dilworth(p)
        assert set(antichain) == {"d2", "d3"}
        assert len(chains) == 2

    def test_mirsky_chain(self):
        p = Poset.from_cover_names(["a", "b", "c"], [("a", "b"), ("b", "c")])
        chain, antichains = mirsky(p)
        assert len(chain) == 3
        assert len(antichains) == 3

    def test_mirsky_divisibility(self):
        p = Poset.from_cover_names(
            ["d1", "d2", "d3", "d6"],
            [("d1", "d2"), ("d1", "d3"), ("d2", "d6"), ("d3", "d6")],
        )
        chain, antichains = mirsky(p)
        assert len(chain) == 3
        assert len(antichains) == 3
        for layer in antichains:
            rel = p.less_than()
            idx = {e: i for i, e in enumerate(p.elements)}
            for a, b in itertools.combinations(layer, 2):
                assert (idx[a], idx[b]) not in rel and (idx[b], idx[a]) not in rel


class TestAdmissible:
    def test_two_by_two(self):
        c = complete_admissible_clutter(2, 2)
        assert c.n == 4
        assert c.q == 3

    def test_two_by_three(self):
        assert complete_admissible_clutter(2, 3).q == 6

    def test_counts_match_binomial(self):
        from math import comb

        for d, g in [(2, 2), (2, 3), (3, 2), (3, 3)]:
            assert complete_admissible_clutter(d, g).q == comb(g + d - 1, d)

    def test_is_clique_clutter_of_poset(self):
        for d, g in [(2, 2), (2, 3), (3, 2)]:
            c = complete_admissible_clutter(d, g)
            p = admissible_poset(d, g)
            cl = clique_clutter(comparability_graph(p))
            assert set(map(frozenset, cl.edge_names())) == set(
                map(frozenset, c.edge_names())
            )

    def test_bounds(self):
        with pytest.raises(ValueError):
            complete_admissible_clutter(1, 2)


class TestIrreducible:
    def test_odd_cycles_irreducible(self):
        for n in (3, 5, 7):
            assert is_irreducible_graph(cycle_graph(n))

    def test_complete_graphs_irreducible(self):
        for n in (2, 3, 4, 5):
            assert is_irreducible_graph(complete_graph(n))

    def test_path4_reducible(self):
        verdict = is_irreducible_graph(path_graph(4))
        assert not verdict
        side = set(verdict.certificate.data["side1"]) | set(
            verdict.certificate.data["side2"]
        )
        assert side == {"x1", "x2", "x3", "x4"}

    def test_complement_of_odd_cycle_irreducible(self):
        assert is_irreducible_graph(complement_graph(cycle_graph(7)))

    def test_five_cycle_subgraph_inventory(self, c5):
        subs = irreducible_induced_subgraphs_direct(c5)
        singletons = [s for s in subs if len(s[0]) == 1]
        edges = [s for s in subs if len(s[0]) == 2]
        full = [s for s in subs if len(s[0]) == 5]
        assert len(singletons) == 5 and all(b == 0 for _, b in singletons)
        assert len(edges) == 5 and all(b == 1 for _, b in edges)
        assert full == [(("x1", "x2", "x3", "x4", "x5"), 3)]
        assert len(subs) == 11

    def test_k2_inventory(self, k2):
        subs = irreducible_induced_subgraphs_direct(k2)
        assert subs == [(("x1",), 0), (("x2",), 0), (("x1", "x2"), 1)]


class TestEdgeCone:
    def test_k2_ray(self, k2):
        rows = edge_cone_h_rep(k2)
        assert (1, -1) in [tuple(r) for r in rows] or (-1, 1) in [tuple(r) for r in rows]
        assert one_in_edge_cone(k2)

    def test_triangle(self, c3):
        rows = edge_cone_h_rep(c3)
        # singleton independent sets give degree-minus-vertex rows
        assert (1, 1, -1) in {tuple(r) for r in rows}

    def test_marriage_condition(self):
        assert one_in_edge_cone(cycle_graph(4))
        assert one_in_edge_cone(complete_bipartite(2, 2))
        assert not one_in_edge_cone(complete_bipartite(1, 2))
        assert not one_in_edge_cone(path_graph(3))

    def test_matches_direct_matching_search(self):
        from clutter_algebra.clutters import perfect_matching

        for g in [cycle_graph(4), cycle_graph(6), path_graph(4), path_graph(3),
                  complete_bipartite(2, 3), complete_bipartite(3, 3)]:
            if not is_bipartite(g):
                continue
            from clutter_algebra.graphs import is_connected

            if not is_connected(g):
                continue
            assert one_in_edge_cone(g) == (perfect_matching(g) is not None)


class TestConeOver:
    def test_cone_over_c5_is_wheel(self, c5):
        w = cone_over(c5)
        assert w.n == 6
        assert w.q == 10
        assert "x6" in w.vertices

    def test_cone_over_complete(self):
        assert cone_over(complete_graph(3)).q == 6  # K4

    def test_cone_over_irreducible_is_irreducible(self, c5):
        assert is_irreducible_graph(cone_over(c5))


class TestUnmixedAndCycles:
    def test_k2_unmixed(self, k2):
        assert unmixed(k2)

    def test_path3_mixed(self):
        verdict = unmixed(path_graph(3))
        assert not verdict
        assert verdict.certificate.data["sizes"] == [1, 2]

    def test_primitive_cycles_c4(self):
        g = cycle_graph(4)
        assert primitive_cycle_count(g) == 1 == g.q - g.n + 1

    def test_primitive_cycles_k33(self):
        g = complete_bipartite(3, 3)
        assert primitive_cycle_count(g) == 9
        assert g.q - g.n + 1 == 4

    def test_dual_check_c4(self):
        assert triangle_free_dual_check(cycle_graph(4))

    def test_dual_check_k3(self, c3):
        assert not triangle_free_dual_check(c3)

"""Symbolic Rees algebra machinery: Simis cones, irreducible vertex covers on
both sides of the blocker duality, facet-derived covers, and cone lifting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .certificates import Certificate, CrossCheckError, Verdict
from .clutters import Clutter, format_monomial, minimal_vertex_covers
from .graphs import adjacency, as_graph, bipartition, cone_over, is_perfect
from .hilbert import hilbert_basis
from .polyhedra import ConeRep, cone_from_generators, cone_from_inequalities
from .intmatrix import primitive


@dataclass(frozen=True)
class MonomialGen:
    """Element x^a t^b of a blowup algebra."""

    a: tuple[int, ...]
    b: int

    def __post_init__(self):
        if all(x == 0 for x in self.a) and self.b == 0:
            raise ValueError("trivial generator")

    def format(self, variables) -> str:
        return format_monomial(variables, self.a, self.b)


@dataclass(frozen=True)
class CoverDecomposition:
    parts: tuple[tuple[tuple[int, ...], int], ...]

    def check(self, target_a, target_b) -> bool:
        total = [0] * len(target_a)
        deg = 0
        for vec, d in self.parts:
            deg += d
            for i, x in enumerate(vec):
                total[i] += x
        return tuple(total) == tuple(target_a) and deg == target_b


def simis_cone(c: Clutter) -> ConeRep:
    """Halfspace cone cut out by the coordinate halfspaces and one inequality
    <cover, a> >= b per minimal vertex cover."""
    n = c.n
    normals = [
        tuple(1 if i == k else 0 for i in range(n + 1)) for k in range(n + 1)
    ]
    for u in minimal_vertex_covers(c).vectors:
        normals.append(tuple(u) + (-1,))
    return cone_from_inequalities(normals, n + 1)


def simis_defining_halfspaces(c: Clutter):
    n = c.n
    rows = [tuple(1 if i == k else 0 for i in range(n + 1)) for k in range(n + 1)]
    rows += [tuple(u) + (-1,) for u in minimal_vertex_covers(c).vectors]
    return rows


def cover_cone(c: Clutter) -> ConeRep:
    """{(a, b) : a >= 0, <edge, a> >= b for every edge, b >= 0}; its lattice
    semigroup is generated by the irreducible covers."""
    n = c.n
    normals = [
        tuple(1 if i == k else 0 for i in range(n + 1)) for k in range(n + 1)
    ]
    for col in c.incidence_columns():
        normals.append(tuple(col) + (-1,))
    return cone_from_inequalities(normals, n + 1)


def symbolic_rees_generators(c: Clutter, cap: int = 10) -> list[MonomialGen]:
    """Minimal generating set of the symbolic blowup algebra: the minimal
    Hilbert basis of the Simis cone, as monomials."""
    if c.n > cap:
        raise ValueError(f"instance too large ({c.n} > cap {cap})")
    basis = hilbert_basis(simis_cone(c))
    out = [MonomialGen(h[:-1], h[-1]) for h in basis.elements]
    return sorted(out, key=lambda m: (m.b, m.a))


def cover_algebra_generators(c: Clutter, cap: int = 10) -> list[MonomialGen]:
    """Minimal generators of the cover algebra (the symbolic algebra of the
    blocker): the Hilbert basis of the cover cone."""
    if c.n > cap:
        raise ValueError(f"instance too large ({c.n} > cap {cap})")
    basis = hilbert_basis(cover_cone(c))
    out = [MonomialGen(h[:-1], h[-1]) for h in basis.elements]
    out.sort(key=lambda m: (m.b, m.a))
    if c.is_graph():
        for m in out:
            assert m.b <= 2 and all(x <= 2 for x in m.a), (
                "graph covers must have degree and entries at most two"
            )
    return out


def cover_degree(c: Clutter, a) -> int:
    """Largest b for which a is a b-cover (may be 0)."""
    return min(sum(x * y for x, y in zip(col, a)) for col in c.incidence_columns())


def is_cover(c: Clutter, a, b: int) -> bool:
    return all(x >= 0 for x in a) and cover_degree(c, a) >= b


def is_irreducible_cover(c: Clutter, a, b: int):
    """Exhaustive split search: reducible when a = c' + d' with the cover
    degrees summing to b and neither part trivial."""
    a = tuple(int(x) for x in a)
    if not is_cover(c, a, b):
        raise ValueError("not a cover of the stated degree")
    if all(x == 0 for x in a):
        raise ValueError("zero vector")
    ranges = [range(x + 1) for x in a]
    for part in itertools.product(*ranges):
        if all(x == 0 for x in part) or part == a:
            continue
        rest = tuple(x - y for x, y in zip(a, part))
        deg_part = cover_degree(c, part)
        deg_rest = cover_degree(c, rest)
        if deg_part + deg_rest >= b:
            i = min(deg_part, b)
            decomposition = CoverDecomposition(
                ((part, i), (rest, b - i))
            )
            assert decomposition.check(a, b)
            return Verdict(
                False,
                Certificate(
                    "cover-decomposition",
                    {"parts": [[list(v), d] for v, d in decomposition.parts]},
                ),
            ), decomposition
    return Verdict(True), None


def graph_irreducible_covers(g: Clutter, cross_check: bool = True) -> list[MonomialGen]:
    """Structural enumeration of the irreducible covers of a graph.

    Unit vectors in degree zero and minimal vertex covers in degree one; for a
    non-bipartite graph also the all-ones vector in degree two, plus the
    0/2/1 patterns over (independent set, its neighborhood, the rest) whose
    leftover induced subgraph is non-bipartite without isolated vertices.
    The cone route is the oracle: the two lists are asserted equal.
    """
    as_graph(g)
    n = g.n
    out = [MonomialGen(tuple(1 if i == k else 0 for i in range(n)), 0)
           for k in range(n)]
    for u in minimal_vertex_covers(g).vectors:
        out.append(MonomialGen(tuple(u), 1))
    if bipartition(g) is None:
        out.append(MonomialGen((1,) * n, 2))
        adj = adjacency(g)
        for mask in range(1, 1 << n):
            members = {i for i in range(n) if (mask >> i) & 1}
            if any(adj[a] & members for a in members):
                continue
            nbhd = set().union(*(adj[i] for i in members))
            rest = set(range(n)) - members - nbhd
            if not rest:
                continue
            # the neighborhood must not already cover the graph
            if all(e & nbhd for e in g.edges):
                continue
            leftover = [e for e in g.edges if e <= rest]
            touched = set().union(*leftover) if leftover else set()
            if touched != rest:
                continue  # isolated vertices in the leftover subgraph
            if _edges_bipartite(leftover, rest):
                continue
            vec = tuple(
                0 if i in members else 2 if i in nbhd else 1 for i in range(n)
            )
            out.append(MonomialGen(vec, 2))
    out = sorted(set(out), key=lambda m: (m.b, m.a))
    if cross_check:
        cone_route = cover_algebra_generators(g)
        if out != cone_route:
            raise CrossCheckError(
                "structural cover enumeration disagrees with the Hilbert basis"
            )
    return out


def _edges_bipartite(edges, support) -> bool:
    color = {}
    adj = {v: set() for v in support}
    for e in edges:
        a, b = sorted(e)
        adj[a].add(b)
        adj[b].add(a)
    for root in sorted(support):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def rees_cone_facet_covers(c: Clutter) -> list[MonomialGen]:
    """Covers read off the non-coordinate facets of the Rees cone of the edge
    ideal: a facet normal (a, -d) with d >= 1 yields x^a t^d. Always a subset
    of the cover algebra generators, possibly proper."""
    n = c.n
    gens = [
        tuple(1 if i == k else 0 for i in range(n + 1)) for k in range(n)
    ]
    gens += [tuple(col) + (1,) for col in c.incidence_columns()]
    rep = cone_from_generators(gens, n + 1)
    out = []
    for f in rep.facet_normals:
        d = -f[-1]
        if d >= 1:
            out.append(MonomialGen(tuple(f[:-1]), d))
    return sorted(out, key=lambda m: (m.b, m.a))


def cone_generator_lift(g: Clutter, facet) -> MonomialGen:
    """Lift a cover-side Rees-cone facet (a, -b) with strictly positive cover
    part to a generator of the symbolic algebra of the cone graph: the apex
    exponent is sum(a) - b and the new degree is sum(a)."""
    facet = tuple(int(x) for x in facet)
    a, minus_b = facet[:-1], facet[-1]
    b = -minus_b
    if b < 1:
        raise ValueError("facet must have positive cover degree")
    if any(x < 1 for x in a):
        raise ValueError("hypothesis requires every entry of the cover part >= 1")
    rep = rees_cone_of_cover_ideal(g)
    if facet not in rep.facet_normals:
        raise ValueError("not a facet of the cover-side Rees cone")
    total = sum(a)
    return MonomialGen(a + (total - b,), total)


def rees_cone_of_cover_ideal(c: Clutter) -> ConeRep:
    n = c.n
    gens = [tuple(1 if i == k else 0 for i in range(n + 1)) for k in range(n)]
    gens += [tuple(u) + (1,) for u in minimal_vertex_covers(c).vectors]
    return cone_from_generators(gens, n + 1)


def iterated_cone_cover(n: int, g: int, r: int) -> MonomialGen:
    """Degree formula for r-fold cones over an n-vertex graph whose all-ones
    vector is an irreducible g-cover: entries 1 on the base, n - g on the new
    apexes, degree n + (r-1)(n-g)."""
    if r < 1:
        raise ValueError("at least one cone required")
    vec = (1,) * n + (n - g,) * r
    return MonomialGen(vec, n + (r - 1) * (n - g))


def clique_generators_check(g: Clutter, cap: int = 10) -> Verdict:
    """Whether the symbolic generators are exactly the clique monomials
    (square-free supports inducing complete subgraphs, degree = size - 1);
    agreement is asserted against perfection."""
    as_graph(g)
    if g.n > cap:
        raise ValueError(f"instance too large ({g.n} > cap {cap})")
    adj = adjacency(g)
    cliques = []
    for mask in range(1, 1 << g.n):
        members = [i for i in range(g.n) if (mask >> i) & 1]
        if all(
            j in adj[i] for i, j in itertools.combinations(members, 2)
        ):
            vec = tuple(1 if i in members else 0 for i in range(g.n))
            cliques.append(MonomialGen(vec, len(members) - 1))
    clique_set = sorted(set(cliques), key=lambda m: (m.b, m.a))
    symbolic = symbolic_rees_generators(g, cap=cap)
    equal = symbolic == clique_set
    perfect = bool(is_perfect(g))
    if equal != perfect:
        raise CrossCheckError(
            "clique-generator equality must coincide with perfection"
        )
    if equal:
        return Verdict(True, rationale="symbolic generators are the clique monomials")
    extra = [m for m in symbolic if m not in clique_set]
    return Verdict(
        False,
        Certificate(
            "non-clique-generator",
            {"monomials": [m.format(g.vertices) for m in extra]},
        ),
    )

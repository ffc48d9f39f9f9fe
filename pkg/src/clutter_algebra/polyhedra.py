"""Exact rational polyhedra and cones: double description, integrality, triangulations.

Everything runs on integers (halfspace normals, rays) and ``Fraction`` vertices.
The double-description routine is the single conversion engine; both directions
of duality go through it.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .certificates import Certificate, Verdict
from .intmatrix import IntMatrix, invariant_factors, matrix_rank, primitive, snf

_CELL_CAP_ENV = "CLUTTER_ALGEBRA_MAX_CELLS"


class CapExceeded(RuntimeError):
    """An intermediate polyhedral object outgrew the configured cap."""


def _cell_cap() -> int:
    return int(os.environ.get(_CELL_CAP_ENV, "2000000"))


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _scale_to_int(vec) -> tuple[int, ...]:
    """Clear denominators of a rational vector and reduce to a primitive one."""
    denoms = [Fraction(x).denominator for x in vec]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(x) * lcm) for x in vec]
    return primitive(ints, preserve_sign=True)


def _combine(pos_val: int, pos_vec, neg_abs: int, neg_vec) -> tuple[int, ...]:
    # pos_val > 0, neg_abs = -<a, neg_vec> > 0; the combination is tight on a.
    w = tuple(neg_abs * p + pos_val * n for p, n in zip(pos_vec, neg_vec))
    return primitive(w, preserve_sign=True)


def dd_cone(constraints, dim: int, greedy_order: bool = True,
            max_rays: int | None = None):
    """Extreme rays and lineality of {x : <a, x> >= 0 for every a}.

    Incremental double description with bitmask zero-sets and the standard
    combinatorial adjacency test. ``greedy_order`` inserts, at every step, the
    constraint that cuts the fewest current rays, which keeps intermediate ray
    counts small on covering polyhedra. ``max_rays`` aborts oversized runs
    with CapExceeded so callers can switch strategy.
    """
    constraints = [tuple(int(x) for x in c) for c in constraints]
    lineality = [tuple(IntMatrix.identity(dim).entries[i]) for i in range(dim)]
    rays: list[tuple[int, ...]] = []
    zerosets: list[int] = []
    processed: list[tuple[int, ...]] = []
    pending = [c for c in constraints if any(x != 0 for x in c)]
    cap = _cell_cap() if max_rays is None else max_rays

    while pending:
        if greedy_order and rays:
            def cut_count(c):
                return sum(1 for r in rays if _dot(c, r) < 0)
            pending.sort(key=lambda c: (cut_count(c), c))
        a = pending.pop(0)
        k = len(processed)

        lin_vals = [_dot(a, l) for l in lineality]
        if any(v != 0 for v in lin_vals):
            j0 = next(j for j, v in enumerate(lin_vals) if v != 0)
            l0, v0 = lineality[j0], lin_vals[j0]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            new_lin = []
            for j, l in enumerate(lineality):
                if j == j0:
                    continue
                v = lin_vals[j]
                new_lin.append(primitive(
                    tuple(v0 * x - v * y for x, y in zip(l, l0)), preserve_sign=True))
            new_rays = []
            for r in rays:
                v = _dot(a, r)
                new_rays.append(primitive(
                    tuple(v0 * x - v * y for x, y in zip(r, l0)), preserve_sign=True))
            # The freed lineality direction survives as a ray tight on all
            # earlier constraints (they vanish on the old lineality space).
            new_rays.append(l0)
            lineality = new_lin
            rays = []
            zerosets = []
            seen = set()
            for r in new_rays:
                if r in seen:
                    continue
                seen.add(r)
                rays.append(r)
                zerosets.append(_zeroset(processed, r))
        else:
            vals = [_dot(a, r) for r in rays]
            if any(v < 0 for v in vals):
                keep_r, keep_z = [], []
                pos, neg = [], []
                for i, (r, z, v) in enumerate(zip(rays, zerosets, vals)):
                    if v > 0:
                        pos.append((i, r, z, v))
                        keep_r.append(r)
                        keep_z.append(z)
                    elif v == 0:
                        keep_r.append(r)
                        keep_z.append(z)
                    else:
                        neg.append((i, r, z, v))
                kept = set(keep_r)
                for (ip, rp, zp, vp), (inn, rn, zn, vn) in itertools.product(pos, neg):
                    common = zp & zn
                    adjacent = True
                    for i3, z3 in enumerate(zerosets):
                        if i3 == ip or i3 == inn:
                            continue
                        if z3 & common == common:
                            adjacent = False
                            break
                    if adjacent:
                        w = _combine(vp, rp, -vn, rn)
                        if w not in kept:
                            kept.add(w)
                            keep_r.append(w)
                            keep_z.append(_zeroset(processed, w))
                rays, zerosets = keep_r, keep_z
                if len(rays) > cap:
                    raise CapExceeded(
                        f"double description exceeded {cap} rays; raise {_CELL_CAP_ENV}")
        processed.append(a)
        bit = 1 << (len(processed) - 1)
        zerosets = [
            z | bit if _dot(a, r) == 0 else z for r, z in zip(rays, zerosets)
        ]

    order = sorted(range(len(rays)), key=lambda i: rays[i])
    return [list(l) for l in sorted(lineality)], [tuple(rays[i]) for i in order]


def _zeroset(processed, r) -> int:
    z = 0
    for i, c in enumerate(processed):
        if _dot(c, r) == 0:
            z |= 1 << i
    return z


@dataclass(frozen=True)
class ConeRep:
    """A rational cone carried in both generator and irreducible halfspace form."""

    dim: int
    generators: tuple[tuple[int, ...], ...]
    facet_normals: tuple[tuple[int, ...], ...]
    equations: tuple[tuple[int, ...], ...] = ()
    lineality: tuple[tuple[int, ...], ...] = ()

    @property
    def rank(self) -> int:
        return self.dim - len(self.equations)

    def is_pointed(self) -> bool:
        return not self.lineality

    def contains(self, x) -> bool:
        return all(_dot(f, x) >= 0 for f in self.facet_normals) and all(
            _dot(e, x) == 0 for e in self.equations
        )

    def contains_strictly(self, x) -> bool:
        """Relative interior membership: strict on facets, tight on equations."""
        return all(_dot(f, x) > 0 for f in self.facet_normals) and all(
            _dot(e, x) == 0 for e in self.equations
        )


def _kernel_basis(rows, dim: int) -> list[tuple[int, ...]]:
    if not rows:
        return [tuple(IntMatrix.identity(dim).entries[i]) for i in range(dim)]
    m = IntMatrix.from_rows(rows)
    if m.is_zero():
        return [tuple(IntMatrix.identity(dim).entries[i]) for i in range(dim)]
    res = snf(m)
    cols = res.right.columns()
    return [tuple(c) for c in cols[res.rank:]]


def cone_from_generators(generators, dim: int) -> ConeRep:
    """Irreducible halfspace representation of cone(generators)."""
    gens = []
    seen = set()
    for g in generators:
        g = primitive(g, preserve_sign=True)
        if g not in seen:
            seen.add(g)
            gens.append(g)
    if not gens:
        raise ValueError("cone needs at least one nonzero generator")
    dual_lin, dual_rays = dd_cone(gens, dim, greedy_order=False)
    equations = tuple(primitive(l, preserve_sign=True) for l in dual_lin)
    facets = tuple(dual_rays)
    lin = _kernel_basis(list(facets) + list(equations), dim)
    extreme = _extreme_among(gens, facets, equations, dim) if not lin else tuple(gens)
    return ConeRep(dim, tuple(extreme), facets, equations,
                   tuple(tuple(l) for l in lin))


def _extreme_among(gens, facets, equations, dim):
    out = []
    eqs = list(equations)
    for g in gens:
        tight = [f for f in facets if _dot(f, g) == 0]
        if matrix_rank(eqs + tight) == dim - 1:
            out.append(g)
    return tuple(sorted(out))


def cone_from_inequalities(normals, dim: int, equations=(),
                           max_rays: int | None = None) -> ConeRep:
    """Generator representation of {x : <n,x> >= 0, <e,x> = 0}."""
    cons = [tuple(int(x) for x in n) for n in normals]
    for e in equations:
        e = tuple(int(x) for x in e)
        cons.append(e)
        cons.append(tuple(-x for x in e))
    lin, rays = dd_cone(cons, dim, max_rays=max_rays)
    if rays:
        rep = cone_from_generators(
            list(rays) + [tuple(l) for l in lin] + [tuple(-x for x in l) for l in lin], dim
        )
        return rep
    # Pure linear space (or the origin).
    lin_t = tuple(primitive(l, preserve_sign=True) for l in lin) if lin else ()
    eqs = tuple(_kernel_basis([list(l) for l in lin], dim)) if lin else tuple(
        tuple(IntMatrix.identity(dim).entries[i]) for i in range(dim)
    )
    return ConeRep(dim, (), (), tuple(tuple(e) for e in eqs), lin_t)


def cone_irreducible_rep(generators) -> ConeRep:
    """Facet normals of the cone spanned by the generators, primitive and irredundant."""
    generators = [tuple(g) for g in generators]
    if not generators:
        raise ValueError("empty generator list")
    return cone_from_generators(generators, len(generators[0]))


@dataclass(frozen=True)
class Polyhedron:
    """Rational polyhedron with both halfspace and generator descriptions.

    Inequalities mean <normal, x> >= offset; equations are exact. Vertices are
    rational vectors; rays and lineality are primitive integer vectors.
    """

    dim: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]
    equations: tuple[tuple[tuple[int, ...], int], ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, x) -> bool:
        x = [Fraction(v) for v in x]
        return all(_dot(n, x) >= b for n, b in self.inequalities) and all(
            _dot(n, x) == b for n, b in self.equations
        )

    def contains_relative_interior(self, x) -> bool:
        x = [Fraction(v) for v in x]
        return all(_dot(n, x) > b for n, b in self.inequalities) and all(
            _dot(n, x) == b for n, b in self.equations
        )

    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality


def _from_homogeneous(lin, rays, dim: int) -> Polyhedron | tuple:
    """Split homogenized generators (x, t) into vertices, rays, lineality."""
    vertices = []
    prays = []
    plin = []
    for l in lin:
        assert l[dim] == 0
        plin.append(primitive(l[:dim], preserve_sign=True))
    for r in rays:
        t = r[dim]
        if t > 0:
            vertices.append(tuple(Fraction(x, t) for x in r[:dim]))
        else:
            if any(x != 0 for x in r[:dim]):
                prays.append(primitive(r[:dim], preserve_sign=True))
    return (
        tuple(sorted(set(vertices))),
        tuple(sorted(set(prays))),
        tuple(sorted(set(plin))),
    )


def polyhedron_from_inequalities(inequalities, dim: int, equations=()) -> Polyhedron:
    """Vertex/ray form of {x : <n,x> >= b}, via the homogenization cone."""
    cons = []
    for n, b in inequalities:
        cons.append(tuple(int(x) for x in n) + (-int(b),))
    for n, b in equations:
        row = tuple(int(x) for x in n) + (-int(b),)
        cons.append(row)
        cons.append(tuple(-x for x in row))
    cons.append((0,) * dim + (1,))
    lin, rays = dd_cone(cons, dim + 1)
    vertices, prays, plin = _from_homogeneous(lin, rays, dim)
    if not vertices:
        return Polyhedron(dim, tuple(), tuple(), (), (), ())
    return _with_irredundant_inequalities(dim, vertices, prays, plin)


def polyhedron_from_generators(vertices, rays=(), lineality=(), dim=None) -> Polyhedron:
    vertices = [tuple(Fraction(x) for x in v) for v in vertices]
    if dim is None:
        if not vertices:
            raise ValueError("need vertices or an explicit dimension")
        dim = len(vertices[0])
    if not vertices:
        return Polyhedron(dim, (), (), (), tuple(rays), tuple(lineality))
    return _with_irredundant_inequalities(
        dim,
        tuple(sorted(set(vertices))),
        tuple(sorted(set(primitive(r, preserve_sign=True) for r in rays))),
        tuple(sorted(set(primitive(l, preserve_sign=True) for l in lineality))),
    )


def _with_irredundant_inequalities(dim, vertices, prays, plin) -> Polyhedron:
    gens = [
        _scale_to_int(tuple(v) + (1,)) for v in vertices
    ] + [tuple(r) + (0,) for r in prays]
    for l in plin:
        gens.append(tuple(l) + (0,))
        gens.append(tuple(-x for x in l) + (0,))
    rep = cone_from_generators(gens, dim + 1)
    ineqs = []
    eqs = []
    for f in rep.facet_normals:
        n, c = f[:dim], f[dim]
        if all(x == 0 for x in n):
            continue  # trivial t >= 0 facet
        ineqs.append((tuple(n), -c))
    for e in rep.equations:
        n, c = e[:dim], e[dim]
        if all(x == 0 for x in n):
            continue
        eqs.append((tuple(n), -c))
    return Polyhedron(dim, tuple(sorted(ineqs)), tuple(sorted(eqs)),
                      vertices, prays, plin)


def dual_description(
    inequalities=None, dim=None, vertices=None, rays=(), lineality=(), equations=()
) -> Polyhedron:
    """Complete whichever representation is given; output carries both.

    Inequality input yields generators; generator input yields irredundant
    inequalities. An infeasible system is reported as an empty polyhedron.
    """
    if inequalities is not None:
        if dim is None:
            raise ValueError("dimension required with inequality input")
        return polyhedron_from_inequalities(inequalities, dim, equations)
    if vertices is None:
        raise ValueError("either inequalities or vertices must be given")
    return polyhedron_from_generators(vertices, rays, lineality, dim)


def same_point_set(p: Polyhedron, q: Polyhedron) -> bool:
    """Mutual containment of generators, the round-trip check for dual descriptions."""
    def gens_in(a: Polyhedron, b: Polyhedron) -> bool:
        for v in a.vertices:
            if not b.contains(v):
                return False
        far = []
        for r in a.rays:
            far.append(r)
        for l in a.lineality:
            far.append(l)
            far.append(tuple(-x for x in l))
        for r in far:
            # A direction belongs to the recession cone iff every inequality
            # is nonnegative on it and every equation vanishes.
            if not all(_dot(n, r) >= 0 for n, _ in b.inequalities):
                return False
            if not all(_dot(n, r) == 0 for n, _ in b.equations):
                return False
        return True

    if p.is_empty or q.is_empty:
        return p.is_empty == q.is_empty
    return gens_in(p, q) and gens_in(q, p)


def is_integral(p: Polyhedron) -> Verdict:
    """True when every vertex is integral; a fractional vertex is the witness."""
    if p.is_empty:
        return Verdict(True, rationale="empty polyhedron has no vertices")
    if p.lineality:
        return Verdict(True, rationale="no vertices: nonzero lineality")
    for v in sorted(p.vertices):
        if any(x.denominator != 1 for x in v):
            return Verdict(
                False,
                Certificate("fractional-vertex", {"vertex": [str(x) for x in v]}),
            )
    return Verdict(True)


def membership(p: Polyhedron, x, mode: str = "closure") -> bool:
    if mode == "closure":
        return p.contains(x)
    if mode == "relative-interior":
        return p.contains_relative_interior(x)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class Triangulation:
    """Simplices as index sets into a fixed configuration, plus the lifting weights."""

    simplices: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    pulled: bool = False  # true when a degenerate cell needed lexicographic pulling


def _affine_rank(points) -> int:
    if not points:
        return 0
    base = points[0]
    rows = [[int(a - b) for a, b in zip(p, base)] for p in points[1:]]
    return matrix_rank(rows) if rows else 0


def _pull_polytope(points_idx, coords, _memo=None):
    """Lexicographic pulling triangulation of a point configuration."""
    if _memo is None:
        _memo = {}
    key = tuple(points_idx)
    if key in _memo:
        return _memo[key]
    pts = [coords[i] for i in points_idx]
    r = _affine_rank(pts)
    if len(points_idx) == r + 1:
        _memo[key] = [tuple(points_idx)]
        return _memo[key]
    p0 = min(points_idx, key=lambda i: coords[i])
    poly = polyhedron_from_generators([coords[i] for i in points_idx])
    out = []
    for n, b in poly.inequalities:
        if _dot(n, coords[p0]) == b:
            continue
        face = tuple(i for i in points_idx if _dot(n, coords[i]) == b)
        for simplex in _pull_polytope(face, coords, _memo):
            if p0 not in simplex:
                out.append(tuple(sorted(simplex + (p0,))))
    uniq = sorted(set(out))
    _memo[key] = uniq
    return uniq


def lifted_triangulation(points, weights) -> Triangulation:
    """Regular triangulation: project the lower hull of the weight-lifted points.

    Ties (non-simplicial lower cells) are broken by lexicographic pulling and
    flagged in the result.
    """
    points = [tuple(int(x) for x in p) for p in points]
    weights = [Fraction(w) for w in weights]
    if len(points) != len(weights):
        raise ValueError("one weight per point required")
    if not points or all(all(x == 0 for x in p) for p in points):
        raise ValueError("degenerate configuration")
    dim = len(points[0])
    if _affine_rank(points) == 0:
        raise ValueError("degenerate configuration")
    lifted = [p + (w,) for p, w in zip(points, weights)]
    poly = polyhedron_from_generators(lifted)
    cells = []
    pulled = False
    for n, b in poly.inequalities:
        if n[dim] <= 0:
            continue  # only lower facets: inner normal points up in the lift
        cell = tuple(
            i for i, q in enumerate(lifted) if _dot(n, q) == b
        )
        cells.append(cell)
    if not cells:
        # All points lie on one lower-dimensional lift face; treat the whole
        # configuration as a single degenerate cell.
        cells = [tuple(range(len(points)))]
    simplices = []
    memo = {}
    for cell in cells:
        pts = [points[i] for i in cell]
        if len(cell) == _affine_rank(pts) + 1:
            simplices.append(tuple(sorted(cell)))
        else:
            pulled = True
            simplices.extend(_pull_polytope(tuple(sorted(cell)), points, memo))
    return Triangulation(tuple(sorted(set(simplices))), tuple(weights), pulled)


def triangulate_cone(rep: ConeRep):
    """Lexicographic pulling triangulation of a pointed cone into simplicial cones.

    Returns generator tuples (not indices); faces are resolved combinatorially
    from facet incidence, so only the top-level facet computation needs the
    double description.
    """
    if rep.lineality:
        raise ValueError("cone has lineality")
    gens = list(rep.generators)
    facets = list(rep.facet_normals)
    eqs = list(rep.equations)
    cone_rank = rep.rank

    memo: dict[frozenset, list[tuple]] = {}

    def pull(sub: tuple, r: int):
        key = frozenset(sub)
        if key in memo:
            return memo[key]
        if len(sub) == r:
            memo[key] = [sub]
            return memo[key]
        g0 = sub[0]  # generators kept sorted: lexicographically least
        candidates = set()
        for f in facets:
            if _dot(f, g0) == 0:
                continue
            face = tuple(g for g in sub if _dot(f, g) == 0)
            if len(face) >= r - 1:
                candidates.add(face)
        out = []
        for face in sorted(candidates):
            if matrix_rank([list(g) for g in face]) != r - 1:
                continue
            for simplex in pull(face, r - 1):
                out.append(tuple(sorted(set(simplex + (g0,)))))
        uniq = sorted(set(out))
        memo[key] = uniq
        return uniq

    top = tuple(sorted(gens))
    if matrix_rank([list(g) for g in top]) != cone_rank:
        raise ValueError("generators do not span the cone rank")
    return pull(top, cone_rank)


def is_unimodular_simplex(all_points, simplex_points) -> bool:
    """Whether the simplex lattice equals the configuration lattice (Smith forms).

    Both spans must agree in rank; then, since the simplex lattice sits inside
    the configuration lattice, the two are equal iff their invariant-factor
    products (indices in the saturated lattice) coincide.
    """
    full = IntMatrix.from_columns([tuple(p) for p in all_points])
    sub = IntMatrix.from_columns([tuple(p) for p in simplex_points])
    sub_res = snf(sub)
    if sub_res.rank != sub.cols:
        raise ValueError("dependent simplex")
    full_res = snf(full)
    if sub_res.rank != full_res.rank:
        return False
    prod_sub = 1
    for d in sub_res.diag:
        prod_sub *= d
    prod_full = 1
    for d in full_res.diag:
        prod_full *= d
    return prod_sub == prod_full

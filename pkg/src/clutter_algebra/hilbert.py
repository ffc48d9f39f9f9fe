"""Integral Hilbert bases, affine-semigroup membership, and lattice-point machinery.

The Hilbert basis algorithm is the classical triangulation route: split the
pointed cone into simplicial subcones, enumerate each fundamental
parallelepiped through the Smith form of its generator matrix, then reduce the
collected lattice points to the irreducible ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .certificates import Certificate, Verdict
from .intmatrix import IntMatrix, primitive, snf
from .polyhedra import (
    ConeRep,
    Polyhedron,
    cone_from_generators,
    triangulate_cone,
)


@dataclass(frozen=True)
class HilbertBasis:
    cone: ConeRep
    elements: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ComboWitness:
    """Nonnegative coefficients keyed by generator index; reproduces the target."""

    coefficients: tuple[tuple[int, int], ...]

    def check(self, generators, target) -> bool:
        dim = len(target)
        acc = [0] * dim
        for idx, c in self.coefficients:
            for i in range(dim):
                acc[i] += c * generators[idx][i]
        return tuple(acc) == tuple(target)


def _parallelepiped_points(simplex_gens, dim: int):
    """Nonzero lattice points of {sum t_i g_i : 0 <= t_i < 1}.

    With L M R = D in Smith form, the columns f_i of L^{-1} form a basis of a
    direct summand of Z^dim whose multiples d_i f_i span the generator lattice;
    residue representatives are folded into the half-open box by coordinate
    floor reduction.
    """
    m = IntMatrix.from_columns(list(simplex_gens))
    r = len(simplex_gens)
    res = snf(m)
    assert res.rank == r, "simplex generators must be independent"
    index = 1
    for d in res.diag:
        index *= d
    if index == 1:
        return []
    linv = _int_inverse(res.left)
    f = [tuple(row[i] for row in linv.entries) for i in range(r)]
    points = []
    for key in itertools.product(*(range(d) for d in res.diag)):
        if all(k == 0 for k in key):
            continue
        z = [0] * dim
        for ki, fi in zip(key, f):
            for i in range(dim):
                z[i] += ki * fi[i]
        points.append(_fold_into_parallelepiped(z, simplex_gens, dim))
    return [p for p in points if any(x != 0 for x in p)]


def _int_inverse(u: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix, solved column by column."""
    n = u.rows
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        col = _solve_unimodular(u, e)
        cols.append(col)
    return IntMatrix.from_columns(cols)


def _solve_unimodular(u: IntMatrix, b):
    n = u.rows
    m = [list(r) + [bv] for r, bv in zip(u.entries, b)]
    m = [[Fraction(x) for x in row] for row in m]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        m[col] = [x / m[col][col] for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                fac = m[i][col]
                m[i] = [a - fac * c for a, c in zip(m[i], m[col])]
    out = [m[i][n] for i in range(n)]
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out]


def _fold_into_parallelepiped(z, gens, dim: int):
    """Shift z by integer multiples of the generators into the half-open box."""
    cols = [list(g) for g in gens]
    mat = [[Fraction(cols[j][i]) for j in range(len(gens))] for i in range(dim)]
    rhs = [Fraction(x) for x in z]
    coeffs = _least_squares_exact(mat, rhs)
    out = list(z)
    for c, g in zip(coeffs, gens):
        shift = floor(c)
        if shift:
            for i in range(dim):
                out[i] -= shift * g[i]
    return tuple(out)


def _least_squares_exact(mat, rhs):
    """Unique rational solution of a full-column-rank system (consistent by construction)."""
    rows = len(mat)
    cols = len(mat[0])
    aug = [mat[i] + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * cols
    for rr, c in enumerate(pivots):
        sol[c] = aug[rr][cols]
    return sol


def cone_lattice_generators(cone: ConeRep):
    """A finite generating set of cone ∩ Z^dim: extreme rays plus all
    parallelepiped points of a triangulation into simplicial subcones."""
    if not cone.is_pointed():
        raise ValueError("cone has lineality")
    gens = set(cone.generators)
    for simplex in triangulate_cone(cone):
        gens.update(_parallelepiped_points(simplex, cone.dim))
    return sorted(gens)


def _positive_functional(cone: ConeRep):
    """Integer functional strictly positive on the pointed cone minus origin."""
    total = [0] * cone.dim
    for f in cone.facet_normals:
        for i in range(cone.dim):
            total[i] += f[i]
    # Facet normals sum to a strictly positive functional exactly when the
    # cone is pointed and full-rank in its span; equations contribute nothing.
    return tuple(total)


def hilbert_basis(cone: ConeRep) -> HilbertBasis:
    """Unique minimal integral Hilbert basis of a pointed rational cone."""
    candidates = cone_lattice_generators(cone)
    phi = _positive_functional(cone)
    weight = {c: sum(p * x for p, x in zip(phi, c)) for c in candidates}
    assert all(w > 0 for w in weight.values()), "functional must be positive"
    irreducible = []
    for c in sorted(candidates, key=lambda v: (weight[v], v)):
        reducible = False
        for s in irreducible:
            if weight[s] >= weight[c]:
                break
            diff = tuple(a - b for a, b in zip(c, s))
            if all(x == 0 for x in diff):
                continue
            if cone.contains(diff):
                reducible = True
                break
        if not reducible:
            # Remaining candidates of smaller weight not yet confirmed
            # irreducible cannot appear: candidates are scanned in weight order
            # and every element of the minimal basis is a candidate.
            irreducible.append(c)
    return HilbertBasis(cone, tuple(sorted(irreducible)))


def is_hilbert_basis(vectors) -> Verdict:
    """Whether N·vectors equals cone(vectors) ∩ Z^dim.

    False carries a lattice point of the cone unreachable as a nonnegative
    integer combination of the input vectors.
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        raise ValueError("empty vector list")
    dim = len(vectors[0])
    cone = cone_from_generators(vectors, dim)
    if not cone.is_pointed():
        raise ValueError("cone has lineality")
    basis = hilbert_basis(cone)
    for h in basis.elements:
        if semigroup_member(vectors, h, cone=cone) is None:
            return Verdict(
                False,
                Certificate("unreachable-lattice-point", {"point": list(h)}),
            )
    return Verdict(True)


def semigroup_member(generators, target, cone: ConeRep | None = None) -> ComboWitness | None:
    """Depth-first search for target as an N-combination of the generators.

    Prunes on cone membership of the remainder, so absence is definitive.
    Generators are tried in descending total degree, which cuts deep branches
    on graded cones first. A precomputed cone of the generators may be passed
    to avoid repeated dual descriptions.
    """
    generators = [tuple(int(x) for x in g) for g in generators]
    target = tuple(int(x) for x in target)
    dim = len(target)
    if all(x == 0 for x in target):
        return ComboWitness(())
    if cone is None:
        cone = cone_from_generators(generators, dim)
    order = sorted(
        range(len(generators)),
        key=lambda i: (-sum(generators[i]), generators[i]),
    )
    dead: set[tuple[int, ...]] = set()

    def search(rest, start):
        if all(x == 0 for x in rest):
            return []
        if rest in dead or not cone.contains(rest):
            return None
        for pos in range(start, len(order)):
            g = generators[order[pos]]
            nxt = tuple(a - b for a, b in zip(rest, g))
            got = search(nxt, pos)
            if got is not None:
                return [order[pos]] + got
        dead.add(rest)
        return None

    found = search(target, 0)
    if found is None:
        return None
    counts: dict[int, int] = {}
    for idx in found:
        counts[idx] = counts.get(idx, 0) + 1
    witness = ComboWitness(tuple(sorted(counts.items())))
    assert witness.check(generators, target)
    return witness


def lattice_points(p: Polyhedron, k: int = 1):
    """All integer vectors of the k-fold dilation of a bounded polyhedron."""
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    if not p.is_bounded():
        raise ValueError("unbounded polyhedron")
    if p.is_empty:
        return []
    if k == 0:
        return [(0,) * p.dim]
    lows = [min(v[i] for v in p.vertices) * k for i in range(p.dim)]
    highs = [max(v[i] for v in p.vertices) * k for i in range(p.dim)]
    out = []
    for cand in itertools.product(
        *(range(ceil(lo), floor(hi) + 1) for lo, hi in zip(lows, highs))
    ):
        ok = all(
            sum(n[i] * cand[i] for i in range(p.dim)) >= b * k
            for n, b in p.inequalities
        ) and all(
            sum(n[i] * cand[i] for i in range(p.dim)) == b * k
            for n, b in p.equations
        )
        if ok:
            out.append(cand)
    return sorted(out)


def idp_check(p: Polyhedron, k_max: int, window: int = 6) -> Verdict:
    """Bounded integer-decomposition falsifier.

    For each 2 <= k <= k_max and each integer vector of the k-th dilation
    (restricted to a box when the polyhedron is unbounded), look for a split
    into k integer points of the polyhedron. This refutes but never proves;
    the full decision for blocking polyhedra goes through the Hilbert-basis
    route in the normality checker.
    """
    if p.is_empty:
        return Verdict(True, rationale="empty polyhedron")
    if p.lineality:
        raise ValueError("lineality not supported")
    bounded = p.is_bounded()
    base_points = _window_points(p, 1, window)
    for k in range(2, k_max + 1):
        for a in _window_points(p, k, window):
            if not _splits_into(a, k, base_points, p):
                return Verdict(
                    False,
                    Certificate("indecomposable-point", {"k": k, "point": list(a)}),
                )
    del bounded
    return Verdict(True)


def _window_points(p: Polyhedron, k: int, window: int):
    if p.is_bounded():
        return lattice_points(p, k)
    lows, highs = [], []
    for i in range(p.dim):
        vals = [v[i] for v in p.vertices]
        lo = floor(min(vals) * k)
        hi = ceil(max(vals) * k)
        if any(r[i] > 0 for r in p.rays):
            hi += window
        if any(r[i] < 0 for r in p.rays):
            lo -= window
        lows.append(lo)
        highs.append(hi)
    out = []
    for cand in itertools.product(
        *(range(lo, hi + 1) for lo, hi in zip(lows, highs))
    ):
        if all(
            sum(n[i] * cand[i] for i in range(p.dim)) >= b * k
            for n, b in p.inequalities
        ) and all(
            sum(n[i] * cand[i] for i in range(p.dim)) == b * k
            for n, b in p.equations
        ):
            out.append(cand)
    return sorted(out)


def _splits_into(a, k, base_points, p: Polyhedron) -> bool:
    if k == 1:
        return p.contains(a)
    for pt in base_points:
        rest = tuple(x - y for x, y in zip(a, pt))
        # Parts may repeat; recursion depth is k.
        if _feasible_remainder(rest, k - 1, p) and _splits_into(
            rest, k - 1, base_points, p
        ):
            return True
    return False


def _feasible_remainder(rest, k, p: Polyhedron) -> bool:
    return all(
        sum(n[i] * rest[i] for i in range(p.dim)) >= b * k for n, b in p.inequalities
    ) and all(
        sum(n[i] * rest[i] for i in range(p.dim)) == b * k for n, b in p.equations
    )


def minimal_semigroup_elements(
    cone: ConeRep,
    degree,
    b_max: int,
    strict_facets=None,
    semigroup_generators=None,
):
    """Minimal relative-interior lattice points of degree at most b_max.

    ``degree`` must be positive on the cone minus the origin. A point is kept
    when it is not an interior point plus a nonzero element of the generated
    semigroup; with all semigroup generators at degree one this peels one
    generator at a time.
    """
    degree = tuple(int(x) for x in degree)
    strict = list(strict_facets) if strict_facets is not None else list(cone.facet_normals)
    sgens = (
        [tuple(g) for g in semigroup_generators]
        if semigroup_generators is not None
        else list(cone.generators)
    )

    def interior(x) -> bool:
        return (
            all(sum(f[i] * x[i] for i in range(cone.dim)) > 0 for f in strict)
            and all(
                sum(f[i] * x[i] for i in range(cone.dim)) == 0 for f in cone.equations
            )
            and cone.contains(x)
        )

    points = _degree_sliced_points(cone, degree, b_max, interior)
    out = []
    for x in points:
        # x = (interior point) + (nonzero semigroup element) iff one generator
        # can be peeled with an interior remainder: relint(C) + C stays in
        # relint(C), so a longer sum peels one term at a time.
        minimal = True
        for g in sgens:
            rest = tuple(a - b for a, b in zip(x, g))
            if all(v == 0 for v in rest):
                continue
            if interior(rest):
                minimal = False
                break
        if minimal:
            out.append(x)
    return sorted(out)


def _degree_sliced_points(cone: ConeRep, degree, b_max: int, keep):
    """Lattice points of the cone with degree value in [1, b_max], filtered."""
    # Bounding box per degree slice from the extreme rays: x = sum t_i r_i with
    # sum t_i <deg, r_i> = b bounds each coordinate by b * max_i r_ij / <deg, r_i>.
    rays = cone.generators
    out = []
    ray_deg = [sum(d * x for d, x in zip(degree, r)) for r in rays]
    if any(v <= 0 for v in ray_deg):
        raise ValueError("degree functional must be positive on the cone")
    for b in range(1, b_max + 1):
        lows, highs = [], []
        for i in range(cone.dim):
            cands = [Fraction(b * r[i], rd) for r, rd in zip(rays, ray_deg)]
            lows.append(min(min(cands), Fraction(0)))
            highs.append(max(max(cands), Fraction(0)))
        for cand in itertools.product(
            *(range(ceil(lo), floor(hi) + 1) for lo, hi in zip(lows, highs))
        ):
            if sum(d * x for d, x in zip(degree, cand)) != b:
                continue
            if keep(cand):
                out.append(cand)
    return out

"""Clutters and their invariants: covers, blockers, minors, parallelizations,
König and packing properties, monomial-ideal powers, whiskers, balancedness."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .certificates import Certificate, Verdict
from .intmatrix import IntMatrix


class InvalidMinor(ValueError):
    """The requested deletion/contraction does not leave a proper nonzero ideal."""


@dataclass(frozen=True)
class Clutter:
    """Vertex names plus an antichain of edges (stored as index frozensets)."""

    vertices: tuple[str, ...]
    edges: tuple[frozenset[int], ...]
    allow_isolated: bool = False

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            if not e:
                raise ValueError("empty edge")
            if not all(0 <= i < len(self.vertices) for i in e):
                raise ValueError("edge indexes unknown vertex")
            if e in seen:
                raise ValueError("repeated edge")
            seen.add(e)
        for e, f in itertools.combinations(self.edges, 2):
            if e <= f or f <= e:
                raise ValueError("edges must form an antichain")
        if not self.allow_isolated:
            covered = set().union(*self.edges) if self.edges else set()
            if covered != set(range(len(self.vertices))):
                missing = [self.vertices[i] for i in range(len(self.vertices))
                           if i not in covered]
                raise ValueError(f"isolated vertices: {missing}")

    @staticmethod
    def from_edges(edge_lists, vertices=None, allow_isolated=False) -> "Clutter":
        """Build from edges given as iterables of vertex names."""
        if vertices is None:
            names = sorted({v for e in edge_lists for v in e}, key=_name_key)
        else:
            names = list(vertices)
        index = {v: i for i, v in enumerate(names)}
        edges = tuple(
            frozenset(index[v] for v in e) for e in _minimalize_named(edge_lists)
        )
        return Clutter(tuple(names), edges, allow_isolated)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def q(self) -> int:
        return len(self.edges)

    def edge_names(self) -> list[tuple[str, ...]]:
        return [tuple(sorted((self.vertices[i] for i in e), key=_name_key))
                for e in self.edges]

    def incidence_matrix(self) -> IntMatrix:
        cols = [
            tuple(1 if i in e else 0 for i in range(self.n)) for e in self.edges
        ]
        return IntMatrix.from_columns(cols).as_incidence()

    def incidence_columns(self) -> list[tuple[int, ...]]:
        return [tuple(1 if i in e else 0 for i in range(self.n)) for e in self.edges]

    def is_uniform(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def rename(self, names) -> "Clutter":
        return Clutter(tuple(names), self.edges, self.allow_isolated)


def _name_key(name: str):
    """Numeric-aware sort so x10 follows x9 and the copy x1^2 follows x1."""
    base, _, copy = name.partition("^")
    head = base.rstrip("0123456789")
    tail = base[len(head):]
    return (head, int(tail) if tail else -1, base, int(copy) if copy.isdigit() else 0)


def _minimalize_named(edge_lists):
    sets = [frozenset(e) for e in edge_lists]
    out = []
    for e in sets:
        if any(f < e for f in sets):
            continue
        if e not in out:
            out.append(e)
    return out


def _minimalize(sets):
    uniq = set(sets)
    return sorted(
        (e for e in uniq if not any(f < e for f in uniq)),
        key=lambda s: sorted(s),
    )


@dataclass(frozen=True)
class CoverSet:
    covers: tuple[frozenset[int], ...]
    vectors: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators as exponent vectors over named variables."""

    variables: tuple[str, ...]
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for g in self.generators:
            if all(x == 0 for x in g):
                raise ValueError("unit generator")
        for g, h in itertools.combinations(self.generators, 2):
            if all(a <= b for a, b in zip(g, h)) or all(
                b <= a for a, b in zip(g, h)
            ):
                raise ValueError("generators must be minimal")

    @staticmethod
    def from_exponents(variables, exponents) -> "MonomialIdeal":
        return MonomialIdeal(tuple(variables), tuple(_minimal_exponents(exponents)))

    def monomial_strings(self) -> list[str]:
        return [format_monomial(self.variables, g) for g in self.generators]


def format_monomial(variables, exponents, t_degree: int | None = None) -> str:
    parts = []
    for v, a in zip(variables, exponents):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    mono = "*".join(parts) if parts else "1"
    if t_degree is None or t_degree == 0:
        return mono
    return f"{mono} * t^{t_degree}" if mono != "1" else f"t^{t_degree}"


def _minimal_exponents(exponents):
    uniq = sorted(set(tuple(e) for e in exponents))
    out = []
    for g in uniq:
        if not any(
            h != g and all(a <= b for a, b in zip(h, g)) for h in uniq
        ):
            out.append(g)
    return out


def edge_ideal(c: Clutter) -> MonomialIdeal:
    return MonomialIdeal(c.vertices, tuple(sorted(c.incidence_columns())))


# ---------------------------------------------------------------------------
# covers and blockers


def minimal_vertex_covers(c: Clutter) -> CoverSet:
    """Exact transversal clutter, built edge by edge with re-minimalization."""
    partial: list[frozenset[int]] = [frozenset()]
    for e in c.edges:
        grown = {cov | {v} for cov in partial for v in e if not (cov & e)}
        grown.update(cov for cov in partial if cov & e)
        partial = _minimalize(grown)
    covers = sorted(partial, key=lambda s: (len(s), sorted(s)))
    vectors = tuple(
        tuple(1 if i in cov else 0 for i in range(c.n)) for cov in covers
    )
    return CoverSet(tuple(covers), vectors)


def cover_names(c: Clutter) -> list[tuple[str, ...]]:
    return [
        tuple(sorted((c.vertices[i] for i in cov), key=_name_key))
        for cov in minimal_vertex_covers(c).covers
    ]


def blocker(c: Clutter) -> Clutter:
    covers = minimal_vertex_covers(c).covers
    return Clutter(c.vertices, tuple(covers), c.allow_isolated)


def dual_star(c: Clutter) -> tuple[Clutter, IntMatrix]:
    """Complement each incidence column: a*_ij = 1 - a_ij."""
    a = c.incidence_matrix()
    if not a.is_binary():
        raise ValueError("non-binary incidence matrix")
    cols = []
    for col in a.columns():
        star = tuple(1 - x for x in col)
        if all(x == 0 for x in star):
            raise ValueError("all-ones column complements to a zero column")
        cols.append(star)
    edges = tuple(frozenset(i for i, x in enumerate(col) if x) for col in cols)
    for e, f in itertools.combinations(edges, 2):
        if e <= f or f <= e:
            raise ValueError("complemented columns do not form a clutter")
    star_clutter = Clutter(c.vertices, tuple(sorted(edges, key=sorted)), True)
    return star_clutter, IntMatrix.from_columns(cols)


# ---------------------------------------------------------------------------
# minors and parallelizations


def minor(c: Clutter, delete=(), contract=()) -> Clutter:
    """Deletion removes vertices and incident edges; contraction removes the
    vertices from every edge and re-minimalizes."""
    dset = {_resolve(c, v) for v in delete}
    kset = {_resolve(c, v) for v in contract}
    if dset & kset:
        raise ValueError("delete and contract sets must be disjoint")
    surviving = []
    for e in c.edges:
        if e & dset:
            continue
        reduced = e - kset
        if not reduced:
            raise InvalidMinor("an edge was contracted away; the minor is the unit ideal")
        surviving.append(reduced)
    reduced_edges = _minimalize(surviving)
    if not reduced_edges:
        raise InvalidMinor("all edges deleted; the minor is the zero ideal")
    keep = sorted(set(range(c.n)) - dset - kset)
    remap = {old: new for new, old in enumerate(keep)}
    names = tuple(c.vertices[i] for i in keep)
    new_edges = tuple(frozenset(remap[i] for i in e) for e in reduced_edges)
    return Clutter(names, new_edges, True)


def _resolve(c: Clutter, v) -> int:
    if isinstance(v, int):
        return v
    return c.vertices.index(v)


def all_minors(c: Clutter, include_self: bool = True):
    """Every proper-ideal minor as (delete, contract, clutter), lexicographic."""
    for assignment in itertools.product((0, 1, 2), repeat=c.n):
        dset = tuple(i for i, a in enumerate(assignment) if a == 1)
        kset = tuple(i for i, a in enumerate(assignment) if a == 2)
        if not include_self and not dset and not kset:
            continue
        try:
            yield dset, kset, minor(c, dset, kset)
        except InvalidMinor:
            continue


def parallelization(c: Clutter, w) -> Clutter:
    """Delete vertices with w_i = 0 and duplicate each vertex w_i - 1 times.

    Copies of x are named x, x^2, ..., x^w so parallelizations compare equal
    structurally.
    """
    w = tuple(int(x) for x in w)
    if len(w) != c.n:
        raise ValueError("one multiplicity per vertex required")
    if any(x < 0 for x in w):
        raise ValueError("negative multiplicity")
    names = []
    copies: list[list[int]] = []
    for i, wi in enumerate(w):
        mine = []
        for k in range(1, wi + 1):
            name = c.vertices[i] if k == 1 else f"{c.vertices[i]}^{k}"
            mine.append(len(names))
            names.append(name)
        copies.append(mine)
    edges = set()
    for e in c.edges:
        members = [copies[i] for i in sorted(e)]
        if any(not m for m in members):
            continue
        for pick in itertools.product(*members):
            edges.add(frozenset(pick))
    return Clutter(tuple(names), tuple(sorted(edges, key=sorted)), True)


# ---------------------------------------------------------------------------
# covering and matching numbers


def alpha0(c: Clutter) -> int:
    """Vertex covering number: size of a smallest transversal."""
    if not c.edges:
        return 0
    best = c.n
    order = sorted(c.edges, key=len)

    def cover_search(idx, chosen, size):
        nonlocal best
        if size >= best:
            return
        while idx < len(order) and order[idx] & chosen:
            idx += 1
        if idx == len(order):
            best = size
            return
        for v in sorted(order[idx]):
            cover_search(idx + 1, chosen | {v}, size + 1)

    cover_search(0, frozenset(), 0)
    return best


def beta1(c: Clutter) -> int:
    """Edge independence number: maximum matching by branch and bound."""
    edges = sorted(c.edges, key=lambda e: (len(e), sorted(e)))
    best = 0

    def grow(idx, used, count):
        nonlocal best
        best = max(best, count)
        if count + (len(edges) - idx) <= best:
            return
        for j in range(idx, len(edges)):
            if not (edges[j] & used):
                grow(j + 1, used | edges[j], count + 1)

    grow(0, frozenset(), 0)
    return best


def koenig(c: Clutter) -> Verdict:
    a, b = alpha0(c), beta1(c)
    if a == b:
        return Verdict(True, rationale=f"alpha0 = beta1 = {a}")
    return Verdict(
        False, Certificate("cover-matching-gap", {"alpha0": a, "beta1": b})
    )


def packing_property(c: Clutter, max_vertices: int = 12) -> Verdict:
    """König property for every minor; the witness is the first failing minor."""
    if c.n > max_vertices:
        raise ValueError(
            f"instance too large ({c.n} vertices > cap {max_vertices})"
        )
    for dset, kset, m in all_minors(c):
        if not koenig(m):
            return Verdict(
                False,
                Certificate(
                    "failing-minor",
                    {
                        "delete": [c.vertices[i] for i in dset],
                        "contract": [c.vertices[i] for i in kset],
                        "alpha0": alpha0(m),
                        "beta1": beta1(m),
                        "minor_edges": [list(e) for e in m.edge_names()],
                    },
                ),
            )
    return Verdict(True)


def perfect_matching(c: Clutter):
    """Independent edges covering every vertex, or None."""
    target = frozenset(range(c.n))
    edges = sorted(c.edges, key=sorted)

    def grow(idx, used, chosen):
        if used == target:
            return chosen
        if idx == len(edges):
            return None
        rest = frozenset().union(*edges[idx:]) | used
        if rest != target:
            return None
        for j in range(idx, len(edges)):
            if not (edges[j] & used):
                got = grow(j + 1, used | edges[j], chosen + [edges[j]])
                if got is not None:
                    return got
        return None

    got = grow(0, frozenset(), [])
    if got is None:
        return None
    return [tuple(sorted((c.vertices[i] for i in e), key=_name_key)) for e in got]


def alpha0_parallelization(c: Clutter, w) -> int:
    """min over minimal covers of <w, cover vector>; equals alpha0 of the
    parallelized clutter."""
    w = tuple(int(x) for x in w)
    covers = minimal_vertex_covers(c)
    return min(sum(w[i] for i in cov) for cov in covers.covers)


def beta1_parallelization_bound(c: Clutter, w, cap: int = 5) -> int:
    """Exact integer program max{<y,1> : A y <= w, y in N^q} by bounded search."""
    w = tuple(int(x) for x in w)
    if any(x > cap for x in w):
        raise ValueError(f"parallelization entries capped at {cap}")
    cols = c.incidence_columns()
    min_size = min(sum(col) for col in cols)
    best = 0

    def extend(j, slack, total):
        nonlocal best
        if total > best:
            best = total
        if j == len(cols):
            return
        # every further unit of y consumes at least min_size slack in total
        if total + sum(slack) // min_size <= best:
            return
        col = cols[j]
        bound = min(slack[i] for i in range(c.n) if col[i])
        for y in range(bound, -1, -1):
            nxt = tuple(slack[i] - y * col[i] for i in range(c.n))
            extend(j + 1, nxt, total + y)

    extend(0, w, 0)
    return best


# ---------------------------------------------------------------------------
# powers of edge ideals


def symbolic_power(c: Clutter, i: int) -> MonomialIdeal:
    """Minimal generators of the intersection of the i-th powers of the cover primes."""
    if i < 1:
        raise ValueError("power must be >= 1")
    covers = minimal_vertex_covers(c).covers
    current = None
    for cov in covers:
        gens = _prime_power_generators(c.n, cov, i)
        if current is None:
            current = gens
        else:
            current = _intersect_monomial(current, gens)
    return MonomialIdeal(c.vertices, tuple(sorted(current)))


def _prime_power_generators(n, cover, i):
    out = []
    members = sorted(cover)
    for combo in itertools.combinations_with_replacement(members, i):
        g = [0] * n
        for v in combo:
            g[v] += 1
        out.append(tuple(g))
    return _minimal_exponents(out)


def _intersect_monomial(gens_a, gens_b):
    lcms = []
    for a in gens_a:
        for b in gens_b:
            lcms.append(tuple(max(x, y) for x, y in zip(a, b)))
    return _minimal_exponents(lcms)


def ordinary_power(c: Clutter, i: int) -> MonomialIdeal:
    """Products of i edge monomials, minimalized."""
    if i < 1:
        raise ValueError("power must be >= 1")
    cols = c.incidence_columns()
    out = []
    for combo in itertools.combinations_with_replacement(range(len(cols)), i):
        g = [0] * c.n
        for j in combo:
            for k in range(c.n):
                g[k] += cols[j][k]
        out.append(tuple(g))
    return MonomialIdeal(c.vertices, tuple(sorted(_minimal_exponents(out))))


def ideal_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """Generator-wise divisibility: every generator of ``small`` is divisible
    by some generator of ``big``."""
    return all(
        any(all(b <= s for b, s in zip(g, h)) for g in big.generators)
        for h in small.generators
    )


# ---------------------------------------------------------------------------
# constructions


def whisker_extension(c: Clutter) -> Clutter:
    """Attach, at every vertex, a fresh edge through d-1 new vertices."""
    d = c.is_uniform()
    if d is None:
        raise ValueError("whisker construction needs a uniform clutter")
    names = list(c.vertices)
    edges = [set(c.vertices[i] for i in e) for e in c.edges]
    for i in range(c.n):
        fresh = [f"y_{i + 1}_{j}" for j in range(1, d)]
        names.extend(fresh)
        edges.append({c.vertices[i], *fresh})
    return Clutter.from_edges(edges, vertices=names)


def disjoint_cover_partition(c: Clutter, force: bool = False):
    """Mutually disjoint minimal vertex covers partitioning the vertex set.

    Recursion of the uniform construction: take the lexicographically least
    minimal cover meeting every edge exactly once, contract it, recurse.
    Returns (covers, None) or (None, reason).
    """
    d = c.is_uniform()
    if d is None and not force:
        raise ValueError("partition construction needs a uniform clutter")

    def recurse(cl: Clutter, depth: int):
        if depth == 1:
            covered = set().union(*cl.edges) if cl.edges else set()
            if all(len(e) == 1 for e in cl.edges) and covered == set(range(cl.n)):
                return [tuple(sorted(cl.vertices, key=_name_key))]
            return None
        covers = minimal_vertex_covers(cl).covers
        qualifying = [
            cov for cov in covers if all(len(e & cov) == 1 for e in cl.edges)
        ]
        if not qualifying:
            return None
        cov = min(qualifying, key=lambda s: sorted(cl.vertices[i] for i in s))
        try:
            rest = minor(cl, contract=tuple(cov))
        except InvalidMinor:
            return None
        tail = recurse(rest, depth - 1)
        if tail is None:
            return None
        return [tuple(sorted((cl.vertices[i] for i in cov), key=_name_key))] + tail

    depth = d if d is not None else max(len(e) for e in c.edges)
    if depth == 1:
        result = recurse(c, 1)
    else:
        result = recurse(c, depth)
    if result is None:
        return None, "no minimal cover meets every edge exactly once at some stage"
    return result, None


def vertex_critical(c: Clutter) -> Verdict:
    base = alpha0(c)
    for i in range(c.n):
        try:
            m = minor(c, delete=(i,))
        except InvalidMinor:
            continue
        if alpha0(m) >= base:
            return Verdict(
                False,
                Certificate(
                    "non-critical-vertex",
                    {"vertex": c.vertices[i], "alpha0": base},
                ),
            )
    return Verdict(True)


# ---------------------------------------------------------------------------
# balancedness


def is_balanced(matrix: IntMatrix, cap: int = 14) -> Verdict:
    """No odd square submatrix with exactly two ones in every row and column.

    Equivalent formulation used here: the bipartite row-column graph has no
    chordless cycle of length 2 mod 4 (an induced cycle visiting 2k+1 rows and
    2k+1 columns is exactly such a submatrix, and any such submatrix is a
    disjoint union of induced cycles, one of which has odd row count).
    """
    if not matrix.is_binary():
        raise ValueError("balancedness is defined for binary matrices")
    if matrix.rows + matrix.cols > cap:
        raise ValueError(
            f"instance too large ({matrix.rows}+{matrix.cols} > cap {cap}); raise the cap"
        )
    nodes = matrix.rows + matrix.cols
    adj = [set() for _ in range(nodes)]
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            if matrix.entries[i][j]:
                adj[i].add(matrix.rows + j)
                adj[matrix.rows + j].add(i)
    for cycle in chordless_cycles(adj):
        if len(cycle) % 4 == 2:
            rows = sorted(v for v in cycle if v < matrix.rows)
            cols = sorted(v - matrix.rows for v in cycle if v >= matrix.rows)
            return Verdict(
                False,
                Certificate("odd-hole-submatrix", {"rows": rows, "cols": cols}),
            )
    return Verdict(True)


def chordless_cycles(adj):
    """Chordless cycles of an adjacency-set graph, each reported once.

    Canonical form: least vertex first, second vertex smaller than the last
    (fixes the orientation). Cycles close greedily: once the frontier vertex
    touches the start, extending further would create a chord.
    """
    n = len(adj)

    def extend(path, path_set):
        start, last = path[0], path[-1]
        for nxt in sorted(adj[last]):
            if nxt <= start or nxt in path_set:
                continue
            if any(nxt in adj[p] for p in path[1:-1]):
                continue
            if start in adj[nxt]:
                if len(path) >= 2 and path[1] < nxt:
                    yield tuple(path) + (nxt,)
                continue
            yield from extend(path + [nxt], path_set | {nxt})

    for start in range(n):
        for second in sorted(adj[start]):
            if second > start:
                yield from extend([start, second], {start, second})

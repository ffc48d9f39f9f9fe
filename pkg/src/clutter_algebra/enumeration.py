"""Exhaustive and randomized instance generation: graphs and clutters up to
isomorphism, random posets. Deterministic for fixed seeds."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .clutters import Clutter
from .graphs import Poset


def _degree_refinement(n: int, edges: frozenset) -> list[int]:
    """Iterated neighborhood-class refinement; returns a class id per vertex."""
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    classes = [len(adj[v]) for v in range(n)]
    while True:
        keys = [
            (classes[v], tuple(sorted(classes[w] for w in adj[v])))
            for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == classes:
            return classes
        classes = new


def canonical_graph_key(n: int, edge_pairs) -> tuple:
    """Canonical edge set over all class-respecting relabelings."""
    edges = frozenset((min(e), max(e)) for e in edge_pairs)
    classes = _degree_refinement(n, edges)
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(classes):
        groups.setdefault(c, []).append(v)
    best = None
    class_order = sorted(groups)
    slots: list[list[int]] = [groups[c] for c in class_order]
    # positions assigned class-block by class-block keeps the search tiny for
    # non-regular graphs; regular graphs fall back to the full factorial
    offsets = []
    start = 0
    for block in slots:
        offsets.append(range(start, start + len(block)))
        start += len(block)
    for perms in itertools.product(
        *(itertools.permutations(block) for block in slots)
    ):
        relabel = {}
        for block_positions, block_perm in zip(offsets, perms):
            for pos, v in zip(block_positions, block_perm):
                relabel[v] = pos
        key = tuple(
            sorted(
                (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
                for a, b in edges
            )
        )
        if best is None or key < best:
            best = key
    return (n, best)


@lru_cache(maxsize=None)
def graphs_up_to_iso(n: int) -> tuple:
    """All graphs on exactly n labeled-canonical vertices, one per iso class,
    as edge tuples. Grown by adding one vertex with every neighborhood."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((),)
    out = {}
    for smaller in graphs_up_to_iso(n - 1):
        for nbhd_mask in range(1 << (n - 1)):
            edges = list(smaller)
            for v in range(n - 1):
                if (nbhd_mask >> v) & 1:
                    edges.append((v, n - 1))
            key = canonical_graph_key(n, edges)
            if key not in out:
                out[key] = tuple(sorted(key[1]))
    return tuple(sorted(out.values()))


def graph_clutter_from_edges(n: int, edges) -> Clutter:
    names = tuple(f"x{i + 1}" for i in range(n))
    return Clutter(
        names, tuple(frozenset(e) for e in edges), allow_isolated=True
    )


def all_graphs(max_vertices: int, connected=None, min_degree: int = 0):
    """Graphs up to isomorphism with at most the given vertex count.

    ``connected=True`` filters to connected graphs; ``min_degree=1`` drops
    isolated vertices (each class then appears once at its support size).
    """
    from .graphs import is_connected

    for n in range(1, max_vertices + 1):
        for edges in graphs_up_to_iso(n):
            if not edges and n > 1:
                continue
            if min_degree >= 1:
                covered = {v for e in edges for v in e}
                if covered != set(range(n)):
                    continue
            if not edges:
                if n == 1:
                    continue  # no valid clutter without edges
            g = graph_clutter_from_edges(n, edges)
            if connected and not is_connected(g):
                continue
            yield g


def connected_graphs(max_vertices: int):
    yield from all_graphs(max_vertices, connected=True, min_degree=1)


def canonical_clutter_key(n: int, edges) -> tuple:
    """Minimal representation over all vertex permutations (feasible for n <= 6)."""
    fedges = [frozenset(e) for e in edges]
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in fedges))
        if best is None or key < best:
            best = key
    return (n, best)


def all_clutters(max_vertices: int, max_edges: int = 6):
    """Sperner families up to isomorphism, no isolated vertices.

    Exhaustive antichain enumeration; practical through five vertices.
    """
    for n in range(1, max_vertices + 1):
        subsets = [
            frozenset(s)
            for k in range(1, n + 1)
            for s in itertools.combinations(range(n), k)
        ]
        seen = set()

        def grow(start: int, chosen: tuple):
            if chosen:
                covered = set().union(*chosen)
                if covered == set(range(n)):
                    key = canonical_clutter_key(n, chosen)
                    if key not in seen:
                        seen.add(key)
                        yield Clutter(
                            tuple(f"x{i + 1}" for i in range(n)),
                            tuple(chosen),
                        )
            if len(chosen) == max_edges:
                return
            for idx in range(start, len(subsets)):
                cand = subsets[idx]
                if any(cand <= e or e <= cand for e in chosen):
                    continue
                yield from grow(idx + 1, chosen + (cand,))

        yield from grow(0, ())


def uniform_clutters(max_vertices: int, size: int, max_edges: int = 8):
    """Uniform Sperner families of one edge size, up to isomorphism."""
    for n in range(size, max_vertices + 1):
        subsets = [frozenset(s) for s in itertools.combinations(range(n), size)]
        seen = set()
        for count in range(1, max_edges + 1):
            for chosen in itertools.combinations(subsets, count):
                covered = set().union(*chosen)
                if covered != set(range(n)):
                    continue
                key = canonical_clutter_key(n, chosen)
                if key in seen:
                    continue
                seen.add(key)
                yield Clutter(
                    tuple(f"x{i + 1}" for i in range(n)), tuple(chosen)
                )


def random_poset(rng: random.Random, max_elements: int = 8) -> Poset:
    """Random order via a random DAG on a shuffled vertex order."""
    n = rng.randint(2, max_elements)
    names = [f"p{i + 1}" for i in range(n)]
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.35:
                covers.append((names[i], names[j]))
    return Poset.from_cover_names(names, covers)


def random_clutter(rng: random.Random, max_vertices: int = 6,
                   max_edges: int = 6) -> Clutter:
    n = rng.randint(2, max_vertices)
    sets = set()
    for _ in range(rng.randint(1, max_edges)):
        size = rng.randint(1, n)
        sets.add(frozenset(rng.sample(range(n), size)))
    keep = [s for s in sets if not any(t < s for t in sets)]
    covered = sorted(set().union(*keep))
    remap = {v: i for i, v in enumerate(covered)}
    return Clutter(
        tuple(f"x{i + 1}" for i in range(len(covered))),
        tuple(frozenset(remap[v] for v in s) for s in keep),
    )

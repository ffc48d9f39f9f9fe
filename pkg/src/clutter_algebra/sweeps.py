"""Bounded conjecture sweeps: enumerate or sample instances, evaluate both
sides, log violators verbatim as re-ingestible input files. Sweeps report and
never assert."""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import textio
from .clutters import packing_property
from .enumeration import connected_graphs, uniform_clutters
from .hilbert import is_hilbert_basis
from .intmatrix import delta_r, snf
from .polyhedra import is_unimodular_simplex, lifted_triangulation
from .rounding import irp_le, mfmc


def _packing_instances(max_vertices: int):
    for size in (2, 3):
        for c in uniform_clutters(max_vertices, size, max_edges=6):
            yield c


def sweep_packing_forces_mfmc(max_vertices: int):
    """Both sides of: packing implies max-flow min-cut."""
    instances = 0
    violations = []
    for c in _packing_instances(max_vertices):
        if c.n > 6:
            continue
        instances += 1
        if packing_property(c) and not mfmc(c, cross_check=False):
            violations.append(textio.format_clutter(c))
    return instances, violations


def sweep_packing_forces_lattice(max_vertices: int, which: str):
    """Packing implies either the lifted-column Hilbert basis (ehrhart route)
    or unit minor gcd of the lifted matrix, depending on ``which``."""
    instances = 0
    violations = []
    for c in _packing_instances(max_vertices):
        if c.n > 6 or not packing_property(c):
            continue
        instances += 1
        lifted = [col + (1,) for col in c.incidence_columns()]
        if which == "ehrhart":
            ok = bool(is_hilbert_basis(lifted))
        else:
            from .intmatrix import IntMatrix

            b = IntMatrix.from_columns(lifted)
            ok = delta_r(b, snf(b).rank) == 1
        if not ok:
            violations.append(textio.format_clutter(c))
    return instances, violations


def sweep_unimodular_triangulation(max_vertices: int):
    """For uniform clutters with max-flow min-cut: does the lexicographic
    regular triangulation of the column configuration come out unimodular?"""
    instances = 0
    violations = []
    for c in _packing_instances(max_vertices):
        if c.n > 6 or not mfmc(c, cross_check=False):
            continue
        instances += 1
        cols = c.incidence_columns()
        tri = lifted_triangulation(cols, [0] * len(cols))
        ok = all(
            is_unimodular_simplex(cols, [cols[i] for i in simplex])
            for simplex in tri.simplices
        )
        if not ok:
            violations.append(textio.format_clutter(c))
    return instances, violations


def sweep_gorenstein_condition(max_vertices: int):
    """Log (Gorenstein verdict, exact vertex condition) pairs on connected
    graphs whose antiblocking system has the rounding property."""
    from .canonical import is_gorenstein_S, maximal_vertices, a_invariant_closed_form

    instances = 0
    pairs = []
    violations = []
    for g in connected_graphs(max_vertices):
        m = g.incidence_matrix()
        if not irp_le(m):
            continue
        instances += 1
        verdict = bool(is_gorenstein_S(m))
        a_inv = a_invariant_closed_form(m)
        data = maximal_vertices(m)
        condition = all(
            -a_inv == Fraction(1, d.d) + d.norm for d in data
        )
        pairs.append(
            {
                "graph": textio.format_clutter(g),
                "gorenstein": verdict,
                "exact_vertex_condition": condition,
            }
        )
    return instances, violations, pairs


def run_sweep(conjecture: str, max_vertices: int = 6, samples: int = 200,
              seed: int = 2026, out_path: str | None = None) -> dict:
    del samples, seed  # enumeration is exhaustive at these scales
    pairs = None
    if conjecture == "cc":
        instances, violations = sweep_packing_forces_mfmc(max_vertices)
    elif conjecture == "2.2.15":
        instances, violations = sweep_packing_forces_lattice(max_vertices, "ehrhart")
    elif conjecture == "2.2.16":
        instances, violations = sweep_packing_forces_lattice(max_vertices, "lattice")
    elif conjecture == "2.4.3":
        instances, violations = sweep_unimodular_triangulation(max_vertices)
    elif conjecture == "1.5.6":
        instances, violations, pairs = sweep_gorenstein_condition(
            min(max_vertices, 7)
        )
    else:
        raise ValueError(f"unknown conjecture tag {conjecture!r}")
    report = {
        "conjecture": conjecture,
        "instances": instances,
        "violations": violations,
    }
    if pairs is not None:
        report["pairs"] = pairs
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return report

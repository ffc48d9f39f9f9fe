"""Command-line surface: one subcommand per decision procedure, certificate
output in re-ingestible input format, JSON mirrors, conjecture sweeps.

Exit codes: 0 property holds / computation done; 1 property fails (certificate
printed); 2 usage or parse error; 3 instance over a cap; 4 internal
cross-check failure (a bug, not a verdict).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import textio
from .certificates import CrossCheckError, Verdict
from .clutters import (
    alpha0,
    beta1,
    blocker,
    cover_names,
    edge_ideal,
    is_balanced,
    koenig,
    minor,
    packing_property,
    perfect_matching,
)
from .canonical import (
    a_invariant_S,
    canonical_module_gens,
    complete_intersection_bipartite,
    is_gorenstein_S,
)
from .covers import (
    cone_generator_lift,
    cover_algebra_generators,
    rees_cone_of_cover_ideal,
    symbolic_rees_generators,
)
from .graphs import (
    edge_cone_h_rep,
    irreducible_induced_subgraphs_direct,
    is_irreducible_graph,
)
from .intmatrix import ZeroMatrixError, delta_r, snf
from .rounding import (
    duality_report,
    irp_eq,
    irp_ge,
    irp_le,
    is_normal_ideal,
    mfmc,
    normally_torsion_free,
    uniform_mfmc_consequences,
)

OK, FALSE, USAGE, CAP, INTERNAL = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise textio.ParseError(f"cannot read {path}: {exc}") from exc


def _load_clutter(path: str):
    return textio.parse_clutter(_read(path))


def _load_matrix(path: str):
    text = _read(path)
    head = textio._strip_comments(text)
    if head and head[0].lower().startswith("vertices:"):
        return textio.parse_clutter(text).incidence_matrix()
    return textio.parse_matrix(text)


def _emit(args, lines, payload) -> None:
    if args.json:
        print(textio.json_dump(payload), end="")
    else:
        for line in lines:
            print(line)


def _verdict_exit(v: Verdict) -> int:
    return OK if v.value else FALSE


def _certificate_lines(v: Verdict) -> list[str]:
    if v.value or v.certificate is None:
        return []
    return ["certificate:", textio.json_dump(v.certificate.to_json()).rstrip()]


def cmd_covers(args):
    c = _load_clutter(args.input)
    covers = cover_names(c)
    lines = ["statement: the minimal transversals are the minimal vertex covers"]
    lines += [" ".join(cov) for cov in covers]
    _emit(args, lines, {"covers": [list(cov) for cov in covers]})
    return OK


def cmd_blocker(args):
    c = _load_clutter(args.input)
    b = blocker(c)
    lines = ["statement: the blocker's edges are the minimal vertex covers"]
    lines += textio.format_clutter(b).splitlines()
    _emit(args, lines, {"blocker": textio.format_clutter(b)})
    return OK


def cmd_minors(args):
    c = _load_clutter(args.input)
    m = minor(c, tuple(args.delete), tuple(args.contract))
    lines = ["statement: deletion removes incident edges; contraction shrinks and re-minimalizes"]
    lines += textio.format_clutter(m).splitlines()
    _emit(args, lines, {"minor": textio.format_clutter(m)})
    return OK


def cmd_alpha_beta(args):
    c = _load_clutter(args.input)
    a, b = alpha0(c), beta1(c)
    _emit(
        args,
        [f"alpha0 = {a}", f"beta1 = {b}"],
        {"alpha0": a, "beta1": b},
    )
    return OK


def cmd_koenig(args):
    c = _load_clutter(args.input)
    v = koenig(c)
    lines = [
        "statement: the covering number equals the matching number",
        f"koenig: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"koenig": v.to_json()})
    return _verdict_exit(v)


def cmd_packing(args):
    c = _load_clutter(args.input)
    v = packing_property(c, max_vertices=args.max_vertices)
    lines = [
        "statement: every minor has the Koenig property",
        f"packing: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"packing": v.to_json()})
    return _verdict_exit(v)


def cmd_matching(args):
    c = _load_clutter(args.input)
    pm = perfect_matching(c)
    if pm is None:
        _emit(args, ["perfect matching: none"], {"perfect_matching": None})
        return FALSE
    lines = ["perfect matching:"] + [" ".join(e) for e in pm]
    _emit(args, lines, {"perfect_matching": [list(e) for e in pm]})
    return OK


def cmd_balanced(args):
    m = _load_matrix(args.input)
    v = is_balanced(m, cap=args.max_vertices + args.max_vertices)
    lines = [
        "statement: no odd square submatrix has exactly two ones per line",
        f"balanced: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"balanced": v.to_json()})
    return _verdict_exit(v)


def cmd_snf(args):
    m = _load_matrix(args.input)
    res = snf(m)
    lines = [f"invariant factors: {' '.join(str(d) for d in res.diag)}",
             f"rank: {res.rank}"]
    _emit(args, lines, {"invariant_factors": list(res.diag), "rank": res.rank})
    return OK


def cmd_delta(args):
    m = _load_matrix(args.input)
    res = snf(m)
    r = args.rank if args.rank is not None else res.rank
    value = delta_r(m, r)
    _emit(args, [f"delta_{r} = {value}"], {"r": r, "delta": value})
    return OK


def cmd_normal(args):
    c = _load_clutter(args.input)
    v = is_normal_ideal(edge_ideal(c))
    lines = [
        "statement: all powers of the edge ideal are integrally closed",
        f"normal: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"normal": v.to_json()})
    return _verdict_exit(v)


def cmd_irp(args):
    m = _load_matrix(args.input)
    fn = {"ge": irp_ge, "le": irp_le, "eq": irp_eq}[args.system]
    v = fn(m, cross_check=args.cross_check)
    statements = {
        "ge": "covering system rounding holds iff the column ideal is normal",
        "le": "antiblocking rounding holds iff the downset subring is normal",
        "eq": "equality-system rounding holds iff the lifted columns with the "
              "vertical ray form a Hilbert basis",
    }
    lines = [f"statement: {statements[args.system]}",
             f"irp-{args.system}: {v.value}"] + _certificate_lines(v)
    _emit(args, lines, {f"irp_{args.system}": v.to_json()})
    return _verdict_exit(v)


def cmd_mfmc(args):
    c = _load_clutter(args.input)
    v = mfmc(c)
    lines = [
        "statement: max-flow min-cut holds iff the covering polyhedron is "
        "integral and the edge ideal is normal",
        f"mfmc: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"mfmc": v.to_json()})
    return _verdict_exit(v)


def cmd_ntf(args):
    c = _load_clutter(args.input)
    v = normally_torsion_free(c)
    lines = [
        "statement: symbolic powers equal ordinary powers iff max-flow min-cut holds",
        f"normally-torsion-free: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"ntf": v.to_json()})
    return _verdict_exit(v)


def cmd_duality(args):
    c = _load_clutter(args.input)
    report = duality_report(c)
    value = all(v.value for v in report.verdicts.values())
    lines = [f"statement: {report.notes['statement']}"]
    lines += [f"{k}: {v.value}" for k, v in report.verdicts.items()]
    _emit(args, lines, report.to_json())
    return OK if value else FALSE


def cmd_uniform_consequences(args):
    c = _load_clutter(args.input)
    report = uniform_mfmc_consequences(c)
    lines = [f"{k}: {v.value}" for k, v in report.verdicts.items()]
    lines.append(f"note: {report.notes['uniform']}")
    _emit(args, lines, report.to_json())
    return OK if all(v.value for v in report.verdicts.values()) else FALSE


def cmd_a_invariant(args):
    m = _load_matrix(args.input)
    value = a_invariant_S(m)
    _emit(
        args,
        ["statement: the a-invariant is the negated least interior degree",
         f"a-invariant: {value}"],
        {"a_invariant": value},
    )
    return OK


def cmd_canonical(args):
    m = _load_matrix(args.input)
    module = canonical_module_gens(m, args.b_max)
    lines = ["canonical module generators:"] + module.monomial_strings()
    lines.append(f"a-invariant: {module.a_invariant}")
    _emit(
        args,
        lines,
        {
            "generators": module.monomial_strings(),
            "a_invariant": module.a_invariant,
        },
    )
    return OK


def cmd_gorenstein(args):
    m = _load_matrix(args.input)
    v = is_gorenstein_S(m)
    lines = [
        "statement: the subring is Gorenstein iff its canonical module is principal",
        f"gorenstein: {v.value}",
        f"rationale: {v.rationale}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"gorenstein": v.to_json()})
    return _verdict_exit(v)


def cmd_ci_bipartite(args):
    g = _load_clutter(args.input)
    v = complete_intersection_bipartite(g)
    lines = [
        "statement: complete intersection iff bipartite with cyclomatic-many "
        "primitive cycles",
        f"complete-intersection: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"complete_intersection": v.to_json()})
    return _verdict_exit(v)


def cmd_edge_cone(args):
    g = _load_clutter(args.input)
    rows = edge_cone_h_rep(g, cap=args.max_vertices)
    lines = ["edge cone halfspaces (one row per inequality, >= 0):"]
    lines += [" ".join(str(x) for x in r) for r in rows]
    _emit(args, lines, {"halfspaces": [list(r) for r in rows]})
    return OK


def cmd_symbolic_gens(args):
    c = _load_clutter(args.input)
    gens = symbolic_rees_generators(c, cap=args.max_vertices)
    lines = ["symbolic blowup algebra generators:"]
    lines += [m.format(c.vertices) for m in gens]
    _emit(args, lines, {"generators": [m.format(c.vertices) for m in gens]})
    return OK


def cmd_cover_gens(args):
    c = _load_clutter(args.input)
    gens = cover_algebra_generators(c, cap=args.max_vertices)
    lines = ["cover algebra generators:"]
    lines += [m.format(c.vertices) for m in gens]
    _emit(args, lines, {"generators": [m.format(c.vertices) for m in gens]})
    return OK


def cmd_irreducible_subgraphs(args):
    g = _load_clutter(args.input)
    subs = irreducible_induced_subgraphs_direct(g, cap=args.max_vertices)
    lines = ["irreducible induced subgraphs (vertices | cover number):"]
    lines += [" ".join(s) + f" | {b}" for s, b in subs]
    _emit(args, lines, {"subgraphs": [[list(s), b] for s, b in subs]})
    return OK


def cmd_irreducible_graph(args):
    g = _load_clutter(args.input)
    v = is_irreducible_graph(g, cap=args.max_vertices)
    lines = [
        "statement: no vertex bipartition splits the covering number additively",
        f"irreducible: {v.value}",
    ] + _certificate_lines(v)
    _emit(args, lines, {"irreducible": v.to_json()})
    return _verdict_exit(v)


def cmd_cone_lift(args):
    g = _load_clutter(args.input)
    if args.facet:
        facet = tuple(int(x) for x in args.facet.split(","))
        lifted = cone_generator_lift(g, facet)
        lines = [lifted.format(tuple(g.vertices) + (f"x{g.n + 1}",))]
        _emit(args, lines, {"generator": lines[0]})
        return OK
    rep = rees_cone_of_cover_ideal(g)
    lifted = []
    for f in rep.facet_normals:
        if f[-1] <= -1 and all(x >= 1 for x in f[:-1]):
            m = cone_generator_lift(g, f)
            lifted.append(m.format(tuple(g.vertices) + (f"x{g.n + 1}",)))
    lines = ["cone-lifted generators:"] + lifted
    _emit(args, lines, {"generators": lifted})
    return OK


def cmd_sweep(args):
    from .sweeps import run_sweep

    report = run_sweep(
        args.conjecture,
        max_vertices=args.max_vertices,
        samples=args.samples,
        seed=args.seed,
        out_path=args.out,
    )
    lines = [f"sweep {args.conjecture}: {report['instances']} instances, "
             f"{len(report['violations'])} violation(s)"]
    if args.out:
        lines.append(f"report written to {args.out}")
    _emit(args, lines, report)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clutter-algebra",
        description="Exact decision procedures for clutters, covering polyhedra, "
        "and blowup-algebra invariants; every verdict carries a certificate.",
    )
    parser.add_argument("--json", action="store_true", help="JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, matrix=False, poset=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="input file")
        p.add_argument("--json", action="store_true", help="JSON report")
        p.add_argument(
            "--max-vertices", type=int, default=12,
            help="cap for exhaustive searches (default 12)",
        )
        p.set_defaults(fn=fn)
        return p

    add("covers", cmd_covers, "minimal vertex covers")
    add("blocker", cmd_blocker, "blocker clutter")
    p = add("minors", cmd_minors, "deletion/contraction minor")
    p.add_argument("--delete", nargs="*", default=[])
    p.add_argument("--contract", nargs="*", default=[])
    add("alpha-beta", cmd_alpha_beta, "covering and matching numbers")
    add("koenig", cmd_koenig, "covering number equals matching number")
    add("packing", cmd_packing, "Koenig property of every minor")
    add("matching", cmd_matching, "perfect matching search")
    add("balanced", cmd_balanced, "balanced incidence matrix")
    add("snf", cmd_snf, "invariant factors with transforms")
    p = add("delta", cmd_delta, "minor gcd at a given size")
    p.add_argument("--rank", type=int, default=None,
                   help="minor size (default: the rank)")
    add("normal", cmd_normal, "normality of the edge ideal")
    p = add("irp", cmd_irp, "integer rounding property of one system")
    p.add_argument("--system", choices=["ge", "le", "eq"], required=True)
    p.add_argument("--cross-check", action="store_true",
                   help="run the bounded optimization falsifier as well")
    add("mfmc", cmd_mfmc, "max-flow min-cut property")
    add("ntf", cmd_ntf, "normally torsion free")
    add("duality", cmd_duality, "five-way complementation duality report")
    add("uniform-consequences", cmd_uniform_consequences,
        "diagonalization and matching consequences for uniform clutters")
    add("a-invariant", cmd_a_invariant, "a-invariant of the downset subring")
    p = add("canonical", cmd_canonical, "canonical module generators")
    p.add_argument("--b-max", type=int, default=None)
    add("gorenstein", cmd_gorenstein, "Gorenstein decision ladder")
    add("ci-bipartite", cmd_ci_bipartite, "complete intersection for graphs")
    add("edge-cone", cmd_edge_cone, "edge cone halfspace description")
    add("symbolic-gens", cmd_symbolic_gens, "symbolic blowup generators")
    add("cover-gens", cmd_cover_gens, "cover algebra generators")
    add("irreducible-subgraphs", cmd_irreducible_subgraphs,
        "irreducible induced subgraphs with cover numbers")
    add("irreducible-graph", cmd_irreducible_graph, "irreducibility of a graph")
    p = add("cone-lift", cmd_cone_lift, "lift cover-cone facets to the cone graph")
    p.add_argument("--facet", default=None,
                   help="comma-separated facet normal (a1,...,an,-b)")

    p = sub.add_parser("sweep", help="bounded conjecture sweeps, reported never asserted")
    p.add_argument("--conjecture", required=True,
                   choices=["cc", "2.2.15", "2.2.16", "2.4.3", "1.5.6"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--out", default=None, help="write the report to a file")
    p.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except textio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ZeroMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except CrossCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return INTERNAL
    except ValueError as exc:
        message = str(exc)
        if "too large" in message or "cap" in message:
            print(f"error: {message}", file=sys.stderr)
            return CAP
        print(f"error: {message}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

"""File formats: clutter and matrix text files, poset cover lists, JSON mirrors."""

from __future__ import annotations

import json
from fractions import Fraction

from .clutters import Clutter, MonomialIdeal, _name_key
from .graphs import Poset
from .intmatrix import IntMatrix
from .polyhedra import Polyhedron


class ParseError(ValueError):
    pass


def _strip_comments(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_clutter(text: str) -> Clutter:
    """Line one names the vertices; every further line is one edge."""
    lines = _strip_comments(text)
    if not lines or not lines[0].lower().startswith("vertices:"):
        raise ParseError("first line must be 'vertices: x1 x2 ...'")
    vertices = lines[0].split(":", 1)[1].split()
    if not vertices:
        raise ParseError("empty vertex list")
    if len(set(vertices)) != len(vertices):
        raise ParseError("repeated vertex name")
    edges = [line.split() for line in lines[1:]]
    if not edges:
        raise ParseError("no edges")
    for e in edges:
        for v in e:
            if v not in vertices:
                raise ParseError(f"edge uses unknown vertex {v!r}")
        if len(set(e)) != len(e):
            raise ParseError(f"repeated vertex inside edge {e}")
    try:
        return Clutter.from_edges(edges, vertices=vertices)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_clutter(c: Clutter) -> str:
    lines = ["vertices: " + " ".join(c.vertices)]
    for e in c.edge_names():
        lines.append(" ".join(e))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    """First line 'rows cols', then one whitespace-separated row per line."""
    lines = _strip_comments(text)
    if not lines:
        raise ParseError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("first line must be 'rows cols'")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError("first line must be 'rows cols'") from exc
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}")
    entries = []
    for line in body:
        parts = line.split()
        if len(parts) != cols:
            raise ParseError(f"expected {cols} entries per row: {line!r}")
        try:
            entries.append([int(x) for x in parts])
        except ValueError as exc:
            raise ParseError(f"non-integer entry in {line!r}") from exc
    return IntMatrix.from_rows(entries)


def format_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for row in m.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """One cover relation 'a < b' per line."""
    lines = _strip_comments(text)
    covers = []
    elements: list[str] = []
    for line in lines:
        parts = line.split("<")
        if len(parts) != 2:
            raise ParseError(f"expected 'a < b', found {line!r}")
        a, b = parts[0].strip(), parts[1].strip()
        if not a or not b or a == b:
            raise ParseError(f"bad cover relation {line!r}")
        for v in (a, b):
            if v not in elements:
                elements.append(v)
        covers.append((a, b))
    if not covers:
        raise ParseError("no cover relations")
    try:
        return Poset.from_cover_names(elements, covers)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def clutter_to_graph(c: Clutter) -> Clutter:
    if not c.is_graph():
        raise ParseError("input clutter is not a graph (all edges must have two vertices)")
    return c


def polyhedron_to_json(p: Polyhedron) -> dict:
    return {
        "inequalities": [list(n) + [b] for n, b in p.inequalities]
        + [row for n, b in p.equations for row in
           ([list(n) + [b], [-x for x in n] + [-b]])],
        "vertices": [[str(Fraction(x)) for x in v] for v in p.vertices],
        "rays": [list(r) for r in p.rays],
    }


def ideal_lines(ideal: MonomialIdeal) -> str:
    return "\n".join(ideal.monomial_strings()) + "\n"


def vectors_lines(vectors) -> str:
    """Hilbert-basis style output: one vector per line, entries space-separated."""
    return "\n".join(" ".join(str(x) for x in v) for v in sorted(vectors)) + "\n"


def json_dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"

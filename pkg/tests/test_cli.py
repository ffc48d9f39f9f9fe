import json

import pytest

from clutter_algebra.cli import main
from clutter_algebra.textio import (
    format_clutter,
    format_matrix,
    parse_clutter,
    parse_matrix,
    parse_poset,
)

from conftest import (
    clutter_triangle,
    five_vertex_mixed_mfmc,
    six_vertex_two_partitionable,
)

TRIANGLE = """\
# a triangle
vertices: x1 x2 x3
x1 x2
x2 x3
x1 x3
"""


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.clutter"
    path.write_text(TRIANGLE)
    return str(path)


@pytest.fixture
def mixed_file(tmp_path):
    path = tmp_path / "mixed.clutter"
    path.write_text(format_clutter(five_vertex_mixed_mfmc()))
    return str(path)


@pytest.fixture
def partitionable_file(tmp_path):
    path = tmp_path / "partitionable.clutter"
    path.write_text(format_clutter(six_vertex_two_partitionable()))
    return str(path)


class TestFormats:
    def test_clutter_round_trip(self):
        c = parse_clutter(TRIANGLE)
        assert c.edge_names() == clutter_triangle().edge_names()
        assert parse_clutter(format_clutter(c)).edges == c.edges

    def test_matrix_round_trip(self):
        m = clutter_triangle().incidence_matrix()
        assert parse_matrix(format_matrix(m)).entries == m.entries

    def test_matrix_comments(self):
        text = "# comment\n2 2\n1 0\n0 1\n"
        assert parse_matrix(text).entries == ((1, 0), (0, 1))

    def test_poset(self):
        p = parse_poset("a < b\nb < c\n")
        assert (0, 2) in p.less_than()

    def test_bad_inputs(self):
        from clutter_algebra.textio import ParseError

        for bad in ["", "vertices: x1\n", "vertices: x1 x1\nx1\n", "x1 x2\n"]:
            with pytest.raises(ParseError):
                parse_clutter(bad)


class TestExitCodes:
    def test_mfmc_true(self, mixed_file, capsys):
        assert main(["mfmc", mixed_file]) == 0
        assert "mfmc: True" in capsys.readouterr().out

    def test_koenig_false_with_certificate(self, partitionable_file, capsys):
        assert main(["koenig", partitionable_file]) == 1
        out = capsys.readouterr().out
        assert "alpha0" in out and "beta1" in out

    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "empty.clutter"
        path.write_text("vertices: x1 x2\n")
        assert main(["covers", str(path)]) == 2

    def test_cap_exceeded(self, triangle_file):
        assert main(["packing", triangle_file, "--max-vertices", "2"]) == 3

    def test_unknown_flag(self, triangle_file):
        assert main(["koenig", triangle_file, "--bogus"]) == 2

    def test_missing_file(self):
        assert main(["covers", "/nonexistent/file"]) == 2


class TestSubcommands:
    def test_covers_json(self, triangle_file, capsys):
        assert main(["covers", triangle_file, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert sorted(data["covers"]) == [
            ["x1", "x2"], ["x1", "x3"], ["x2", "x3"]
        ]

    def test_snf_on_clutter_input(self, triangle_file, capsys):
        assert main(["snf", triangle_file, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["invariant_factors"] == [1, 1, 2]

    def test_delta(self, triangle_file, capsys):
        assert main(["delta", triangle_file, "--rank", "3", "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["delta"] == 2

    def test_normal(self, triangle_file):
        assert main(["normal", triangle_file]) == 0

    def test_irp_requires_system(self, triangle_file):
        assert main(["irp", triangle_file]) == 2

    def test_irp_eq_false_on_triangle(self, triangle_file):
        assert main(["irp", triangle_file, "--system", "eq"]) == 1

    def test_duality(self, triangle_file, capsys):
        assert main(["duality", triangle_file, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["cross_checks"] == []

    def test_symbolic_gens(self, triangle_file, capsys):
        assert main(["symbolic-gens", triangle_file]) == 0
        out = capsys.readouterr().out
        assert "x1*x2*x3 * t^2" in out

    def test_matching_none_is_exit_one(self, partitionable_file):
        assert main(["matching", partitionable_file]) == 1

    def test_minors(self, triangle_file, capsys):
        assert main(["minors", triangle_file, "--delete", "x1"]) == 0
        assert "x2 x3" in capsys.readouterr().out

    def test_gorenstein_on_matrix(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        path.write_text("2 1\n1\n1\n")
        assert main(["gorenstein", str(path)]) == 0

    def test_balanced_false(self, triangle_file, capsys):
        assert main(["balanced", triangle_file]) == 1

    def test_edge_cone(self, triangle_file, capsys):
        assert main(["edge-cone", triangle_file, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [1, 1, -1] in data["halfspaces"]

    def test_cone_lift(self, triangle_file, capsys):
        assert main(["cone-lift", triangle_file, "--facet", "1,1,1,-2"]) == 0
        assert "x1*x2*x3*x4 * t^3" in capsys.readouterr().out

    def test_irreducible_graph(self, triangle_file):
        assert main(["irreducible-graph", triangle_file]) == 0


class TestSweep:
    def test_cc_sweep_small(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main([
            "sweep", "--conjecture", "cc", "--max-vertices", "4",
            "--out", str(out), "--json",
        ]) == 0
        data = json.loads(out.read_text())
        assert data["violations"] == []
        assert data["instances"] > 0

    def test_gorenstein_sweep_logs_pairs(self, capsys):
        assert main([
            "sweep", "--conjecture", "1.5.6", "--max-vertices", "4", "--json",
        ]) == 0
        data = json.loads(capsys.readouterr().out)
        assert all(
            "gorenstein" in pair and "exact_vertex_condition" in pair
            for pair in data["pairs"]
        )

    def test_determinism(self, capsys):
        assert main(["sweep", "--conjecture", "2.2.16", "--max-vertices", "4",
                     "--json"]) == 0
        first = capsys.readouterr().out
        assert main(["sweep", "--conjecture", "2.2.16", "--max-vertices", "4",
                     "--json"]) == 0
        assert capsys.readouterr().out == first

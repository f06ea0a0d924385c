"""CLI subcommands, exit codes, and SVG rendering."""

import json
import xml.etree.ElementTree as ET

import pytest

from polycenter import Dissection, render_svg
from polycenter.cli import run

SVG_NS = "{http://www.w3.org/2000/svg}"

FIGURE_STYLE_12GON = "0-3,3-7,0-7,0-2,3-5,5-7,7-9,9-11,7-11"


def elements_with_class(svg_text, cls):
    root = ET.fromstring(svg_text)
    return [el for el in root.iter() if el.get("class") == cls]


class TestSequenceCommands:
    def test_catalan(self, capsys):
        assert run(["catalan", "4"]) == 0
        assert capsys.readouterr().out.strip() == "14"

    def test_catalan_mod(self, capsys):
        assert run(["catalan", "7", "--mod", "2"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_fuss_kang_quad(self, capsys):
        assert run(["fuss", "2", "3"]) == 0
        assert run(["kang", "6", "4"]) == 0
        assert run(["quad", "2"]) == 0
        assert capsys.readouterr().out.split() == ["3", "3", "3"]

    def test_expect_pass_and_fail(self, capsys):
        assert run(["catalan", "4", "--expect", "14"]) == 0
        assert run(["catalan", "4", "--expect", "15"]) == 1

    def test_roundtrip_reparse(self, capsys):
        from polycenter import catalan

        assert run(["catalan", "30"]) == 0
        assert int(capsys.readouterr().out) == catalan(30)


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_unknown_flag(self, capsys):
        assert run(["catalan", "4", "--bogus"]) == 2

    def test_non_numeric_argument(self, capsys):
        assert run(["catalan", "four"]) == 2

    def test_malformed_diagonals(self, tmp_path, capsys):
        out = tmp_path / "x.svg"
        assert run(["render", "6", "--diagonals", "0-2,zz", "--out", str(out)]) == 2
        assert not out.exists()


class TestVerifyCommands:
    def test_recursion_central(self, capsys):
        assert run(["verify", "recursion", "--kind", "central", "--max", "20"]) == 0
        out = capsys.readouterr().out
        assert "n=20 OK" in out and "verified 18 cases" in out

    def test_recursion_quad_and_kang(self, capsys):
        assert run(["verify", "recursion", "--kind", "quad", "--max", "10"]) == 0
        assert run(["verify", "recursion", "--kind", "kang", "--k", "5", "--max", "30"]) == 0

    def test_congruence_json(self, capsys):
        assert run(["verify", "congruence", "--theorem", "odd", "--max", "100", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["passed"] is True and doc["counterexample"] is None
        assert doc["theorem"] == "odd" and doc["range"] == {"max_n": 100}

    def test_congruence_modp(self, capsys):
        assert run(["verify", "congruence", "--theorem", "modp", "--p", "7", "--max", "300"]) == 0
        assert run(["verify", "congruence", "--theorem", "kangp", "--p", "5", "--k", "4", "--max", "100"]) == 0

    def test_congruence_bad_prime(self, capsys):
        assert run(["verify", "congruence", "--theorem", "modp", "--p", "4", "--max", "100"]) == 2


class TestCensusCommand:
    def test_json(self, capsys):
        assert run(["census", "6", "--k", "3", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["entries"] == [
            {"shape": "diameter", "count": "12"},
            {"shape": [2, 2, 2], "count": "2"},
        ]

    def test_delimited(self, capsys):
        assert run(["census", "5"]) == 0
        assert capsys.readouterr().out == "1,2,2\t5\n"


class TestFixedVertexCommand:
    def test_all_routes_agree(self, capsys):
        assert run(["fixed-vertex", "6", "--brute", "--dyck"]) == 0
        lines = dict(
            line.split("\t") for line in capsys.readouterr().out.strip().splitlines()
        )
        assert lines == {"closed-form": "9", "brute-force": "9", "dyck": "9"}


class TestRender:
    def test_diameter_highlight(self, tmp_path, capsys):
        out = tmp_path / "d.svg"
        assert run(["render", "4", "--diagonals", "0-2", "--out", str(out), "--highlight-central"]) == 0
        central = elements_with_class(out.read_text(), "central")
        assert len(central) == 1
        assert central[0].tag == f"{SVG_NS}line"

    def test_cell_highlight(self, tmp_path):
        out = tmp_path / "c.svg"
        assert run(["render", "6", "--diagonals", "0-2,2-4,0-4", "--out", str(out), "--highlight-central"]) == 0
        central = elements_with_class(out.read_text(), "central")
        assert len(central) == 1
        assert central[0].tag == f"{SVG_NS}polygon"

    def test_no_highlight(self, tmp_path):
        out = tmp_path / "p.svg"
        assert run(["render", "6", "--diagonals", "0-2,2-4,0-4", "--out", str(out)]) == 0
        assert elements_with_class(out.read_text(), "central") == []


class TestSvgDocument:
    def test_well_formed_with_vertex_markers(self):
        svg = render_svg(Dissection(6, {(0, 2), (2, 4), (0, 4)}))
        root = ET.fromstring(svg)
        assert root.tag == f"{SVG_NS}svg"
        circles = [el for el in root.iter() if el.get("class") == "vertex"]
        labels = [el for el in root.iter() if el.get("class") == "label"]
        assert len(circles) == 6 and len(labels) == 6

    def test_deterministic(self):
        d1 = Dissection(8, {(0, 2), (2, 4), (4, 6), (0, 4), (0, 6)})
        d2 = Dissection(8, [(6, 4), (2, 0), (4, 2), (4, 0), (6, 0)])
        assert render_svg(d1) == render_svg(d2)

    def test_figure_style_central_triangle(self):
        from polycenter import central_component, face_arcs, parse_diagonals

        d = Dissection(12, parse_diagonals(FIGURE_STYLE_12GON))
        c = central_component(d)
        assert not c.is_diameter
        assert sorted(face_arcs(c.cell, 12)) == [3, 4, 5]
        central = elements_with_class(render_svg(d), "central")
        assert len(central) == 1

import io
import json
import subprocess
import sys

import pytest

from gsep import fixture_path
from gsep.cli import run

RUNNING = str(fixture_path("ex-running.mat"))


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, out = call(*argv)
    return code, json.loads(out)


def test_check_valid():
    code, out = call_json("check", RUNNING)
    assert code == 0
    assert out["valid"] and out["rank"] == 3 and out["n"] == 5


def test_check_invalid_reports_witness():
    code, out = call_json("check", str(fixture_path("bad.mat")))
    assert code == 2
    assert out["error"]["type"] == "UnimodularityError"
    assert out["error"]["witness"]["determinant"] == 2


def test_missing_file_is_io_error(tmp_path):
    code, out = call_json("info", str(tmp_path / "nope.mat"))
    assert code == 3


def test_parse_error(tmp_path):
    path = tmp_path / "broken.mat"
    path.write_text("2 2\n1 0\n")
    code, out = call_json("check", str(path))
    assert code == 2
    assert out["error"]["type"] == "ParseError"


@pytest.mark.parametrize("verb,key,count", [
    ("bases", "bases", 8),
    ("circuits", "circuits", 3),
    ("cuts", "cuts", 17),
    ("flows", "flows", 7),
    ("facets", "facets", 12),
    ("polar-points", "points", 17),
    ("graver", "binomials", 37),
    ("groebner", "binomials", 23),
    ("triangulate", "cone_facets", 16),
])
def test_counts(verb, key, count):
    code, out = call_json(verb, RUNNING)
    assert code == 0
    assert len(out[key]) == count


def test_k_flag():
    assert len(call_json("polar-points", RUNNING, "--k", "2")[1]["points"]) == 75
    assert len(call_json("cuts", RUNNING, "--k", "3")[1]["cuts"]) == 75
    code, out = call_json("cuts", RUNNING, "--k", "0")
    assert code == 2


def test_hstar_and_gamma():
    assert call_json("hstar", RUNNING)[1]["hstar"] == [1, 7, 7, 1]
    out = call_json("gamma", RUNNING)[1]
    assert out["gamma"] == [1, 4]


def test_facets_auto_simplify(tmp_path):
    path = tmp_path / "par.mat"
    path.write_text("2 4\n1 0 1 -1\n0 1 0 0\n")
    code, out = call_json("facets", str(path))
    assert code == 0
    assert out["simplified"] is True
    assert out["ground_labels"] == [1, 2]


def test_graph_input_and_from_graph():
    c3 = str(fixture_path("c3.graph"))
    out = call_json("from-graph", c3)[1]
    assert out["matrix"] == [[1, 0, 1], [0, 1, -1]]
    assert call_json("info", c3)[1]["rank"] == 2


def test_equiv_with_and_without_correspondence(tmp_path):
    m1, m2 = str(fixture_path("u23-m1.mat")), str(fixture_path("u23-m2.mat"))
    code, out = call_json("equiv", m1, m2)
    assert code == 0 and out["equivalent"]
    corr = tmp_path / "sigma.txt"
    corr.write_text("1 1\n2 2\n3 3\n")
    code, out = call_json("equiv", m1, m2, "--correspondence", str(corr))
    assert code == 0 and out["f"] == [[1, 0], [0, -1]]
    code, out = call_json("equiv", m1)
    assert code == 2


def test_whitney_equiv():
    g, h = str(fixture_path("whitney-g.graph")), str(fixture_path("whitney-h.graph"))
    code, out = call_json("equiv", g, h)
    assert code == 0 and out["equivalent"]


def test_text_format_and_out_file(tmp_path):
    code, text = call("bases", RUNNING, "--format", "text")
    assert code == 0
    assert "bases:" in text and "  1 2 3" in text
    dest = tmp_path / "report.json"
    code, text = call("cuts", RUNNING, "--out", str(dest))
    assert code == 0 and text == ""
    assert len(json.loads(dest.read_text())["cuts"]) == 17


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gsep", "check", RUNNING],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["valid"] is True

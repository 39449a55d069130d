import json

import pytest

from rp2conf import catalog, cli, walls


def _write(tmp_path, pts, name="pts.txt"):
    p = tmp_path / name
    p.write_text("# test points\n" + catalog.format_points(pts))
    return str(p)


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_seven(tmp_path, capsys):
    f = _write(tmp_path, catalog.seven_representatives()["(E,6)"])
    code, out, _ = _run(capsys, "classify", f)
    assert code == cli.EXIT_OK
    assert "(7,0,0,0)" in out and "fingerprint" in out


def test_classify_six_json(tmp_path, capsys):
    f = _write(tmp_path, catalog.zone_representative("A"))
    code, out, _ = _run(capsys, "classify", f, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["symbol"] == "α" and data["interior_count"] == 6


def test_classify_rationals_and_out_file(tmp_path, capsys):
    pts = catalog.zone_representative("D")
    text = "\n".join(f"{x0}/2 {x1}/2 {x2}/2" for x0, x1, x2 in pts.values())
    f = tmp_path / "rat.txt"
    f.write_text(text + "\n")
    out_file = tmp_path / "report.txt"
    code, out, _ = _run(capsys, "classify", str(f), "--out", str(out_file))
    assert code == 0 and out == ""
    assert out_file.read_text().startswith("class δ")


def test_classify_collinear_reports_the_wall(tmp_path, capsys):
    at = walls.cross_wall(catalog.seven_representatives()["(D,6)"], (4, 5, 6)).crossing.at_wall
    code, out, _ = _run(capsys, "classify", _write(tmp_path, at))
    assert code == cli.EXIT_DEGENERATE
    assert "line wall W18" in out and "refined wall W18_" in out


def test_classify_coconic_reports_the_conic_wall(tmp_path, capsys):
    code, out, _ = _run(capsys, "classify", _write(tmp_path, catalog.coconic_representative("C")))
    assert code == cli.EXIT_DEGENERATE
    assert "conic wall C" in out


def test_classify_multiply_degenerate_does_not_crash(tmp_path, capsys):
    pts = {1: (0, 0, 1), 2: (1, 0, 1), 3: (2, 0, 1), 4: (3, 0, 1), 5: (0, 1, 1), 6: (1, 5, 1)}
    code, out, _ = _run(capsys, "classify", _write(tmp_path, pts))
    assert code == cli.EXIT_DEGENERATE and "other" in out


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3\n4 5 6\n",
        "1 2 3\n" * 5 + "1 2 x\n",
        "1 2 3\n" * 5 + "0 0 0\n",
        "1 2\n" * 6,
        "1 2 3\n" * 5 + "1/0 2 3\n",
    ],
)
def test_malformed_files(tmp_path, capsys, text):
    f = tmp_path / "bad.txt"
    f.write_text(text)
    code, _, err = _run(capsys, "classify", str(f))
    assert code == cli.EXIT_PARSE and "parse error" in err


def test_missing_file(capsys):
    code, _, err = _run(capsys, "classify", "/nonexistent/points.txt")
    assert code == cli.EXIT_PARSE


def test_census_output_is_byte_identical(capsys):
    a = _run(capsys, "census", "--kind", "six", "--samples", "30", "--seed", "4")
    b = _run(capsys, "census", "--kind", "six", "--samples", "30", "--seed", "4")
    assert a == b and a[0] == 0
    c = _run(capsys, "census", "--kind", "seven", "--samples", "10", "--format", "json")
    assert c[0] == 0 and json.loads(c[1])["failures"] == []


def test_census_invalid_config(capsys):
    assert _run(capsys, "census", "--samples", "0")[0] == cli.EXIT_PARSE
    assert _run(capsys, "census", "--bound", "1")[0] == cli.EXIT_PARSE


def test_graph_formats(capsys):
    code, out, _ = _run(capsys, "graph", "--level", "6")
    assert code == 0 and "4 vertices, 3 edges" in out
    code, out, _ = _run(capsys, "graph", "--level", "6", "--conics", "--format", "json")
    assert len(json.loads(out)["edges"]) == 4
    code, out, _ = _run(capsys, "graph", "--level", "7", "--format", "dot")
    assert out.startswith("graph level7 {") and out.count(" -- ") == 27


def test_representatives(capsys):
    code, out, _ = _run(capsys, "representatives", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["seven"]) == 14 and len(data["coconic"]) == 11


def test_cross(tmp_path, capsys):
    f = _write(tmp_path, catalog.seven_representatives()["(D,6)"])
    code, out, _ = _run(capsys, "cross", f, "456", "--refined")
    assert code == 0
    assert out.startswith("(3,4,0,0)_1 -- W18_")
    assert "--> (1,4,2,0)" in out
    code, out, _ = _run(capsys, "cross", _write(tmp_path, catalog.six_representatives()["beta"], "b.txt"), "conic")
    assert code == 0 and "conic" in out
    for bad in ("45", "089", "445", "conic", "conic:9", "conic:x"):
        assert _run(capsys, "cross", f, bad)[0] == cli.EXIT_PARSE, bad
    code, out, _ = _run(capsys, "cross", f, "123")
    assert code == cli.EXIT_FAIL and out.startswith("blocked")


def test_tables_subset(capsys):
    code, out, _ = _run(capsys, "tables", "--only", "cubic_pencils", "conic_pencils")
    assert code == 0 and "[cubic_pencils] ok" in out
    assert _run(capsys, "tables", "--only", "nonsense")[0] == cli.EXIT_PARSE

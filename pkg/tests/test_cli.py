import json

import pytest

from btangent import ManifoldFormatError, parse_manifold
from btangent.cli import RunConfig, main, run
from btangent.manifold_io import BUNDLED_NAMES, bundled_path, load_manifold

from corpus import torus_loop_graph


def test_euler_on_bundled_sphere(capsys):
    code = main(["euler", "sphere_equator"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.endswith("\n")
    doc = json.loads(out)
    assert doc["b_euler"] == 0
    assert doc["classical_euler"] == 2


def test_color_torus_loop_is_negative(capsys):
    code = main(["color", "torus_loop"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 2
    assert doc["verdict"] == "NOT TWO-COLORABLE"
    assert doc["coloring"] is None


def test_analyze_with_bm_classification(capsys):
    code = main(["analyze", "sphere_equator", "--m", "3"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["two_colorable"] is True
    assert doc["bm_classification"] == {"m": 3, "class": "BTangentEquivalent"}


def test_identical_invocations_are_byte_identical():
    cfg = RunConfig(subcommand="sphere", n="3", samples="10000", seed="7")
    first = run(cfg)
    second = run(cfg)
    assert first == second
    assert first[0] == 0


def test_index_subcommand_values(capsys):
    code = main(["index", "x_delta", "--delta", "0.5"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["index"] == 1

    main(["index", "x_delta", "--delta", "-0.5"])
    assert json.loads(capsys.readouterr().out)["index"] == -1

    main(["index", "x0_degenerate"])
    assert json.loads(capsys.readouterr().out)["index"] == 0

    main(["index", "x0_degenerate", "--frame", "b"])
    assert json.loads(capsys.readouterr().out)["index"] == 1


def test_edge_subcommand_exit_codes(capsys):
    code = main(["edge", "torus_loop", "--dim-m", "2", "--dim-f", "1"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 2
    assert doc["verdict"] == "Obstructed"

    code = main(["edge", "sphere_equator", "--dim-m", "2", "--dim-f", "0"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["verdict"] == "Inconclusive"


def test_ph_verify_passes_on_sphere(capsys):
    code = main(["ph-verify", "sphere_equator"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["passed"] is True
    assert doc["colored_sum"] == doc["b_euler"] == 0
    assert doc["unsigned_sum"] == doc["classical_euler"] == 2


def test_markdown_format(capsys):
    code = main(["euler", "sphere_equator", "--format", "markdown"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("# euler\n")
    assert "| b_euler | 0 |" in out


def test_dot_format(capsys):
    main(["analyze", "sphere_equator", "--format", "dot"])
    out = capsys.readouterr().out
    assert out.startswith("graph regions {")
    assert "fillcolor=white" in out and "fillcolor=gray" in out
    assert '"B+" -- "B-" [label="Z0"];' in out

    code = main(["analyze", "torus_loop", "--format", "dot"])
    out = capsys.readouterr().out
    assert code == 2
    assert "// NOT TWO-COLORABLE" in out
    assert '"T" -- "T"' in out


def test_dot_rejected_where_meaningless(capsys):
    code = main(["sphere", "--n", "2", "--samples", "10000", "--format", "dot"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_missing_input_is_operational_error(capsys):
    code = main(["euler"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_unknown_bundled_name(capsys):
    code = main(["euler", "no_such_manifold"])
    err = capsys.readouterr().err
    assert code == 1
    assert "no bundled manifold" in err


def test_bad_numeric_flag(capsys):
    code = main(["edge", "sphere_equator", "--dim-m", "two", "--dim-f", "0"])
    err = capsys.readouterr().err
    assert code == 1
    assert "decimal" in err


def test_file_input_and_round_trip(tmp_path, capsys):
    g = torus_loop_graph()
    path = tmp_path / "loop.json"
    path.write_text(json.dumps({"graph": g.to_json_dict()}), encoding="utf-8")
    code = main(["analyze", str(path)])
    doc = json.loads(capsys.readouterr().out)
    assert code == 2
    assert doc["two_colorable"] is False


def test_surface_document_input(tmp_path, capsys):
    doc = {
        "surface": {
            "vertices": 6,
            "triangles": [
                [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 2, 5],
                [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 2, 5],
            ],
            "z_edges": [[2, 3], [3, 4], [4, 5], [2, 5]],
        }
    }
    path = tmp_path / "oct.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code = main(["euler", str(path)])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["b_euler"] == 0
    assert report["classical_euler"] == 2


def test_malformed_json_reports_pointer(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["euler", str(path)]) == 1
    assert "not valid JSON" in capsys.readouterr().err


def test_schema_errors_carry_json_pointers():
    with pytest.raises(ManifoldFormatError) as exc:
        parse_manifold({"graph": {"regions": [{"label": "A", "chi": 1}],
                                  "edges": [{"label": "Z", "a": "A", "b": "Q"}],
                                  "ambient_dim": 2, "orientable": True}})
    assert exc.value.pointer == "/graph/edges/0/b"

    with pytest.raises(ManifoldFormatError) as exc:
        parse_manifold({"graph": {"regions": [{"label": "A", "chi": 1.5}],
                                  "edges": [], "ambient_dim": 2, "orientable": True}})
    assert exc.value.pointer == "/graph/regions/0/chi"

    with pytest.raises(ManifoldFormatError) as exc:
        parse_manifold({"surface": {"vertices": 4, "triangles": [[0, 1]]}})
    assert exc.value.pointer == "/surface/triangles/0"

    with pytest.raises(ManifoldFormatError) as exc:
        parse_manifold({"graph": {}, "surface": {}})
    assert exc.value.pointer == "/"


def test_every_bundled_manifold_loads():
    for name in BUNDLED_NAMES:
        g = load_manifold(bundled_path(name))
        assert g.regions
    with pytest.raises(KeyError):
        bundled_path("unknown")

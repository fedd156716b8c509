import json
import random

import jsonschema
import pytest

from extremalkit import io
from extremalkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spec_examples(capsys):
    code, out, _ = run(capsys, "ex-multipartite", "--parts", "2,2,2", "--clique", "3")
    assert code == 0 and out.splitlines() == ["8", "partition: [[0], [1, 2]]"]
    code, out, _ = run(capsys, "maxcr", "--diam4", "3,2,2,1")
    assert code == 0 and out.strip() == "44"
    code, out, _ = run(capsys, "oracle", "ex-min", "--weights", "1,1,1,1", "--clique", "3")
    assert code == 0 and out.splitlines()[0] == "4"


def test_rationals_printed_exactly(capsys):
    code, out, _ = run(capsys, "--format", "json", "ex-min", "--weights", "1/2,1/3,1/6", "--clique", "3")
    assert code == 0 and json.loads(out) == {"value": "1/2"}


def _value(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    return json.loads(out)["value"]


def test_brute_force_agrees(capsys):
    rng = random.Random(14)
    for _ in range(15):
        w = ",".join(str(rng.randint(0, 9)) for _ in range(rng.randint(2, 6)))
        clique = str(rng.randint(3, 5))
        for cmd in ("ex-min", "ex-prod"):
            args = (cmd, "--weights", w, "--clique", clique)
            assert _value(capsys, *args) == _value(capsys, *args, "--brute-force")
    for parts in ("2,2,2", "3,2,1", "1,1,1,1", "3,3,2"):
        args = ("ex-multipartite", "--parts", parts, "--clique", "3")
        assert _value(capsys, *args) == _value(capsys, *args, "--brute-force")


def test_json_partition_matches_schema(capsys):
    code, out, _ = run(capsys, "ex-prod", "--weights", "3,2,2,1", "--clique", "3", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc["partition"], io.PARTITION_SCHEMA)


def test_draw_and_verify(capsys, tmp_path):
    svg, js = tmp_path / "f.svg", tmp_path / "f.json"
    code, out, _ = run(capsys, "draw", "--diam4", "3,2,2,1", "--svg", str(svg), "--json", str(js))
    assert code == 0 and "crossings: 44" in out
    assert svg.read_bytes().startswith(b"<?xml")
    jsonschema.validate(json.loads(js.read_text()), io.DRAWING_SCHEMA)
    code, out, _ = run(capsys, "--format", "json", "verify", "--drawing", str(js))
    doc = json.loads(out)
    assert doc["legal"] and doc["crossings"] == 44 and len(doc["missed"]) == 3 and doc["thrackle_bound"] == 47


def test_verify_illegal(capsys, tmp_path):
    js = tmp_path / "bad.json"
    js.write_text(json.dumps({"n": 3, "edges": [[0, 1]], "positions": [[0, 0, 0], [1, 2, 0], [2, 1, 0]]}))
    code, out, _ = run(capsys, "verify", "--drawing", str(js))
    assert code == 0 and out.startswith("legal: no") and "vertex-on-edge" in out


def test_anneal_and_tree_file(capsys, tmp_path):
    tree = tmp_path / "t.json"
    tree.write_text(json.dumps({"spider": [2, 2, 2]}))
    code, out, _ = run(capsys, "anneal", "--tree", str(tree), "--seed", "0", "--iters", "5000")
    assert code == 0 and "crossings: 8" in out
    code, out, _ = run(capsys, "maxcr", "--tree", str(tree))
    assert code == 0 and out.splitlines()[0] == "8"


def test_maxcr_other_tree_reports_bounds(capsys, tmp_path):
    tree = tmp_path / "t.json"
    edges = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [3, 7], [7, 8], [1, 9], [9, 10]]
    tree.write_text(json.dumps({"n": 11, "edges": edges}))
    code, out, _ = run(capsys, "--format", "json", "maxcr", "--tree", str(tree))
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "bounds" and doc["lower"] <= doc["upper"]


@pytest.mark.parametrize(
    "argv",
    [
        ("maxcr", "--spider", "2,x"),
        ("ex-min", "--weights", "1,abc", "--clique", "3"),
        ("ex-min", "--weights", "1,-1", "--clique", "3"),
        ("nonsense",),
        ("ex-prod", "--clique", "3"),
        ("maxcr",),
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with_exit = None
    try:
        with_exit = main(list(argv))
    except SystemExit as exc:
        with_exit = exc.code
    assert with_exit == 1


def test_malformed_file_points_to_schema(capsys, tmp_path):
    f = tmp_path / "w.json"
    f.write_text('{"weights": [1.5]}')
    code, _, err = run(capsys, "ex-min", "--weights-file", str(f), "--clique", "3")
    assert code == 1 and "SCHEMAS" in err


def test_caps_and_infeasible_exit_2(capsys):
    code, _, _ = run(capsys, "oracle", "ex-min", "--weights", ",".join(["1"] * 9), "--clique", "3")
    assert code == 2
    code, _, _ = run(capsys, "oracle", "ex-min", "--weights", "1,1,1,1", "--clique", "3", "--edges", "5")
    assert code == 2


def test_internal_assertion_exit_3(capsys, monkeypatch):
    from extremalkit import drawings

    monkeypatch.setattr(drawings, "d_via_turan", lambda c: -1)
    code, _, err = run(capsys, "maxcr", "--diam4", "3,2,2,1")
    assert code == 3 and "internal assertion" in err

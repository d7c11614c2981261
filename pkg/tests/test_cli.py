import json
import math
import subprocess
import sys

import pytest

from convexcurves import cli


def run(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_t1_example(capsys, tmp_path):
    code, out, _ = run(["verify", "--theorem", "T1", "--random", "n=32,count=100,seed=7"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 101
    assert lines[0] == "theorem_id,seed,n,lhs,rhs,slack,pass"
    assert all(l.endswith(",1") for l in lines[1:])


def test_verify_byte_identical(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        code, _, _ = run(["verify", "--random", "count=8,seed=3", "--output", str(p)], capsys)
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(cli.SEED_ENV, "7")
    _, a, _ = run(["verify", "--theorem", "T2", "--random", "count=5"], capsys)
    _, b, _ = run(["verify", "--theorem", "T2", "--random", "count=5,seed=7"], capsys)
    assert a == b


def test_missing_seed_is_config_error(capsys, monkeypatch):
    monkeypatch.delenv(cli.SEED_ENV, raising=False)
    code, _, err = run(["verify", "--random", "count=5"], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "ConfigError"


def test_two_sources_is_config_error(capsys, tmp_path):
    p = tmp_path / "disk.json"
    p.write_text('{"kind": "disk", "radius": 1}')
    code, _, err = run(["verify", "--shape", str(p), "--random", "count=1,seed=1"], capsys)
    assert code == 2 and "exactly one" in json.loads(err)["message"]


def test_bad_flag_is_config_error(capsys):
    code, _, err = run(["verify", "--nope"], capsys)
    assert code == 2
    assert set(json.loads(err)) == {"error", "message"}


def test_bad_shape_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "polygon", "vertices": [[0, 0], [0, 1], [1, 0]]}')
    code, _, err = run(["crofton", "--shape", str(p)], capsys)
    assert code == 2 and json.loads(err)["error"] == "InvalidShape"


def test_failing_check_exits_one(capsys):
    code, out, _ = run(["verify", "--theorem", "T1", "--random", "n=8,count=3,seed=1", "--rel-tol", "-10"], capsys)
    assert code == 1
    assert out.splitlines()[1].endswith(",0")


def test_witness_half_ellipse(capsys, tmp_path):
    svg = tmp_path / "h.svg"
    code, out, _ = run(["witness", "--name", "half-ellipse", "--k", "0.001", "--n", "5", "--figure", str(svg)], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["bound_chain"] < doc["half_perimeter_exact"]
    assert svg.read_text().startswith("<svg")


@pytest.mark.parametrize("name", ["rectangle", "lens", "deltoid"])
def test_witness_others(capsys, tmp_path, name):
    out = tmp_path / "w.json"
    code, _, _ = run(["witness", "--name", name, "--output", str(out), "--figure", str(tmp_path / "w.svg")], capsys)
    assert code == 0
    assert json.loads(out.read_text())["pass"] is True


def test_crofton_disk(capsys, tmp_path):
    p = tmp_path / "disk.json"
    p.write_text('{"kind": "disk", "radius": 1}')
    code, out, _ = run(["crofton", "--shape", str(p), "--angles", "720", "--offsets", "2000"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert abs(doc["estimate"] - 2 * math.pi) / (2 * math.pi) < 5e-3


def test_construct_and_maximin(capsys, tmp_path):
    code, out, _ = run(["construct", "--random", "n=12,count=2,seed=4", "--figure", str(tmp_path / "c.svg")], capsys)
    docs = json.loads(out)
    assert code == 0 and len(docs) == 2
    assert docs[0]["four_points"]["shortest_length"] >= 0.5 * docs[0]["perimeter"]
    code, out, _ = run(["maximin", "--random", "n=12,count=1,seed=4", "--restarts", "4"], capsys)
    assert code == 0 and json.loads(out)[0]["value"] > 0


def test_search(capsys):
    code, out, _ = run(["search", "--trials", "50", "--seed", "2"], capsys)
    assert code == 0
    assert json.loads(out)["candidates"] == []


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "convexcurves", "witness", "--name", "deltoid"], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["name"] == "deltoid"


def test_invalid_witness_parameters(capsys):
    code, _, err = run(["witness", "--name", "rectangle", "--L", "0.5"], capsys)
    assert code == 2 and json.loads(err)["error"] == "ValueError"
    code, _, err = run(["witness", "--name", "lens", "--apex", "100"], capsys)
    assert code == 2 and json.loads(err)["error"] == "NotThin"

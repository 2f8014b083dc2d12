import json
import subprocess
import sys
from importlib import resources

import pytest

from toric2fano import __version__, errors
from toric2fano.chow import class_polynomial
from toric2fano.cli import main
from toric2fano.constructions import hirzebruch, projective_space
from toric2fano.io import (cycle_class_from_dict, cycle_class_to_dict, database_to_jsonl,
                           dumps, fan_from_dict, fan_to_dict, parse_database, parse_fan)

P2_JSON = '{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]}'
BUNDLED = str(resources.files("toric2fano") / "data" / "fano3.jsonl")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.json"
    path.write_text(P2_JSON)
    return str(path)


# -- serialization ------------------------------------------------------------

def test_fan_round_trip(corpus):
    for fan in corpus:
        assert fan_from_dict(json.loads(dumps(fan_to_dict(fan)))) == fan


def test_cycle_class_round_trip():
    cls = class_polynomial(hirzebruch(3))
    assert cycle_class_from_dict(json.loads(dumps(cycle_class_to_dict(cls)))) == cls


def test_parse_fan_errors():
    with pytest.raises(errors.MalformedInput):
        parse_fan("{not json")
    with pytest.raises(errors.MalformedInput):
        parse_fan('{"dim": 2, "rays": [[1, 0]]}')
    with pytest.raises(errors.NonPrimitiveRay):
        parse_fan('{"dim": 2, "rays": [[2, 0], [0, 1], [-1, -1]], '
                  '"max_cones": [[0, 1], [1, 2], [2, 0]]}')


def test_database_line_numbers():
    text = "# header\n" + P2_JSON + "\n\n{oops\n"
    with pytest.raises(errors.MalformedInput) as info:
        parse_database(text)
    assert str(info.value).startswith("line 4:")


def test_database_jsonl_round_trip():
    fans = [projective_space(2), hirzebruch(1)]
    assert [fan_from_dict(d) for d in parse_database(database_to_jsonl(fans))] == fans


# -- CLI ----------------------------------------------------------------------

def test_check(capsys, p2_file):
    code, out, _ = run(capsys, "check", p2_file)
    assert code == 0
    assert json.loads(out) == {"smooth": True, "complete": True, "picard": 1}


def test_check_reads_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(P2_JSON.encode())))
    code, out, _ = run(capsys, "check")
    assert code == 0 and json.loads(out)["picard"] == 1


def test_invalid_fan_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [2, 0]]}')
    code, out, err = run(capsys, "check", str(path))
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "UnpairedWall"


def test_usage_errors_exit_1(capsys, p2_file):
    assert run(capsys)[0] == 1
    assert run(capsys, "class", p2_file, "--cone", "a,b")[0] == 1
    assert run(capsys, "bundle", "--m", "3", "--n", "2", "--twists", "0,1")[0] == 1
    assert run(capsys, "check", "/nonexistent/fan.json")[0] == 1
    assert run(capsys, "scan", BUNDLED, "--jobs", "0")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_class_and_curve(capsys, p2_file):
    code, out, _ = run(capsys, "class", p2_file, "--cone", "0")
    assert code == 0
    assert json.loads(out) == {"cone": [0], "degree": 1,
                               "coeffs": {"0": 1, "1": 1, "2": 1}}
    code, out, _ = run(capsys, "curve", p2_file)
    assert len(json.loads(out)["curves"]) == 3
    assert run(capsys, "class", p2_file, "--cone", "0,1,2")[0] == 2


def test_surface_chern_two_fano(capsys, p2_file):
    _, out, _ = run(capsys, "surface", p2_file)
    (rec,) = json.loads(out)["surfaces"]
    assert rec["kind"] == "P2" and rec["ch2_pair"] == "3/2"
    _, out, _ = run(capsys, "chern", p2_file)
    assert json.loads(out)["euler"] == 3
    _, out, _ = run(capsys, "two-fano", p2_file)
    assert json.loads(out)["is_two_fano"] is True
    _, out, _ = run(capsys, "ne2-rank", p2_file)
    assert json.loads(out) == {"n2_rank": 1}


def test_pretty(capsys, p2_file):
    code, out, _ = run(capsys, "check", p2_file, "--pretty")
    assert code == 0
    assert "picard" in out and "{" not in out


def test_bundle_and_delpezzo(capsys, tmp_path):
    code, out, _ = run(capsys, "bundle", "--m", "2", "--n", "4", "--twists", "2")
    assert code == 0
    fan = parse_fan(out)
    assert fan.dim == 4 and fan.picard == 2
    code, out, _ = run(capsys, "delpezzo")
    db = tmp_path / "dp.jsonl"
    db.write_text(out)
    code, out, _ = run(capsys, "scan", str(db))
    agg = json.loads(out)["aggregate"]
    assert (agg["fano"], agg["two_fano"]) == (5, 3)


def test_scan_bundled(capsys):
    code, out, _ = run(capsys, "scan", BUNDLED, "--fast")
    report = json.loads(out)
    assert code == 0
    assert report["aggregate"]["fano"] == 18 and report["aggregate"]["two_fano"] == 8
    assert len(report["input_sha256"]) == 64
    assert report["assumptions"]


def test_scan_with_invalid_entry_exit_2(capsys, tmp_path):
    db = tmp_path / "db.jsonl"
    db.write_text(P2_JSON + '\n{"dim": 2, "rays": [[1, 0]], "max_cones": [[0]]}\n')
    code, out, _ = run(capsys, "scan", str(db))
    report = json.loads(out)
    assert code == 2
    assert report["aggregate"]["invalid"] == 1 and report["aggregate"]["two_fano"] == 1


def test_scan_malformed_line_number(capsys, tmp_path):
    db = tmp_path / "db.jsonl"
    db.write_text(P2_JSON + "\n[1, 2\n")
    code, _, err = run(capsys, "scan", str(db))
    assert code == 2
    assert json.loads(err)["message"].startswith("line 2:")


def test_scan_is_deterministic_and_parallel_safe(capsys):
    outs = [run(capsys, "scan", BUNDLED)[1] for _ in range(2)]
    outs.append(run(capsys, "scan", BUNDLED, "--jobs", "3")[1])
    assert outs[0] == outs[1] == outs[2]


def test_sweep_rank2(capsys):
    code, out, _ = run(capsys, "sweep-rank2", "--dim", "4", "--budget", "4")
    res = json.loads(out)
    assert code == 0
    assert res["discrepancies"] == [] and res["two_fano_count"] == 5


def test_module_entry_point(p2_file):
    proc = subprocess.run([sys.executable, "-m", "toric2fano", "check", p2_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["smooth"] is True

import json

import pytest

from trestles.cli import main
from trestles.graphs import path_graph, spider, write_edgelist, write_graph6


@pytest.fixture
def p5(tmp_path):
    path = tmp_path / "p5.el"
    path.write_bytes(write_edgelist(path_graph(5)))
    return str(path)


@pytest.fixture
def sk14(tmp_path):
    path = tmp_path / "sk14.el"
    path.write_bytes(write_edgelist(spider(4)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_decide_spider4(capsys, sk14):
    code, out = run(capsys, "decide", sk14, "--k", "3")
    assert code == 1
    payload = json.loads(out)
    assert payload == {"feasible": False, "reason": "n(v)=4 > k"}


def test_build_p5_k2(capsys, p5):
    code, out = run(capsys, "build", p5, "--k", "2")
    assert code == 0
    cert = json.loads(out)["certificate"]
    assert cert["edges"] == [[0, 1], [0, 2], [1, 3], [2, 4], [3, 4]]
    assert cert["degrees"] == [2, 2, 2, 2, 2]


def test_square_roundtrip(capsys, p5):
    code, out = run(capsys, "square", p5)
    assert code == 0
    assert out.startswith("n=5\n")
    assert "0 2" in out


def test_centres(capsys, sk14):
    code, out = run(capsys, "centres", sk14, "--k", "4")
    assert code == 0
    assert json.loads(out)["centres"] == [0]


def test_graph6_input(capsys, tmp_path):
    path = tmp_path / "p5.g6"
    path.write_bytes(write_graph6(path_graph(5)))
    code, out = run(capsys, "decide", str(path), "--format", "graph6", "--k", "2")
    assert code == 0
    assert json.loads(out)["feasible"] is True


def test_build_then_verify(capsys, tmp_path, p5):
    code, out = run(capsys, "build", p5, "--k", "2")
    assert code == 0
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(out)
    code, out = run(capsys, "verify", p5, "--certificate", str(cert_path), "--k", "2")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_rejects_tampered(capsys, tmp_path, p5):
    code, out = run(capsys, "build", p5, "--k", "2")
    payload = json.loads(out)
    payload["certificate"]["edges"] = payload["certificate"]["edges"][:-1]
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(json.dumps(payload))
    code, out = run(capsys, "verify", p5, "--certificate", str(cert_path), "--k", "2")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_obstruction_verdict(capsys, tmp_path, sk14, p5):
    code, out = run(capsys, "obstruction", sk14)
    assert code == 1
    assert json.loads(out)["witness"]["kind"] == "spider"
    code, out = run(capsys, "obstruction", p5)
    assert code == 0
    assert json.loads(out) == {"obstruction": False}


def test_dot_output(capsys, tmp_path, sk14):
    dot = tmp_path / "w.dot"
    code, _ = run(capsys, "obstruction", sk14, "--dot", str(dot))
    assert code == 1
    text = dot.read_text()
    assert text.startswith("graph")
    assert "0" in text


def test_usage_error_on_missing_file(capsys):
    code = main(["decide", "/nonexistent/file.el", "--k", "3"])
    assert code == 2


def test_usage_error_on_bad_format(capsys, tmp_path):
    path = tmp_path / "bad.el"
    path.write_bytes(b"garbage\n")
    code = main(["decide", str(path), "--k", "3"])
    assert code == 2


def test_validate_small(capsys):
    code, out = run(capsys, "validate", "--max-n", "7", "--k", "3")
    assert code == 0
    assert "agree: 23/23" in out


def test_validate_jobs_deterministic(capsys):
    _, out1 = run(capsys, "validate", "--max-n", "7", "--k", "2")
    _, out2 = run(capsys, "validate", "--max-n", "7", "--k", "2", "--jobs", "2")
    assert out1 == out2


def test_determinism_of_build(capsys, p5):
    _, out1 = run(capsys, "build", p5, "--k", "3")
    _, out2 = run(capsys, "build", p5, "--k", "3")
    assert out1 == out2

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from genasso import cli
from genasso.export import parse_off


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_off_permutahedron(capsys):
    code, out, _ = run(capsys, "build", "--group", "A3", "--object", "permutahedron", "--format", "off")
    assert code == 0
    verts, faces = parse_off(out)
    assert len(verts) == 24 and len(faces) == 14


def test_build_json_hexagon(capsys):
    code, out, _ = run(capsys, "build", "--group", "I2:4", "--coxeter", "ts", "--object", "associahedron",
                       "--format", "json")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 6


def test_build_cambrian_dot_h3(capsys):
    code, out, _ = run(capsys, "build", "--group", "H3", "--coxeter", "s1s2s3", "--object", "cambrian-lattice",
                       "--format", "dot")
    assert code == 0
    assert out.count("label=") == 32


@pytest.mark.parametrize("obj,fmt", [("weak-order", "json"), ("weak-order", "dot"), ("root-system", "json"),
                                     ("permutahedron", "dot"), ("cambrian-lattice", "json"),
                                     ("associahedron", "off")])
def test_build_other_objects(capsys, obj, fmt):
    code, out, _ = run(capsys, "build", "--group", "B3", "--object", obj, "--format", fmt)
    assert code == 0 and out


def test_output_is_deterministic(tmp_path):
    paths = []
    for i in range(2):
        p = tmp_path / f"out{i}.json"
        assert cli.main(["build", "--group", "B3", "--coxeter", "t2s0t1", "--object", "associahedron",
                         "-o", str(p)]) == 0
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]


def test_basepoints(capsys):
    code, out, _ = run(capsys, "build", "--group", "A2", "--basepoint-delta", "2,3")
    assert code == 0 and json.loads(out)["basepoint"] == ["-2", "-1", "3"]
    code, out, _ = run(capsys, "build", "--group", "I2:5", "--basepoint-ambient", "5,6")
    assert code == 0 and len(json.loads(out)["vertices"]) == 10


@pytest.mark.parametrize("argv,code", [
    (["build", "--group", "Q9"], cli.EXIT_CONFIG),
    (["build", "--group", "A3", "--coxeter", "t1t1t2", "--object", "associahedron"], cli.EXIT_CONFIG),
    (["build", "--group", "A3", "--object", "root-system", "--format", "off"], cli.EXIT_CONFIG),
    (["build", "--group", "A3", "--basepoint-delta", "1,x,1"], cli.EXIT_CONFIG),
    (["build", "--group", "A3", "--basepoint-delta", "1,1,1"], cli.EXIT_PRECONDITION),
    (["build", "--group", "A3", "--basepoint-ambient", "3,2,1,0"], cli.EXIT_PRECONDITION),
    (["build", "--group", "I2:7", "--arith", "exact"], cli.EXIT_FIELD),
    (["verify", "--group", "H3", "--claim", "integer-coordinates"], cli.EXIT_PRECONDITION),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error:")


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "--group", "A3", "--claim", "facet-count", "--claim", "tamari",
                       "--claim", "singleton-intersection", "--claim", "centroid")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == 1 and rep["exact"] is True
    assert [c["id"] for c in rep["claims"]] == ["facet-count", "singleton-intersection", "tamari", "centroid"]
    assert {c["status"] for c in rep["claims"][:3]} == {"pass"}
    assert rep["claims"][3]["kind"] == "open-problem" and rep["claims"][3]["status"] == "reported"


def test_verify_float_group(capsys):
    code, out, _ = run(capsys, "verify", "--group", "I2:7", "--claim", "catalan")
    rep = json.loads(out)
    assert code == 0 and rep["exact"] is False
    assert all(case["vertices"] == 9 for case in rep["claims"][0]["witness"]["cases"])


def test_verify_b3_integer_coordinates(capsys):
    code, out, _ = run(capsys, "verify", "--group", "B3", "--claim", "integer-coordinates")
    assert code == 0 and json.loads(out)["claims"][0]["status"] == "pass"


def test_verify_theorem_failure_exit(monkeypatch, capsys):
    from genasso import verify

    monkeypatch.setitem(verify.CLAIMS, "facet-count",
                        {**verify.CLAIMS["facet-count"], "fn": lambda ctx: (False, {})})
    code, out, _ = run(capsys, "verify", "--group", "A2", "--claim", "facet-count")
    assert code == cli.EXIT_THEOREM and json.loads(out)["failed"] == ["facet-count"]


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "genasso.cli", "build", "--group", "A2", "--format", "off"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("OFF")

import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("TRIHERED_CLI", "build/trihered")
DATA = Path(os.environ.get("TRIHERED_DATA", Path(__file__).resolve().parents[2] / "data"))


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env)


def run_json(*args):
    r = run(*args, "--json")
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


@pytest.mark.parametrize("name,count", [("a2", 3), ("a3", 6), ("d4", 12)])
def test_indec_counts(name, count):
    out = run_json("indec", "list", "--quiver", DATA / f"{name}.json")
    assert out["count"] == count


def test_cyclic_quiver_rejected():
    r = run("quiver", "check", DATA / "cyclic.json")
    assert r.returncode == 2
    assert "directed cycle" in r.stderr


def test_missing_file_and_bad_prime():
    assert run("indec", "list", "--quiver", DATA / "nope.json").returncode == 2
    assert run("indec", "list", "--quiver", DATA / "a2.json", "--prime", "100").returncode == 2
    assert run("indec", "list", "--quiver", DATA / "a2.json", env={"TRIHERED_PRIME": "x"}).returncode == 2
    assert run("frobnicate").returncode == 2


def test_cone_of_p1_to_s1():
    out = run_json("cone", "--quiver", DATA / "a2.json", "--morphism", DATA / "p1_to_s1.json")
    assert out["method"] == "cone_in_H"
    assert out["cone"] == ["S2[1]"]
    assert out["exact"]


def test_hom_and_ext():
    out = run_json("hom", "--quiver", DATA / "a2.json", "--source", "S1", "--target", "S2", "--shift", "1")
    assert out["dim"] == 1 and out["ext_part"] == 1
    out = run_json("ext", "--quiver", DATA / "a2.json", "--source", "S1", "--target", "S2")
    assert out["hom"] == 0 and out["ext"] == 1
    assert out["basis_middle_terms"] == [["P1"]]


def test_decompose_sum():
    out = run_json("decompose", "--quiver", DATA / "a3.json", "--object", "P1 + S2[1] + S2[1]")
    assert sorted(s["name"] for s in out["summands"]) == ["P1", "S2[1]", "S2[1]"]


def test_blocks():
    assert run_json("blocks", "--quiver", DATA / "d4.json", "--window", "-1..1")["count"] == 1


def test_tstructure_heart():
    out = run_json("tstructure", "--quiver", DATA / "a2.json", "--generator", "S1", "--window", "-2..3")
    assert out["heart"] == ["S1", "S2[1]", "P1[1]"]


def test_walk2path():
    out = run_json("walk2path", "--quiver", DATA / "a2.json", "--walk", DATA / "walk_s1_p1.json")
    assert out["path"] == ["S1", "S2[1]", "P1[1]"]
    assert out["m"] == 1
    r = run("walk2path", "--quiver", DATA / "a2.json", "--walk", DATA / "walk_s1_p1.json", "--window", "0..0")
    assert r.returncode == 1
    assert "--window" in r.stdout


def test_octahedron():
    out = run_json("octahedron", "--quiver", DATA / "a2.json", "--f", DATA / "f_p2_p1.json", "--u", DATA / "u_p1_s1.json")
    assert out["passed"]
    assert out["Z"] == ["S1"]
    assert sorted(out["Z'"]) == ["S1", "S2[1]"]


def test_verify_suites():
    assert run("verify", "axioms", "--quiver", DATA / "a2.json", "--trials", "10").returncode == 0
    assert run("verify", "equivalence", "--quiver", DATA / "a2.json", "--trials", "10").returncode == 0
    assert run("verify", "axioms", "--quiver", DATA / "cyclic.json").returncode == 2


def test_json_is_deterministic():
    args = ("verify", "equivalence", "--quiver", DATA / "a3.json", "--trials", "5", "--seed", "4", "--json")
    assert run(*args).stdout == run(*args).stdout

import json
import subprocess
import sys


from toric_basic.cli import main
from toric_basic.corpus import CORPUS_DIR, INVALID_DIR, corpus_paths
from toric_basic.fanfile import load
from toric_basic.simplicial import h_vector


def fan(name):
    return str(CORPUS_DIR / f"{name}.fan")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_validate_exit_codes(capsys, tmp_path):
    assert run(capsys, "validate", fan("cp2"))[0] == 0
    code, out = run(capsys, "validate", str(INVALID_DIR / "cp2-missing-cone.fan"))
    assert code == 1 and "pseudomanifold" in out and "witness" in out
    bad = tmp_path / "bad.fan"
    bad.write_text("{not json")
    code, out = run(capsys, "validate", str(bad))
    assert code == 2 and "line 1 column" in out
    assert run(capsys, "validate", str(tmp_path / "missing.fan"))[0] == 2


def test_invalid_fixtures_exit_one(capsys):
    for p in sorted(INVALID_DIR.glob("*.fan")):
        assert run(capsys, "validate", "--mode", "exact", str(p))[0] == 1


def test_betti_text(capsys):
    code, out = run(capsys, "betti", fan("cp2"), fan("square"), fan("ghost2"))
    lines = out.splitlines()
    assert code == 0
    assert lines[0].endswith("b^0=1 b^2=1 b^4=1")
    assert lines[1].endswith("b^0=1 b^2=2 b^4=1")
    assert lines[2].endswith("b^0=1")


def test_betti_ring_and_cup(capsys):
    code, out = run(capsys, "betti", "--ring", "--cup", "--json", fan("cp2"))
    doc = json.loads(out)
    res = doc["results"][0]
    assert doc["schema"] == "report/1" and code == 0
    assert res["ring"]["groebner_basis"] == ["v1 - v3", "v2 - v3", "v3^3"]
    cup = {(r["left"], r["right"]): r["product"] for r in res["cup"]}
    assert cup[("v3", "v3")] == {"v3^2": "1"}
    assert cup[("v3", "v3^2")] == {}


def test_betti_matches_hidden_hvector(capsys):
    code, out = run(capsys, "betti", "--debug-hvector", "--json", *map(str, corpus_paths()))
    assert code == 0
    for res in json.loads(out)["results"]:
        assert res["betti"] == res["h_vector"]
        F = load(res["file"])
        assert tuple(res["h_vector"]) == h_vector(F.K, F.n)


def test_betti_on_invalid_fan(capsys):
    assert run(capsys, "betti", str(INVALID_DIR / "dependent-facet.fan"))[0] == 1


def test_iso(capsys):
    code, out = run(capsys, "iso", fan("cp2"), fan("cp2-relabeled"))
    assert code == 0 and "isomorphic" in out and "p-equivalent" in out
    assert "transversely equivalent" in out
    code, out = run(capsys, "iso", "--json", fan("cp2"), fan("cp2-relabeled"))
    res = json.loads(out)["results"][0]
    assert res["witness"] == {"sigma": [1, 2, 3], "phi": [["0", "1"], ["1", "0"]]}
    assert all(res["verified"].values())
    code, out = run(capsys, "iso", fan("cp2"), fan("square"))
    assert code == 0 and "not isomorphic" in out
    code, out = run(capsys, "iso", fan("square"), fan("square-scaled"))
    assert "not isomorphic" in out


def test_realize(capsys, tmp_path):
    target = tmp_path / "cp2.json"
    code, out = run(capsys, "realize", fan("cp2"), "--output", str(target))
    assert code == 0 and "m=4" in out and "round trip" in out
    doc = json.loads(target.read_text())
    assert doc["m"] == 4 and doc["pairing"] == [[1, 2]] and doc["ghosts"] == [4]
    code, out = run(capsys, "realize", "--json", fan("square"), fan("ghost2"), fan("sqrt2-4cycle"))
    res = json.loads(out)["results"]
    assert res[0]["realization"]["m"] == 4 and res[0]["quotient"]["rational"]
    assert res[1]["realization"]["m"] == 2
    assert not res[2]["quotient"]["rational"]


def test_koszul(capsys):
    code, out = run(capsys, "koszul", "--json", fan("cp2"), fan("octahedron"), fan("ghost2"))
    res = json.loads(out)["results"]
    assert code == 0
    assert res[1]["table"][0] == [1, 3, 3, 1]
    assert all(x == 0 for r in res for row in r["table"][1:] for x in row)
    assert res[2]["table"] == [[1]]


def test_output_order_and_stability_with_jobs(capsys):
    files = [fan(n) for n in ("octahedron", "cp2", "square", "hirzebruch-2")]
    _, a = run(capsys, "betti", "--json", *files)
    _, b = run(capsys, "betti", "--json", "--jobs", "3", *files)
    assert a == b
    assert [r["file"] for r in json.loads(a)["results"]] == files


def test_seed_env_var(monkeypatch, capsys):
    monkeypatch.setenv("TORIC_BASIC_SEED", "17")
    from toric_basic import cli
    cli.main(["validate", "--json", fan("cp2")])
    assert json.loads(capsys.readouterr().out)["results"][0]["seed"] == 17
    cli.main(["validate", "--json", "--seed", "4", fan("cp2")])
    assert json.loads(capsys.readouterr().out)["results"][0]["seed"] == 4


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "toric_basic.cli", "betti", fan("cp2")],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "b^4=1" in out.stdout

import json

from pcfcolor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_and_analyze(tmp_path, capsys):
    path = tmp_path / "p.txt"
    assert run(capsys, "gen", "petersen", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "--json", "analyze", str(path))
    info = json.loads(out)
    assert code == 0 and info["girth"] == 5 and info["delta"] == 3
    assert info["ordering_problems"] == [] and info["chordal"] is False


def test_gen_latin_writes_labels(tmp_path, capsys):
    path = tmp_path / "g2.col"
    assert run(capsys, "gen", "latin:2", "--format", "dimacs", "-o", str(path))[0] == 0
    labels = json.loads((tmp_path / "g2.col.labels.json").read_text())["labels"]
    assert labels[0] == "v1,1"
    assert path.read_text().startswith("p edge 10 12\n")


def test_color_then_verify(tmp_path, capsys):
    g = tmp_path / "g.txt"
    col = tmp_path / "c.json"
    trace = tmp_path / "t.json"
    run(capsys, "gen", "random_regular:4,12,0", "-o", str(g))
    code, out, _ = run(capsys, "--json", "color", str(g), "--h", "1", "-o", str(col), "--trace", str(trace))
    res = json.loads(out)
    assert code == 0 and res["hcf_ok"] and res["colors_used"] <= res["bound"]
    assert json.loads(trace.read_text())["engine"]
    code, out, _ = run(capsys, "--json", "verify", str(g), str(col), "--notion", "pcf")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_failure_exit_code(tmp_path, capsys):
    g = tmp_path / "c5.txt"
    run(capsys, "gen", "cycle:5", "-o", str(g))
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 1 2 3\n")
    assert run(capsys, "verify", str(g), str(bad), "--notion", "odd")[0] == 2
    assert run(capsys, "verify", str(g), str(bad), "--notion", "proper")[0] == 0


def test_exact_and_budget(tmp_path, capsys):
    g = tmp_path / "g2.txt"
    run(capsys, "gen", "latin:2", "-o", str(g))
    code, out, _ = run(capsys, "--json", "exact", str(g), "--mode", "pcf", "--minimize")
    assert code == 0 and json.loads(out)["value"] == 4
    code, out, _ = run(capsys, "--json", "exact", str(g), "--mode", "pcf", "--k", "3")
    assert code == 0 and json.loads(out)["decision"] is False
    big = tmp_path / "r.txt"
    run(capsys, "gen", "random_regular:4,14,0", "-o", str(big))
    assert run(capsys, "exact", str(big), "--mode", "hcf", "--h", "3", "--budget-nodes", "3")[0] == 3


def test_odd_color(tmp_path, capsys):
    g = tmp_path / "lp.txt"
    run(capsys, "gen", "line:petersen", "-o", str(g))
    for extra in ([], ["--claw"], ["--driver", "starfree"]):
        code, out, _ = run(capsys, "--json", "odd-color", str(g), *extra)
        res = json.loads(out)
        assert code == 0 and res["odd_ok"] and res["violations"] == []


def test_input_errors(tmp_path, capsys):
    assert run(capsys, "analyze", str(tmp_path / "missing"))[0] == 4
    bad = tmp_path / "bad.txt"
    bad.write_text("p edge 3 1\ne 1 9\n")
    assert run(capsys, "color", str(bad))[0] == 4
    assert run(capsys, "gen", "nope:1")[0] == 4
    star = tmp_path / "s.txt"
    run(capsys, "gen", "star:3", "-o", str(star))
    code, _, err = run(capsys, "odd-color", str(star), "--driver", "starfree")
    assert code == 4 and "error" in err


def test_bench(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, _, _ = run(capsys, "bench", "--task", "thm13", "--corpus", "random_maxdeg:9,4,0.5,{seed}",
                     "--seeds", "3", "--param", "1", "2", "-o", str(out))
    assert code == 0
    assert len(out.read_text().splitlines()) == 1 + 6

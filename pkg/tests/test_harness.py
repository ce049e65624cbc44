import csv
import io

import pytest

from pcfcolor import generators as gen
from pcfcolor.errors import InputError
from pcfcolor.harness import COLUMNS, ExperimentSpec, class_flags, expand_corpus, failed, run_experiment, run_rows


def parse(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_schema_and_status():
    spec = ExperimentSpec(["cycle:5", "petersen", "wheel:6"], "thm13", params=[1, 2])
    text, status = run_experiment(spec)
    rows = parse(text)
    assert tuple(rows[0].keys()) == COLUMNS
    assert len(rows) == 6 and status == 0
    by = {(r["graph_id"], r["h_or_ell"]): r for r in rows}
    assert by[("cycle:5", "1")]["reason"].startswith("precondition")
    pet = by[("petersen", "1")]
    assert pet["verify_ok"] == "1" and pet["bound_holds"] == "1" and pet["bound"] == "5"
    assert pet["oracle_value"] == "4" and pet["oracle_status"] == "exact"


def test_timing_column(tmp_path):
    out = tmp_path / "r.csv"
    spec = ExperimentSpec(["cycle:6"], "chain", output=str(out), timing=True)
    text, status = run_experiment(spec)
    assert out.read_text() == text
    row = parse(text)[0]
    assert "wall_ms" in row and row["oracle_value"] == "2/3/3/3" and status == 0


def test_seed_expansion_and_determinism():
    spec = ExperimentSpec(["random_maxdeg:9,4,0.5,{seed}"], "thm13", params=[1], seeds=[0, 1, 2])
    assert [gid for gid, _ in expand_corpus(spec.corpus, spec.seeds)] == [
        "random_maxdeg:9,4,0.5,0", "random_maxdeg:9,4,0.5,1", "random_maxdeg:9,4,0.5,2"]
    assert run_experiment(spec)[0] == run_experiment(spec)[0]


def test_workers_preserve_order():
    spec = ExperimentSpec(["ktree:2,12,{seed}"], "thm14", params=[1, 2], seeds=list(range(6)))
    serial = run_experiment(spec)[0]
    spec.workers = 3
    assert run_experiment(spec)[0] == serial


@pytest.mark.parametrize("task, corpus, param", [
    ("thm14", "ktree:1,10,3", 2), ("thm15", "line:random:8,0.5,1", 2), ("thm16", "line:random:8,0.5,1", 2),
    ("thm17", "line:petersen", 2), ("cor15", "petersen", 2), ("latin_lb", "latin:2", 1),
], ids=["chordal", "local-clique-cover", "star-free", "claw-free", "dynamic", "latin"])
def test_every_task_passes_on_a_valid_input(task, corpus, param):
    rows = run_rows(ExperimentSpec([corpus], task, params=[param]))
    assert rows and not any(failed(r) for r in rows), rows
    assert rows[0]["verify_ok"] == "1"


def test_precondition_rows_do_not_fail():
    rows = run_rows(ExperimentSpec(["cycle:5", "star:4"], "thm14", params=[1]))
    assert rows[0]["reason"] == "precondition:not_chordal"
    rows = run_rows(ExperimentSpec(["star:4"], "thm16", params=[2]))
    assert rows[0]["reason"].startswith("precondition") and not failed(rows[0])
    rows = run_rows(ExperimentSpec(["cycle:7"], "latin_lb"))
    assert rows[0]["reason"].startswith("precondition")


def test_large_graph_skips_oracle():
    rows = run_rows(ExperimentSpec(["random_regular:4,14,0"], "thm13", oracle_limit=8))
    assert rows[0]["oracle_status"] == "skipped"


def test_class_flags():
    assert class_flags(gen.ktree(2, 8, 0)).startswith("chordal:s=3")
    assert "claw_free" in class_flags(gen.cycle(5)) and "2ec" in class_flags(gen.cycle(5))


def test_spec_validation():
    with pytest.raises(InputError):
        ExperimentSpec(["cycle:5"], "nope")
    with pytest.raises(InputError):
        ExperimentSpec([], "chain")
    with pytest.raises(InputError):
        ExperimentSpec(["cycle:5"], "thm13", params=[0])

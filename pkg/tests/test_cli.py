import json

import pytest

from fincard.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_encode_decode_files(tmp_path, capsys):
    src = tmp_path / "x.txt"
    src.write_text("#fincard mixed n=1 K=1 ground=8 schedule=compact\nshape ⟨1⟩\n⟨{0}⟩\n", encoding="utf-8")
    coded = tmp_path / "c.txt"
    assert run(capsys, "encode", "--input", str(src), "-o", str(coded))[0] == 0
    lines = coded.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "#fincard coded n=1 K=1 ground=8 schedule=compact" and len(lines) == 22
    code, out, _ = run(capsys, "decode", "--input", str(coded))
    assert code == 0 and out == src.read_text(encoding="utf-8")


def test_decode_rejects_tampered(tmp_path, capsys):
    coded = tmp_path / "c.txt"
    coded.write_text("#fincard coded n=1 K=1 ground=8 schedule=compact\n{{0,1,2}}\n", encoding="utf-8")
    code, _, err = run(capsys, "decode", "--input", str(coded))
    assert code == 2 and "error" in err


def test_parse_error_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("#fincard mixed n=1 K=1 ground=8 schedule=compact\nshape ⟨1⟩\n⟨{0⟩\n", encoding="utf-8")
    code, _, err = run(capsys, "encode", "--input", str(bad))
    assert code == 2 and "line 3" in err


def test_ramsey_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "ramsey-exact", "--j", "2", "--colors", "2", "--r", "3", "--search-limit", "7")
    assert code == 0 and json.loads(out) == {"value": 6}
    code, out, _ = run(capsys, "ramsey-exact", "--j", "2", "--colors", "2", "--r", "3", "--search-limit", "5")
    assert json.loads(out) == {"unknown": {"largest_insufficient": 5}}
    col = tmp_path / "col.json"
    col.write_text(json.dumps([1, 1, 2]))
    code, out, _ = run(capsys, "ramsey-witness", "--size", "3", "--j", "1", "--colors", "2", "--r", "2", "--coloring", str(col))
    assert code == 0 and json.loads(out) == {"witness": {"T": [[0, 1]], "color": 1}}
    code, out, _ = run(capsys, "ramsey-witness", "--size", "6", "--j", "2", "--colors", "2", "--r", "3", "--seed", "9")
    assert code == 0 and json.loads(out)["witness"] is not None


def test_refusal_names_required_size(capsys):
    code, out, err = run(capsys, "verify", "--suite", "phi-roundtrip", "--ground-size", "3")
    assert code == 2 and out == ""
    assert '"required_ground": 4' in err


def test_cost_refusal_and_force(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nilpotency", "--max-cost", "10")
    assert code == 2 and "estimate" in err


def test_env_overrides(monkeypatch, capsys):
    monkeypatch.setenv("FINCARD_SUITE", "phi-roundtrip")
    monkeypatch.setenv("FINCARD_GROUND_SIZE", "2")
    code, _, err = run(capsys, "verify")
    assert code == 2 and '"required_ground": 4' in err
    code, out, _ = run(capsys, "verify", "--ground-size", "8", "--samples", "200", "--no-timings")
    assert code == 0 and [r["suite"] for r in records(out)] == ["phi-roundtrip"]


def test_report_fields_and_figures(tmp_path, capsys):
    report = tmp_path / "r.jsonl"
    figs = tmp_path / "figs"
    code, _, err = run(capsys, "verify", "--suite", "encodings", "--samples", "100", "--report", str(report), "--figures", str(figs))
    assert code == 0
    (rec,) = records(report.read_text())
    assert set(rec) == {"suite", "params", "cases", "failures", "millis"}
    assert (figs / "summary.png").stat().st_size > 0


def test_default_run(tmp_path, capsys):
    report = tmp_path / "r.jsonl"
    code, _, _ = run(capsys, "verify", "--report", str(report))
    recs = {r["suite"]: r for r in records(report.read_text())}
    assert sorted(recs) == ["encodings", "fact-311", "fraenkel", "nilpotency", "phi-roundtrip", "ramsey"]
    assert all(not r["failures"] for s, r in recs.items() if s != "nilpotency")
    # the only counterexamples are the oscillating families at five atoms
    fails = recs["nilpotency"]["failures"]
    assert len(fails) == 12
    assert {(f["case"]["ground"], tuple(f["case"]["k"])) for f in fails} == {(5, (2,))}
    assert code == 1


def test_plant_and_replay(tmp_path, capsys):
    report = tmp_path / "r.jsonl"
    code, _, _ = run(capsys, "verify", "--suite", "fact-311", "--plant", "g-drops-member", "--samples", "100", "--report", str(report))
    assert code == 1
    code, out, _ = run(capsys, "replay", str(report))
    verdicts = records(out)
    assert code == 1 and verdicts and all(v["verdict"] == "fail" for v in verdicts)
    clean = tmp_path / "clean.jsonl"
    assert run(capsys, "verify", "--suite", "fact-311", "--samples", "100", "--report", str(clean))[0] == 0
    assert run(capsys, "replay", str(clean))[0] == 0

import json

import pytest

from fpgroups import cli
from fpgroups.diagrams import diagram_to_json, grid_diagram
from fpgroups.presentations import format_presentation
from fpgroups.words import parse_word


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def wfile(tmp_path, W):
    path = tmp_path / "w.txt"
    path.write_text(format_presentation(W))
    return str(path)


def test_gen_R_text_and_json(capsys):
    code, out, err = run(capsys, "gen", "R")
    assert code == 0
    assert out.count("rel:") == 12 and "nonstandard" in err
    code, out, _ = run(capsys, "gen", "R", "--json")
    data = json.loads(out)
    assert len(data["relations"]) == 12 and "nonstandard_P" in data["flags"]


def test_gen_kinds(capsys, tmp_path):
    for kind, m in (("B", 14), ("BE", 12), ("pw", 17)):
        code, out, _ = run(capsys, "gen", kind, "--json")
        assert code == 0 and len(json.loads(out)["relations"]) == m
    code, out, _ = run(capsys, "gen", "Bprime", "--params", "R", "--json")
    assert code == 0 and len(json.loads(out)["relations"]) == 14
    code, out, _ = run(capsys, "gen", "R", "--rule3", "none")
    assert code == 0 and out.count("rel:") == 11
    rule = tmp_path / "rule3.txt"
    rule.write_text("s1 s1 <-> s2\n")
    code, out, _ = run(capsys, "gen", "R", "--rule3", str(rule), "--P", "s1 s2")
    assert code == 0 and out.count("rel:") == 12


def test_gen_alpha_error(capsys):
    code, _, err = run(capsys, "gen", "R", "--alpha", "5")
    assert code == 2 and "alpha" in err


def test_thue_reach(capsys, tmp_path):
    sysfile = tmp_path / "m.thue"
    sysfile.write_text("alphabet: s1 s2\nrule: s1 s1 s2 s2 <-> s2 s1 s1\n")
    code, out, _ = run(capsys, "thue", "reach", "--system", str(sysfile), "--from", "s1 s1 s2 s2",
                       "--to", "s2 s1 s1", "--depth", "2", "--json")
    assert code == 0 and json.loads(out) == {"verdict": "EquivalentAtDepth", "depth": 1}
    code, out, _ = run(capsys, "thue", "reach", "--system", str(sysfile), "--from", "s1",
                       "--to", "s2", "--depth", "3")
    assert code == 1 and "NotFoundWithinDepth" in out
    code, _, err = run(capsys, "thue", "reach", "--system", str(tmp_path / "missing"), "--from", "s1",
                       "--to", "s2", "--depth", "3")
    assert code == 2


def test_sc_check_and_dehn(capsys, wfile, tmp_path):
    code, out, _ = run(capsys, "sc", "check", "--presentation", wfile, "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "Satisfied" and data["max_piece_ratio"] == "18/109"
    comm = tmp_path / "comm.txt"
    comm.write_text("gens: a b\nrel: a b a^-1 b^-1\n")
    code, out, _ = run(capsys, "sc", "check", "--presentation", str(comm), "--C", "4")
    assert code == 1 and "Violated" in out and "C(4): Satisfied" in out
    code, _, err = run(capsys, "sc", "dehn", "--presentation", str(comm), "--word", "a")
    assert code == 2 and "C'(1/6)" in err
    code, out, _ = run(capsys, "sc", "dehn", "--presentation", wfile, "--word", "a b")
    assert code == 1 and out.strip() == "a b"


def test_diagram_commands(capsys, tmp_path):
    pres = tmp_path / "comm.txt"
    pres.write_text("gens: a b c\nrel: a c a^-1 c^-1\nrel: b c b^-1 c^-1\n")
    dfile = tmp_path / "d.json"
    code, _, _ = run(capsys, "diagram", "grid", "--word", "a b", "--k", "2", "--out", str(dfile))
    assert code == 0
    code, out, _ = run(capsys, "diagram", "validate", "--presentation", str(pres), "--diagram", str(dfile),
                       "--word", "a b c^2 b^-1 a^-1 c^-2", "--json")
    data = json.loads(out)
    assert code == 0 and data["valid"] and data["certifies"]
    broken = diagram_to_json(grid_diagram(parse_word("a b"), 2))
    broken["faces"].pop()
    dfile.write_text(json.dumps(broken))
    code, out, _ = run(capsys, "diagram", "validate", "--presentation", str(pres), "--diagram", str(dfile))
    assert code == 1 and "edge multiplicity" in out
    code, out, _ = run(capsys, "diagram", "dot", "--diagram", str(dfile))
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "diagram", "dot", "--diagram", str(dfile), "--json")
    assert code == 0 and json.loads(out)["dot"].startswith("digraph")


def test_homology_command(capsys, wfile):
    code, out, _ = run(capsys, "homology", "--presentation", wfile, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["H1"] == {"betti": 1, "torsion": []} and data["H2"]["betti"] == 3
    assert data["expected_boundary_beta2"] == 4


def test_form_commands(capsys, tmp_path):
    m = tmp_path / "h.json"
    m.write_text("[[0, 1], [1, 0]]")
    code, out, _ = run(capsys, "form", "classify", "--matrix", str(m), "--json")
    assert code == 0 and json.loads(out) == {"class": "EvenIndefinite", "sign": 1, "r": 0, "s": 1}
    code, out, _ = run(capsys, "form", "recognize", "--matrix", str(m))
    assert code == 0 and "SphereBundleSum" in out
    m.write_text("[[1, 0], [0, 1]]")
    code, out, _ = run(capsys, "form", "recognize", "--matrix", str(m))
    assert code == 1 and "CannotBound" in out
    m.write_text("[[2, 0], [0, 1]]")
    code, _, _ = run(capsys, "form", "recognize", "--matrix", str(m))
    assert code == 2
    code, out, _ = run(capsys, "form", "classify", "--matrix", str(m))
    assert code == 1 and "NotUnimodular" in out
    m.write_text("[[1, 2], [3, 1]]")
    code, _, _ = run(capsys, "form", "classify", "--matrix", str(m))
    assert code == 2


def test_pipeline_default_is_deterministic(capsys):
    code, first, _ = run(capsys, "pipeline", "--json")
    code2, second, _ = run(capsys, "pipeline", "--json")
    assert code == code2 == 0
    assert first == second
    report = json.loads(first)
    assert report["schema"] == 1
    assert report["pw_stats"] == {"generators": 8, "relations": 17, "deficiency": 9}
    assert report["trivialization"] == "AllKilled"
    assert report["failed_stage"] is None
    assert report["sc_certificate"]["verdict"] == "Satisfied"


def test_pipeline_incomplete_skips(capsys, tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("# no third rule\nrule3 = none\nword = s2 s2 s1\n")
    code, out, _ = run(capsys, "pipeline", "--config", str(cfg), "--json")
    report = json.loads(out)
    assert code == 0 and report["incomplete"]
    assert set(report["skipped"]) == {"trivialization", "deficiency_9", "H1_trivialized"}
    assert report["pw_stats"]["deficiency"] == 8


def test_pipeline_config_errors(capsys, tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("alpha_R = 5\n")
    code, _, err = run(capsys, "pipeline", "--config", str(cfg))
    assert code == 2 and "alpha" in err
    cfg.write_text("colour = blue\n")
    code, _, err = run(capsys, "pipeline", "--config", str(cfg))
    assert code == 2 and "unknown key" in err
    cfg.write_text("variant = sideways\n")
    code, _, _ = run(capsys, "pipeline", "--config", str(cfg))
    assert code == 2


def test_pipeline_text_output(capsys):
    code, out, _ = run(capsys, "pipeline")
    assert code == 0
    assert "small_cancellation: ok" in out and "trivialization: ok" in out

import json

import pytest

from semlab import make_cycle, serialize_graph
from semlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_obstruction_exit_code(capsys):
    code, out, _ = run(capsys, "solve", "--gen", "two-cycle", "3", "4")
    assert code == 1
    assert "NOT_SEM_OBSTRUCTION" in out and "DEGSEQ_4_2_EVEN_ORDER" in out


def test_solve_sem_exit_code(capsys):
    code, out, _ = run(capsys, "solve", "--gen", "cycle", "5", "--threads", "1")
    assert code == 0
    assert "status: SEM" in out and "valence: 14" in out


def test_solve_budget_exit_code(capsys):
    code, out, _ = run(capsys, "solve", "--gen", "cycle", "10", "--threads", "1",
                       "--no-obstructions", "--budget", "7")
    assert code == 2
    assert "UNKNOWN_BUDGET_EXCEEDED" in out


def test_solve_edgeless(tmp_path, capsys):
    path = tmp_path / "edgeless.txt"
    path.write_text("3\n")
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0
    assert "trivially super edge-magic" in out


def test_solve_json_config_echo(capsys, monkeypatch):
    monkeypatch.setenv("SEMLAB_THREADS", "1")
    code, out, _ = run(capsys, "solve", "--gen", "cycle", "5", "--json",
                       "--threads", "7")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "SEM"
    assert data["config"]["threads"] == 1  # env var wins
    assert data["witness"]["valence"] == 14
    assert data["interval"] == [14, 14]


def test_certificate_pipeline(tmp_path, capsys):
    cert = tmp_path / "c5.json"
    code, _, _ = run(capsys, "solve", "--gen", "cycle", "5", "--threads", "1",
                     "--cert-out", str(cert))
    assert code == 0

    code, out, _ = run(capsys, "check", "--gen", "cycle", "5",
                       "--cert", str(cert))
    assert code == 0 and "valid" in out

    data = json.loads(cert.read_text())
    data["edge_labels"][0][2], data["edge_labels"][1][2] = (
        data["edge_labels"][1][2], data["edge_labels"][0][2])
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check", "--gen", "cycle", "5",
                       "--cert", str(tampered))
    assert code == 1 and "non-constant valence" in out

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", "--gen", "cycle", "5", "--cert", str(bad))
    assert code == 3 and "parse" in err


def test_graph_inputs(tmp_path, capsys):
    code, out, _ = run(capsys, "solve", "--g6", "Bw", "--threads", "1")
    assert code == 0 and "order 3" in out

    path = tmp_path / "g.el"
    path.write_text(serialize_graph(make_cycle(5), "edge-list"))
    code, out, _ = run(capsys, "solve", str(path), "--threads", "1")
    assert code == 0

    g6path = tmp_path / "g.g6"
    g6path.write_text(serialize_graph(make_cycle(5), "graph6") + "\n")
    code, out, _ = run(capsys, "solve", str(g6path), "--threads", "1")
    assert code == 0  # sniffed as graph6

    code, _, err = run(capsys, "solve")
    assert code == 3 and "no graph" in err

    code, _, err = run(capsys, "solve", "--gen", "cycle", "2")
    assert code == 3

    code, _, err = run(capsys, "solve", "--gen", "dodecahedron", "1")
    assert code == 3

    code, _, err = run(capsys, "solve", str(tmp_path / "missing.g6"))
    assert code == 3


def test_gen_cactus(capsys):
    code, out, _ = run(capsys, "solve", "--gen", "cactus", "3", "3", "3",
                       "--threads", "1", "--no-obstructions")
    assert "order 7" in out
    code, out, _ = run(capsys, "solve", "--gen", "cactus", "3", "3", "3",
                       "--attach", "0:0", "0:0", "--threads", "1")
    assert "degree sequence (6, 2," in out
    code, _, err = run(capsys, "solve", "--gen", "cactus", "3", "3",
                       "--attach", "zero:1")
    assert code == 3


def test_interval_valences_perfect(capsys):
    code, out, _ = run(capsys, "interval", "--gen", "two-cycle", "3", "5")
    assert code == 0 and "[19, 20]" in out

    code, out, _ = run(capsys, "interval", "--gen", "cycle", "4")
    assert code == 0 and "empty" in out

    code, out, _ = run(capsys, "valences", "--gen", "two-cycle", "3", "5",
                       "--threads", "1")
    assert code == 0 and "{19, 20}" in out

    code, out, _ = run(capsys, "perfect", "--gen", "cycle", "3", "--threads", "1")
    assert code == 0 and "perfect" in out

    code, out, _ = run(capsys, "perfect", "--gen", "cycle", "4", "--threads", "1")
    assert code == 0 and "vacuous-not-sem" in out

    code, out, _ = run(capsys, "interval", "--gen", "cycle", "4", "--json")
    data = json.loads(out)
    assert data["interval"] == [] and data["min"] == "23/2"


def test_interval_edgeless(tmp_path, capsys):
    path = tmp_path / "edgeless.txt"
    path.write_text("2\n")
    for cmd in ("interval", "valences", "perfect"):
        code, out, _ = run(capsys, cmd, str(path))
        assert code == 0 and "trivially super edge-magic" in out


def test_sweep_grid(capsys):
    code, out, _ = run(capsys, "sweep", "two-cycle-grid", "--m", "3..5",
                       "--n", "3..5", "--threads", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,params,order,size,obstruction,status")
    rows = {line.split(",")[1]: line.split(",") for line in lines[1:]}
    assert len(rows) == 9
    for m in range(3, 6):
        for n in range(3, 6):
            row = rows[f"m={m};n={n}"]
            if (m + n) % 2 == 1:
                assert row[4] == "DEGSEQ_4_2_EVEN_ORDER"
                assert row[5] == "NOT_SEM_OBSTRUCTION"
    assert rows["m=3;n=3"][4] == "EVEN_DEG_Q_MOD4"
    assert rows["m=3;n=5"][5] == "SEM" and rows["m=3;n=5"][8] == "19|20"


def test_sweep_deterministic_across_runs_and_threads(capsys):
    outputs = []
    for threads in ("1", "2", "1"):
        code, out, _ = run(capsys, "sweep", "two-cycle-grid", "--m", "3..5",
                           "--n", "3..5", "--threads", threads)
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_sweep_degseq_family(capsys):
    code, out, _ = run(capsys, "sweep", "degseq-4-2", "--order", "6..8",
                       "--threads", "1")
    assert code == 0
    lines = out.strip().splitlines()[1:]
    assert len(lines) == 1 + 2 + 3  # orders 6, 7, 8
    assert any("graph=C(3,3)+C3" in line for line in lines)
    assert any("graph=C(4,4)" in line for line in lines)


def test_sweep_three_cycle_series(capsys):
    code, out, _ = run(capsys, "sweep", "three-cycle-series", "--k", "3..3",
                       "--threads", "2")
    assert code == 0
    line = out.strip().splitlines()[1]
    assert line.startswith("three-cycle-series,k=3,11,12,")
    assert ",SEM," in line

    code, _, err = run(capsys, "sweep", "three-cycle-series", "--k", "5..5")
    assert code == 3 and "max-order" in err


def test_sweep_budget_unknown_rows(capsys):
    code, out, _ = run(capsys, "sweep", "two-cycle-grid", "--m", "4..4",
                       "--n", "4..4", "--threads", "1", "--budget", "3")
    assert code == 0
    line = out.strip().splitlines()[1]
    assert "UNKNOWN_BUDGET_EXCEEDED" in line and line.endswith(",3")
    assert ",skipped," in line


def test_sweep_timing_column(capsys):
    code, out, _ = run(capsys, "sweep", "two-cycle-grid", "--m", "3..3",
                       "--n", "3..3", "--threads", "1", "--timing")
    assert code == 0
    assert out.splitlines()[0].endswith(",millis")


def test_sweep_output_file(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "two-cycle-grid", "--m", "3..3",
                     "--n", "3..4", "--threads", "1", "--output", str(path))
    assert code == 0
    assert path.read_text().count("\n") == 3


def test_render_plain(capsys):
    code, out, _ = run(capsys, "render", "--gen", "cycle", "3")
    assert code == 0
    assert out.count("--") == 3
    assert 'label="v0"' in out and out.strip().endswith("}")


def test_render_with_certificate(tmp_path, capsys):
    cert = tmp_path / "c3.json"
    run(capsys, "solve", "--gen", "cycle", "3", "--threads", "1",
        "--cert-out", str(cert))
    code, out, _ = run(capsys, "render", "--gen", "cycle", "3",
                       "--cert", str(cert))
    assert code == 0
    assert 'label="valence 9"' in out
    for lab in (4, 5, 6):
        assert f'[label="{lab}"]' in out


def test_render_mismatched_certificate(tmp_path, capsys):
    cert = tmp_path / "c3.json"
    run(capsys, "solve", "--gen", "cycle", "3", "--threads", "1",
        "--cert-out", str(cert))
    code, _, err = run(capsys, "render", "--gen", "cycle", "4",
                       "--cert", str(cert))
    assert code == 1 and "INVALID" in err

from __future__ import annotations

from gupblab.cli import main
from gupblab.gen import read_graph6
from gupblab.representations import Representation, write_representation
from gupblab import catalog


def test_generate_to_file(tmp_path, capsys):
    out = tmp_path / "g.g6"
    assert main(["generate", "--n", "8", "--r", "4", "--connected", "-o", str(out)]) == 0
    assert len(list(read_graph6(out))) == 6


def test_generate_disconnected(tmp_path):
    out = tmp_path / "d.g6"
    assert main(["generate", "--n", "13", "--r", "4", "--disconnected", "-o", str(out)]) == 0
    assert len(list(read_graph6(out))) == 8


def test_filter_command(tmp_path, capsys):
    fam = tmp_path / "fam.g6"
    main(["generate", "--n", "8", "--r", "4", "-o", str(fam)])
    out = tmp_path / "surv.g6"
    code = main(
        ["filter", "--input", str(fam), "--obstructions", "O3",
         "--full-counts", "--survivors-out", str(out)]
    )
    assert code == 0
    captured = capsys.readouterr().out
    assert "survivors: 1" in captured  # only the complete bipartite graph
    assert len(list(read_graph6(out))) == 1


def test_solve_command(capsys):
    assert main(["solve", "--graph", "D6", "--d", "3", "--restarts", "5", "--iters", "1000"]) == 0
    out = capsys.readouterr().out
    assert "found" in out
    assert main(["solve", "--graph", "A6", "--d", "3"]) == 0
    assert "impossible" in capsys.readouterr().out


def test_verify_and_span_commands(tmp_path, capsys):
    fx = catalog.get_fixture("M5057_FOR3")
    rep_path = tmp_path / "m.rep"
    write_representation(rep_path, Representation(fx.d, fx.vectors, "exact"))
    assert main(["verify", "--graph", "M5057", "--rep", str(rep_path)]) == 0
    assert "pass" in capsys.readouterr().out
    code = main(["span", "--rep", str(rep_path), "--k", "13", "--d", "3", "--N", "3"])
    assert code == 2  # violated
    assert "violated" in capsys.readouterr().out


def test_catalog_commands(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "M5057" in out and "upb19" in out
    assert main(["catalog", "dump", "petersen", "--format", "graph6"]) == 0
    assert main(["catalog", "dump", "petersen"]) == 0


def test_scenario_command(tmp_path, capsys):
    report = tmp_path / "verify.json"
    code = main(["scenario", "verify_paper_reps", "--report", str(report)])
    assert code == 0
    assert report.exists()
    text = report.read_text()
    assert '"status": "verdict-reached"' in text

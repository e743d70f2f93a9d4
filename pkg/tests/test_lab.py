import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

import oracles
from convexlab.bounds import full_report
from convexlab.convex_core import canonical_hull, dilate, translate, volume
from convexlab.graph_body import from_polytope, stretch, to_polytope
from convexlab.io import body_to_json
from convexlab.lab import ExperimentConfig, gen_convex_polygon, gen_equality_pair, run_campaign
from convexlab.lab.cli import main
from convexlab.lab.generators import trial_rng

TENT = canonical_hull([(0, 0), (2, 0), (1, 1)])
MODES = ["chain", "certify", "lemma", "convergence"]


def test_gen_convex_polygon_examples():
    for seed in range(20):
        T = gen_convex_polygon(random.Random(seed), 3)
        assert len(T.vertices) == 3 and volume(T) > 0
    assert gen_convex_polygon(trial_rng(7, 3), 10) == gen_convex_polygon(trial_rng(7, 3), 10)
    P = gen_convex_polygon(random.Random(1), 64, 1000)
    assert volume(P) > 0 and len(P.vertices) <= 64
    assert oracles.jarvis_hull(list(P.vertices)) == list(P.vertices)
    with pytest.raises(ValueError):
        gen_convex_polygon(random.Random(0), 2)


def test_gen_equality_pair_examples():
    rng = random.Random(0)
    A, B, truth = gen_equality_pair(rng, lam=1, alpha=0, beta=0, x0=(3, -1))
    assert B == translate(A, (3, -1))
    A, B, truth = gen_equality_pair(rng, core=TENT, lam=Fraction(1, 2), alpha=Fraction(1, 4),
                                    beta=0, kernel=(0, 1), x0=(0, 0))
    assert A == to_polytope(stretch(from_polytope(TENT), Fraction(1, 4)))
    assert B == dilate(TENT, Fraction(1, 2))
    assert full_report(A, B, (0, 1)).gap_bonnesen == 0
    for seed in range(30):
        A, B, truth = gen_equality_pair(random.Random(seed))
        assert full_report(A, B, truth.shear.kernel_dir).gap_bonnesen == 0


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(mode="nope")
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(vertex_range=(5, 4))


@pytest.mark.parametrize("mode", MODES)
def test_campaign_files_and_determinism(mode, tmp_path):
    outs = []
    for run in ("a", "b"):
        cfg = ExperimentConfig(mode=mode, seed=5, trials=14, vertex_range=(3, 8),
                               output_dir=str(tmp_path / run), field_mode="exact")
        summary = run_campaign(cfg)
        assert summary["violations"] == 0
        outs.append({name: (tmp_path / run / name).read_bytes()
                     for name in ("reports.csv", "verdicts.json", "gallery.svg", "summary.json")})
    assert outs[0] == outs[1]
    rows = outs[0]["reports.csv"].decode().splitlines()
    assert len(rows) == 1 + (12 if mode == "convergence" else 14)


def test_certify_confusion_is_diagonal(tmp_path):
    cfg = ExperimentConfig(mode="certify", seed=1, trials=40, output_dir=str(tmp_path),
                           field_mode="exact")
    s = run_campaign(cfg)
    assert s["off_diagonal"] == 0 and s["bad_witnesses"] == 0
    assert s["confusion"]["equal"]["equal"] == 20
    assert s["max_gap_on_equality_pairs"] == "0/1"
    verdicts = json.loads((tmp_path / "verdicts.json").read_text())
    assert len(verdicts) == 40 and all(v["equal"] for v in verdicts if v["constructed"])


def test_gallery_is_capped(tmp_path):
    cfg = ExperimentConfig(mode="chain", trials=60, vertex_range=(3, 5), output_dir=str(tmp_path),
                           field_mode="exact")
    run_campaign(cfg)
    assert (tmp_path / "gallery.svg").read_text().count("<g ") <= 50


@pytest.mark.parametrize("mode", ["chain", "certify", "lemma"])
def test_three_dimensional_campaigns(mode, tmp_path):
    cfg = ExperimentConfig(mode=mode, dim=3, seed=2, trials=6, vertex_range=(4, 8),
                           output_dir=str(tmp_path))
    assert run_campaign(cfg)["violations"] == 0


def test_float_field_mode(tmp_path, monkeypatch):
    monkeypatch.setenv("LAB_MODE", "float")
    cfg = ExperimentConfig(mode="certify", seed=3, trials=10, output_dir=str(tmp_path))
    assert cfg.field_mode == "float" and not cfg.exact
    assert run_campaign(cfg)["violations"] == 0


def test_convergence_ratios(tmp_path):
    s = run_campaign(ExperimentConfig(mode="convergence", trials=6, output_dir=str(tmp_path),
                                      field_mode="exact"))
    ratios = [r for r in s["error_ratios"] if r is not None]
    assert len(ratios) == 5 and all(r >= 2 for r in ratios)


def test_cli_exit_codes(tmp_path, capsys):
    out = str(tmp_path / "o")
    assert main(["chain", "--seed", "1", "--trials", "4", "--out", out]) == 0
    assert json.loads(capsys.readouterr().out)["violations"] == 0
    with pytest.raises(SystemExit) as exc:
        main(["chain", "--vertices", "9..3", "--out", out])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    assert main(["convergence", "--dim", "3", "--out", out]) == 2


def test_cli_report(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    square = canonical_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
    rect = canonical_hull([(0, 0), (1, 0), (1, 2), (0, 2)])
    a.write_text(json.dumps(body_to_json(rect)))
    b.write_text(json.dumps(body_to_json(square)))
    assert main(["report", str(a), str(b), "--kernel", "0,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"]["equal"] and data["report"]["gap_bonnesen"] == "0/1"
    assert main(["report", str(a), str(b), "--kernel", "0,1", "--slice"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"]["equal"]
    assert main(["report", str(tmp_path / "missing.json"), str(b)]) == 2


def test_console_script_runs(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "convexlab.lab.cli", "lemma", "--trials", "3",
                           "--out", str(tmp_path)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr

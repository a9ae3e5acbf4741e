import csv
import json
import os

import pytest

from itemset_synth.cli import main, parse_grid
from itemset_synth.models import load_model

D4_TEXT = "1 2\n1 2 3\n1 3\n2 3\n"


@pytest.fixture
def d4_file(tmp_path):
    path = tmp_path / "d4.dat"
    path.write_text(D4_TEXT)
    return path


@pytest.fixture
def dense_file(tmp_path):
    rows = []
    for k in range(40):
        t = {1, 2} if k % 2 else {3, 4, 5}
        t |= {6 + k % 3}
        rows.append(" ".join(map(str, sorted(t))))
    path = tmp_path / "dense.dat"
    path.write_text("\n".join(rows) + "\n")
    return path


def _csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_mine(d4_file, tmp_path, capsys):
    out = tmp_path / "fi.json"
    assert main(["mine", "--input", str(d4_file), "--minsup", "0.5", "--out", str(out)]) == 0
    assert "6 frequent itemsets" in capsys.readouterr().out
    assert len(json.loads(out.read_text())["itemsets"]) == 6


def test_exit_codes(d4_file, tmp_path, capsys):
    assert main(["mine", "--input", str(d4_file), "--minsup", "1.5"]) == 2
    assert "minsup out of range" in capsys.readouterr().err
    assert main(["mine", "--input", str(tmp_path / "missing.dat"), "--minsup", "0.5"]) == 1
    bad = tmp_path / "bad.dat"
    bad.write_text("1 two\n")
    assert main(["mine", "--input", str(bad), "--minsup", "0.5"]) == 1
    assert main(["learn", "--input", str(d4_file), "--model", "igm", "--minsup", "1.0",
                 "--out", str(tmp_path / "m.json")]) == 3
    assert main(["learn", "--input", str(d4_file), "--model", "iim", "--minsup", "0.5",
                 "--out", str(tmp_path / "m.json")]) == 2


def test_learn_igm(d4_file, tmp_path):
    out = tmp_path / "igm.json"
    assert main(["learn", "--input", str(d4_file), "--model", "igm", "--minsup", "0.5",
                 "--out", str(out)]) == 0
    model = load_model(out)
    assert model.kind == "igm" and len(model.components) == 6
    manifest = json.loads((tmp_path / "igm.json.manifest.json").read_text())
    assert manifest["status"] == "complete" and manifest["timings"]["learn_s"] >= 0


def test_learn_lda_k_from_support(d4_file, tmp_path):
    out = tmp_path / "lda.json"
    assert main(["learn", "--input", str(d4_file), "--model", "lda", "--minsup", "0.5",
                 "--iterations", "30", "--seed", "1", "--out", str(out)]) == 0
    model = load_model(out)
    assert model.K == 6 and model.provenance["n_frequent"] == 6
    assert model.provenance["seed"] == 1


def test_learn_minsup_list(d4_file, tmp_path):
    out = tmp_path / "igm.json"
    assert main(["learn", "--input", str(d4_file), "--model", "igm", "--minsup", "0.25,0.5",
                 "--out", str(out)]) == 0
    assert (tmp_path / "igm_25.json").exists() and (tmp_path / "igm_50.json").exists()


def test_learn_is_byte_deterministic(d4_file, tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"iim{k}.json"
        assert main(["learn", "--input", str(d4_file), "--model", "iim", "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_generate(d4_file, tmp_path):
    model = tmp_path / "iim.json"
    main(["learn", "--input", str(d4_file), "--model", "iim", "--out", str(model)])
    out = tmp_path / "gen"
    assert main(["generate", "--model", str(model), "--out", str(out), "--n", "5",
                 "--replicas", "1", "--seed", "4"]) == 0
    files = sorted(out.glob("replica_*.dat"))
    assert [f.name for f in files] == ["replica_01.dat"]
    assert len(files[0].read_text().splitlines()) == 5
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["status"] == "complete" and manifest["config"]["seed"] == 4
    assert "PCG64" in manifest["prng"]

    out10 = tmp_path / "gen10"
    assert main(["generate", "--model", str(model), "--out", str(out10), "--seed", "4"]) == 0
    files = sorted(out10.glob("replica_*.dat"))
    assert len(files) == 10
    assert all(len(f.read_text().splitlines()) == 4 for f in files)


def test_evaluate_self(d4_file, tmp_path):
    syn = tmp_path / "syn"
    syn.mkdir()
    (syn / "replica_01.dat").write_text(D4_TEXT)
    out = tmp_path / "eval"
    assert main(["evaluate", "--input", str(d4_file), "--synthetic", str(syn / "*.dat"),
                 "--suite", "all", "--grid", "0.1:0.9:0.1", "--out", str(out)]) == 0
    chars = _csv(out / "characteristics.csv")
    assert chars[1][1:] == chars[2][1:]
    patterns = _csv(out / "patterns.csv")
    replica_rows = [r for r in patterns if r[0] == "syn/replica_01.dat"]
    assert len([r for r in replica_rows if r[2] != "all"]) == 9
    assert [r for r in replica_rows if r[2] == "all"][0][5] == "1.000000"
    privacy = json.loads((out / "privacy.json").read_text())
    assert privacy[0]["f1"] == 1.0


def test_evaluate_missing_glob(d4_file, tmp_path):
    assert main(["evaluate", "--input", str(d4_file), "--synthetic", str(tmp_path / "none*.dat"),
                 "--out", str(tmp_path / "e")]) == 1


def test_grid_parsing():
    assert parse_grid("0.1:0.9:0.1") == [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
    assert parse_grid("0.2,0.4") == [0.2, 0.4]


def test_report(dense_file, tmp_path):
    manifests = []
    for model, extra in (("igm", ["--minsup", "0.3"]), ("iim", [])):
        mpath = tmp_path / f"{model}.json"
        assert main(["learn", "--input", str(dense_file), "--model", model, "--out", str(mpath),
                     *extra]) == 0
        gdir = tmp_path / f"gen_{model}"
        assert main(["generate", "--model", str(mpath), "--out", str(gdir), "--replicas", "2",
                     "--seed", "1"]) == 0
        manifests.append(str(gdir / "manifest.json"))
    out = tmp_path / "report"
    assert main(["report", *manifests, "--out", str(out), "--suite", "all",
                 "--grid", "0.3,0.5"]) == 0
    timing = _csv(out / "timing.csv")
    assert timing[0] == ["model", "learn_s", "generate_s"]
    assert [r[0] for r in timing[1:]] == ["dense_IGM30", "dense_IIM"]
    chars = _csv(out / "characteristics.csv")
    assert [r[0] for r in chars[1:]] == ["dense", "dense_IGM30", "dense_IIM"]
    for name in ("radar.csv", "radar.svg", "dense_patterns.csv", "dense_patterns.svg",
                 "dense_privacy.json"):
        assert (out / name).exists(), name

    jout = tmp_path / "report_json"
    assert main(["report", *manifests, "--out", str(jout), "--format", "json"]) == 0
    rows = json.loads((jout / "characteristics.json").read_text())
    assert [r["name"] for r in rows] == [r[0] for r in chars[1:]]
    assert len(json.loads((jout / "timing.json").read_text())) == 2


def test_config_presets_and_cli_override(dense_file, tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("model=igm\nminsup=0.3\n")
    out = tmp_path / "m.json"
    assert main(["learn", "--input", str(dense_file), "--config", str(conf),
                 "--out", str(out)]) == 0
    assert load_model(out).minsup == 0.3
    assert main(["learn", "--input", str(dense_file), "--config", str(conf), "--minsup", "0.4",
                 "--out", str(out)]) == 0
    assert load_model(out).minsup == 0.4
    conf.write_text("bogus=1\n")
    assert main(["learn", "--input", str(dense_file), "--config", str(conf),
                 "--out", str(out)]) == 2


def test_experiment(dense_file, tmp_path):
    out = tmp_path / "exp"
    assert main(["experiment", "--input", str(dense_file), "--out", str(out), "--model", "igm",
                 "--minsup", "0.3,0.5", "--replicas", "2", "--seed", "3"]) == 0
    listed = (out / "manifests.txt").read_text().split()
    assert len(listed) == 2 and all(os.path.exists(p) for p in listed)

import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from tractlab import cli
from tractlab.datasets import (load_config, model_options, read_dataset_csv, write_area_csv,
                               write_dataset_csv)
from tractlab.errors import DatasetParseError, InvalidConfigError
from tractlab.experiments import ExperimentConfig, run_condition
from tractlab.generic_model import generic_area_function, vowel_point


def _same(a, b):
    assert a.condition == b.condition and a.index == b.index and a.label == b.label
    np.testing.assert_array_equal(a.params, b.params)
    assert a.dct == b.dct and a.failed == b.failed
    assert (a.f1, a.f2) == (b.f1, b.f2)


def test_dataset_round_trip(tmp_path):
    recs = run_condition(ExperimentConfig("generic", "C1", 5, 1))
    recs += run_condition(ExperimentConfig("generic", "vowel_sweep", 0))
    path = tmp_path / "d.csv"
    write_dataset_csv(path, recs, {"model": {"model": "generic"}, "seed": 1})
    header, back = read_dataset_csv(path)
    assert header == {"model": {"model": "generic"}, "seed": 1}
    assert len(back) == len(recs)
    for a, b in zip(recs, back):
        _same(a, b)
    path2 = tmp_path / "e.csv"
    write_dataset_csv(path2, back, header)
    assert path.read_bytes() == path2.read_bytes()


def test_parse_error_reports_line(tmp_path):
    recs = run_condition(ExperimentConfig("drm", "C1", 3, 0))
    path = tmp_path / "d.csv"
    write_dataset_csv(path, recs, {"seed": 0})
    lines = path.read_text().splitlines()
    lines[3] = lines[3].replace(lines[3].split(",")[2], "abc", 1)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(DatasetParseError, match="line 4"):
        read_dataset_csv(path)


def test_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(DatasetParseError):
        read_dataset_csv(path)


def test_area_csv(tmp_path):
    path = tmp_path / "a.csv"
    write_area_csv(path, generic_area_function(vowel_point("a")))
    rows = path.read_text().splitlines()
    assert rows[0] == "index,x_cm,area_cm2" and len(rows) == 121


def test_config_options(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"tube_area": 3.0, "grid": {"step": 5.0}}))
    cfg = load_config(path)
    opts = model_options({k: v for k, v in cfg.items() if k != "grid"}, "fant")
    assert opts["fant"].tube_area == 3.0
    with pytest.raises(InvalidConfigError):
        model_options({"nonsense": 1}, "drm")
    with pytest.raises(InvalidConfigError):
        model_options({"drm": {"n": 100}}, "drm")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(InvalidConfigError):
        load_config(bad)


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["vowels", "--model", "lf"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["mc", "--seed", "-1"])
    assert exc.value.code == 2


def test_bad_dataset_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("not,a,dataset\n")
    assert cli.main(["analyze", str(bad), "--out", str(tmp_path / "o")]) == 3
    assert "line 1" in capsys.readouterr().err
    assert cli.main(["analyze", str(tmp_path / "missing.csv"), "--out", str(tmp_path)]) == 3


def _check_svg(path):
    root = ET.parse(path).getroot()
    assert root.tag.endswith("svg")
    for el in root.iter():
        for key, value in el.attrib.items():
            if key.endswith("href"):
                assert value.startswith("#") or value.startswith("data:"), value


def test_vowels_command_outputs(tmp_path, capsys):
    assert cli.main(["vowels", "--model", "generic", "--out", str(tmp_path)]) == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert "vowels_generic.svg" in names and "vowels_generic.manifest.json" in names
    assert "vowel_generic_1_barred_i.csv" in names
    _check_svg(tmp_path / "vowels_generic.svg")
    manifest = json.loads((tmp_path / "vowels_generic.manifest.json").read_text())
    assert manifest["command"] == "vowels" and manifest["rng_seed"] == 0
    assert all(isinstance(o, str) for o in manifest["outputs"])


def test_spectrum_and_env_out(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TRACTLAB_OUT", str(tmp_path / "env"))
    assert cli.main(["spectrum", "--model", "drm", "--rho", "0"]) == 0
    out = tmp_path / "env"
    assert (out / "spectrum_drm.csv").exists()
    manifest = json.loads((out / "spectrum_drm.manifest.json").read_text())
    assert manifest["formants_hz"] == pytest.approx([500.0, 1500.0], abs=0.01)
    _check_svg(out / "spectrum_drm.svg")


def test_mc_fant_ring_only(tmp_path, capsys):
    args = ["mc", "--model", "fant", "--condition", "C2", "--n", "0", "--theta-grid", "12",
            "--out", str(tmp_path)]
    assert cli.main(args) == 0
    header, recs = read_dataset_csv(tmp_path / "mc_fant_C2.csv")
    assert len(recs) == 12 and header["sample_count"] == 0
    _check_svg(tmp_path / "mc_fant_C2.svg")


def test_mc_serial_parallel_bytes_and_analyze(tmp_path, capsys):
    base = ["mc", "--model", "drm", "--condition", "C1", "--n", "120", "--seed", "9"]
    assert cli.main(base + ["--out", str(tmp_path / "a")]) == 0
    assert cli.main(base + ["--workers", "2", "--out", str(tmp_path / "b")]) == 0
    a = (tmp_path / "a" / "mc_drm_C1.csv").read_bytes()
    assert a == (tmp_path / "b" / "mc_drm_C1.csv").read_bytes()
    assert cli.main(["analyze", str(tmp_path / "a" / "mc_drm_C1.csv"),
                     "--out", str(tmp_path / "c")]) == 0
    report = json.loads((tmp_path / "c" / "report_mc_drm_C1.json").read_text())
    assert report["threshold"] == 0.05 and report["n_records"] == 120
    _check_svg(tmp_path / "c" / "analysis_mc_drm_C1_df1.svg")


def test_config_flag(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"grid": {"start": 20.0, "stop": 3000.0, "step": 5.0}}))
    assert cli.main(["spectrum", "--model", "generic", "--rho", "0", "--config", str(cfg),
                     "--out", str(tmp_path)]) == 0
    rows = (tmp_path / "spectrum_generic.csv").read_text().splitlines()
    assert rows[1].startswith("20.0,") and len(rows) == 1 + 597
    bad = tmp_path / "bad.json"
    bad.write_text("[1]")
    assert cli.main(["spectrum", "--config", str(bad), "--out", str(tmp_path)]) == 3

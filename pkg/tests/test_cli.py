import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from twocircles import LengthSet, RadiiPair, Surd, compute_lengths
from twocircles.cli import main
from twocircles.generator import CSV_FIELDS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_human(capsys):
    code, out, _ = run(capsys, "generate", "--m", "2", "--n", "1", "--t", "1")
    assert code == 0
    for line in ("R1 = 560", "R2 = 315", "T1K = 1920", "T2K = 1080", "C2K = 1125"):
        assert line in out.splitlines()
    assert out.count("[ok]") == 9


def test_generate_invalid(capsys):
    code, _, err = run(capsys, "generate", "--m", "2", "--n", "2", "--t", "1")
    assert code == 1
    assert "m and n must be coprime with opposite parity" in err


def test_generate_json(capsys):
    code, out, _ = run(capsys, "generate", "--m", "3", "--n", "2", "--t", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["r"] == [12, 5, 13]
    assert data["R1"] == 222768


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--r1", "560", "--r2", "315")
    assert code == 0
    assert out.splitlines()[0] == "FullyIntegral t=1 delta=35 triple=(4,3,5)"
    code, out, _ = run(capsys, "classify", "--r1", "16", "--r2", "9")
    assert out.startswith("CevianIntegral")
    code, _, err = run(capsys, "classify", "--r1", "3", "--r2", "5")
    assert code == 1 and "require R1 > R2" in err


def test_classify_json(capsys):
    _, out, _ = run(capsys, "classify", "--r1", "16", "--r2", "9", "--format", "json")
    data = json.loads(out)
    assert data["tier"] == "CevianIntegral"
    assert data["lengths"]["a1"] == "96/5"


def test_lengths(capsys):
    code, out, _ = run(capsys, "lengths", "--r1", "2", "--r2", "1")
    assert code == 0
    assert "T1T2 = 2*sqrt(2)" in out.splitlines()


def test_lengths_json_round_trip(capsys):
    _, out, _ = run(capsys, "lengths", "--r1", "7/2", "--r2", "1/3", "--format", "json")
    ls = LengthSet.from_json(json.loads(out))
    assert ls == compute_lengths(RadiiPair("7/2", "1/3"))


def test_bad_rational(capsys):
    code, _, _ = run(capsys, "lengths", "--r1", "two", "--r2", "1")
    assert code == 1


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-r1", "1120", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == 3
    first = dict(zip(rows[0], rows[1]))
    assert first["R1"] == "560" and first["T2K"] == "1080" and first["d1_radicand"] == "13"


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--equation", "minus", "--bound", "200")
    assert code == 0
    assert out.splitlines() == ["1 1 1"]
    code, out, _ = run(capsys, "search", "--equation", "plus14", "--bound", "60")
    assert code == 0
    assert len(out.splitlines()) == 1 and "60" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--r1", "560", "--r2", "315")
    assert code == 0
    assert out.splitlines()[0].startswith("16/16 triangles verified; max rel dev < 1e-9")


def test_verify_failure_exit_code(capsys):
    # a tolerance no binary64 computation can meet
    code, _, _ = run(capsys, "verify", "--r1", "7/2", "--r2", "1/3", "--tol", "1e-300")
    assert code == 2


def test_figure(tmp_path, capsys):
    out_file = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "figure", "--m", "2", "--n", "1", "--t", "1", "--out", str(out_file))
    assert code == 0
    root = ET.parse(out_file).getroot()
    assert root.get("viewBox") == "0 0 1000 600"
    texts = [el.text for el in root.iter("{http://www.w3.org/2000/svg}text")]
    for label in ("I", "M", "M1", "M2", "F", "K"):
        assert label in texts
    assert "T2K=1080" in texts
    assert len(list(root.iter("{http://www.w3.org/2000/svg}circle"))) >= 2


def test_figure_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "figure", "--m", "2", "--n", "1", "--out", str(tmp_path / "no" / "x.svg"))
    assert code == 1


def test_usage_error_is_exit_1(capsys):
    assert run(capsys, "generate", "--m", "2")[0] == 1


def test_tt_format_env(monkeypatch, capsys):
    monkeypatch.setenv("TT_FORMAT", "json")
    _, out, _ = run(capsys, "classify", "--r1", "3", "--r2", "2")
    assert json.loads(out) == {"tier": "NonSquareProduct"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twocircles", "classify", "--r1", "560", "--r2", "315"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("FullyIntegral")

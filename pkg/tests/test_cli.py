import csv
import math

import pytest

from hocc.cli import main, read_config
from hocc.regime import INFIMUM_BOUNDARY, SUPREMUM_BOUNDARY


def _rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def test_curve_is_byte_identical(tmp_path):
    argv = ["curve", "--model", "nak:m=2", "--snr-db=-10:20", "--points", "4",
            "--methods", "quadrature,mc,high,low,jensen", "--samples", "20000", "--seed", "7"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_curve_csv_round_trip(tmp_path):
    out = tmp_path / "c.csv"
    main(["curve", "--model", "ray", "--snr-db", "0:10", "--points", "3",
          "--methods", "quadrature,high", "--out", str(out)])
    rows = _rows(out)
    assert list(rows[0]) == ["snr_db", "method", "order", "value", "err"]
    assert [r["method"] for r in rows] == ["quadrature", "high"] * 3
    assert [float(r["snr_db"]) for r in rows[::2]] == [0.0, 5.0, 10.0]
    assert all(r["err"] == "" for r in rows if r["method"] == "high")
    assert all(float(r["err"]) >= 0 for r in rows if r["method"] == "quadrature")


def test_low_column_is_linear_mean(tmp_path):
    out = tmp_path / "low.csv"
    main(["curve", "--model", "wei:xi=2", "--snr-db=-20:0", "--points", "5",
          "--methods", "low", "--out", str(out)])
    for r in _rows(out):
        assert float(r["value"]) == pytest.approx(10 ** (float(r["snr_db"]) / 10), rel=1e-11)


def test_rayleigh_high_meets_quadrature_at_40db(tmp_path):
    out = tmp_path / "ray.csv"
    main(["curve", "--model", "ray", "--snr-db", "0:40", "--points", "5",
          "--methods", "quadrature,high", "--out", str(out)])
    last = {r["method"]: float(r["value"]) for r in _rows(out) if float(r["snr_db"]) == 40.0}
    assert abs(last["quadrature"] - last["high"]) <= 2e-3


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# experiment\nmodel = nak:m=3\norder = 2\nsnr_db = 0:10\npoints = 2\nmethods = high\n")
    assert read_config(str(cfg))["order"] == "2"
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["curve", "--config", str(cfg), "--out", str(a)])
    main(["curve", "--config", str(cfg), "--order", "3", "--out", str(b)])
    assert {r["order"] for r in _rows(a)} == {"2"}
    assert {r["order"] for r in _rows(b)} == {"3"}
    assert len(_rows(b)) == 2


def test_model_parse_error_exit_code(capsys):
    assert main(["curve", "--model", "ray:foo=1", "--points", "2"]) == 2
    err = capsys.readouterr().err
    assert "column 5" in err and "^" in err


@pytest.mark.parametrize("argv", [
    ["curve", "--model", "ray", "--snr-db", "10:0"],
    ["curve", "--model", "ray", "--points", "1"],
    ["curve", "--model", "ray", "--methods", "bogus"],
    ["boundary", "--model", "ray", "--weights", "0.5,0.5"],
    ["curve"],
])
def test_bad_flags_exit_nonzero(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0


def test_boundary_awgn_proxy(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["boundary", "--model", "awgn-proxy", "--points", "16", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    line = next(ln for ln in text.splitlines() if ln.startswith("low_boundary"))
    assert float(line.split()[1]) == pytest.approx(SUPREMUM_BOUNDARY, abs=1e-6)
    rows = _rows(out)
    assert len(rows) == 16 and all(float(r["objective"]) >= 0 for r in rows)


def test_boundary_osg(tmp_path, capsys):
    out = tmp_path / "osg.csv"
    assert main(["boundary", "--model", "osg", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    line = next(ln for ln in text.splitlines() if ln.startswith("low_boundary"))
    assert abs(float(line.split()[1]) - INFIMUM_BOUNDARY) <= 0.05
    assert all(float(r["objective"]) >= 0 for r in _rows(out))
    assert "high_onset: 17.58487" in text


def test_validate_rejects_bad_parameters(capsys):
    assert main(["validate", "--model", "nak:m=0.1"]) != 0
    assert "m must be >= 0.5" in capsys.readouterr().err


def test_validate_single_model_passes(tmp_path):
    out = tmp_path / "v.csv"
    assert main(["validate", "--model", "ray", "--samples", "100000", "--out", str(out)]) == 0
    rows = _rows(out)
    assert rows and all(r["status"] == "pass" for r in rows)


def test_validate_seed_does_not_flip(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["validate", "--model", "nak:m=2", "--samples", "100000", "--seed", "1", "--out", str(a)])
    main(["validate", "--model", "nak:m=2", "--samples", "100000", "--seed", "2", "--out", str(b)])
    assert [r["status"] for r in _rows(a)] == [r["status"] for r in _rows(b)]


def test_eta_mu_high_falls_back_to_gl(tmp_path, capsys):
    out = tmp_path / "e.csv"
    assert main(["curve", "--model", "emu:eta=0.5,mu=1", "--snr-db", "30:40", "--points", "2",
                 "--methods", "high", "--out", str(out)]) == 0
    assert "GL" in capsys.readouterr().err
    assert all(math.isfinite(float(r["value"])) for r in _rows(out))

import json
import math

import pytest

from eta_zeta.cli import (CSV_HEADER, main, record_to_csv, records_to_csv,
                          scan_records)
from eta_zeta.zeta_bridge import EXCEPTIONAL_DISTANCE_THRESHOLD

T1 = 2.0 * math.pi / math.log(2.0)
T3 = 3.0 * T1


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -------------------------------------------------------------------- eval ---

def test_eval_text_zeta_half(capsys):
    code, out, _ = run_cli(capsys, "eval", "zeta", "0.5", "0")
    assert code == 0
    assert "-1.46035450881" in out
    assert "method    = Direct26" in out


def test_eval_text_eta_one_m50(capsys):
    code, out, _ = run_cli(capsys, "eval", "eta", "1", "0", "--m", "50")
    assert code == 0
    assert "0.69314718056" in out


def test_eval_json_fields(capsys):
    code, out, _ = run_cli(capsys, "eval", "eta", "0.5", "14.134725",
                           "--m", "40", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert list(record) == ["sigma", "t", "re", "im", "abs", "method",
                            "err_bound", "m_used"]
    assert record["m_used"] == 40
    assert record["method"] == "Direct26"
    assert record["abs"] == pytest.approx(math.hypot(record["re"],
                                                     record["im"]), rel=1e-15)


def test_eval_csv(capsys):
    code, out, _ = run_cli(capsys, "eval", "zeta", "0.75", "2",
                           "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    fields = lines[1].split(",")
    assert float(fields[0]) == 0.75
    assert fields[5] == "Direct26"


def test_eval_pole_exit_code(capsys):
    code, _, err = run_cli(capsys, "eval", "zeta", "1", "0")
    assert code == 2
    assert "pole at s=1" in err


def test_eval_sigma_out_of_range(capsys):
    code, _, err = run_cli(capsys, "eval", "eta", "5", "0")
    assert code == 2
    assert "outside supported sigma range" in err


def test_eval_exceptional_beyond_stepwise(capsys):
    code, _, err = run_cli(capsys, "eval", "zeta", "1", f"{T3!r}")
    assert code == 2
    assert "stepwise path beyond |t|<=20" in err


def test_eval_parameter_exhaustion(capsys):
    code, _, err = run_cli(capsys, "eval", "eta", "0.75", "1000")
    assert code == 2
    assert "parameter exhaustion" in err


# -------------------------------------------------------------------- scan ---

def test_scan_record_count_and_header(capsys):
    code, out, _ = run_cli(capsys, "scan", "zeta", "--sigma", "0.5",
                           "--t-min", "0", "--t-max", "1", "--step", "0.5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    t_values = [float(line.split(",")[1]) for line in lines[1:]]
    assert t_values == sorted(t_values)
    assert all(line.split(",")[5] == "Direct26" for line in lines[1:])


def test_scan_minimum_near_first_critical_zero(capsys):
    code, out, _ = run_cli(capsys, "scan", "eta", "--sigma", "0.5",
                           "--t-min", "14.13", "--t-max", "14.14",
                           "--step", "0.001")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    abs_values = [float(r[4]) for r in rows]
    t_at_min = float(rows[abs_values.index(min(abs_values))][1])
    assert 14.133 < t_at_min < 14.136


def test_scan_small_near_first_on_line_zero(capsys):
    code, out, _ = run_cli(capsys, "scan", "eta", "--sigma", "1",
                           "--t-min", "9.064", "--t-max", "9.065",
                           "--step", "0.0005")
    assert code == 0
    for line in out.splitlines()[1:]:
        assert float(line.split(",")[4]) < 1e-3


def test_scan_emits_error_records_at_unreachable_exceptional(capsys):
    code, out, _ = run_cli(capsys, "scan", "zeta", "--sigma", "1",
                           "--t-min", "27.1940", "--t-max", "27.1943",
                           "--step", "0.0001")
    assert code == 0
    lines = out.splitlines()[1:]
    assert len(lines) == 4
    n_errors = 0
    for i, line in enumerate(lines):
        fields = line.split(",")
        t = 27.1940 + i * 0.0001
        near = math.hypot(0.0, t - T3) < EXCEPTIONAL_DISTANCE_THRESHOLD
        if near:
            n_errors += 1
            assert fields[5] == "error"
            assert fields[2] == fields[3] == fields[4] == ""
            assert fields[6] == fields[7] == ""
        else:
            assert fields[5] != "error"
            float(fields[2])
    assert n_errors >= 1


def test_scan_json_lines(capsys):
    code, out, _ = run_cli(capsys, "scan", "eta", "--sigma", "0.75",
                           "--t-min", "0", "--t-max", "0.2", "--step", "0.1",
                           "--format", "json")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    for line in lines:
        record = json.loads(line)
        assert list(record) == ["sigma", "t", "re", "im", "abs", "method",
                                "err_bound", "m_used"]


def test_scan_round_trip_is_bit_identical(capsys):
    code, out, _ = run_cli(capsys, "scan", "eta", "--sigma", "0.6",
                           "--t-min", "0", "--t-max", "3", "--step", "0.25")
    assert code == 0
    for line in out.splitlines()[1:]:
        sigma, t, re, im = line.split(",")[:4]
        m_used = int(line.split(",")[7])
        again = scan_records("eta", float(sigma), float(t), float(t), 1.0,
                             m=m_used)[0]
        assert repr(again.re) == re
        assert repr(again.im) == im


def test_scan_repeated_and_parallel_bytes_identical():
    args = ("eta", 0.5, 0.0, 1.0, 0.02)
    first = records_to_csv(scan_records(*args))
    second = records_to_csv(scan_records(*args))
    parallel = records_to_csv(scan_records(*args, jobs=2))
    assert first == second
    assert first == parallel


def test_scan_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["scan", "eta", "--sigma", "0.5", "--t-min", "0",
              "--t-max", "1", "--step", "-0.1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["scan", "eta", "--sigma", "0.5", "--t-min", "2",
              "--t-max", "1", "--step", "0.1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["scan", "eta", "--sigma", "0.5", "--t-min", "0",
              "--t-max", "1e6", "--step", "1e-6"])
    assert exc.value.code == 2


def test_scan_sigma_out_of_range(capsys):
    code, _, err = run_cli(capsys, "scan", "eta", "--sigma", "4",
                           "--t-min", "0", "--t-max", "1", "--step", "0.5")
    assert code == 2
    assert "outside supported sigma range" in err


# ------------------------------------------------------------------ table2 ---

def test_table2_rows_and_markers(capsys):
    code, out, _ = run_cli(capsys, "table2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 13  # header + rows n = 0..11
    for n in range(12):
        row = lines[n + 1]
        assert row.strip().startswith(str(n))
        marked = row.rstrip().endswith("X")
        assert marked == (n % 2 == 0 and n > 0)
    assert "0.69314718056" in lines[1]


# ------------------------------------------------------------------ verify ---

def test_verify_reports_only_the_known_misprint(capsys):
    from eta_zeta.acceptance import KNOWN_REFERENCE_MISPRINTS

    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    failing = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert len(failing) == len(KNOWN_REFERENCE_MISPRINTS) == 1
    assert "table2 row n=7" in failing[0]
    assert "26/27 checks passed" in out


# -------------------------------------------------------------- formatting ---

def test_csv_uses_shortest_round_trip_floats():
    rec = scan_records("eta", 0.5, 0.1, 0.1, 1.0)[0]
    line = record_to_csv(rec)
    assert line.split(",")[1] == "0.1"
    assert float(line.split(",")[2]) == rec.re

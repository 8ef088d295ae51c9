import json
import os
import subprocess

import pytest

CLI = os.environ.get("DESCENT3_CLI", "descent3")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)


def test_analyze_rank_six_json():
    p = run("analyze", "--m", "-34", "--n", "419", "--format", "json", "--no-hasse")
    assert p.returncode == 0, p.stderr
    r = json.loads(p.stdout)
    assert r["seed"]["D"] == "-4897363"
    assert r["r3"] == 3
    assert r["dim_mod_3"] == 6
    assert r["rank_lb"] == 6 and r["rank_ub"] == 6
    assert r["class_group"]["h"] == "297"


def test_analyze_violation_disc():
    p = run("analyze", "--disc", "48035713", "--format", "json", "--bound-global", "300")
    assert p.returncode == 0, p.stderr
    r = json.loads(p.stdout)
    assert len(r["classes"]) == 4
    assert r["r3"] == 2 and r["r3_monic_lb"] == 1
    assert r["sha_lambda_rank_conditional"] == 1
    kinds = sorted(v["kind"] for v in r["hasse"])
    assert kinds == ["CertifiedViolation"] * 3 + ["HasGlobalPoint"]


def test_csv_and_text_formats():
    p = run("analyze", "--m", "1", "--n", "1", "--format", "csv")
    assert p.returncode == 0
    header, row = p.stdout.strip().splitlines()
    assert header.startswith("D,m,n,r3,")
    assert row.startswith("-23,1,1,1,1,")
    t = run("analyze", "--m", "1", "--n", "1", "--format", "text")
    assert t.returncode == 0
    assert "Sha[3^inf]" in t.stdout


@pytest.mark.parametrize("args", [["--m", "2", "--n", "2"], ["--m", "0", "--n", "1"], ["--disc", "-4"]])
def test_invalid_seed_exit_two(args):
    p = run("analyze", *args)
    assert p.returncode == 2
    assert p.stderr.startswith("error: ")


def test_bad_filter_exit_two():
    p = run("scan", "--m", "1..2", "--n", "1..2", "--filter", "bogus>=1")
    assert p.returncode == 2


def test_empty_box():
    p = run("scan", "--m", "1..0", "--n", "1..3", "--format", "json")
    assert p.returncode == 0
    assert p.stdout == ""


def test_scan_filter_small_box():
    p = run("scan", "--m", "-10..10", "--n", "1..10", "--filter", "r3>=1,D<0", "--format", "csv", "--no-hasse")
    assert p.returncode == 0, p.stderr
    rows = p.stdout.strip().splitlines()[1:]
    assert rows
    for row in rows:
        fields = row.split(",")
        assert int(fields[0]) < 0 and int(fields[3]) >= 1


def test_cache_rerun(tmp_path):
    cache = tmp_path / "cache.ndjson"
    args = ["analyze", "--m", "7", "--n", "3", "--format", "json", "--cache", str(cache)]
    first = run(*args)
    assert first.returncode == 0
    assert "cache hit" not in first.stderr
    second = run(*args)
    assert second.returncode == 0
    assert second.stdout == first.stdout
    assert "cache hit" in second.stderr
    changed = run(*args, "--bound-monic", "50")
    assert "cache hit" not in changed.stderr


@pytest.mark.parametrize("which", ["1", "4", "forms"])
def test_tables(which):
    p = run("tables", "--which", which)
    assert p.returncode == 0, p.stdout + p.stderr


def test_hasse_form():
    p = run("hasse", "--form", "[-134,45,41,-2]", "--bound-global", "200")
    assert p.returncode == 0, p.stderr
    assert "CertifiedViolation" in p.stdout

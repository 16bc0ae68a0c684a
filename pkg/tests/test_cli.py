import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

GOLDENS = Path(__file__).parent / "goldens"


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("GEOFORGE_PRECISION_BITS", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "geoforge.cli", *args],
        capture_output=True, text=True, env=env,
    )


GOLDEN_CASES = [
    ("word_ab.json", ["--no-meta", "word", "ab", "--oracle"]),
    ("word_aB.json", ["--no-meta", "word", "aB"]),
    ("word_abab.json", ["--no-meta", "word", "abab"]),
    ("strand_winding.json",
     ["--no-meta", "strand", "--h", "1",
      "--length", "1.76274717403908605046521864995958461805632"]),
    ("strand_bounds.json", ["--no-meta", "strand", "--h", "1", "--omega", "4"]),
    ("strand_threshold.json", ["--no-meta", "strand", "--h", "1", "--h0", "0.5"]),
    ("constants_111.json",
     ["--no-meta", "constants", "--g", "1", "--n", "1", "--s", "1", "--k", "2"]),
    ("constants_y.json",
     ["--no-meta", "constants", "--surface-y", "--k", "2", "--k", "3"]),
    ("example_100.json", ["--no-meta", "example", "--k", "100"]),
    ("survey_len4.csv", ["--no-meta", "survey", "--max-len", "4", "--k", "1", "--k", "2"]),
    ("survey_len4.json",
     ["--no-meta", "survey", "--max-len", "4", "--k", "2", "--format", "json"]),
]


@pytest.mark.parametrize("golden,args", GOLDEN_CASES, ids=[g for g, _ in GOLDEN_CASES])
def test_golden(golden, args):
    proc = run_cli(*args)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == (GOLDENS / golden).read_text()


def test_specific_golden_values():
    doc = json.loads((GOLDENS / "word_ab.json").read_text())
    assert doc["trace"] == "6" and doc["self_intersections"] == 1
    doc = json.loads((GOLDENS / "strand_winding.json").read_text())
    assert doc["winding"] == 2 and doc["self_intersections"] == 1
    doc = json.loads((GOLDENS / "constants_111.json").read_text())
    assert doc["constants"]["h_adams"] == 6
    assert doc["constants"]["eps0"]["fraction"] == "1/900"
    doc = json.loads((GOLDENS / "example_100.json").read_text())
    assert doc["examples"][0]["bullet1"] and doc["examples"][0]["bullet2"]


def test_short_decimal_is_honestly_below_the_tie():
    proc = run_cli("--no-meta", "strand", "--h", "1", "--length", "1.7627")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["winding"] == 1


def test_exit_code_domain_error():
    proc = run_cli("constants", "--g", "0", "--n", "3", "--s", "1")
    assert proc.returncode == 3
    assert "Bers" in proc.stderr
    proc = run_cli("word", "aA")
    assert proc.returncode == 3


def test_exit_code_usage():
    proc = run_cli("strand", "--h", "1")
    assert proc.returncode == 2
    proc = run_cli("constants")
    assert proc.returncode == 2


def test_exit_code_assertion_failure():
    # under the sqrt scaling the first inequality fails in the asserted range
    proc = run_cli("--no-meta", "example", "--k", "100", "--sqrt-scale")
    assert proc.returncode == 4
    doc = json.loads(proc.stdout)
    assert doc["examples"][0]["bullet1"] is False


def test_exit_code_search_cap():
    proc = run_cli("constants", "--g", "0", "--n", "9", "--s", "1e-300")
    assert proc.returncode == 5
    assert "cap" in proc.stderr


def test_meta_header_suppression():
    with_meta = run_cli("word", "ab").stdout
    without = run_cli("--no-meta", "word", "ab").stdout
    assert "generated_at" in with_meta
    assert "generated_at" not in without
    again = run_cli("--no-meta", "word", "ab").stdout
    assert without == again


def test_env_precision_override():
    proc = run_cli("--no-meta", "word", "ab", env_extra={"GEOFORGE_PRECISION_BITS": "64"})
    doc = json.loads(proc.stdout)
    # 64-bit mantissa prints fewer digits than the 128-bit default
    assert len(doc["length"]) < 30


def test_survey_json_csv_consistency():
    csv_out = run_cli("--no-meta", "survey", "--max-len", "3", "--k", "1").stdout
    json_out = json.loads(run_cli("--no-meta", "survey", "--max-len", "3", "--k", "1",
                                  "--format", "json").stdout)
    csv_words = [line.split(",")[0] for line in csv_out.splitlines()[1:]
                 if line and not line.startswith("#")]
    assert csv_words == [r["word"] for r in json_out["rows"]]

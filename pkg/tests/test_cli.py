import json
import subprocess
import sys

from monotri import triangle_from_json, validate_gmt
from monotri.cli import main, parse_row, parse_window


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "monotri.cli", *args],
        capture_output=True, text=True, timeout=300,
    )


class TestParsing:
    def test_rows(self):
        assert parse_row("4,2,1,3") == (4, 2, 1, 3)
        assert parse_row("-4,0,7") == (-4, 0, 7)

    def test_windows(self):
        assert parse_window("-4..4") == (-4, 4)
        assert parse_window("0..3") == (0, 3)

    def test_bad_inputs_exit_with_usage_error(self):
        assert main(["alpha", "--row", "1,x"]) == 2
        assert main(["verify", "cyclic", "--window", "oops"]) == 2


class TestAlphaCommand:
    def test_golden_value(self):
        proc = run_cli("alpha", "--row", "2,4,5,8,9")
        assert proc.returncode == 0
        assert proc.stdout == "16939\n"

    def test_single_entry(self):
        proc = run_cli("alpha", "--row", "7")
        assert proc.stdout == "1\n"

    def test_all_methods_four_equal_lines(self):
        proc = run_cli("alpha", "--row", "4,2,1,3", "--all-methods")
        assert proc.returncode == 0
        assert proc.stdout.splitlines() == ["-2", "-2", "-2", "-2"]

    def test_all_methods_includes_direct_count_when_increasing(self):
        proc = run_cli("alpha", "--row", "1,2,3", "--all-methods")
        assert proc.stdout.splitlines() == ["7"] * 5

    def test_cache_file_round_trip(self, tmp_path):
        path = tmp_path / "values.tsv"
        first = run_cli("alpha", "--row", "4,2,1,3", "--cache-file", str(path))
        assert first.stdout == "-2\n"
        assert path.exists() and path.read_text().count("\n") > 0
        again = run_cli("alpha", "--row", "4,2,1,3", "--cache-file", str(path))
        assert again.stdout == "-2\n"


class TestEnumerateCommand:
    def test_count_and_signed(self):
        assert run_cli("enumerate", "gmt", "--row", "4,2,1,3", "--count").stdout == "4\n"
        assert run_cli("enumerate", "gmt", "--row", "4,2,1,3", "--signed").stdout == "-2\n"
        assert run_cli("enumerate", "mt", "--row", "1,2,3", "--count").stdout == "7\n"

    def test_stream_is_json_lines(self):
        proc = run_cli("enumerate", "gmt", "--row", "4,2,1,3")
        lines = proc.stdout.splitlines()
        assert len(lines) == 4
        triangles = [triangle_from_json(line) for line in lines]
        assert all(validate_gmt(t) for t in triangles)
        assert lines[0] == "[[2],[2,2],[2,2,1],[4,2,1,3]]"

    def test_tn_stream_carries_specials(self):
        proc = run_cli("enumerate", "tn", "--row", "4,2,1,3")
        lines = proc.stdout.splitlines()
        assert len(lines) == 8
        assert all("special" in json.loads(line) for line in lines)

    def test_class_row_mismatch_is_usage_error(self):
        assert run_cli("enumerate", "mt", "--row", "2,1").returncode == 2
        assert run_cli("enumerate", "dmt", "--row", "1,2").returncode == 2

    def test_budget_exit_code(self):
        proc = run_cli("enumerate", "mt", "--row", "2,4,5,8,9", "--max-triangles", "5")
        assert proc.returncode == 3


class TestVerifyCommand:
    def test_cyclic_passes(self):
        proc = run_cli("verify", "cyclic", "--n", "3", "--window", "-4..4",
                       "--samples", "40", "--seed", "7")
        assert proc.returncode == 0
        assert "cyclic" in proc.stdout

    def test_method_agreement_exhaustive(self):
        proc = run_cli("verify", "theorem1", "--n", "3", "--window", "-1..1", "--exhaustive")
        assert proc.returncode == 0

    def test_conjecture_wording(self):
        proc = run_cli("verify", "rev-dup", "--n", "3")
        assert proc.returncode == 0
        assert "conjecture: consistent at tested scale" in proc.stdout

    def test_reduction_single_row(self):
        proc = run_cli("verify", "reduction", "--row", "4,2,1,3")
        assert proc.returncode == 0

    def test_unknown_identity_is_usage_error(self):
        assert run_cli("verify", "no-such-identity").returncode == 2

    def test_json_format(self):
        proc = run_cli("verify", "cyclic", "--n", "2", "--samples", "10", "--format", "json")
        document = json.loads(proc.stdout)
        assert document["passed"] is True
        assert document["reports"][0]["name"] == "cyclic"
        assert "timing" not in json.dumps(document)

    def test_jobs_do_not_change_output_bytes(self):
        args = ("verify", "cyclic", "--n", "3", "--samples", "30", "--seed", "9",
                "--format", "json")
        one = run_cli(*args, "--jobs", "1")
        eight = run_cli(*args, "--jobs", "8")
        assert one.returncode == eight.returncode == 0
        assert one.stdout == eight.stdout

    def test_ratio_scan(self):
        proc = run_cli("verify", "ratio-scan", "--k", "4", "--n-range", "4..5",
                       "--format", "json")
        assert proc.returncode == 0
        document = json.loads(proc.stdout)
        assert document["reports"][0]["metadata"]["ratios"] == {"4": "4", "5": "9/2"}

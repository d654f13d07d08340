import csv
import io
import json
import shutil
import subprocess

import pytest

from grassmann_daha import report
from grassmann_daha.checks import Check
from grassmann_daha.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_numeric_verify_passes_and_caches(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    args = ["verify", "--q", "2", "--N", "6", "--D", "3", "--format", "json", "--cache-dir", cache, "--pairs", "20"]
    code, out, _ = run_cli(capsys, *args)
    assert code == 0
    first = json.loads(out)
    assert first["schemaVersion"] == 1
    assert first["info"]["cache"] == "written"
    assert first["info"]["graph"]["vertices"] == 1395
    code, out, _ = run_cli(capsys, *args)
    second = json.loads(out)
    assert second["info"]["cache"] == "reused"
    ids = [c["id"] for c in second["checks"]]
    assert "graph.cache-consistent" in ids
    assert len(ids) == len(set(ids))


def test_symbolic_mode_builds_no_graph(capsys):
    code, out, _ = run_cli(capsys, "verify", "--mode", "symbolic", "--N", "6", "--D", "3",
                           "--suites", "graph,leonard", "--format", "json")
    assert code == 0
    d = json.loads(out)
    graph = [c for c in d["checks"] if c["id"] == "graph"]
    assert graph and graph[0]["status"] == "skipped"
    assert "graph" not in d["info"]


@pytest.mark.parametrize("argv,msg", [
    (["verify", "--q", "6"], "6 is not a prime power"),
    (["verify", "--q", "17"], "17"),
    (["verify", "--N", "5", "--D", "3"], "N >= 2D"),
    (["verify", "--suites", "graphs"], "unknown suite"),
    (["verify", "--mode", "numeric"], "needs --q"),
    (["verify", "--q", "3", "--N", "8", "--D", "4", "--budget", "1000"], "budget"),
    (["graph-info"], "needs --q"),
])
def test_usage_errors_exit_2(capsys, argv, msg):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert msg in err


def test_check_failure_exits_1(capsys, monkeypatch):
    def broken(cfg, info):
        return [Check("leonard.synthetic", "leonard-systems", False, "forced")]
    monkeypatch.setitem(report.SUITE_FUNCS, "leonard", broken)
    code, out, _ = run_cli(capsys, "verify", "--suites", "leonard")
    assert code == 1
    assert "FAIL    leonard.synthetic  -- forced" in out


def test_report_is_byte_stable(capsys):
    argv = ["verify", "--suites", "leonard,nonsym", "--format", "json", "--pairs", "10", "--seed", "3"]
    _, a, _ = run_cli(capsys, *argv)
    _, b, _ = run_cli(capsys, *argv)
    assert a == b
    assert "seconds" not in a


def test_timing_flag_adds_seconds(capsys):
    _, out, _ = run_cli(capsys, "verify", "--suites", "leonard", "--format", "csv", "--timing")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and "seconds" in rows[0]


def test_report_written_to_file(capsys, tmp_path):
    path = tmp_path / "r.txt"
    code, out, _ = run_cli(capsys, "verify", "--suites", "leonard", "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[-1].endswith("0 failed, 0 skipped")


def test_tables_numeric(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "tables", "--q", "2", "--suites", "graph", "--output", str(tmp_path))
    assert code == 0
    rows = list(csv.DictReader((tmp_path / "cell_sizes.csv").open()))
    c1 = next(r for r in rows if r["cell"] == "C1-")
    assert c1["numeric"] == "84"


def test_tables_recurrences_symbolic(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "tables", "--suites", "nonsym", "--output", str(tmp_path))
    assert code == 0
    rec = sorted(p.name for p in tmp_path.glob("recurrence_*.csv"))
    assert len(rec) == 4
    text = (tmp_path / "recurrence_zeta_minus.csv").read_text()
    assert text.startswith("source,target,symbolic,numeric\n")


def test_tables_are_byte_stable(capsys, tmp_path):
    for sub in ("a", "b"):
        run_cli(capsys, "tables", "--suites", "all", "--format", "json", "--output", str(tmp_path / sub))
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert names == sorted(p.name for p in (tmp_path / "b").iterdir())
    for n in names:
        assert (tmp_path / "a" / n).read_bytes() == (tmp_path / "b" / n).read_bytes()


def test_empty_suite_selection_writes_nothing(capsys, tmp_path):
    out_dir = tmp_path / "none"
    code, _, _ = run_cli(capsys, "tables", "--suites", "", "--output", str(out_dir))
    assert code == 0
    assert not out_dir.exists()


def test_graph_info(capsys):
    code, out, _ = run_cli(capsys, "graph-info", "--q", "2", "--count", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["vertices"] == 1395 and d["clique"] == 15
    assert d["counted_cells"]["C0+"] == 14
    assert d["cells"]["C1-"] == "84"


def test_cache_clear(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("GRASSMANN_DAHA_CACHE", str(tmp_path))
    run_cli(capsys, "verify", "--q", "2", "--suites", "graph")
    assert list(tmp_path.glob("*.txt"))
    code, out, _ = run_cli(capsys, "cache", "clear")
    assert code == 0 and "removed 1" in out
    assert not list(tmp_path.glob("*.txt"))


@pytest.mark.skipif(shutil.which("grassmann-daha") is None, reason="console script not installed")
def test_console_script_exit_code():
    r = subprocess.run(["grassmann-daha", "verify", "--q", "6"], capture_output=True, text=True)
    assert r.returncode == 2
    assert "not a prime power" in r.stderr

import csv
import io

from flowgraphs.bench import COLUMNS, measure, mismatches, run_bench, to_csv
from flowgraphs.cli import main
from flowgraphs.pipeline import PHASES


def test_size_zero_row():
    (row,) = run_bench([0], ["straight"], repeat=1)
    assert (row.instructions, row.cf_edges, row.df_edges) == (2, 1, 0)
    table = list(csv.DictReader(io.StringIO(to_csv([row]))))
    assert list(table[0]) == list(COLUMNS)
    assert table[0]["instructions"] == "2"


def test_empty_table_is_header_only():
    assert to_csv([]) == ",".join(COLUMNS) + "\n"


def test_strategies_agree_on_nested_profile():
    rows = run_bench([40, 120], ["nested"], ["traversal", "fixpoint"], repeat=1)
    assert len(rows) == 4
    assert mismatches(rows) == []
    assert rows[0].df_signature == rows[1].df_signature


def test_mismatch_detection():
    a = measure("class C { void m() { } }", "traversal", 1, "p", 1)
    b = measure("class C { int f(int x) { return x; } }", "fixpoint", 1, "p", 1)
    assert mismatches([a, b]) == [("p", 1)]


def test_medians_cover_all_phases():
    row = measure("class C { int f(int x) { return x; } }", repeat=3)
    assert set(row.medians) == set(PHASES)
    assert all(v >= 0 for v in row.medians.values())


def test_cli_bench_csv_and_plot(tmp_path, capsys):
    png = tmp_path / "phases.png"
    assert main(["bench", "--sizes", "0,5,20", "--profile", "all", "--dataflow", "both", "--repeat", "1",
                 "--plot", str(png)]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 3 * 3 * 2
    assert {r["profile"] for r in rows} == {"straight", "nested", "branchy"}
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_cli_bench_to_file(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--sizes", "3", "--repeat", "1", "-o", str(out)]) == 0
    assert out.read_text().startswith("profile,size,strategy")


def test_cli_bench_plot_needs_positive_sizes(tmp_path, capsys):
    assert main(["bench", "--sizes", "0", "--repeat", "1", "--plot", str(tmp_path / "x.png")]) == 2
    assert "nothing to plot" in capsys.readouterr().err

import io

import pytest

from cabcodes.bench import CSV_COLUMNS, fit_slope, slopes, sweep, write_csv


def test_fit_slope_exact():
    assert fit_slope([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)
    assert fit_slope([10, 100], [5, 50]) == pytest.approx(1.0)


def test_sweep_shape():
    rows = sweep("hermitian", [2, 3], repeats=1, general_max_n=10)
    ops = [(r["op"], r["path"]) for r in rows]
    assert ops.count(("encode", "fast")) == 2
    assert ops.count(("encode", "naive")) == 2
    assert ops.count(("unencode", "semigrid")) == 2
    assert ops.count(("unencode", "general")) == 1  # only n = 8 is under the cap
    assert all(r["m"] == r["n"] - 1 for r in rows)
    assert set(slopes(rows)) == {("encode", "fast"), ("encode", "naive"), ("unencode", "semigrid")}
    buf = io.StringIO()
    write_csv(rows, buf)
    assert buf.getvalue().splitlines()[0].split(",") == CSV_COLUMNS


def test_normtrace_family():
    rows = sweep("normtrace", [2, 3], repeats=1, naive=False, general_max_n=0)
    assert [r["n"] for r in rows if r["op"] == "encode"] == [8, 32]


def test_unknown_family():
    with pytest.raises(ValueError):
        sweep("elliptic", [2])

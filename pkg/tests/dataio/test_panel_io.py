import numpy as np
import pytest

from src.core.stack_exception import StackException, PanelException
from src.dataio.panel_io import load_panel, write_panel, series_id_of

HEADER = "timestamp,actual,m1,m2\n"


def _write(tmp_path, body: str, name: str = "zone.csv") -> str:
    file_path = tmp_path / name
    file_path.write_text(HEADER + body)
    return str(file_path)


def test_reads_a_valid_panel(tmp_path):
    panel = load_panel(_write(tmp_path,
        "2018-01-01T00:00:00Z,100,98,103\n"
        "2018-01-01T01:00:00Z,110,111,107.5\n"
        "2018-01-01T02:00:00Z,120,119,125\n"))

    assert panel.series_id == "zone"
    assert panel.length == 3
    assert panel.model_names == ["m1", "m2"]
    assert panel.actuals.tolist() == [100.0, 110.0, 120.0]
    assert panel.base_forecasts[1].tolist() == [111.0, 107.5]
    assert str(panel.timestamps.tz) == "UTC"


def test_naive_timestamps_are_utc(tmp_path):
    panel = load_panel(_write(tmp_path, "2018-01-01 00:00,100,98,103\n2018-01-01 01:00,110,111,107\n"))
    assert panel.timestamps[1].hour == 1
    assert str(panel.timestamps.tz) == "UTC"


@pytest.mark.parametrize("body, line, message", [
    ("2018-01-01T00:00:00Z,100,98,103\n2018-01-01T01:00:00Z,110,,107\n", 3, "missing value in column 'm1'"),
    ("2018-01-01T00:00:00Z,0,98,103\n", 2, "nonpositive load"),
    ("2018-01-01T00:00:00Z,100,98,103\n2018-01-01T00:00:00Z,100,98,103\n", 3, "duplicate timestamp"),
    ("2018-01-01T00:00:00Z,100,98,103\n2018-01-01T02:00:00Z,100,98,103\n", 3, "not hourly"),
    ("2018-01-01T00:00:00Z,100,98,103\n,100,98,103\n", 3, "missing timestamp"),
    ("2018-01-01T00:00:00Z,100,abc,103\n", 2, "is not a number")
])
def test_bad_rows_name_their_line(tmp_path, body, line, message):
    with pytest.raises(PanelException, match=message) as raised:
        load_panel(_write(tmp_path, body))

    assert raised.value.line == line
    assert raised.value.raw_message.startswith("line {0}:".format(line))


def test_bad_header(tmp_path):
    file_path = tmp_path / "bad.csv"
    file_path.write_text("time,load,m1\n2018-01-01T00:00:00Z,100,98\n")

    with pytest.raises(PanelException, match="header"):
        load_panel(str(file_path))


def test_missing_file(tmp_path):
    with pytest.raises(StackException, match="does not exist"):
        load_panel(str(tmp_path / "nope.csv"))


def test_written_panels_read_back_exactly(tmp_path, make_panel):
    panel = make_panel(length=30, n_models=4, seed=9, series_id="rt")
    file_path = str(tmp_path / "rt.csv")

    write_panel(panel, file_path)
    loaded = load_panel(file_path)

    assert loaded.series_id == "rt"
    assert loaded.model_names == panel.model_names
    assert np.array_equal(loaded.actuals, panel.actuals)
    assert np.array_equal(loaded.base_forecasts, panel.base_forecasts)
    assert list(loaded.timestamps) == list(panel.timestamps)


def test_series_id_is_the_file_stem():
    assert series_id_of("/data/panels/ERCOT_north.csv") == "ERCOT_north"

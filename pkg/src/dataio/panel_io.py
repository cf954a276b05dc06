from os import path
from typing import List
import numpy as np
import pandas as pd
import pytz

from .dataio_constants import COL_TIMESTAMP, COL_ACTUAL
from ..core.dates import ONE_HOUR, to_iso
from ..core.forecast_panel import ForecastPanel
from ..core.stack_exception import StackException, PanelException

HEADER_LINES: int = 1


def series_id_of(panel_path: str) -> str:
    return path.splitext(path.basename(panel_path))[0]


"""
Read a panel CSV: timestamp,actual,<model_1>,...,<model_n> with
strictly hourly ISO-8601 UTC rows. Parse errors carry the file line number
"""
def load_panel(panel_path: str, series_id: str = None) -> ForecastPanel:
    try:
        frame: pd.DataFrame = pd.read_csv(panel_path, dtype=str, keep_default_na=False, skip_blank_lines=False)
    except FileNotFoundError:
        raise StackException("Panel file '{0}' does not exist".format(panel_path))
    except pd.errors.EmptyDataError:
        raise StackException("Panel file '{0}' is empty".format(panel_path))
    except pd.errors.ParserError as e:
        raise StackException("Panel file '{0}' is malformed: {1}".format(panel_path, e))

    columns: List[str] = [str(c).strip() for c in frame.columns]
    if len(columns) < 3 or columns[0] != COL_TIMESTAMP or columns[1] != COL_ACTUAL:
        raise PanelException("header must be '{0},{1},<model_1>,...'".format(COL_TIMESTAMP, COL_ACTUAL), HEADER_LINES)
    if len(frame) == 0:
        raise StackException("Panel file '{0}' has no rows".format(panel_path))

    values: np.ndarray = np.empty((len(frame), len(columns) - 1))
    stamps: list = []

    for i, row in enumerate(frame.itertuples(index=False, name=None)):
        line: int = i + HEADER_LINES + 1
        stamps.append(_parse_timestamp(row[0], line))

        if i > 0:
            _check_step(stamps[-2], stamps[-1], line)

        for j in range(1, len(columns)):
            values[i, j - 1] = _parse_value(row[j], columns[j], line)

        if values[i, 0] <= 0:
            raise PanelException("percentage metrics undefined for nonpositive load ({0})".format(values[i, 0]), line)

    return ForecastPanel(series_id if series_id is not None else series_id_of(panel_path),
        pd.DatetimeIndex(stamps), values[:, 0], values[:, 1:], columns[2:])


def _parse_timestamp(cell, line: int) -> pd.Timestamp:
    if not isinstance(cell, str) or cell.strip() == "":
        raise PanelException("missing timestamp", line)

    try:
        stamp = pd.Timestamp(cell.strip())
    except ValueError:
        raise PanelException("'{0}' is not an ISO-8601 timestamp".format(cell), line)

    return stamp.tz_localize(pytz.utc) if stamp.tzinfo is None else stamp.tz_convert(pytz.utc)


def _check_step(previous: pd.Timestamp, current: pd.Timestamp, line: int) -> None:
    if current == previous:
        raise PanelException("duplicate timestamp {0}".format(current.isoformat()), line)
    if current - previous != ONE_HOUR:
        raise PanelException("timestamps are not hourly ({0} follows {1})".format(current.isoformat(), previous.isoformat()), line)


def _parse_value(cell, column: str, line: int) -> float:
    if not isinstance(cell, str) or cell.strip() == "":
        raise PanelException("missing value in column '{0}'".format(column), line)

    try:
        value: float = float(cell)
    except ValueError:
        raise PanelException("'{0}' in column '{1}' is not a number".format(cell, column), line)

    if not np.isfinite(value):
        raise PanelException("non-finite value in column '{0}'".format(column), line)

    return value


# numbers are rendered with repr so
# reading the file back is exact
def write_panel(panel: ForecastPanel, panel_path: str) -> None:
    frame: pd.DataFrame = pd.DataFrame({COL_TIMESTAMP: to_iso(panel.timestamps)})
    frame[COL_ACTUAL] = [repr(float(v)) for v in panel.actuals]

    for m, name in enumerate(panel.model_names):
        frame[name] = [repr(float(v)) for v in panel.base_forecasts[:, m]]

    try:
        frame.to_csv(panel_path, index=False, lineterminator="\n")
    except OSError as e:
        raise StackException("Cannot write panel to '{0}': {1}".format(panel_path, e))

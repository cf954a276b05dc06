from typing import List, Tuple
import numpy as np

from .metrics_reports import PointMetricsReport
from ..core.quantile_grid import QuantileForecast
from ..core.stack_exception import StackException


# signed percentage errors, positive
# means the forecast was too low
def percentage_errors(actuals, point_preds) -> np.ndarray:
    actuals = np.asarray(actuals, dtype=float).reshape(-1)
    point_preds = np.asarray(point_preds, dtype=float).reshape(-1)

    if len(actuals) != len(point_preds):
        raise StackException("Got {0} actuals for {1} point forecasts".format(len(actuals), len(point_preds)))
    if len(actuals) == 0:
        raise StackException("No forecasts to evaluate")
    if np.any(actuals <= 0):
        raise StackException("percentage metric undefined for nonpositive actual load")

    return 100.0 * (actuals - point_preds) / actuals


def point_metrics(actuals, point_preds) -> PointMetricsReport:
    errors: np.ndarray = percentage_errors(actuals, point_preds)
    squared: np.ndarray = (np.asarray(actuals, dtype=float) - np.asarray(point_preds, dtype=float)) ** 2

    return PointMetricsReport(
        MAPE=float(np.mean(np.abs(errors))),
        MdAPE=float(np.median(np.abs(errors))),
        MSE=float(np.mean(squared)),
        MPE=float(np.mean(errors)),
        StdPE=float(np.std(errors, ddof=1)) if len(errors) > 1 else 0.0)


# MAPE and MdAPE with the 0.5-quantile
# taken as the point forecast
def median_point_metrics(actuals, qfs: List[QuantileForecast]) -> Tuple[float, float]:
    medians: list = [qf.at(0.5) for qf in qfs]
    errors: np.ndarray = np.abs(percentage_errors(actuals, medians))
    return float(np.mean(errors)), float(np.median(errors))

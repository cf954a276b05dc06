import json
from collections import OrderedDict
from os import path, makedirs
from typing import Dict, List
import numpy as np
import pandas as pd

from .dataio_constants import \
    FILE_METRICS, FILE_POOLED, FILE_REFR, FILE_SWEEPS, FILE_DM_TESTS, FILE_DM_WINS, \
    FILE_HOURS, FILE_BASE_MODELS, FILE_SUMMARY
from ..core.constants import PI_LOWER, PI_UPPER
from ..core.stack_exception import StackException
from ..evaluation.evaluation_results import EvaluationResult, SweepResult, ComparisonResult
from ..metrics.metrics_reports import PROB_METRICS, POINT_METRICS, ProbMetricsReport, PointMetricsReport
from ..metrics.prob_metrics import arfe_table

FLOAT = np.float64
INT = np.int64

# column name -> dtype for every emitted table
SCHEMAS: Dict[str, OrderedDict] = {
    FILE_METRICS: OrderedDict([("series", str), ("method", str)] + [(m, FLOAT) for m in PROB_METRICS]),
    FILE_POOLED: OrderedDict([("method", str), ("series_count", INT)] + [(m, FLOAT) for m in PROB_METRICS]),
    FILE_REFR: OrderedDict([("series", str), ("method", str), ("alpha", FLOAT), ("refr", FLOAT), ("arfe", FLOAT)]),
    FILE_SWEEPS: OrderedDict([("series", str), ("method", str), ("axis", str), ("point", str)] + [(m, FLOAT) for m in PROB_METRICS]),
    FILE_DM_TESTS: OrderedDict([("series", str), ("method_a", str), ("method_b", str),
        ("statistic", FLOAT), ("p_value", FLOAT), ("n_obs", INT)]),
    FILE_DM_WINS: OrderedDict([("winner", str), ("loser", str), ("wins", INT), ("series_count", INT)]),
    FILE_HOURS: OrderedDict([("series", str), ("method", str), ("hour", INT), ("actual", FLOAT), ("pqre", FLOAT),
        ("pws", FLOAT), ("q05", FLOAT), ("q50", FLOAT), ("q95", FLOAT), ("train_size", INT), ("max_train_index", INT)]),
    FILE_BASE_MODELS: OrderedDict([("series", str), ("model", str)] + [(m, FLOAT) for m in POINT_METRICS])
}


"""
Every table a run emits, kept as rows until written. Tables are
plot ready: ReFr against alpha, metrics against k or q, forecast fans
"""
class ReportBundle:
    def __init__(self):
        self.rows: Dict[str, List[dict]] = OrderedDict((name, []) for name in SCHEMAS)
        self.summary: Dict[str, Dict[str, Dict[str, float]]] = {}


    def table(self, name: str) -> pd.DataFrame:
        schema: OrderedDict = SCHEMAS[name]
        frame: pd.DataFrame = pd.DataFrame(self.rows[name], columns=list(schema.keys()))
        return frame.astype(dict(schema))


    def add_evaluation(self, result: EvaluationResult) -> None:
        series, method = result.series_id, result.label
        self.rows[FILE_METRICS].append(_report_row(result.report, series=series, method=method))
        self.summary.setdefault(series, {})[method] = result.report.as_dict()

        grid = result.forecasts[0].grid
        arfes: np.ndarray = arfe_table(result.actuals, result.forecasts, grid)
        for alpha, arfe in zip(grid.probabilities, arfes):
            self.rows[FILE_REFR].append({"series": series, "method": method, "alpha": float(alpha),
                "refr": float(np.mean(result.actuals <= np.array([qf.at(alpha) for qf in result.forecasts]))),
                "arfe": float(arfe)})

        for record in result.records:
            self.rows[FILE_HOURS].append({"series": series, "method": method, "hour": record.hour,
                "actual": record.actual, "pqre": record.pqre, "pws": record.pws,
                "q05": record.forecast.at(PI_LOWER), "q50": record.forecast.at(0.5), "q95": record.forecast.at(PI_UPPER),
                "train_size": record.train_size, "max_train_index": record.max_train_index})


    def add_pooled(self, method: str, series_count: int, report: ProbMetricsReport) -> None:
        self.rows[FILE_POOLED].append(_report_row(report, method=method, series_count=series_count))


    def add_sweep(self, sweep: SweepResult) -> None:
        for point, result in zip(sweep.points, sweep.results):
            self.rows[FILE_SWEEPS].append(_report_row(result.report,
                series=result.series_id, method=result.config.method, axis=sweep.axis, point=point))


    def add_comparison(self, comparison: ComparisonResult) -> None:
        for (series, a, b), dm in comparison.tests.items():
            self.rows[FILE_DM_TESTS].append({"series": series, "method_a": a, "method_b": b,
                "statistic": dm.statistic, "p_value": dm.p_value, "n_obs": dm.n_obs})

        for winner in comparison.methods:
            for loser in comparison.methods:
                if winner != loser:
                    self.rows[FILE_DM_WINS].append({"winner": winner, "loser": loser,
                        "wins": comparison.win_count(winner, loser), "series_count": len(comparison.series)})


    def add_base_models(self, series: str, reports: Dict[str, PointMetricsReport]) -> None:
        for model, report in reports.items():
            row: dict = {"series": series, "model": model}
            row.update(report.as_dict())
            self.rows[FILE_BASE_MODELS].append(row)


def _report_row(report: ProbMetricsReport, **keys) -> dict:
    row: dict = dict(keys)
    row.update(report.as_dict())
    return row


"""
Write every table as CSV (header row always present, floats in
round-trip repr) and the nested series/method/metric summary as JSON
"""
def write_reports(bundle: ReportBundle, directory: str) -> List[str]:
    written: List[str] = []

    try:
        makedirs(directory, exist_ok=True)

        for name, schema in SCHEMAS.items():
            frame: pd.DataFrame = bundle.table(name)
            for column, dtype in schema.items():
                if dtype is FLOAT:
                    frame[column] = [repr(float(v)) for v in frame[column]]

            file_path: str = path.join(directory, name)
            frame.to_csv(file_path, index=False, lineterminator="\n")
            written.append(file_path)

        summary_path: str = path.join(directory, FILE_SUMMARY)
        with open(summary_path, "w") as f:
            json.dump(bundle.summary, f, indent=2, sort_keys=True)
            f.write("\n")
        written.append(summary_path)
    except OSError as e:
        raise StackException("Cannot write reports to '{0}': {1}".format(directory, e))

    return written


def read_reports(directory: str) -> ReportBundle:
    bundle: ReportBundle = ReportBundle()

    for name, schema in SCHEMAS.items():
        file_path: str = path.join(directory, name)

        try:
            frame: pd.DataFrame = pd.read_csv(file_path, dtype=dict(schema), keep_default_na=False, float_precision="round_trip")
        except OSError as e:
            raise StackException("Cannot read report '{0}': {1}".format(file_path, e))

        if list(frame.columns) != list(schema.keys()):
            raise StackException("Report '{0}' has unexpected columns".format(file_path))

        bundle.rows[name] = frame.to_dict("records")

    summary_path: str = path.join(directory, FILE_SUMMARY)
    try:
        with open(summary_path, "r") as f:
            bundle.summary = json.load(f)
    except (OSError, ValueError) as e:
        raise StackException("Cannot read report '{0}': {1}".format(summary_path, e))

    return bundle

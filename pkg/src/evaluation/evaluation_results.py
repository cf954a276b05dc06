from typing import Dict, List, Tuple
import numpy as np

from ..core.method_config import MethodConfig
from ..core.quantile_grid import QuantileForecast
from ..metrics.metrics_reports import ProbMetricsReport, DMResult
from ..metrics.prob_metrics import prob_metrics_report


"""
One test hour of one meta-model run: the forecast, its losses and
what the model was trained on (size and newest source index)
"""
class HourRecord:
    def __init__(self, hour: int, actual: float, forecast: QuantileForecast, pqre: float, pws: float,
        train_size: int, max_train_index: int):

        self.hour: int = int(hour)
        self.actual: float = float(actual)
        self.forecast: QuantileForecast = forecast
        self.pqre: float = float(pqre)
        self.pws: float = float(pws)
        self.train_size: int = int(train_size)
        self.max_train_index: int = int(max_train_index)


"""
All test hours of one (series, method config) run plus the
aggregated report. Runtime stats are informational only
"""
class EvaluationResult:
    def __init__(self, series_id: str, config: MethodConfig, records: List[HourRecord], report: ProbMetricsReport = None,
        total_seconds: float = 0.0):

        self.series_id: str = series_id
        self.config: MethodConfig = config
        self.records: List[HourRecord] = sorted(records, key=lambda r: r.hour)
        self.report: ProbMetricsReport = report if report is not None else self.recompute_report()
        self.total_seconds: float = float(total_seconds)


    @property
    def label(self) -> str:
        return self.config.label


    @property
    def hours(self) -> List[int]:
        return [r.hour for r in self.records]


    @property
    def actuals(self) -> np.ndarray:
        return np.array([r.actual for r in self.records])


    @property
    def forecasts(self) -> List[QuantileForecast]:
        return [r.forecast for r in self.records]


    @property
    def pqres(self) -> np.ndarray:
        return np.array([r.pqre for r in self.records])


    @property
    def seconds_per_hour(self) -> float:
        return self.total_seconds / len(self.records) if self.records else 0.0


    def recompute_report(self) -> ProbMetricsReport:
        return prob_metrics_report(self.actuals, self.forecasts)


"""
Reports along one hyperparameter axis. For the k axis the
last point is the global-mode run, labelled 'global'
"""
class SweepResult:
    def __init__(self, axis: str, points: List[str], results: List[EvaluationResult]):
        self.axis: str = axis
        self.points: List[str] = [str(p) for p in points]
        self.results: List[EvaluationResult] = results

        if len(self.points) != len(self.results):
            raise ValueError("Sweep has {0} points for {1} results".format(len(self.points), len(self.results)))


    @property
    def reports(self) -> List[ProbMetricsReport]:
        return [r.report for r in self.results]


"""
Pairwise Diebold-Mariano tests of every ordered method pair on every
series, and how many series each method won against each other one
"""
class ComparisonResult:
    def __init__(self, methods: List[str], series: List[str], tests: Dict[Tuple[str, str, str], DMResult],
        wins: Dict[str, Dict[str, int]]):

        self.methods: List[str] = methods
        self.series: List[str] = series
        self.tests: Dict[Tuple[str, str, str], DMResult] = tests
        self.wins: Dict[str, Dict[str, int]] = wins


    def win_count(self, winner: str, loser: str) -> int:
        return self.wins[winner][loser]

import time
from collections import OrderedDict
from typing import Dict, List, Tuple
import numpy as np
from joblib import Parallel, delayed

from .evaluation_results import HourRecord, EvaluationResult, SweepResult, ComparisonResult
from .hour_selection import select_test_hours
from .meta_learner import forecast_hour
from ..core.constants import MODE_GLOBAL, MODE_LOCAL
from ..core.event_hook import EventHook
from ..core.forecast_panel import ForecastPanel
from ..core.functions import make_training_set, knn_select, derive_seed
from ..core.method_config import MethodConfig
from ..core.quantile_grid import QuantileGrid, QuantileForecast, build_quantile_grid
from ..core.service import Service
from ..core.stack_exception import StackException
from ..etc.config_service import ConfigService
from ..log.log_service import LogService
from ..metrics.dm_test import dm_test, dm_wins
from ..metrics.metrics_reports import PointMetricsReport, DMResult
from ..metrics.point_metrics import point_metrics
from ..metrics.prob_metrics import pqre, pws

CONTEXT: str = "evaluation"


# one (series, test hour) task - fit on everything
# up to t-h inside the window and forecast hour t
def _forecast_task(panel: ForecastPanel, config: MethodConfig, grid: QuantileGrid, hour: int,
                   logger: LogService = None) -> Tuple[QuantileForecast, np.ndarray, float]:
    began: float = time.perf_counter()
    query: np.ndarray = panel.input_at(hour)
    train = make_training_set(panel, hour, config.horizon, panel.final_year_start)

    if config.is_local:
        train = knn_select(train, query, config.k)

    seed: int = derive_seed(config.seed, panel.series_id, hour)
    qf: QuantileForecast = forecast_hour(train, query, config, grid, seed, logger)

    return qf, np.array(train.time_indices), time.perf_counter() - began


"""
Rolling backtest harness: retrains the configured meta-learner for
every test hour of every series, aggregates the losses and compares methods.

Subscribe to on_training_set to see the source time indices every
fitted model was trained on: handler(series_id, hour, time_indices, horizon)
"""
class EvaluationService(Service):
    def __init__(self, config: ConfigService = None, logger: LogService = None, jobs: int = None, grid: QuantileGrid = None):
        super().__init__(config, logger)
        self.jobs: int = self.config.jobs if jobs is None else int(jobs)
        self.grid: QuantileGrid = grid if grid is not None else build_quantile_grid()
        self.on_training_set: EventHook = EventHook()

        if self.jobs == 0:
            raise StackException("Job count must not be 0")


    def select_test_hours(self, panel: ForecastPanel, count: int = None) -> List[int]:
        return select_test_hours(panel, self.config.hours if count is None else count)


    def evaluate_method(self, panel: ForecastPanel, config: MethodConfig, hours: List[int]) -> EvaluationResult:
        return self._evaluate([(panel, config, hours)])[0]


    # every config on every panel, keyed by
    # method label and then series id
    def evaluate_panels(self, panels: List[ForecastPanel], configs: List[MethodConfig], count: int = None) -> Dict[str, Dict[str, EvaluationResult]]:
        self._check_unique([p.series_id for p in panels], "series id")
        self._check_unique([c.label for c in configs], "method label")

        runs: list = []
        for panel in panels:
            hours: List[int] = self.select_test_hours(panel, count)
            runs += [(panel, config, hours) for config in configs]

        results: Dict[str, Dict[str, EvaluationResult]] = OrderedDict((c.label, OrderedDict()) for c in configs)
        for result in self._evaluate(runs):
            results[result.label][result.series_id] = result

        return results


    # one local run per k, then the
    # global run as the final point
    def sweep_k(self, panel: ForecastPanel, base: MethodConfig, k_grid: List[int] = None, hours: List[int] = None) -> SweepResult:
        k_grid = list(self.config.k_grid if k_grid is None else k_grid)
        hours = self.select_test_hours(panel) if hours is None else hours

        if len(k_grid) == 0:
            raise StackException("K grid is empty")

        configs: List[MethodConfig] = [base.replace(mode=MODE_LOCAL, k=k) for k in k_grid]
        configs.append(base.replace(mode=MODE_GLOBAL, k=None))

        results: List[EvaluationResult] = self._evaluate([(panel, c, hours) for c in configs])
        return SweepResult("k", [str(k) for k in k_grid] + [MODE_GLOBAL], results)


    def sweep_q(self, panel: ForecastPanel, base: MethodConfig, q_grid: List[int] = None, hours: List[int] = None) -> SweepResult:
        q_grid = list(self.config.q_grid if q_grid is None else q_grid)
        hours = self.select_test_hours(panel) if hours is None else hours

        if len(q_grid) == 0:
            raise StackException("Q grid is empty")
        if base.forest is None:
            raise StackException("Method '{0}' has no minimum leaf size to sweep".format(base.method))

        configs: List[MethodConfig] = [base.replace(forest=base.forest.replace(q=q)) for q in q_grid]
        results: List[EvaluationResult] = self._evaluate([(panel, c, hours) for c in configs])
        return SweepResult("q", [str(q) for q in q_grid], results)


    """
    Diebold-Mariano test on per-hour PQRE for every ordered pair of
    methods on every series; a win is a one-sided rejection
    """
    def compare_methods(self, results: Dict[str, Dict[str, EvaluationResult]]) -> ComparisonResult:
        methods: List[str] = list(results.keys())
        series: List[str] = sorted(set(s for by_series in results.values() for s in by_series))

        for method in methods:
            missing: List[str] = [s for s in series if s not in results[method]]
            if missing:
                raise StackException("Method '{0}' has no results for series {1}".format(method, ", ".join(missing)))

        tests: Dict[Tuple[str, str, str], DMResult] = OrderedDict()
        wins: Dict[str, Dict[str, int]] = OrderedDict((a, OrderedDict((b, 0) for b in methods)) for a in methods)

        for series_id in series:
            for a in methods:
                for b in methods:
                    if a == b:
                        continue

                    result_a: EvaluationResult = results[a][series_id]
                    result_b: EvaluationResult = results[b][series_id]

                    if result_a.hours != result_b.hours:
                        raise StackException("mismatched test hours for series '{0}' between {1} and {2}".format(series_id, a, b))

                    dm: DMResult = dm_test(result_a.pqres, result_b.pqres)
                    tests[(series_id, a, b)] = dm

                    if dm_wins(dm) == 1:
                        wins[a][b] += 1

        return ComparisonResult(methods, series, tests, wins)


    # point metrics of every base
    # model over the test hours
    def base_model_report(self, panel: ForecastPanel, hours: List[int]) -> Dict[str, PointMetricsReport]:
        hours = np.asarray(hours, dtype=np.int64)
        return OrderedDict(
            (name, point_metrics(panel.actuals[hours], panel.base_forecasts[hours, m]))
            for m, name in enumerate(panel.model_names))


    def _evaluate(self, runs: List[Tuple[ForecastPanel, MethodConfig, List[int]]]) -> List[EvaluationResult]:
        runs = [(panel, config, self._check_run(panel, config, hours)) for panel, config, hours in runs]
        tasks: list = [(r, hour) for r, (_, _, hours) in enumerate(runs) for hour in hours]

        outputs: list = Parallel(n_jobs=self.jobs)(
            delayed(_forecast_task)(runs[r][0], runs[r][1], self.grid, hour, self.logger) for r, hour in tasks)

        records: List[list] = [[] for _ in runs]
        seconds: List[float] = [0.0 for _ in runs]

        for (r, hour), (qf, time_indices, elapsed) in zip(tasks, outputs):
            panel, config, _ = runs[r]
            actual: float = float(panel.actuals[hour])

            self.on_training_set.emit(panel.series_id, hour, time_indices, config.horizon)
            records[r].append(HourRecord(hour, actual, qf, pqre(actual, qf), pws(actual, qf),
                len(time_indices), int(time_indices.max())))
            seconds[r] += elapsed

        results: List[EvaluationResult] = []
        for r, (panel, config, _) in enumerate(runs):
            result = EvaluationResult(panel.series_id, config, records[r], total_seconds=seconds[r])
            self.logger.log_info("{0} on '{1}': {2} test hours, MPQRE {3:.3f}, {4:.3f}s per hour".format(
                config.label, panel.series_id, len(result.records), result.report.MPQRE, result.seconds_per_hour), CONTEXT)
            results.append(result)

        return results


    # hours must leave at least one pattern inside
    # the final-year window, and k patterns in local mode
    def _check_run(self, panel: ForecastPanel, config: MethodConfig, hours: List[int]) -> List[int]:
        hours = [int(h) for h in hours]

        if len(hours) == 0:
            raise StackException("No test hours given for '{0}'".format(panel.series_id))
        if len(set(hours)) != len(hours):
            raise StackException("Test hours for '{0}' are not distinct".format(panel.series_id))
        if min(hours) < 0 or max(hours) >= panel.length:
            raise StackException("Test hours for '{0}' fall outside the panel of {1} hours".format(panel.series_id, panel.length))

        start: int = panel.final_year_start
        earliest: int = min(hours)
        available: int = earliest - config.horizon - start + 1

        if available < 1:
            raise StackException("insufficient history at hour {0} of '{1}': window starts at {2}, horizon {3}"
                .format(earliest, panel.series_id, start, config.horizon))

        if config.is_local:
            if config.k > available:
                raise StackException("k exceeds available patterns at hour {0} of '{1}' ({2} > {3})"
                    .format(earliest, panel.series_id, config.k, available))
            if config.k == available:
                self.logger.log_warning("k={0} equals the whole window at hour {1} of '{2}'"
                    .format(config.k, earliest, panel.series_id), CONTEXT)

        return sorted(hours)


    @staticmethod
    def _check_unique(values: List[str], what: str) -> None:
        if len(set(values)) != len(values):
            raise StackException("Duplicate {0} in {1}".format(what, ", ".join(values)))

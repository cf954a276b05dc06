from collections import OrderedDict

import numpy as np
import pytest

from src.core.method_config import MethodConfig
from src.dataio.synth_config import benchmark_configs
from src.dataio.synth_panel import synth_panel
from src.etc.config_service import ConfigService
from src.evaluation.evaluation_service import EvaluationService
from src.log.log_service import LogService
from src.metrics.prob_metrics import pooled_report

pytestmark = pytest.mark.slow

SERIES: int = 10
DAYS: int = 730
MODELS: int = 8
HOURS: int = 100
TREES: int = 50
SEED: int = 7
HOURS_PER_YEAR: int = 8760

QRS: str = "qrs-global-q1"
QRF: str = "qrf-global-q10"
QLR: str = "qlr-global"
QLR_K20: str = "qlr-local-k20"


# two calendar years per series, so every global training set
# has to leave the first year out; shared by the whole module
@pytest.fixture(scope="module")
def benchmark(tmp_path_factory):
    missing = str(tmp_path_factory.mktemp("benchmark") / "missing.json")
    service = EvaluationService(ConfigService(missing), LogService(do_print=False), jobs=-1)
    panels = OrderedDict((p.series_id, p) for p in map(synth_panel, benchmark_configs(SERIES, DAYS, MODELS, SEED)))
    leaks: list = []
    outside: list = []

    def audit(series_id, hour, time_indices, horizon):
        if time_indices.max() > hour - horizon:
            leaks.append((series_id, hour))
        if time_indices.min() < panels[series_id].final_year_start:
            outside.append((series_id, hour))

    service.on_training_set += audit

    configs = [
        MethodConfig.defaults("qrs", trees=TREES),
        MethodConfig.defaults("qrf", trees=TREES),
        MethodConfig.defaults("qlr"),
        MethodConfig.defaults("qlr", "local", k=20)
    ]

    results = service.evaluate_panels(list(panels.values()), configs, HOURS)
    pooled = OrderedDict(
        (label, pooled_report([(r.actuals, r.forecasts) for _, r in sorted(by_series.items())]))
        for label, by_series in results.items())

    return panels, results, pooled, leaks, outside


def test_panels_span_two_calendar_years(benchmark):
    panels, _, _, _, _ = benchmark

    for panel in panels.values():
        assert panel.length == DAYS * 24
        assert panel.final_year_start == HOURS_PER_YEAR


def test_no_training_set_reaches_past_the_horizon(benchmark):
    _, _, _, leaks, _ = benchmark
    assert leaks == []


def test_training_sets_stay_inside_the_final_year(benchmark):
    _, _, _, _, outside = benchmark
    assert outside == []


def test_every_series_has_every_method(benchmark):
    panels, results, _, _, _ = benchmark

    assert list(results) == [QRS, QRF, QLR, QLR_K20]
    for by_series in results.values():
        assert sorted(by_series) == list(panels)
        assert all(len(r.records) == HOURS for r in by_series.values())


def test_forest_and_linear_stacking_are_calibrated(benchmark):
    _, _, pooled, _, _ = benchmark

    assert pooled[QRF].MARFE <= 0.06
    assert pooled[QLR].MARFE <= 0.06
    assert pooled[QRS].MARFE > pooled[QRF].MARFE


def test_residual_smoothing_undercovers(benchmark):
    _, _, pooled, _, _ = benchmark

    assert pooled[QRS].inPI < 80.0 < pooled[QRF].inPI
    assert abs(pooled[QRF].inPI - 90.0) <= 3.0


def test_quantile_forest_has_the_better_intervals(benchmark):
    _, results, pooled, _, _ = benchmark

    better = [s for s in results[QRF] if results[QRF][s].report.MPWS < results[QRS][s].report.MPWS]
    assert len(better) >= SERIES - 1
    assert pooled[QRF].MPQRE < pooled[QRS].MPQRE


def test_small_local_windows_hurt_linear_stacking(benchmark):
    _, results, _, _, _ = benchmark

    for series_id, result in results[QLR].items():
        assert results[QLR_K20][series_id].report.MPQRE > result.report.MPQRE


def test_forecasts_are_monotone_and_finite(benchmark):
    _, results, _, _, _ = benchmark

    for by_series in results.values():
        for result in by_series.values():
            for qf in result.forecasts:
                assert qf.is_monotone
                assert np.all(np.isfinite(qf.quantiles))
